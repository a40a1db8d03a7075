"""Arbitrary-precision reference values frozen into the C++ test suites.

Run with `python3 tests/oracles/gamma_oracles.py`; every printed value is
computed with mpmath at 50 significant digits, independently of the C++ code.
"""
from mpmath import mp, mpf, gamma, pi, quad, beta, inf, sqrt

mp.dps = 50


def ft_coeff(n, nu):
    return pi ** (nu - mpf(n) / 2) * gamma((n - nu) / 2) / gamma(nu / 2)


def riesz_k(n, lam, mu):
    return (pi ** (mpf(n) / 2) * gamma((n - lam) / 2) * gamma((n - mu) / 2)
            * gamma((lam + mu - n) / 2)
            / (gamma(lam / 2) * gamma(mu / 2) * gamma(n - (lam + mu) / 2)))


def sphere_area(n):
    return 2 * pi ** (mpf(n) / 2) / gamma(mpf(n) / 2)


def lieb_C(n, lam):
    k = riesz_k(n, lam, n - lam / 2)
    return k ** (-(2 * n - lam) / (2 * (n - lam)))


def lieb_I0(n, lam):
    return sphere_area(n) * beta((n - lam) / 2, mpf(n) / 2) / 2


def lieb_L(n, lam):
    return lieb_I0(n, lam) ** (-(2 * n - lam) / (2 * (n - lam)))


def eq5_sides(n, lam):
    n = mpf(n)
    C, L = lieb_C(n, lam), lieb_L(n, lam)
    pm1 = lam / (2 * n - lam)
    w = sphere_area(n)
    # radial Beta integrals: int_0^inf r^{a-1}(1+r^2)^{-b} dr = B(a/2, b-a/2)/2
    lhs_int = w * beta(lam / 4, lam / 4) / 2
    rhs_int = w * beta(n / 2 - lam / 4, n / 2 - lam / 4) / 2
    return L ** pm1 * C * lhs_int, L * C ** pm1 * rhs_int


if __name__ == "__main__":
    print("ft(1,0.25)        ", ft_coeff(1, mpf("0.25")))
    print("k(1,3/4,3/4)      ", riesz_k(1, mpf("0.75"), mpf("0.75")))
    print("  by quadrature   ", quad(lambda y: abs(1 - y) ** mpf("-0.75") * abs(y) ** mpf("-0.75"),
                                       [-inf, 0, 1, inf]))
    print("C(4,2)            ", lieb_C(4, mpf(2)), 1 / (8 * pi ** 3))
    print("C(1,0.5)          ", lieb_C(1, mpf("0.5")))
    print("I0(1,0.5)         ", lieb_I0(1, mpf("0.5")))
    print("  by quadrature   ", 2 * quad(lambda r: r ** mpf("-0.5") * (1 + r * r) ** mpf("-0.75"), [0, 1, inf]))
    print("L(1,0.5)          ", lieb_L(1, mpf("0.5")))
    for n, lam in [(1, "0.25"), (1, "0.5"), (1, "0.75"), (3, "1"), (3, "2"), (4, "2")]:
        lam = mpf(lam)
        a, b = eq5_sides(n, lam)
        print(f"n={n} lam={lam}: C={lieb_C(n, lam)} L={lieb_L(n, lam)} eq5 {a} {b}")

    # Lieb profile in n=1, lambda=1/2: f(x) = L (1+x^2)^{-3/4}
    lam = mpf("0.5")
    L = lieb_L(1, lam)
    pm1 = lam / (2 - lam)
    fL = lambda x: L * (1 + x * x) ** (-(1 - lam / 2))
    print("fL'(0.7)          ", mp.diff(fL, mpf("0.7")))
    print("fL''''(0.3)       ", mp.diff(fL, mpf("0.3"), 4))
    print("T fL (1.5)        ", quad(lambda y: abs(mpf("1.5") - y) ** (-lam) * fL(y), [-inf, 0, mpf("1.5"), inf]))
    print("k(1,1/2,0.7)      ", riesz_k(1, lam, mpf("0.7")))
    g = lambda x: fL(x) ** pm1
    # int fL * (fL^{p-1})'' and int fL'' * fL^{p-1}
    h1 = lambda x: fL(x) * mp.diff(g, x, 2)
    h2 = lambda x: mp.diff(fL, x, 2) * g(x)
    print("comm a=2 lhs      ", 2 * quad(h1, [0, 1, inf]))
    print("comm a=2 rhs      ", 2 * quad(h2, [0, 1, inf]))
    print("loggamma(0.1)     ", mp.loggamma(mpf("0.1")))
    print("loggamma(30.5)    ", mp.loggamma(mpf("30.5")))
    print("gamma(-1.5)       ", gamma(mpf("-1.5")))
