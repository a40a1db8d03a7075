#include <doctest.h>

#include <cmath>

#include "lieb/errors.hpp"
#include "lieb/radial_riesz.hpp"
#include "lieb/solutions.hpp"

using namespace lieb;

namespace {
bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }
}  // namespace

TEST_CASE("profiles evaluate their closed forms") {
  const auto p = RadialProfile::power(2.0, 0.5);
  CHECK(close(p(4.0), 1.0, 1e-15));
  CHECK(p.origin_exponent() == -0.5);
  CHECK(p.infinity_exponent() == -0.5);
  const auto l = RadialProfile::lieb(3.0, 1.5);
  CHECK(close(l(1.0), 3.0 * std::pow(2.0, -1.5), 1e-15));
  CHECK(l.origin_exponent() == 0.0);
  CHECK(l.infinity_exponent() == -3.0);
  CHECK(close(l.scaled(2.0)(1.0), 2.0 * l(1.0), 1e-15));
}

TEST_CASE("sampled profile interpolates and extrapolates") {
  std::vector<double> r, v;
  for (int i = 0; i <= 40; ++i) {
    const double x = std::pow(10.0, -2.0 + 0.1 * i);
    r.push_back(x);
    v.push_back(std::pow(x, -0.75));
  }
  const auto s = RadialProfile::sampled(r, v, 0.75);
  CHECK(close(s(r[10]), v[10], 1e-14));
  CHECK(close(s(0.37), std::pow(0.37, -0.75), 1e-3));
  CHECK(close(s(1e3), std::pow(1e3, -0.75), 1e-10));
  CHECK(close(s(1e-3), std::pow(1e-3, -0.75), 1e-8));
}

TEST_CASE("angular kernel in one and three dimensions") {
  CHECK(close(angular_kernel(1, 0.5, 1.0, 3.0), std::pow(2.0, -0.5) + std::pow(4.0, -0.5), 1e-14));
  // n = 3, lambda = 1: 4 pi / max(r, s)
  CHECK(close(angular_kernel(3, 1.0, 2.0, 0.5), 4 * M_PI / 2.0, 1e-12));
  CHECK(close(angular_kernel(3, 1.0, 0.5, 2.0), 4 * M_PI / 2.0, 1e-12));
}

TEST_CASE("Riesz potential of a power matches the composition constant") {
  const Params P = Params::make(1, 0.5);
  const auto f = RadialProfile::power(1.0, 0.7);
  // k(1, 1/2, 0.7) from mpmath
  const double k = 18.571577600784973544528604810678;
  CHECK(close(riesz_potential_radial(f, P, 1.0), k, 1e-8));
  CHECK(close(riesz_potential_radial(f, P, 2.0), k * std::pow(2.0, 1 - 0.5 - 0.7), 1e-8));
}

TEST_CASE("Riesz potential of the bounded profile against an independent quadrature") {
  const Params P = Params::make(1, 0.5);
  const auto f = lieb_solution(P);
  // mpmath: int |1.5 - y|^{-1/2} f_L(y) dy
  CHECK(close(riesz_potential_radial(f, P, 1.5), 0.32523183672849631312506293766311349, 1e-8));
}

TEST_CASE("Riesz potential in three dimensions") {
  const Params P = Params::make(3, 2.0);
  const auto f = RadialProfile::power(1.0, 2.0);
  const double k = riesz_power_constant(3, 2.0, 2.0);
  CHECK(close(riesz_potential_radial(f, P, 1.3), k * std::pow(1.3, 3 - 4.0), 1e-8));
}

TEST_CASE("divergent potentials are screened out") {
  const Params P = Params::make(1, 0.5);
  try {
    riesz_potential_radial(RadialProfile::power(1.0, 0.2), P, 1.0);
    FAIL("expected a screen rejection");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ScreenRejected);
  }
  const auto budget = riesz_budget(RadialProfile::power(1.0, 1.2), P, 1.0);
  CHECK_FALSE(convergence_screen(budget).convergent);
}
