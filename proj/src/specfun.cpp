#include "lieb/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lieb/errors.hpp"
#include "lieb/radial_riesz.hpp"

namespace lieb {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.5772156649015328606065121;

// zeta(k) - 1 for k = 2, 3, ...; coefficients of the expansion of ln Gamma around 1 and 2.
constexpr std::array<double, 40> kZetaMinusOne = {
    6.449340668482264364724e-1, 2.020569031595942853997e-1, 8.2323233711138191516e-2,
    3.692775514336992633137e-2, 1.734306198444913971452e-2, 8.349277381922826839798e-3,
    4.077356197944339378685e-3, 2.008392826082214417853e-3, 9.94575127818085337146e-4,
    4.941886041194645587023e-4, 2.46086553308048298638e-4,  1.227133475784891467518e-4,
    6.124813505870482925855e-5, 3.058823630702049355173e-5, 1.528225940865187173257e-5,
    7.6371976378997622736e-6,   3.817293264999839856462e-6, 1.908212716553938925657e-6,
    9.53962033872796113152e-7,  4.769329867878064631167e-7, 2.384505027277329900036e-7,
    1.192199259653110730678e-7, 5.960818905125947961244e-8, 2.980350351465228018606e-8,
    1.490155482836504123466e-8, 7.450711789835429491981e-9, 3.725334024788457054819e-9,
    1.862659723513049006404e-9, 9.313274324196681828718e-10, 4.656629065033784072989e-10,
    2.328311833676505492002e-10, 1.164155017270051977593e-10, 5.820772087902700889251e-11,
    2.910385044497099686928e-11, 1.455192189104198423598e-11, 7.275959835057481014509e-12,
    3.637979547378651190237e-12, 1.818989650307065947653e-12, 9.094947840263889282877e-13,
    4.547473783042154027044e-13,
};

// sum_{k>=2} (-1)^k (zeta(k)-1) z^k / k, valid for |z| <= 1/2 to full double precision.
double zeta_tail_series(double z) {
  double sum = 0.0;
  double zk = z;
  for (std::size_t i = 0; i < kZetaMinusOne.size(); ++i) {
    zk *= -z;  // (-1)^{k-1} z^k with k = i + 2
    const double term = kZetaMinusOne[i] * zk / static_cast<double>(i + 2);
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return -sum;
}

// Lanczos approximation, g = 671/128, 14 terms; relative error ~1e-15 in Gamma.
double lanczos_log_gamma(double x) {
  static constexpr std::array<double, 14> cof = {
      57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
      -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
      -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
      .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
      -.261908384015814087e-4, .368991826595316234e-5};
  double y = x;
  double tmp = x + 5.24218750000000000;
  tmp = (x + 0.5) * std::log(tmp) - tmp;
  double ser = 0.999999999999997092;
  for (double c : cof) ser += c / ++y;
  return tmp + std::log(2.5066282746310005 * ser / x);
}

}  // namespace

Params Params::make(int n, double lambda) {
  if (n < 1) fail(ErrorCode::Domain, "dimension n must be a positive integer");
  if (!(lambda > 0.0) || !(lambda < static_cast<double>(n))) {
    std::ostringstream os;
    os << "kernel exponent lambda=" << lambda << " must satisfy 0 < lambda < n=" << n;
    fail(ErrorCode::Domain, os.str());
  }
  Params prm;
  prm.n = n;
  prm.lambda = lambda;
  const double two_n = 2.0 * n;
  prm.p = two_n / (two_n - lambda);
  prm.pm1 = lambda / (two_n - lambda);
  return prm;
}

double Params::amplitude_exponent() const {
  return -(2.0 * n - lambda) / (2.0 * (n - lambda));
}

double log_gamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    std::ostringstream os;
    os << "log_gamma requires a finite positive argument, got " << x;
    fail(ErrorCode::Domain, os.str());
  }
  if (x < 0.5) return log_gamma(x + 1.0) - std::log(x);
  if (x <= 1.5) {
    const double z = x - 1.0;
    return -std::log1p(z) + z * (1.0 - kEulerGamma) + zeta_tail_series(z);
  }
  if (x <= 2.5) {
    const double z = x - 2.0;
    return z * (1.0 - kEulerGamma) + zeta_tail_series(z);
  }
  return lanczos_log_gamma(x);
}

double log_beta(double a, double b) { return log_gamma(a) + log_gamma(b) - log_gamma(a + b); }

double sphere_area(int n) {
  if (n < 1) fail(ErrorCode::Domain, "sphere_area requires n >= 1");
  const double half = 0.5 * n;
  return 2.0 * std::exp(half * std::log(kPi) - log_gamma(half));
}

double ft_riesz_coefficient(int n, double nu) {
  if (n < 1 || !(nu > 0.0) || !(nu < n)) {
    std::ostringstream os;
    os << "ft_riesz_coefficient requires 0 < nu < n, got n=" << n << " nu=" << nu;
    fail(ErrorCode::Domain, os.str());
  }
  const double half_n = 0.5 * n;
  return std::exp((nu - half_n) * std::log(kPi) + log_gamma(half_n - 0.5 * nu) - log_gamma(0.5 * nu));
}

double riesz_power_constant(int n, double lambda, double mu) {
  const double dn = n;
  if (n < 1 || !(lambda > 0.0) || !(lambda < dn) || !(mu > 0.0) || !(mu < dn)) {
    std::ostringstream os;
    os << "riesz_power_constant requires 0 < lambda, mu < n, got n=" << n << " lambda=" << lambda
       << " mu=" << mu;
    fail(ErrorCode::Domain, os.str());
  }
  if (!(lambda + mu > dn)) {
    std::ostringstream os;
    os << "riesz_power_constant: lambda + mu = " << lambda + mu << " <= n = " << n
       << ", the integral diverges at infinity";
    fail(ErrorCode::Domain, os.str());
  }
  const double log_k = 0.5 * dn * std::log(kPi) + log_gamma(0.5 * (dn - lambda)) +
                       log_gamma(0.5 * (dn - mu)) + log_gamma(0.5 * (lambda + mu - dn)) -
                       log_gamma(0.5 * lambda) - log_gamma(0.5 * mu) -
                       log_gamma(dn - 0.5 * (lambda + mu));
  return std::exp(log_k);
}

double lieb_constant_C(const Params& params) {
  const double k = riesz_power_constant(params.n, params.lambda, params.n - 0.5 * params.lambda);
  return std::exp(params.amplitude_exponent() * std::log(k));
}

QuadratureResult lieb_origin_integral(const Params& params, const QuadratureSpec& quad) {
  const auto profile = RadialProfile::lieb(1.0, params.n - 0.5 * params.lambda);
  return riesz_potential_radial_detailed(profile, params, 0.0, quad);
}

double lieb_constant_L(const Params& params, const QuadratureSpec& quad) {
  const double origin = lieb_origin_integral(params, quad).value;
  return std::exp(params.amplitude_exponent() * std::log(origin));
}

}  // namespace lieb
