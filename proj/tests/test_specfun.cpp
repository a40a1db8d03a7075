#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lieb/errors.hpp"
#include "lieb/specfun.hpp"

using namespace lieb;

namespace {
// Reference values computed with mpmath at 50 digits (tests/oracles/gamma_oracles.py).
constexpr double kFt1Quarter = 0.23632983429596538742756;
constexpr double kRiesz1 = 17.904528926373966915594759748;   // k(1, 3/4, 3/4)
constexpr double kRiesz2 = 18.571577600784973544528604810678;  // k(1, 1/2, 0.7)
constexpr double kC1Half = 0.01319944441251641517290188610941;
constexpr double kI01Half = 5.2441151085842396209296791797822;
constexpr double kL1Half = 0.083270596585654265576190668867052;

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::abs(b); }
}  // namespace

TEST_CASE("log_gamma against reference values") {
  CHECK(close(log_gamma(0.1), 2.252712651734205959869701646368495, 1e-14));
  CHECK(close(log_gamma(30.5), 72.953471184169408323838553043843885, 1e-14));
  CHECK(std::abs(log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(log_gamma(2.0)) < 1e-15);
  CHECK(close(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-14));
  for (double x : {0.3, 1.7, 4.2, 11.0, 120.5}) {
    CHECK(close(log_gamma(x), std::lgamma(x), 1e-13));
  }
}

TEST_CASE("log_beta matches its gamma expansion") {
  CHECK(close(log_beta(0.25, 0.5), std::lgamma(0.25) + std::lgamma(0.5) - std::lgamma(0.75), 1e-13));
}

TEST_CASE("sphere areas") {
  const double pi = std::numbers::pi;
  CHECK(close(sphere_area(1), 2.0, 1e-15));
  CHECK(close(sphere_area(2), 2 * pi, 1e-15));
  CHECK(close(sphere_area(3), 4 * pi, 1e-15));
  CHECK(close(sphere_area(4), 2 * pi * pi, 1e-15));
}

TEST_CASE("Fourier coefficient of power functions") {
  CHECK(close(ft_riesz_coefficient(1, 0.25), kFt1Quarter, 1e-13));
  for (int n = 1; n <= 4; ++n) {
    CHECK(std::abs(ft_riesz_coefficient(n, 0.5 * n) - 1.0) < 1e-14);
    for (double t : {0.1, 0.35, 0.6, 0.85}) {
      const double nu = t * n;
      CHECK(close(ft_riesz_coefficient(n, nu) * ft_riesz_coefficient(n, n - nu), 1.0, 1e-12));
    }
  }
}

TEST_CASE("Riesz composition constant") {
  CHECK(close(riesz_power_constant(1, 0.75, 0.75), kRiesz1, 1e-13));
  CHECK(close(riesz_power_constant(1, 0.5, 0.7), kRiesz2, 1e-13));
  CHECK_THROWS_AS(riesz_power_constant(1, 0.25, 0.5), Error);
}

TEST_CASE("closed-form constants") {
  const double pi = std::numbers::pi;
  CHECK(close(lieb_constant_C(Params::make(4, 2)), 1.0 / (8 * pi * pi * pi), 1e-12));
  const Params p = Params::make(1, 0.5);
  CHECK(close(lieb_constant_C(p), kC1Half, 1e-13));
  CHECK(close(lieb_origin_integral(p, {}).value, kI01Half, 1e-9));
  CHECK(close(lieb_constant_L(p), kL1Half, 2e-9));
  const QuadratureSpec tight = QuadratureSpec{}.with_rel_tol(1e-13);
  CHECK(close(lieb_origin_integral(p, tight).value, kI01Half, 1e-12));
  CHECK(close(lieb_constant_L(p, tight), kL1Half, 1e-12));
  struct Row {
    int n;
    double lambda, C, L;
  };
  const Row rows[] = {
      {1, 0.25, 0.017162072116711210480153813278941991, 0.20710895856980975132848374250192558},
      {1, 0.75, 0.00089507701042129337539592555006709812, 0.0037824455317411047952963028340112841},
      {3, 1.0, 0.0074715839552616762794279296494097105, 0.16687421601493920689780484224011203},
      {3, 2.0, 0.0010401614732958522960898376349142054, 0.010265982254684335189152783267118694},
      {4, 2.0, 0.0040314418041499361480527565860704611, 0.091221114805547176938731787496879208},
  };
  for (const auto& r : rows) {
    const Params q = Params::make(r.n, r.lambda);
    CHECK(close(lieb_constant_C(q), r.C, 1e-12));
    CHECK(close(lieb_constant_L(q, tight), r.L, 1e-11));
  }
}

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(Params::make(1, 1.0), Error);
  CHECK_THROWS_AS(Params::make(1, 0.0), Error);
  CHECK_THROWS_AS(Params::make(0, 0.5), Error);
  const Params p = Params::make(3, 1.5);
  CHECK(p.p == doctest::Approx(6.0 / 4.5).epsilon(1e-15));
  CHECK(p.pm1 == doctest::Approx(1.5 / 4.5).epsilon(1e-15));
}
