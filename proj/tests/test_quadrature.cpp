#include <doctest.h>

#include <cmath>
#include <numbers>

#include "lieb/errors.hpp"
#include "lieb/quadrature.hpp"

using namespace lieb;

TEST_CASE("smooth integrands") {
  const auto r = integrate([](double x) { return std::exp(-x); }, 0.0, 1.0, {});
  CHECK(std::abs(r.value - (1 - std::exp(-1.0))) < 1e-14);
  CHECK(r.err_estimate < 1e-10);
}

TEST_CASE("endpoint algebraic singularity") {
  const auto r = integrate([](double x) { return std::pow(x, -0.9); }, 0.0, 1.0, {});
  CHECK(std::abs(r.value - 10.0) < 1e-8);
}

TEST_CASE("interior singularity with a split point") {
  const QuadratureSpec spec = QuadratureSpec{}.with_split(0.3);
  const Integrand f = [](const Abscissa& t) { return std::pow(t.distance_to(0.3), -0.5); };
  const auto r = integrate(f, 0.0, 1.0, spec);
  CHECK(std::abs(r.value - 2 * (std::sqrt(0.3) + std::sqrt(0.7))) < 1e-8);
}

TEST_CASE("algebraic tail to infinity") {
  const auto r = integrate([](double x) { return 1.0 / (1.0 + x * x); }, 0.0, kInfinity, {});
  CHECK(std::abs(r.value - std::numbers::pi / 2) < 1e-10);
  QuadratureSpec spec;
  spec.tail_exponent_hint = -1.5;
  const auto s = integrate([](double x) { return std::pow(x, -1.5); }, 1.0, kInfinity, spec);
  CHECK(std::abs(s.value - 2.0) < 1e-8);
}

TEST_CASE("exhausted budget is reported") {
  QuadratureSpec spec;
  spec.max_subdivisions = 3;
  spec.rel_tol = 1e-14;
  CHECK_THROWS_AS(integrate([](double x) { return std::sin(200 * x); }, 0.0, 10.0, spec), Error);
}

TEST_CASE("quadrature settings validation") {
  QuadratureSpec spec;
  spec.rel_tol = -1;
  CHECK_THROWS_AS(spec.validate(), Error);
}

TEST_CASE("convergence screen") {
  SingularityBudget ok;
  ok.add(0.0, -0.5).add(kInfinity, -1.5);
  CHECK(convergence_screen(ok).convergent);
  SingularityBudget bad_origin;
  bad_origin.add(0.0, -1.0);
  const auto s = convergence_screen(bad_origin);
  CHECK_FALSE(s.convergent);
  CHECK(s.failing_location == 0.0);
  SingularityBudget bad_tail;
  bad_tail.add(kInfinity, -1.0);
  CHECK_FALSE(convergence_screen(bad_tail).convergent);
}
