#include <doctest.h>

#include <cmath>

#include "lieb/errors.hpp"
#include "lieb/forms.hpp"
#include "lieb/solutions.hpp"

using namespace lieb;

TEST_CASE("multi-index basics") {
  const MultiIndex a({1, 2});
  CHECK(a.order() == 3);
  CHECK(a.parity() == -1);
  CHECK(a.to_string() == "d122");
  CHECK((a + MultiIndex({0, 1})).components() == std::vector<int>{1, 3});
  CHECK(MultiIndex::zero(2).to_string() == "d");
  CHECK_THROWS_AS(MultiIndex({-1}), Error);
  CHECK(multi_indices_up_to(2, 2).size() == 6);
  CHECK(multi_indices_up_to(1, 3).size() == 4);
}

TEST_CASE("form parsing and printing") {
  const auto f = parse_form("1.0*d1 + 2*d11 - 0.5", 1);
  REQUIRE(f.terms().size() == 3);
  CHECK(f.max_order() == 2);
  const auto g = parse_form(f.to_string(), 1);
  REQUIRE(g.terms().size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(g.terms()[i].coefficient == f.terms()[i].coefficient);
    CHECK(g.terms()[i].index == f.terms()[i].index);
  }
  CHECK(parse_form("d12", 2).terms()[0].index.components() == std::vector<int>{1, 1});
  CHECK(parse_form("d1 - d1", 1).empty());
  CHECK_THROWS_AS(parse_form("d3", 2), Error);
  CHECK_THROWS_AS(parse_form("2*x1", 1), Error);
  CHECK_THROWS_AS(parse_form("", 1), Error);
}

TEST_CASE("parity split") {
  const auto f = parse_form("3*d1 + 4*d11", 1);
  const auto [even, odd] = parity_split(f);
  REQUIRE(even.terms().size() == 1);
  REQUIRE(odd.terms().size() == 1);
  CHECK(even.terms()[0].coefficient == 4.0);
  CHECK(odd.terms()[0].coefficient == 3.0);
  const auto mixed = parity_split(parse_form("d12", 2));
  CHECK(mixed.first.terms().size() == 1);
  CHECK(mixed.second.empty());
  const auto sum = even + odd;
  CHECK(sum.terms().size() == f.terms().size());
}

TEST_CASE("finite-difference weights") {
  const auto w1 = central_difference_weights(1);
  double s0 = 0, s1 = 0;
  const int P = static_cast<int>(w1.size() / 2);
  for (int i = -P; i <= P; ++i) {
    s0 += w1[i + P];
    s1 += w1[i + P] * i;
  }
  CHECK(std::abs(s0) < 1e-14);
  CHECK(std::abs(s1 - 1.0) < 1e-14);
  CHECK_THROWS_AS(central_difference_weights(7), Error);
}

TEST_CASE("analytic derivatives of the bounded profile") {
  const Params P = Params::make(1, 0.5);
  const Field f = Field::radial(lieb_solution(P), 1);
  REQUIRE(f.analytic());
  // mpmath values of f_L' (0.7) and f_L'''' (0.3); L itself carries the quadrature error
  const double x1[] = {0.7};
  const double x2[] = {0.3};
  CHECK(std::abs(f.derivative(MultiIndex({1}), x1) / -0.04351159520184050467795 - 1) < 2e-9);
  CHECK(std::abs(f.derivative(MultiIndex({4}), x2) / 0.1919369964250696978026 - 1) < 2e-9);
  // chain rule closed form for the first derivative
  const double L = lieb_constant_L(P);
  const double expected = -2 * 0.7 * 0.75 * L * std::pow(1 + 0.49, -1.75);
  CHECK(std::abs(f.derivative(MultiIndex({1}), x1) - expected) < 1e-15);
}

TEST_CASE("finite differences agree with analytic derivatives") {
  const Params P = Params::make(1, 0.5);
  const auto prof = lieb_solution(P);
  const Field analytic = Field::radial(prof, 1);
  const Field numeric = Field::function(1, [prof](std::span<const double> x) { return prof(std::abs(x[0])); });
  REQUIRE_FALSE(numeric.analytic());
  const double x[] = {0.8};
  for (int k = 1; k <= 3; ++k) {
    const double a = analytic.derivative(MultiIndex({k}), x);
    const double b = numeric.derivative(MultiIndex({k}), x);
    CAPTURE(k);
    CHECK(std::abs(a - b) <= 1e-7 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("mixed partials in two dimensions") {
  const Field f = Field::function(2, [](std::span<const double> x) { return std::sin(x[0]) * std::exp(x[1]); });
  const double x[] = {0.4, -0.2};
  CHECK(std::abs(f.derivative(MultiIndex({1, 1}), x) - std::cos(0.4) * std::exp(-0.2)) < 1e-7);
  CHECK(std::abs(f.derivative(MultiIndex({2, 0}), x) + std::sin(0.4) * std::exp(-0.2)) < 1e-7);
}

TEST_CASE("apply_form is linear and respects singular points") {
  const Params P = Params::make(1, 0.5);
  const Field f = Field::radial(lieb_solution(P), 1);
  const double x[] = {0.6};
  const auto A = parse_form("d1", 1);
  const auto B = parse_form("d11", 1);
  const double combined = apply_form(parse_form("2*d1 + 3*d11", 1), f, x);
  CHECK(std::abs(combined - (2 * apply_form(A, f, x) + 3 * apply_form(B, f, x))) < 1e-15);
  CHECK(apply_form(parse_form("1", 1), f, x) == f.value(x));
  const Field c = Field::radial(singular_solution(P), 1);
  const double origin[] = {0.0};
  CHECK_THROWS_AS(c.value(origin), Error);
  CHECK(c.singular_at_origin());
  CHECK(c.origin_exponent(1) == doctest::Approx(-1.75));
}
