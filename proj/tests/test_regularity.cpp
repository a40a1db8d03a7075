#include <doctest.h>

#include <cmath>

#include "lieb/errors.hpp"
#include "lieb/regularity.hpp"
#include "lieb/solutions.hpp"

using namespace lieb;

TEST_CASE("domains and weights") {
  const auto I = Domain1D::interval(-1, 3);
  const double x[] = {2.5};
  CHECK(I.rho(x) == 0.5);
  CHECK(weight(0.5, x, I) == doctest::Approx(std::sqrt(0.5)));
  CHECK(weight(-1.0, x, I) == 1.0);
  CHECK(weight(0.0, x, I) == doctest::Approx(1.0 / (1.0 + std::log(2.0))));
  const double out[] = {4.0};
  CHECK_THROWS_AS(weight(0.5, out, I), Error);
  const auto B = Domain1D::ball(2, 2.0);
  const double y[] = {1.0, 1.0};
  CHECK(B.rho(y) == doctest::Approx(2.0 - std::sqrt(2.0)));
  CHECK_THROWS_AS(Domain1D::interval(1, 1), Error);
}

TEST_CASE("weighted norms distinguish bounded and singular solutions") {
  const Params P = Params::make(1, 0.5);
  const auto G = Domain1D::ball(1, 1.0);
  const auto bounded = weighted_norm(Field::radial(lieb_solution(P), 1), 2, P.lambda, G);
  CHECK_FALSE(bounded.infinite);
  CHECK(std::isfinite(bounded.total));
  CHECK(bounded.indices.size() == 3);
  const auto singular = weighted_norm(Field::radial(singular_solution(P), 1), 2, P.lambda, G);
  CHECK(singular.infinite);
  CHECK(std::isinf(singular.total));
}

TEST_CASE("weighted norm of simple fields") {
  const auto G = Domain1D::interval(0, 1);
  const auto one = weighted_norm(Field::function(1, [](std::span<const double>) { return 1.0; }), 1, 0.5, G);
  CHECK(one.total == doctest::Approx(1.0));
  const auto blow = weighted_norm(
      Field::function(1, [](std::span<const double> x) { return 1.0 / std::min(x[0], 1 - x[0]); }), 0, 0.5, G);
  CHECK(blow.infinite);
}

TEST_CASE("weighted norm in three dimensions") {
  const Params P = Params::make(3, 1.0);
  const auto r = weighted_norm(Field::radial(lieb_solution(P), 3), 2, 1.0, Domain1D::ball(3, 1.0));
  CHECK_FALSE(r.infinite);
}

TEST_CASE("kernel growth constants") {
  for (double lam : {0.5, 1.3, 2.5}) {
    const auto rep = kernel_growth_check(Params::make(3, lam), 4, 50);
    REQUIRE(rep.orders.size() == 5);
    for (const auto& o : rep.orders) CHECK(o.max_rel_deviation <= 1e-10);
    CHECK(rep.orders[3].expected == doctest::Approx(lam * (lam + 1) * (lam + 2)));
    CHECK(rep.b2 == 0.0);
    CHECK(rep.u_slice_max == 0.0);
  }
  CHECK_THROWS_AS(kernel_growth_check(Params::make(1, 0.5), 5, 10), Error);
}

TEST_CASE("translation annihilation") {
  for (double lam : {0.5, 1.3, 2.5}) {
    const Params P = Params::make(3, lam);
    const auto pts = sample_point_pairs(3, 50);
    CHECK(pts.size() == 50);
    CHECK(translation_annihilation_check(P, pts, 1e-4) <= 1e-8);
  }
  const auto a = sample_point_pairs(2, 5);
  const auto b = sample_point_pairs(2, 5);
  CHECK(a[3].x == b[3].x);
}

TEST_CASE("decay and singularity scan") {
  const Params P = Params::make(1, 0.5);
  const auto fC = singular_solution(P);
  const auto c = decay_singularity_scan(fC, 1e6, 100 * fC(1.0));
  CHECK(c.decay_verified);
  REQUIRE(c.singular_points.size() == 1);
  CHECK(c.singular_points[0].radius == 0.0);
  const auto fL = lieb_solution(P);
  const auto l = decay_singularity_scan(fL, 1e3, 100 * fL(1.0));
  CHECK(l.decay_verified);
  CHECK(l.singular_points.empty());
  const auto flat = decay_singularity_scan(RadialProfile::power(1.0, 0.0), 1e3, 100.0);
  CHECK_FALSE(flat.decay_verified);
}
