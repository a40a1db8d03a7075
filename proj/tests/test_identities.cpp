#include <doctest.h>

#include <cmath>

#include "lieb/identities.hpp"

using namespace lieb;

namespace {
const Params P = Params::make(1, 0.5);
}  // namespace

TEST_CASE("commutativity with second derivatives against mpmath") {
  const auto fL = lieb_solution(P);
  const auto r = check_commutativity(fL, fL, MultiIndex({2}), MultiIndex({0}), P);
  CHECK(r.verdict == Verdict::Verified);
  // int f_L (f_L^{p-1})'' dx from mpmath
  const double ref = -0.010709685493229616219725780215961328;
  CHECK(std::abs(r.lhs / ref - 1) < 1e-8);
  CHECK(std::abs(r.rhs / ref - 1) < 1e-8);
}

TEST_CASE("commutativity between the two solutions at order zero") {
  const auto r = check_commutativity(singular_solution(P), lieb_solution(P), MultiIndex({0}), MultiIndex({0}), P);
  CHECK(r.verdict == Verdict::Verified);
  CHECK(r.rel_gap < 1e-8);
  const double ref = 0.090236650652022968870737540348466;
  CHECK(std::abs(r.lhs / ref - 1) < 1e-7);
}

TEST_CASE("screen rejects divergent instances without integrating") {
  const auto fC = singular_solution(P);
  const auto r = check_commutativity(fC, fC, MultiIndex({1}), MultiIndex({0}), P);
  CHECK(r.verdict == Verdict::NotApplicable);
  CHECK_FALSE(r.screen.convergent);
  CHECK(r.screen.failing_location == 0.0);
  CHECK(std::isnan(r.lhs));
}

TEST_CASE("odd total order integrals vanish") {
  const auto fL = lieb_solution(P);
  for (auto [a, b] : {std::pair{1, 0}, {0, 3}, {2, 1}, {3, 2}}) {
    const auto r = check_orthogonality(fL, MultiIndex({a}), MultiIndex({b}), P);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(r.id == IdentityId::Eq8);
    CHECK(r.zero_target);
    CHECK(r.verdict == Verdict::Verified);
    CHECK(std::abs(r.lhs) <= 1e-8);
    CHECK(r.conditioning > 0.0);
  }
}

TEST_CASE("even total order gives the signed equality") {
  const auto fL = lieb_solution(P);
  for (auto [a, b] : {std::pair{1, 1}, {2, 0}, {3, 1}, {2, 2}}) {
    const auto r = check_orthogonality(fL, MultiIndex({a}), MultiIndex({b}), P);
    CAPTURE(a);
    CAPTURE(b);
    CHECK(r.id == IdentityId::Eq7);
    CHECK(r.verdict == Verdict::Verified);
  }
}

TEST_CASE("composite forms with distinct forms") {
  const auto fL = lieb_solution(P);
  const auto reps = check_composite(fL, fL, parse_form("d1 + 2*d11", 1), parse_form("0.5*d1 - d11 + 3", 1), P);
  REQUIRE(reps.size() == 6);
  int eq9b = 0, eq10 = 0;
  for (const auto& r : reps) {
    CAPTURE(r.label);
    CHECK(r.verdict == Verdict::Verified);
    eq9b += r.id == IdentityId::Eq9b;
    eq10 += r.id == IdentityId::Eq10;
  }
  CHECK(eq9b == 2);
  CHECK(eq10 == 3);
}

TEST_CASE("cross identity between the closed-form solutions") {
  for (auto [n, lam] : {std::pair{1, 0.25}, {1, 0.75}, {3, 1.0}, {3, 2.0}}) {
    const auto r = check_corollary_identity(Params::make(n, lam));
    CHECK(r.id == IdentityId::Eq5);
    CHECK(r.verdict == Verdict::Verified);
  }
  // mpmath value for n = 3, lambda = 2
  const auto r = check_corollary_identity(Params::make(3, 2.0));
  CHECK(std::abs(r.lhs / 0.0020803229465917045921796752698284 - 1) < 1e-8);
}

TEST_CASE("radial pair integral in three dimensions") {
  const Params Q = Params::make(3, 1.0);
  const Field fL = Field::radial(lieb_solution(Q), 3);
  const auto r = check_commutativity(lieb_solution(Q), lieb_solution(Q), MultiIndex::zero(3), MultiIndex::zero(3), Q);
  CHECK(r.verdict == Verdict::Verified);
  CHECK(integrate_pair(fL, MultiIndex::zero(3), fL, MultiIndex::zero(3), {}).screen.convergent);
}

TEST_CASE("identity names round-trip") {
  for (auto id : {IdentityId::Eq5, IdentityId::Eq9a, IdentityId::Eq10}) {
    CHECK(identity_id_from_name(identity_id_name(id)) == id);
  }
}
