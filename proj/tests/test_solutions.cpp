#include <doctest.h>

#include <cmath>
#include <vector>

#include "lieb/solutions.hpp"

using namespace lieb;

TEST_CASE("singular solution satisfies the equation") {
  for (auto [n, lam] : {std::pair{1, 0.25}, {1, 0.5}, {1, 0.75}, {3, 1.0}, {3, 2.0}, {4, 2.0}}) {
    const Params P = Params::make(n, lam);
    const auto rep = verify_solution(singular_solution(P), P, std::vector<double>{0.5, 1, 2, 5}, 1e-6);
    CAPTURE(n);
    CAPTURE(lam);
    CHECK(rep.verdict == Verdict::Verified);
    CHECK(rep.max_rel_residual < 1e-6);
  }
}

TEST_CASE("bounded solution satisfies the equation including the origin") {
  for (auto [n, lam] : {std::pair{1, 0.5}, {3, 1.0}}) {
    const Params P = Params::make(n, lam);
    const auto rep = verify_solution(lieb_solution(P), P, std::vector<double>{0, 0.5, 1, 2, 5}, 1e-5);
    CHECK(rep.verdict == Verdict::Verified);
  }
}

TEST_CASE("wrong amplitudes are refuted") {
  const Params P = Params::make(1, 0.5);
  const auto rep = verify_solution(singular_solution(P).scaled(1.01), P, std::vector<double>{1.0, 2.0}, 1e-6);
  CHECK(rep.verdict == Verdict::Refuted);
  const auto rep2 = verify_solution(lieb_solution(P).scaled(0.9), P, std::vector<double>{0.0, 1.0}, 1e-6);
  CHECK(rep2.verdict == Verdict::Refuted);
}

TEST_CASE("residual classification") {
  CHECK(classify_residual(1e-9, 1e-12, 1e-6) == Verdict::Verified);
  CHECK(classify_residual(1e-3, 1e-12, 1e-6) == Verdict::Refuted);
  CHECK(classify_residual(1e-3, 1e-2, 1e-6) == Verdict::Inconclusive);
  CHECK(std::string(verdict_name(Verdict::NotApplicable)) == "NotApplicable");
  CHECK(verdict_from_name("Diverged") == Verdict::Diverged);
}
