// Runs the twelve acceptance criteria and prints one PASS/FAIL line each.
// Exit status: 0 when the failures are exactly the ones listed with
// --known-fail (none by default), 1 otherwise.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lieb/identities.hpp"
#include "lieb/regularity.hpp"
#include "lieb/solver.hpp"

using namespace lieb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

const std::vector<std::pair<int, double>> kMatrix = {{1, 0.25}, {1, 0.5}, {1, 0.75}, {3, 1.0}, {3, 2.0}, {4, 2.0}};

Outcome constants_fidelity() {
  Outcome o;
  const double pi = std::numbers::pi;
  const double c42 = lieb_constant_C(Params::make(4, 2.0));
  const double rel = std::abs(c42 * 8 * pi * pi * pi - 1.0);
  o.pass = rel <= 1e-12;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> dim(1, 4);
  std::uniform_real_distribution<double> frac(0.02, 0.98);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const int n = dim(rng);
    const Params P = Params::make(n, frac(rng) * n);
    const double k = riesz_power_constant(n, P.lambda, n - 0.5 * P.lambda);
    const double expect = std::pow(k, -(2.0 * n - P.lambda) / (2.0 * (n - P.lambda)));
    worst = std::max(worst, std::abs(lieb_constant_C(P) - expect) / expect);
  }
  o.pass = o.pass && worst <= 1e-13;
  o.detail = "C(4,2) rel " + fmt("%.1e", rel) + ", random max rel " + fmt("%.1e", worst);
  return o;
}

Outcome fourier_duality() {
  Outcome o;
  double worst = 0.0, half = 0.0;
  for (int n = 1; n <= 4; ++n) {
    for (int i = 1; i <= 10; ++i) {
      const double nu = n * i / 11.0;
      worst = std::max(worst, std::abs(ft_riesz_coefficient(n, nu) * ft_riesz_coefficient(n, n - nu) - 1.0));
    }
    half = std::max(half, std::abs(ft_riesz_coefficient(n, 0.5 * n) - 1.0));
  }
  o.pass = worst <= 1e-12 && half <= 1e-14;
  o.detail = "duality max dev " + fmt("%.1e", worst) + ", self-dual dev " + fmt("%.1e", half);
  return o;
}

Outcome verify_matrix(bool bounded) {
  Outcome o;
  double worst = 0.0;
  for (auto [n, lam] : kMatrix) {
    const Params P = Params::make(n, lam);
    const auto rep = bounded ? verify_solution(lieb_solution(P), P, std::vector<double>{0, 0.5, 1, 2, 5}, 1e-5)
                             : verify_solution(singular_solution(P), P, std::vector<double>{0.5, 1, 2, 5}, 1e-6);
    o.pass = o.pass && rep.verdict == Verdict::Verified;
    worst = std::max(worst, rep.max_rel_residual);
  }
  o.detail = "6 cases, max rel residual " + fmt("%.1e", worst);
  return o;
}

Outcome cross_identity() {
  Outcome o;
  double worst = 0.0;
  for (auto [n, lam] : {std::pair{1, 0.25}, {1, 0.5}, {1, 0.75}, {3, 1.0}, {3, 2.0}}) {
    const auto r = check_corollary_identity(Params::make(n, lam), {}, 1e-8);
    o.pass = o.pass && r.verdict == Verdict::Verified;
    worst = std::max(worst, r.rel_gap);
  }
  o.detail = "5 cases, max rel gap " + fmt("%.1e", worst);
  return o;
}

Outcome orthogonality() {
  Outcome o;
  const Params P = Params::make(1, 0.5);
  const auto fL = lieb_solution(P);
  int zeros = 0, pairs = 0;
  double worst_zero = 0.0, worst_gap = 0.0;
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) {
      const auto r = check_orthogonality(fL, MultiIndex({a}), MultiIndex({b}), P, {}, {1e-6, 1e-8});
      o.pass = o.pass && r.verdict == Verdict::Verified;
      if (r.zero_target) {
        ++zeros;
        worst_zero = std::max({worst_zero, std::abs(r.lhs), std::abs(r.rhs)});
      } else {
        ++pairs;
        worst_gap = std::max(worst_gap, r.rel_gap);
      }
    }
  }
  o.detail = std::to_string(zeros) + " zero integrals (max " + fmt("%.1e", worst_zero) + "), " +
             std::to_string(pairs) + " signed equalities (max gap " + fmt("%.1e", worst_gap) + ")";
  return o;
}

Outcome composite() {
  Outcome o;
  const Params P = Params::make(1, 0.5);
  const auto fL = lieb_solution(P);
  const auto form = parse_form("d1 + d11", 1);
  const auto reps = check_composite(fL, fL, form, form, P, {}, {1e-6, 1e-8});
  int chain = 0, zeros = 0;
  double gap = 0.0, zero = 0.0;
  for (const auto& r : reps) {
    if (r.id == IdentityId::Eq10) {
      ++chain;
      gap = std::max(gap, r.rel_gap);
      o.pass = o.pass && r.verdict == Verdict::Verified;
    } else if (r.id == IdentityId::Eq9b) {
      ++zeros;
      zero = std::max({zero, std::abs(r.lhs), std::abs(r.rhs)});
      o.pass = o.pass && r.verdict == Verdict::Verified;
    }
  }
  o.pass = o.pass && chain == 3 && zeros == 2;
  o.detail = std::to_string(chain) + " chain links (max gap " + fmt("%.1e", gap) + "), " + std::to_string(zeros) +
             " zero integrals (max " + fmt("%.1e", zero) + ")";
  return o;
}

Outcome screen_soundness() {
  Outcome o;
  const double tol = 1e-6;
  int divergent = 0, settled = 0;
  double smallest_change = kInfinity;
  for (double lam : {0.25, 0.5, 0.75}) {
    const Params P = Params::make(1, lam);
    const RadialProfile fC = singular_solution(P), fL = lieb_solution(P);
    for (auto [f, g] : {std::pair{fC, fC}, {fC, fL}, {fL, fC}}) {
      const Field F = Field::radial(f, 1), G = Field::radial(g, 1);
      const Field Fq = F.raised(P.pm1), Gq = G.raised(P.pm1);
      for (int a = 0; a <= 2; ++a) {
        for (int b = 0; b <= 2; ++b) {
          const MultiIndex A({a}), B({b});
          // the two integrals of the commutativity identity
          for (auto [u, ui, v, vi] : {std::tuple{&G, B, &Fq, A}, std::tuple{&F, A, &Gq, B}}) {
            if (convergence_screen(pair_budget(*u, ui, *v, vi)).convergent) continue;
            ++divergent;
            double prev = truncated_abs_pair_integral(*u, ui, *v, vi, 1e2, {}).value;
            bool grows = true;
            for (double R : {1e3, 1e4}) {
              const double cur = truncated_abs_pair_integral(*u, ui, *v, vi, R, {}).value;
              const double change = std::abs(cur - prev) / std::max(std::abs(cur), 1e-300);
              smallest_change = std::min(smallest_change, change);
              grows = grows && change > 10 * tol;
              prev = cur;
            }
            if (!grows) ++settled;
          }
        }
      }
    }
  }
  o.pass = divergent > 0 && settled == 0;
  o.detail = std::to_string(divergent) + " screened-out integrals, " + std::to_string(settled) +
             " stabilized, smallest relative change " + fmt("%.2e", smallest_change);
  return o;
}

Outcome kernel_conditions() {
  Outcome o;
  double trans = 0.0, dev = 0.0;
  for (double lam : {0.5, 1.3, 2.5}) {
    const Params P = Params::make(3, lam);
    const auto pts = sample_point_pairs(3, 50);
    trans = std::max(trans, translation_annihilation_check(P, pts, 1e-4));
    const auto rep = kernel_growth_check(P, 4, 50);
    for (const auto& ord : rep.orders) dev = std::max(dev, ord.max_rel_deviation);
  }
  o.pass = trans <= 1e-8 && dev <= 1e-10;
  o.detail = "translation max " + fmt("%.1e", trans) + ", growth constant max rel dev " + fmt("%.1e", dev);
  return o;
}

Outcome regularity_norms() {
  Outcome o;
  const Params P = Params::make(1, 0.5);
  const auto G = Domain1D::ball(1, 1.0);
  const auto a = weighted_norm(Field::radial(lieb_solution(P), 1), 2, P.lambda, G);
  const auto b = weighted_norm(Field::radial(singular_solution(P), 1), 2, P.lambda, G);
  o.pass = !a.infinite && std::isfinite(a.total) && b.infinite && std::isinf(b.total);
  o.detail = "f_L norm " + fmt("%.4g", a.total) + ", f_C norm " + fmt("%g", b.total);
  return o;
}

Outcome solver_properties() {
  Outcome o;
  const Params P = Params::make(1, 0.5);
  SolverConfig cfg;
  const auto coarse = picard_solve(cfg, P);
  SolverConfig fine_cfg = cfg;
  fine_cfg.grid_size = 2 * cfg.grid_size;
  const auto fine = picard_solve(fine_cfg, P);
  const auto& t = coarse.trace;
  const double min_value = *std::min_element(t.min_values.begin(), t.min_values.end());
  const bool converged = t.converged && t.residuals.back() <= 1e-8;
  const bool positive = min_value > 0.0;
  double diff = 0.0, top = 0.0;
  for (double x : fine.solution.nodes()) {
    diff = std::max(diff, std::abs(fine.solution.linear(x) - coarse.solution.linear(x)));
    top = std::max(top, std::abs(fine.solution.linear(x)));
  }
  const double change = diff / top;
  const GridSolution& sol = coarse.solution;
  const auto norm = weighted_norm(
      Field::function(1, [&sol](std::span<const double> x) { return sol.nystrom(x[0]); }), 1, P.lambda, cfg.G);
  const bool refinement = change < 0.01;
  o.pass = converged && positive && refinement && !norm.infinite;
  o.detail = std::string("converged ") + (converged ? "yes" : "no") + " after " + std::to_string(t.iterations) +
             " iterations, min iterate value " + fmt("%.3g", min_value) + ", grid doubling change " +
             fmt("%.1f%%", 100 * change) + " (needs < 1%), weighted norm " + fmt("%.4g", norm.total);
  return o;
}

Outcome decay_scan() {
  Outcome o;
  const Params P = Params::make(1, 0.5);
  const auto fC = singular_solution(P);
  const auto fL = lieb_solution(P);
  const auto c = decay_singularity_scan(fC, 1e6, 100 * fC(1.0));
  const auto l = decay_singularity_scan(fL, 1e3, 100 * fL(1.0));
  o.pass = c.decay_verified && c.singular_points.size() == 1 && c.singular_points[0].radius == 0.0 &&
           l.decay_verified && l.singular_points.empty();
  o.detail = "f_C: " + std::to_string(c.singular_points.size()) + " singular point(s), decay " +
             (c.decay_verified ? "verified" : "not verified") + "; f_L: " + std::to_string(l.singular_points.size()) +
             " singular point(s), decay " + (l.decay_verified ? "verified" : "not verified");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> known_fail;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--known-fail") == 0 && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) known_fail.insert(std::atoi(item.c_str()));
    }
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"constant fidelity", constants_fidelity},
      {"Fourier coefficient duality", fourier_duality},
      {"singular solution", [] { return verify_matrix(false); }},
      {"bounded solution", [] { return verify_matrix(true); }},
      {"cross identity", cross_identity},
      {"orthogonality suite", orthogonality},
      {"composite forms", composite},
      {"screen soundness", screen_soundness},
      {"kernel conditions", kernel_conditions},
      {"regularity norms", regularity_norms},
      {"solver properties", solver_properties},
      {"decay scan", decay_scan},
  };

  std::set<int> failed;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("error: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) failed.insert(id);
    std::printf("%s %2d %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", id, criteria[i].first, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
  if (failed != known_fail) {
    std::printf("failures differ from the expected set\n");
    return 1;
  }
  return 0;
}
