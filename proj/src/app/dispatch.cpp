#include "app/dispatch.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "lieb/errors.hpp"
#include "lieb/identities.hpp"
#include "lieb/regularity.hpp"
#include "lieb/solver.hpp"

namespace lieb::app {
namespace {

const std::set<std::string> kCommonKeys = {"n", "lambda", "rel-tol", "abs-tol", "max-subdivisions", "timestamp"};

const std::map<std::string, std::set<std::string>>& subcommand_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"constants", {}},
      {"verify-solution", {"which", "radii", "tolerance", "scale"}},
      {"riesz", {"profile", "decay", "amplitude", "radii"}},
      {"identity", {"kind", "f", "g", "alpha", "beta", "lambda-form", "omega-form", "tolerance", "zero-tol"}},
      {"corollary", {"tolerance"}},
      {"regularity",
       {"kind", "u", "m", "nu", "domain", "radius", "a", "b", "levels", "expect", "samples", "h", "tolerance"}},
      {"scan", {"which", "r-outer", "threshold", "decay-tol", "expect-singularities"}},
      {"solve", {"a", "b", "grid-size", "grading", "max-iters", "stop-tol", "damping", "init"}},
  };
  return keys;
}

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json json_list(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number_or_null(x));
  return a;
}

Json screen_json(const ScreenResult& s) {
  Json j;
  j["convergent"] = s.convergent;
  j["failing_location"] = s.convergent ? Json(nullptr) : (std::isinf(s.failing_location) ? Json("inf") : Json(s.failing_location));
  j["failing_exponent"] = s.convergent ? Json(nullptr) : Json(s.failing_exponent);
  return j;
}

std::string choice(const RunConfig& cfg, const std::string& key, const std::string& fallback,
                   const std::vector<std::string>& allowed) {
  const std::string v = cfg.get_string(key, fallback);
  if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
    std::string list;
    for (const auto& a : allowed) list += (list.empty() ? "" : "|") + a;
    fail(ErrorCode::InvalidArgument, "option '" + key + "' must be one of " + list + ", got '" + v + "'");
  }
  return v;
}

MultiIndex parse_index(const RunConfig& cfg, const std::string& key, int n) {
  const std::string text = cfg.get_string(key, "0");
  std::vector<int> comps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || v < 0) fail(ErrorCode::InvalidArgument, "option '" + key + "' expects non-negative integers");
    comps.push_back(v);
  }
  if (static_cast<int>(comps.size()) != n) {
    fail(ErrorCode::InvalidArgument, "option '" + key + "' needs " + std::to_string(n) + " components");
  }
  return MultiIndex(comps);
}

// Everything a subcommand needs after validation, then the work itself.
struct Prepared {
  Json inputs = Json::object();
  Json tolerances = Json::object();
  std::function<void(Json& results, std::vector<Verdict>& verdicts, std::vector<double>& errs)> execute;
};

struct Context {
  const RunConfig& cfg;
  Params params;
  QuadratureSpec quad;
};

RadialProfile named_solution(const std::string& which, const Context& ctx) {
  return which == "singular" ? singular_solution(ctx.params) : lieb_solution(ctx.params, ctx.quad);
}

Json identity_json(const IdentityReport& r) {
  Json j;
  j["identity"] = identity_id_name(r.id);
  j["label"] = r.label;
  j["lhs"] = number_or_null(r.lhs);
  j["rhs"] = number_or_null(r.rhs);
  j["lhs_err"] = number_or_null(r.lhs_err);
  j["rhs_err"] = number_or_null(r.rhs_err);
  j["screen"] = screen_json(r.screen);
  j["rel_gap"] = number_or_null(r.rel_gap);
  j["zero_target"] = r.zero_target;
  j["conditioning"] = number_or_null(r.conditioning);
  j["parity_forced"] = r.parity_forced;
  j["tolerance"] = r.tolerance;
  j["verdict"] = verdict_name(r.verdict);
  return j;
}

void push_identity(const IdentityReport& r, Json& results, std::vector<Verdict>& verdicts,
                   std::vector<double>& errs) {
  results.push_back(identity_json(r));
  verdicts.push_back(r.verdict);
  if (std::isfinite(r.lhs_err)) errs.push_back(r.lhs_err);
  if (std::isfinite(r.rhs_err)) errs.push_back(r.rhs_err);
}

Prepared prepare_constants(const Context& ctx) {
  Prepared p;
  p.tolerances["consistency"] = 1e-12;
  p.execute = [ctx](Json& results, std::vector<Verdict>& verdicts, std::vector<double>& errs) {
    const Params& P = ctx.params;
    const double k = riesz_power_constant(P.n, P.lambda, P.n - 0.5 * P.lambda);
    const double C = lieb_constant_C(P);
    const auto I0 = lieb_origin_integral(P, ctx.quad);
    const double L = std::pow(I0.value, P.amplitude_exponent());
    const double ft = ft_riesz_coefficient(P.n, 0.5 * P.n);
    errs.push_back(I0.err_estimate);
    const auto entry = [&](const char* name, double value, double defect, double tol) {
      Json j;
      j["name"] = name;
      j["value"] = number_or_null(value);
      j["defect"] = number_or_null(defect);
      const Verdict v = defect <= tol ? Verdict::Verified : Verdict::Refuted;
      j["verdict"] = verdict_name(v);
      results.push_back(j);
      verdicts.push_back(v);
    };
    // C k = C^{p-1} and L I(0) = L^{p-1} are the defining relations.
    entry("C", C, std::abs(C * k - std::pow(C, P.pm1)) / std::pow(C, P.pm1), 1e-12);
    entry("riesz_power_constant", k, std::abs(std::pow(k, P.amplitude_exponent()) - C) / C, 1e-12);
    entry("L", L, std::abs(L * I0.value - std::pow(L, P.pm1)) / std::pow(L, P.pm1), 1e-12);
    entry("origin_integral", I0.value, I0.err_estimate / I0.value, ctx.quad.rel_tol);
    entry("ft_riesz_coefficient_half", ft, std::abs(ft - 1.0), 1e-14);
  };
  return p;
}

Prepared prepare_verify(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  Prepared p;
  const std::string which = choice(cfg, "which", "singular", {"singular", "lieb"});
  const auto default_radii = which == "singular" ? std::vector<double>{0.5, 1, 2, 5} : std::vector<double>{0, 0.5, 1, 2, 5};
  const auto radii = cfg.get_list("radii", default_radii);
  const double tol = cfg.get_double("tolerance", 1e-6);
  const double scale = cfg.get_double("scale", 1.0);
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  if (!(scale > 0.0)) fail(ErrorCode::InvalidArgument, "scale must be positive");
  for (double r : radii) {
    if (!(r >= 0.0)) fail(ErrorCode::InvalidArgument, "radii must be non-negative");
    if (r == 0.0 && which == "singular") fail(ErrorCode::InvalidArgument, "the singular solution excludes r = 0");
  }
  p.inputs["which"] = which;
  p.inputs["radii"] = json_list(radii);
  p.inputs["scale"] = scale;
  p.tolerances["residual"] = tol;
  p.execute = [ctx, which, radii, tol, scale](Json& results, std::vector<Verdict>& verdicts, std::vector<double>& errs) {
    const RadialProfile f = named_solution(which, ctx).scaled(scale);
    const auto rep = verify_solution(f, ctx.params, radii, tol, ctx.quad);
    Json j;
    j["profile"] = profile_kind_name(f.kind());
    j["amplitude"] = f.amplitude();
    j["decay"] = f.decay();
    j["radii"] = json_list(rep.sample_radii);
    j["lhs"] = json_list(rep.lhs_values);
    j["rhs"] = json_list(rep.rhs_values);
    j["lhs_err"] = json_list(rep.lhs_err_estimates);
    j["max_rel_residual"] = number_or_null(rep.max_rel_residual);
    j["tolerance"] = rep.tolerance;
    j["verdict"] = verdict_name(rep.verdict);
    results.push_back(j);
    verdicts.push_back(rep.verdict);
    errs.insert(errs.end(), rep.lhs_err_estimates.begin(), rep.lhs_err_estimates.end());
  };
  return p;
}

Prepared prepare_riesz(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  Prepared p;
  const std::string profile = choice(cfg, "profile", "lieb", {"singular", "lieb", "power"});
  const auto radii = cfg.get_list("radii", {0.5, 1, 2});
  const double amplitude = cfg.get_double("amplitude", 1.0);
  const double decay = cfg.get_double("decay", ctx.params.n - 0.5 * ctx.params.lambda);
  if (profile == "power" && !(amplitude > 0.0)) fail(ErrorCode::InvalidArgument, "amplitude must be positive");
  for (double r : radii) {
    if (!(r >= 0.0)) fail(ErrorCode::InvalidArgument, "radii must be non-negative");
  }
  p.inputs["profile"] = profile;
  p.inputs["radii"] = json_list(radii);
  if (profile == "power") {
    p.inputs["amplitude"] = amplitude;
    p.inputs["decay"] = decay;
  }
  p.execute = [ctx, profile, radii, amplitude, decay](Json& results, std::vector<Verdict>& verdicts,
                                                       std::vector<double>& errs) {
    const RadialProfile f =
        profile == "power" ? RadialProfile::power(amplitude, decay) : named_solution(profile, ctx);
    const Params& P = ctx.params;
    for (double r : radii) {
      Json j;
      j["r"] = r;
      try {
        const auto res = riesz_potential_radial_detailed(f, P, r, ctx.quad);
        j["value"] = number_or_null(res.value);
        j["err_estimate"] = number_or_null(res.err_estimate);
        if (profile != "lieb" && r > 0.0 && P.lambda + f.decay() > P.n && f.decay() < P.n) {
          j["closed_form"] = f.amplitude() * riesz_power_constant(P.n, P.lambda, f.decay()) *
                             std::pow(r, P.n - P.lambda - f.decay());
        }
        j["verdict"] = verdict_name(Verdict::Convergent);
        verdicts.push_back(Verdict::Convergent);
        errs.push_back(res.err_estimate);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ScreenRejected && e.code() != ErrorCode::DivergentTail) throw;
        j["value"] = nullptr;
        j["reason"] = e.what();
        j["verdict"] = verdict_name(Verdict::NotApplicable);
        verdicts.push_back(Verdict::NotApplicable);
      }
      results.push_back(j);
    }
  };
  return p;
}

Prepared prepare_identity(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const int n = ctx.params.n;
  Prepared p;
  const std::string kind = choice(cfg, "kind", "commutativity", {"commutativity", "orthogonality", "composite"});
  const std::string f = choice(cfg, "f", "lieb", {"singular", "lieb"});
  const std::string g = choice(cfg, "g", "lieb", {"singular", "lieb"});
  IdentityTolerances tol;
  tol.relative = cfg.get_double("tolerance", tol.relative);
  tol.absolute = cfg.get_double("zero-tol", tol.absolute);
  if (!(tol.relative > 0.0) || !(tol.absolute > 0.0)) fail(ErrorCode::InvalidArgument, "tolerances must be positive");
  p.inputs["kind"] = kind;
  p.inputs["f"] = f;
  if (kind != "orthogonality") p.inputs["g"] = g;
  p.tolerances["relative"] = tol.relative;
  p.tolerances["absolute"] = tol.absolute;

  if (kind == "composite") {
    const auto lam = parse_form(cfg.get_string("lambda-form", "d1 + d11"), n);
    const auto om = parse_form(cfg.get_string("omega-form", cfg.get_string("lambda-form", "d1 + d11")), n);
    if (n >= 2 && (lam.max_order() > 0 || om.max_order() > 0)) {
      fail(ErrorCode::InvalidArgument, "identity checks in n >= 2 support only zero-order forms");
    }
    p.inputs["lambda_form"] = lam.to_string();
    p.inputs["omega_form"] = om.to_string();
    p.execute = [ctx, f, g, lam, om, tol](Json& results, std::vector<Verdict>& verdicts, std::vector<double>& errs) {
      for (const auto& r : check_composite(named_solution(f, ctx), named_solution(g, ctx), lam, om, ctx.params,
                                           ctx.quad, tol)) {
        push_identity(r, results, verdicts, errs);
      }
    };
    return p;
  }
  const MultiIndex alpha = parse_index(cfg, "alpha", n);
  const MultiIndex beta = parse_index(cfg, "beta", n);
  if (n >= 2 && (alpha.order() > 0 || beta.order() > 0)) {
    fail(ErrorCode::InvalidArgument, "identity checks in n >= 2 support only alpha = beta = 0");
  }
  if (std::max(alpha.order(), beta.order()) > kMaxFiniteDifferenceOrder) {
    fail(ErrorCode::InvalidArgument, "derivative order cap exceeded");
  }
  p.inputs["alpha"] = alpha.components();
  p.inputs["beta"] = beta.components();
  p.execute = [ctx, kind, f, g, alpha, beta, tol](Json& results, std::vector<Verdict>& verdicts,
                                                   std::vector<double>& errs) {
    const auto F = named_solution(f, ctx);
    const auto r = kind == "commutativity"
                       ? check_commutativity(F, named_solution(g, ctx), alpha, beta, ctx.params, ctx.quad, tol)
                       : check_orthogonality(F, alpha, beta, ctx.params, ctx.quad, tol);
    push_identity(r, results, verdicts, errs);
  };
  return p;
}

Prepared prepare_corollary(const Context& ctx) {
  Prepared p;
  const double tol = ctx.cfg.get_double("tolerance", 1e-8);
  if (!(tol > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  p.tolerances["relative"] = tol;
  p.execute = [ctx, tol](Json& results, std::vector<Verdict>& verdicts, std::vector<double>& errs) {
    push_identity(check_corollary_identity(ctx.params, ctx.quad, tol), results, verdicts, errs);
  };
  return p;
}

Domain1D parse_domain(const RunConfig& cfg, int n) {
  const std::string kind = choice(cfg, "domain", "ball", {"ball", "interval"});
  if (kind == "interval") {
    if (n != 1) fail(ErrorCode::InvalidArgument, "interval domains need n = 1");
    return Domain1D::interval(cfg.get_double("a", -1.0), cfg.get_double("b", 1.0));
  }
  return Domain1D::ball(n, cfg.get_double("radius", 1.0));
}

Prepared prepare_regularity(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  const Params P = ctx.params;
  Prepared p;
  const std::string kind = choice(cfg, "kind", "norm", {"norm", "kernel", "translation"});
  p.inputs["kind"] = kind;
  if (kind == "norm") {
    const std::string u = choice(cfg, "u", "lieb", {"singular", "lieb"});
    const int m = cfg.get_int("m", 2);
    const double nu = cfg.get_double("nu", P.lambda);
    const Domain1D G = parse_domain(cfg, P.n);
    GridSchedule grid;
    grid.levels = cfg.get_int("levels", grid.levels);
    const std::string expect = choice(cfg, "expect", "none", {"none", "finite", "infinite"});
    if (m < 0 || m > kMaxFiniteDifferenceOrder) fail(ErrorCode::InvalidArgument, "m must lie in 0..6");
    if (!(nu < P.n)) fail(ErrorCode::InvalidArgument, "nu must be below n");
    if (grid.levels < 3) fail(ErrorCode::InvalidArgument, "levels must be at least 3");
    p.inputs["u"] = u;
    p.inputs["m"] = m;
    p.inputs["nu"] = nu;
    p.inputs["domain"] = G.to_string();
    p.inputs["levels"] = grid.levels;
    p.inputs["expect"] = expect;
    p.tolerances["growth_per_level"] = 0.1;
    p.execute = [ctx, u, m, nu, G, grid, expect](Json& results, std::vector<Verdict>& verdicts, std::vector<double>&) {
      const auto res = weighted_norm(Field::radial(named_solution(u, ctx), ctx.params.n), m, nu, G, grid);
      Json j;
      Json idx = Json::array();
      for (const auto& a : res.indices) idx.push_back(a.to_string());
      j["indices"] = idx;
      j["suprema"] = json_list(res.per_alpha_suprema);
      Json levels = Json::array();
      for (const auto& l : res.level_suprema) levels.push_back(json_list(l));
      j["level_suprema"] = levels;
      j["unbounded"] = res.per_alpha_unbounded;
      j["total"] = number_or_null(res.total);
      j["infinite"] = res.infinite;
      Verdict v;
      if (expect == "none") {
        v = res.infinite ? Verdict::Diverged : Verdict::Convergent;
      } else {
        v = res.infinite == (expect == "infinite") ? Verdict::Verified : Verdict::Refuted;
      }
      j["verdict"] = verdict_name(v);
      results.push_back(j);
      verdicts.push_back(v);
    };
    return p;
  }
  const int samples = cfg.get_int("samples", 50);
  if (samples < 1) fail(ErrorCode::InvalidArgument, "samples must be positive");
  p.inputs["samples"] = samples;
  if (kind == "kernel") {
    const int m = cfg.get_int("m", 4);
    const double tol = cfg.get_double("tolerance", 1e-10);
    if (m < 0 || m > 4) fail(ErrorCode::InvalidArgument, "kernel checks support m <= 4");
    p.inputs["m"] = m;
    p.tolerances["coefficient"] = tol;
    p.tolerances["translation"] = 1e-8;
    p.execute = [P, m, samples, tol](Json& results, std::vector<Verdict>& verdicts, std::vector<double>&) {
      const auto rep = kernel_growth_check(P, m, samples);
      bool ok = rep.u_slice_max == 0.0 && rep.translation_slice_max <= 1e-8;
      Json orders = Json::array();
      for (const auto& o : rep.orders) {
        Json oj;
        oj["order"] = o.order;
        oj["expected"] = o.expected;
        oj["min_ratio"] = o.min_ratio;
        oj["max_ratio"] = o.max_ratio;
        oj["max_rel_deviation"] = o.max_rel_deviation;
        orders.push_back(oj);
        ok = ok && o.max_rel_deviation <= tol;
      }
      Json j;
      j["orders"] = orders;
      j["b1"] = rep.b1;
      j["b2"] = rep.b2;
      j["u_slice_max"] = rep.u_slice_max;
      j["translation_slice_max"] = rep.translation_slice_max;
      const Verdict v = ok ? Verdict::Verified : Verdict::Refuted;
      j["verdict"] = verdict_name(v);
      results.push_back(j);
      verdicts.push_back(v);
    };
    return p;
  }
  const double h = cfg.get_double("h", 1e-4);
  const double tol = cfg.get_double("tolerance", 1e-8);
  if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "h must be positive");
  p.inputs["h"] = h;
  p.tolerances["absolute"] = tol;
  p.execute = [P, samples, h, tol](Json& results, std::vector<Verdict>& verdicts, std::vector<double>&) {
    const auto pts = sample_point_pairs(P.n, samples);
    const double worst = translation_annihilation_check(P, pts, h);
    Json j;
    j["max_abs"] = worst;
    const Verdict v = worst <= tol ? Verdict::Verified : Verdict::Refuted;
    j["verdict"] = verdict_name(v);
    results.push_back(j);
    verdicts.push_back(v);
  };
  return p;
}

Prepared prepare_scan(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  Prepared p;
  const std::string which = choice(cfg, "which", "singular", {"singular", "lieb"});
  const double r_outer = cfg.get_double("r-outer", 1e6);
  const auto threshold = cfg.get("threshold");
  ScanOptions opt;
  opt.decay_rel_tol = cfg.get_double("decay-tol", opt.decay_rel_tol);
  const int expect = cfg.get_int("expect-singularities", -1);
  if (!(r_outer > 1.0)) fail(ErrorCode::InvalidArgument, "r-outer must exceed 1");
  const double thr_value = threshold ? cfg.get_double("threshold", 0.0) : 0.0;
  if (threshold && !(thr_value > 0.0)) fail(ErrorCode::InvalidArgument, "threshold must be positive");
  p.inputs["which"] = which;
  p.inputs["r_outer"] = r_outer;
  p.inputs["threshold"] = threshold ? Json(thr_value) : Json("100*f(1)");
  if (expect >= 0) p.inputs["expect_singularities"] = expect;
  p.tolerances["decay_relative"] = opt.decay_rel_tol;
  p.execute = [ctx, which, r_outer, threshold, thr_value, opt, expect](Json& results, std::vector<Verdict>& verdicts,
                                                                       std::vector<double>&) {
    const RadialProfile f = named_solution(which, ctx);
    const double thr = threshold ? thr_value : 100.0 * f(1.0);
    const auto rep = decay_singularity_scan(f, r_outer, thr, opt);
    Json j;
    j["value_at_outer"] = rep.value_at_outer;
    j["reference_value"] = rep.reference_value;
    j["below_tolerance"] = rep.below_tolerance;
    j["monotone_last_decade"] = rep.monotone_last_decade;
    j["decay_verified"] = rep.decay_verified;
    j["blowup_threshold"] = rep.blowup_threshold;
    Json sp = Json::array();
    for (const auto& s : rep.singular_points) {
      Json sj;
      sj["radius"] = s.radius;
      sj["values"] = json_list(s.values);
      sp.push_back(sj);
    }
    j["singular_points"] = sp;
    j["bounding_radius"] = rep.bounding_radius;
    j["sup_outside"] = rep.sup_outside;
    bool ok = rep.decay_verified;
    if (expect >= 0) ok = ok && static_cast<int>(rep.singular_points.size()) == expect;
    const Verdict v = ok ? Verdict::Verified : Verdict::Refuted;
    j["verdict"] = verdict_name(v);
    results.push_back(j);
    verdicts.push_back(v);
  };
  return p;
}

Prepared prepare_solve(const Context& ctx) {
  const RunConfig& cfg = ctx.cfg;
  Prepared p;
  if (ctx.params.n != 1) fail(ErrorCode::InvalidArgument, "solve needs n = 1");
  SolverConfig sc;
  sc.G = Domain1D::interval(cfg.get_double("a", -1.0), cfg.get_double("b", 1.0));
  sc.lambda = ctx.params.lambda;
  sc.grid_size = cfg.get_int("grid-size", sc.grid_size);
  sc.grading_exponent = cfg.get_double("grading", sc.grading_exponent);
  sc.max_iters = cfg.get_int("max-iters", sc.max_iters);
  sc.stop_tol = cfg.get_double("stop-tol", sc.stop_tol);
  sc.damping = cfg.get_double("damping", sc.damping);
  const double init = cfg.get_double("init", 1.0);
  sc.validate(ctx.params);
  if (!(init > 0.0)) fail(ErrorCode::InvalidArgument, "init must be positive");
  p.inputs["domain"] = sc.G.to_string();
  p.inputs["grid_size"] = sc.grid_size;
  p.inputs["grading"] = sc.grading_exponent;
  p.inputs["max_iters"] = sc.max_iters;
  p.inputs["damping"] = sc.damping;
  p.inputs["init"] = init;
  p.tolerances["stop_tol"] = sc.stop_tol;
  p.execute = [ctx, sc, init](Json& results, std::vector<Verdict>& verdicts, std::vector<double>&) {
    Json j;
    Verdict v;
    try {
      const auto res = picard_solve(sc, ctx.params, init);
      const auto& t = res.trace;
      j["converged"] = t.converged;
      j["iterations"] = t.iterations;
      j["final_residual"] = t.residuals.back();
      j["final_step_change"] = t.step_changes.back();
      j["amplitude"] = t.amplitudes.back();
      j["min_value"] = *std::min_element(t.min_values.begin(), t.min_values.end());
      j["nodes"] = json_list(res.solution.nodes());
      j["values"] = json_list(res.solution.values());
      j["residuals"] = json_list(t.residuals);
      v = t.converged ? Verdict::Convergent : Verdict::Inconclusive;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Diverged && e.code() != ErrorCode::NonPositive) throw;
      j["converged"] = false;
      j["reason"] = e.what();
      v = Verdict::Diverged;
    }
    j["verdict"] = verdict_name(v);
    results.push_back(j);
    verdicts.push_back(v);
  };
  return p;
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {"constants", "verify-solution", "riesz", "identity",
                                                 "corollary", "regularity",      "scan",  "solve"};
  return names;
}

int exit_code_for(const std::vector<Verdict>& verdicts) {
  bool all_na = !verdicts.empty();
  for (Verdict v : verdicts) {
    if (v == Verdict::Refuted || v == Verdict::Diverged || v == Verdict::Inconclusive) return 1;
    if (v != Verdict::NotApplicable) all_na = false;
  }
  return all_na ? 3 : 0;
}

Verdict overall_verdict(const std::vector<Verdict>& verdicts) {
  for (Verdict v : verdicts) {
    if (v == Verdict::Refuted || v == Verdict::Diverged) return v;
  }
  bool any_verified = false;
  bool any_convergent = false;
  for (Verdict v : verdicts) {
    if (v == Verdict::Inconclusive) return v;
    any_verified = any_verified || v == Verdict::Verified;
    any_convergent = any_convergent || v == Verdict::Convergent;
  }
  if (any_verified) return Verdict::Verified;
  if (any_convergent) return Verdict::Convergent;
  return Verdict::NotApplicable;
}

Outcome run(const RunConfig& cfg) {
  const auto& table = subcommand_keys();
  const auto it = table.find(cfg.subcommand());
  if (it == table.end()) throw UsageError("unknown subcommand '" + cfg.subcommand() + "'");

  Prepared prep;
  Context* ctx_ptr = nullptr;
  std::optional<Context> ctx;
  try {
    for (const auto& key : cfg.keys()) {
      if (!kCommonKeys.count(key) && !it->second.count(key)) {
        fail(ErrorCode::InvalidArgument, "option '" + key + "' is not valid for " + cfg.subcommand());
      }
    }
    if (!cfg.has("n") || !cfg.has("lambda")) fail(ErrorCode::InvalidArgument, "--n and --lambda are required");
    const int n = cfg.get_int("n", 1);
    const double lambda = cfg.get_double("lambda", 0.5);
    QuadratureSpec quad;
    quad.rel_tol = cfg.get_double("rel-tol", quad.rel_tol);
    quad.abs_tol = cfg.get_double("abs-tol", quad.abs_tol);
    quad.max_subdivisions = cfg.get_int("max-subdivisions", quad.max_subdivisions);
    quad.validate();
    cfg.get_bool("timestamp", true);
    ctx.emplace(Context{cfg, Params::make(n, lambda), quad});
    ctx_ptr = &*ctx;
    const std::string& sub = cfg.subcommand();
    if (sub == "constants") prep = prepare_constants(*ctx_ptr);
    else if (sub == "verify-solution") prep = prepare_verify(*ctx_ptr);
    else if (sub == "riesz") prep = prepare_riesz(*ctx_ptr);
    else if (sub == "identity") prep = prepare_identity(*ctx_ptr);
    else if (sub == "corollary") prep = prepare_corollary(*ctx_ptr);
    else if (sub == "regularity") prep = prepare_regularity(*ctx_ptr);
    else if (sub == "scan") prep = prepare_scan(*ctx_ptr);
    else prep = prepare_solve(*ctx_ptr);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }

  Outcome out;
  Json results = Json::array();
  std::vector<double> errs;
  prep.execute(results, out.verdicts, errs);
  out.overall = overall_verdict(out.verdicts);
  out.exit_code = exit_code_for(out.verdicts);

  const Params& P = ctx_ptr->params;
  Json& doc = out.doc;
  doc["subcommand"] = cfg.subcommand();
  doc["params"] = Json{{"n", P.n}, {"lambda", P.lambda}, {"p", P.p}};
  doc["inputs"] = prep.inputs;
  doc["results"] = results;
  doc["verdict"] = verdict_name(out.overall);
  doc["tolerances"] = prep.tolerances;
  doc["quadrature"] = Json{{"rel_tol", ctx_ptr->quad.rel_tol}, {"err_estimates", json_list(errs)}};
  doc["exit_code"] = out.exit_code;
  if (cfg.get_bool("timestamp", true)) doc["timestamp"] = iso_timestamp();
  out.text = write_json(doc);
  return out;
}

Outcome parse_report(const std::string& text) {
  Outcome out;
  try {
    out.doc = Json::parse(text);
    for (const auto& r : out.doc.at("results")) out.verdicts.push_back(verdict_from_name(r.at("verdict").get<std::string>()));
    out.overall = verdict_from_name(out.doc.at("verdict").get<std::string>());
  } catch (const Json::exception& e) {
    fail(ErrorCode::Parse, std::string("malformed report: ") + e.what());
  }
  out.exit_code = exit_code_for(out.verdicts);
  out.text = text;
  return out;
}

}  // namespace lieb::app
