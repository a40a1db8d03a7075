#include "lieb/solutions.hpp"

#include <cmath>
#include <string>

#include "lieb/errors.hpp"

namespace lieb {

const char* verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
    case Verdict::NotApplicable: return "NotApplicable";
    case Verdict::Convergent: return "Convergent";
    case Verdict::Diverged: return "Diverged";
  }
  return "Unknown";
}

Verdict verdict_from_name(const std::string& name) {
  for (Verdict v : {Verdict::Verified, Verdict::Refuted, Verdict::Inconclusive,
                    Verdict::NotApplicable, Verdict::Convergent, Verdict::Diverged}) {
    if (name == verdict_name(v)) return v;
  }
  fail(ErrorCode::Parse, "unknown verdict '" + name + "'");
}

RadialProfile singular_solution(const Params& params) {
  return RadialProfile::power(lieb_constant_C(params), params.n - 0.5 * params.lambda);
}

RadialProfile lieb_solution(const Params& params, const QuadratureSpec& quad) {
  return RadialProfile::lieb(lieb_constant_L(params, quad), params.n - 0.5 * params.lambda);
}

Verdict classify_residual(double rel_residual, double rel_err_estimate, double tolerance) {
  if (rel_residual <= tolerance) return Verdict::Verified;
  if (rel_residual > 10.0 * tolerance && 10.0 * rel_err_estimate <= rel_residual) {
    return Verdict::Refuted;
  }
  return Verdict::Inconclusive;
}

ResidualReport verify_solution(const RadialProfile& f, const Params& params,
                               std::span<const double> radii, double tolerance,
                               const QuadratureSpec& quad) {
  if (radii.empty()) fail(ErrorCode::InvalidArgument, "verify_solution needs at least one radius");
  if (!(tolerance > 0.0)) fail(ErrorCode::InvalidArgument, "tolerance must be positive");
  for (double r : radii) {
    if (!(r >= 0.0)) fail(ErrorCode::Domain, "sample radii must be >= 0");
    if (r == 0.0 && !f.smooth_at_origin() && f.origin_exponent() < 0.0) {
      fail(ErrorCode::Domain, "radius 0 is excluded for profiles singular at the origin");
    }
  }

  ResidualReport rep;
  rep.params = params;
  rep.tolerance = tolerance;
  double worst_err = 0.0;
  for (double r : radii) {
    const QuadratureResult lhs = riesz_potential_radial_detailed(f, params, r, quad);
    const double rhs = std::pow(f(r), params.pm1);
    const double rel = std::abs(lhs.value - rhs) / std::abs(rhs);
    rep.sample_radii.push_back(r);
    rep.lhs_values.push_back(lhs.value);
    rep.rhs_values.push_back(rhs);
    rep.lhs_err_estimates.push_back(lhs.err_estimate);
    if (rel > rep.max_rel_residual || rep.sample_radii.size() == 1) {
      rep.max_rel_residual = rel;
      worst_err = lhs.err_estimate / std::abs(rhs);
    }
  }
  rep.verdict = classify_residual(rep.max_rel_residual, worst_err, tolerance);
  return rep;
}

}  // namespace lieb
