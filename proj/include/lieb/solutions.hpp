#pragma once

// The two exhibited solutions of  int |x-y|^{-lambda} f(y) dy = f(x)^{p-1}
// and a residual verifier for radial candidates.

#include <span>
#include <string>
#include <vector>

#include "lieb/radial_riesz.hpp"

namespace lieb {

enum class Verdict { Verified, Refuted, Inconclusive, NotApplicable, Convergent, Diverged };

const char* verdict_name(Verdict v) noexcept;
Verdict verdict_from_name(const std::string& name);

struct ResidualReport {
  Params params;
  std::vector<double> sample_radii;
  std::vector<double> lhs_values;  // (Tf)(r)
  std::vector<double> rhs_values;  // f(r)^{p-1}
  std::vector<double> lhs_err_estimates;
  double max_rel_residual = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// C(n,lambda) |x|^{-(n-lambda/2)}: unbounded at the origin.
RadialProfile singular_solution(const Params& params);

/// L(n,lambda) (1+|x|^2)^{-(n-lambda/2)} with L fixed by the equation at the origin.
RadialProfile lieb_solution(const Params& params, const QuadratureSpec& quad = {});

/// Verified iff max |lhs-rhs|/|rhs| <= tolerance. Refuted needs the residual to
/// exceed 10x tolerance and the quadrature error at the worst radius to sit an
/// order of magnitude below it; everything else is Inconclusive.
ResidualReport verify_solution(const RadialProfile& f, const Params& params,
                               std::span<const double> radii, double tolerance,
                               const QuadratureSpec& quad = {});

/// Verdict rule shared by every residual-style check.
Verdict classify_residual(double rel_residual, double rel_err_estimate, double tolerance);

}  // namespace lieb
