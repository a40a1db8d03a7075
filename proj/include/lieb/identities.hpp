#pragma once

// Integral identities between solutions: commutativity, orthogonality and
// their composite-form versions, plus the cross identity relating f_C and f_L.

#include <string>
#include <vector>

#include "lieb/forms.hpp"
#include "lieb/solutions.hpp"

namespace lieb {

enum class IdentityId { Eq5, Eq6, Eq7, Eq8, Eq9a, Eq9b, Eq10 };

const char* identity_id_name(IdentityId id) noexcept;
IdentityId identity_id_from_name(const std::string& name);

struct IdentityTolerances {
  double relative = 1e-6;  // equalities with a nonzero common value
  double absolute = 1e-8;  // integrals asserted to vanish
};

struct IdentityReport {
  IdentityId id = IdentityId::Eq6;
  std::string label;
  double lhs = 0.0;
  double rhs = 0.0;
  double lhs_err = 0.0;
  double rhs_err = 0.0;
  ScreenResult screen;
  /// |lhs - rhs| / max(|lhs|, |rhs|, absolute tolerance)
  double rel_gap = 0.0;
  /// Both sides are asserted to be zero; the verdict then uses max(|lhs|, |rhs|).
  bool zero_target = false;
  /// Integral of |integrand| (zero targets only), the scale the zero is measured against.
  double conditioning = 0.0;
  /// The integrand is odd on R^1, so the zero holds by symmetry alone.
  bool parity_forced = false;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Inconclusive;
};

/// int D_alpha(a) D_beta(b) dx over R^n, with its screen outcome.
struct PairIntegral {
  double value = 0.0;
  double err_estimate = 0.0;
  double absolute = 0.0;  // int |integrand|, filled only when requested
  ScreenResult screen;
  bool parity_forced = false;
};

/// Exponent budget of D_alpha(a) D_beta(b) (|x|^{n-1} included for n >= 2).
SingularityBudget pair_budget(const Field& a, const MultiIndex& alpha, const Field& b,
                              const MultiIndex& beta);

/// Screens and integrates one term pair. In n >= 2 only alpha = beta = 0 is
/// supported (radial reduction). A failed screen returns value 0 with
/// screen.convergent == false and performs no quadrature.
PairIntegral integrate_pair(const Field& a, const MultiIndex& alpha, const Field& b,
                            const MultiIndex& beta, const QuadratureSpec& quad,
                            bool want_absolute = false);

/// int_{1/R <= |x| <= R} |D_alpha(a) D_beta(b)| dx, ignoring the screen. Used to
/// confirm that screened-out integrals really fail to settle.
QuadratureResult truncated_abs_pair_integral(const Field& a, const MultiIndex& alpha, const Field& b,
                                             const MultiIndex& beta, double R,
                                             const QuadratureSpec& quad);

/// int D_beta(g) D_alpha(f^{p-1}) = int D_alpha(f) D_beta(g^{p-1})
IdentityReport check_commutativity(const RadialProfile& f, const RadialProfile& g,
                                   const MultiIndex& alpha, const MultiIndex& beta,
                                   const Params& params, const QuadratureSpec& quad = {},
                                   const IdentityTolerances& tol = {});

/// Odd |alpha|+|beta|: both integrals vanish. Even: the signed equality
/// (-1)^{|beta|} int D_beta f D_alpha f^{p-1} = (-1)^{|alpha|} int D_alpha f D_beta f^{p-1}.
IdentityReport check_orthogonality(const RadialProfile& f, const MultiIndex& alpha,
                                   const MultiIndex& beta, const Params& params,
                                   const QuadratureSpec& quad = {},
                                   const IdentityTolerances& tol = {});

/// One report for the f/g commutativity of the full forms, two for the
/// vanishing even/odd cross integrals of Lambda, three for the links of the
/// chain int Lambda(f) Omega(f^{p-1}) = int Lambda(f^{p-1}) Omega(f) = even-even
/// plus odd-odd (either placement of the power).
std::vector<IdentityReport> check_composite(const RadialProfile& f, const RadialProfile& g,
                                            const DifferentialForm& lambda_form,
                                            const DifferentialForm& omega_form,
                                            const Params& params, const QuadratureSpec& quad = {},
                                            const IdentityTolerances& tol = {});

/// L^{p-1} C int |x|^{-(n-lambda/2)} (1+|x|^2)^{-lambda/2} dx
///   = L C^{p-1} int |x|^{-lambda/2} (1+|x|^2)^{-(n-lambda/2)} dx
IdentityReport check_corollary_identity(const Params& params, const QuadratureSpec& quad = {},
                                        double tolerance = 1e-8);

}  // namespace lieb
