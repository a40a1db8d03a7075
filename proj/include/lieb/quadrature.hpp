#pragma once

// Deterministic adaptive 1-D quadrature for integrands with algebraic or
// logarithmic endpoint singularities and power-law tails on [a, inf).

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace lieb {

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  /// Known singularity locations; panels are graded toward each of them.
  std::vector<double> split_points;
  /// Asymptotic power e in f(t) ~ t^e at infinity, when known.
  std::optional<double> tail_exponent_hint;

  void validate() const;
  QuadratureSpec with_split(double point) const;
  QuadratureSpec with_rel_tol(double tol) const;
};

/// A quadrature node together with exact distances to the ends of the
/// segment (between consecutive split points) that contains it. Integrands
/// singular at a split point should use from_lo / to_hi rather than x - s,
/// which loses all relative accuracy once x is within a few ulps of s.
struct Abscissa {
  double x = 0.0;
  double lo = 0.0;       // left end of the enclosing segment
  double hi = 0.0;       // right end (may be +inf for the tail)
  double from_lo = 0.0;  // x - lo
  double to_hi = 0.0;    // hi - x

  /// |x - point| computed from the exact offsets when point is a segment end.
  double distance_to(double point) const;
};

struct QuadratureResult {
  double value = 0.0;
  double err_estimate = 0.0;
  int panels = 0;
  long evaluations = 0;
};

using Integrand = std::function<double(const Abscissa&)>;

/// Integrates f over [a, b]; b may be +infinity. Throws NonConvergent when the
/// subdivision budget runs out and DivergentTail when an infinite tail decays
/// no faster than t^{-1}.
QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec);

/// Convenience overload for integrands that only need the abscissa value.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Local behaviour |t - location|^exponent of an integrand; location may be +inf.
struct LocalExponent {
  double location = 0.0;
  double exponent = 0.0;
};

struct SingularityBudget {
  std::vector<LocalExponent> local_exponents;

  SingularityBudget& add(double location, double exponent) {
    local_exponents.push_back({location, exponent});
    return *this;
  }
};

struct ScreenResult {
  bool convergent = true;
  double failing_location = 0.0;  // meaningful only when !convergent
  double failing_exponent = 0.0;

  static ScreenResult pass() { return {}; }
};

/// Absolute-convergence test: every finite location needs exponent > -1 and
/// infinity needs exponent < -1. Exactly -1 is reported divergent.
ScreenResult convergence_screen(const SingularityBudget& budget);

}  // namespace lieb
