#pragma once

// Riesz potential (Tf)(x) = int_{R^n} |x-y|^{-lambda} f(y) dy of radially
// symmetric f, reduced to a single radial integral against the angular kernel
// K(r,s) = int_{S^{n-1}} |r e_1 - s w|^{-lambda} dsigma(w).

#include <vector>

#include "lieb/quadrature.hpp"
#include "lieb/specfun.hpp"

namespace lieb {

enum class ProfileKind { PowerSingular, Lieb, GridSampled };

const char* profile_kind_name(ProfileKind kind) noexcept;

class RadialProfile {
 public:
  /// amplitude * r^{-decay}
  static RadialProfile power(double amplitude, double decay);
  /// amplitude * (1 + r^2)^{-decay}
  static RadialProfile lieb(double amplitude, double decay);
  /// Monotone cubic interpolant through (radii, values); beyond the last node
  /// the values continue as r^{-tail_decay}, inside the first node as the power
  /// matching the first two samples.
  static RadialProfile sampled(std::vector<double> radii, std::vector<double> values,
                               double tail_decay);

  ProfileKind kind() const { return kind_; }
  double amplitude() const { return amplitude_; }
  double decay() const { return decay_; }
  const std::vector<double>& radii() const { return radii_; }
  const std::vector<double>& values() const { return values_; }

  double operator()(double r) const;
  double log_value(double r) const;

  /// e such that f(r) ~ r^e as r -> 0 (0 when bounded there).
  double origin_exponent() const;
  /// e such that f(r) ~ r^e as r -> inf.
  double infinity_exponent() const;
  /// True when the profile is smooth and bounded at the origin.
  bool smooth_at_origin() const { return kind_ == ProfileKind::Lieb; }

  RadialProfile scaled(double factor) const;

 private:
  RadialProfile() = default;
  double grid_value(double r) const;

  ProfileKind kind_ = ProfileKind::PowerSingular;
  double amplitude_ = 1.0;
  double decay_ = 0.0;
  std::vector<double> radii_;
  std::vector<double> values_;
  std::vector<double> slopes_;
  double inner_exponent_ = 0.0;
};

/// Angular kernel K(r,s); requires r != s (the diagonal singularity is integrable).
double angular_kernel(int n, double lambda, double r, double s);

/// Same kernel with the gap |r - s| supplied exactly by the caller.
double angular_kernel_gap(int n, double lambda, double r, double s, double gap);

/// Local exponent of K(r, s) in |r - s| as s -> r, as recorded by the convergence screen.
double kernel_diagonal_exponent(int n, double lambda);

/// Exponent budget of the radial integrand f(s) s^{n-1} K(r,s).
SingularityBudget riesz_budget(const RadialProfile& f, const Params& params, double r);

/// (Tf)(r) with its quadrature error estimate. Throws ScreenRejected when the
/// radial integral fails the convergence screen.
QuadratureResult riesz_potential_radial_detailed(const RadialProfile& f, const Params& params,
                                                 double r, const QuadratureSpec& quad = {});

double riesz_potential_radial(const RadialProfile& f, const Params& params, double r,
                              const QuadratureSpec& quad = {});

}  // namespace lieb
