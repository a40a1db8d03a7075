#pragma once

// Boundary-weighted derivative norms on bounded domains, checks of the
// growth conditions for the kernel |x-y|^{-lambda}, and a scan for decay at
// infinity and isolated blow-up points.

#include <span>
#include <string>
#include <vector>

#include "lieb/forms.hpp"

namespace lieb {

class Domain1D {
 public:
  enum class Kind { Interval, Ball };

  /// (a, b) in R^1
  static Domain1D interval(double a, double b);
  /// {|x| < R} in R^n
  static Domain1D ball(int n, double R);

  Kind kind() const { return kind_; }
  int dimension() const { return n_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double radius() const { return b_; }

  /// Distance to the boundary; negative outside, zero on the boundary.
  double rho(std::span<const double> x) const;
  bool contains(std::span<const double> x) const { return rho(x) > 0.0; }

  std::string to_string() const;

 private:
  Kind kind_ = Kind::Interval;
  int n_ = 1;
  double a_ = 0.0;
  double b_ = 1.0;
};

/// 1 for lam < 0, 1/(1 + |log rho|) for lam = 0, rho^lam for lam > 0. Throws Domain outside G.
double weight(double lam, std::span<const double> x, const Domain1D& G);

struct GridSchedule {
  int base_points = 64;  // uniform midpoint samples on the coarsest level
  int levels = 4;        // at least 3
  int base_depth = 8;    // coarsest boundary grading reaches rho = diam * 2^{-base_depth}
  int depth_step = 4;    // extra halvings toward the boundary per level
};

struct WeightedNormResult {
  int m = 0;
  double nu = 0.0;
  std::vector<MultiIndex> indices;
  /// Finest-level estimate of sup_x w_{|alpha|-(n-nu)}(x) |D_alpha u(x)| per index.
  std::vector<double> per_alpha_suprema;
  /// The same supremum on every refinement level, coarsest first.
  std::vector<std::vector<double>> level_suprema;
  std::vector<bool> per_alpha_unbounded;
  double total = 0.0;  // +inf when any supremum is flagged unbounded
  bool infinite = false;
};

/// Sup of the weighted derivatives over boundary-graded grids of increasing
/// depth. A supremum is flagged unbounded when it grows by more than 10% at each
/// of the last two refinements, or when a sample point is not evaluable.
/// Ball domains in n >= 2 are sampled along the rays +-e_1 and the diagonal.
WeightedNormResult weighted_norm(const Field& u, int m, double nu, const Domain1D& G,
                                 const GridSchedule& grid = {});

struct KernelGrowthOrder {
  int order = 0;
  double expected = 0.0;       // lambda (lambda+1) ... (lambda+order-1)
  double min_ratio = 0.0;      // |D^k K| |x-y|^{lambda+k} over the samples
  double max_ratio = 0.0;
  double max_rel_deviation = 0.0;
};

struct KernelGrowthReport {
  double lambda = 0.0;
  int sample_count = 0;
  std::vector<KernelGrowthOrder> orders;
  /// Empirical b_1: the largest ratio over all orders.
  double b1 = 0.0;
  /// Lipschitz constant in u. The kernel does not depend on u, so this is 0.
  double b2 = 0.0;
  /// max |K(x,y,u+h) - K(x,y,u-h)| over the samples; exactly 0.
  double u_slice_max = 0.0;
  /// max |(d/dx + d/dy) K| over the samples by central differences.
  double translation_slice_max = 0.0;
};

/// Growth of x-derivatives of |x-y|^{-lambda} in one dimension for orders 0..m (m <= 4),
/// on sample_count deterministic pseudo-random pairs.
KernelGrowthReport kernel_growth_check(const Params& params, int m, int sample_count);

struct PointPair {
  std::vector<double> x;
  std::vector<double> y;
};

/// max over samples and axes i of |K(x+h e_i, y+h e_i) - K(x-h e_i, y-h e_i)| / (2h).
double translation_annihilation_check(const Params& params, std::span<const PointPair> points, double h);

/// Deterministic pseudo-random pairs in [-2,2]^n with |x-y| >= min_gap.
std::vector<PointPair> sample_point_pairs(int n, int count, double min_gap = 0.1,
                                          unsigned long long seed = 20241018ULL);

struct SingularPoint {
  double radius = 0.0;          // 0 for the origin; otherwise a sphere |x| = radius
  std::vector<double> values;   // peak value on each refinement level
};

struct ScanReport {
  double r_outer = 0.0;
  double value_at_outer = 0.0;
  double reference_value = 0.0;  // f(1)
  bool below_tolerance = false;  // f(r_outer) <= decay_rel_tol * f(1)
  bool monotone_last_decade = false;
  bool decay_verified = false;
  double blowup_threshold = 0.0;
  std::vector<SingularPoint> singular_points;
  /// f stays below the threshold for r >= bounding_radius on the finest level.
  double bounding_radius = 0.0;
  double sup_outside = 0.0;
};

struct ScanOptions {
  double decay_rel_tol = 1e-3;
  int levels = 3;
  int points_per_decade = 50;
};

/// Radial scan of f on (0, r_outer]. Blow-up detection is a heuristic: a local
/// peak above the threshold whose value grows by more than 10% at every refinement.
ScanReport decay_singularity_scan(const RadialProfile& f, double r_outer, double blowup_threshold,
                                  const ScanOptions& options = {});

}  // namespace lieb
