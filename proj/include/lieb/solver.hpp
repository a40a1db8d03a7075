#pragma once

// Damped, normalized Picard iteration for  int_G |x-y|^{-lambda} u(y) dy = u(x)^{p-1}
// on a bounded one-dimensional domain G, using product integration against a
// piecewise-linear interpolant of u.

#include <functional>
#include <vector>

#include "lieb/regularity.hpp"

namespace lieb {

struct SolverConfig {
  Domain1D G = Domain1D::interval(-1.0, 1.0);
  double lambda = 0.5;
  int grid_size = 64;             // number of panels; nodes = grid_size + 1
  double grading_exponent = 1.0;  // >= 1; nodes cluster toward both ends as (2s)^gamma
  int max_iters = 1000;
  double stop_tol = 1e-8;
  double damping = 0.5;

  void validate(const Params& params) const;
};

struct SolverTrace {
  std::vector<double> residuals;     // relative sup residual of the scaled iterate
  std::vector<double> step_changes;  // relative sup change of the normalized iterate
  std::vector<double> amplitudes;    // scale c_k turning the normalized iterate into u_k
  std::vector<double> min_values;    // smallest node value of u_k
  bool converged = false;
  int iterations = 0;
};

/// Converged (or last) iterate on the grid with interpolants.
class GridSolution {
 public:
  GridSolution(Params params, SolverConfig config, std::vector<double> nodes, std::vector<double> values);

  const Params& params() const { return params_; }
  const SolverConfig& config() const { return config_; }
  const std::vector<double>& nodes() const { return nodes_; }
  const std::vector<double>& values() const { return values_; }

  /// Piecewise-linear interpolant.
  double linear(double x) const;
  /// (T_G u_h)(x) for the piecewise-linear u_h.
  double potential(double x) const;
  /// (T_G u_h)(x)^{1/(p-1)}: the natural interpolant of the fixed point.
  double nystrom(double x) const;
  /// max over probes of |T_G u_h(x) - u_h(x)^{p-1}| / max u_h(x)^{p-1}.
  double probe_residual(const std::vector<double>& probes) const;

 private:
  Params params_;
  SolverConfig config_;
  std::vector<double> nodes_;
  std::vector<double> values_;
};

/// Symmetric graded grid on [a, b].
std::vector<double> solver_grid(const SolverConfig& config);

/// Product-integration weights w_j with int_a^b |x-s|^{-lambda} u_h(s) ds = sum_j w_j u_j.
std::vector<double> product_weights(const std::vector<double>& nodes, double lambda, double x);

struct SolveResult {
  GridSolution solution;
  SolverTrace trace;
};

/// Iterates w <- (1-d) w + d (T_G w)^q / max (T_G w)^q with q = 1/(p-1), and
/// reports u = c w where c = sigma^{-(p-1)/(2-p)} restores the amplitude that the
/// equation pins. Throws Diverged after 5 consecutive residual increases and
/// NonPositive when a node value stops being positive.
SolveResult picard_solve(const SolverConfig& config, const Params& params,
                         const std::function<double(double)>& init);
SolveResult picard_solve(const SolverConfig& config, const Params& params, double init = 1.0);

/// One iteration applied to a converged solution; returns the new node values.
std::vector<double> picard_step(const GridSolution& solution);

}  // namespace lieb
