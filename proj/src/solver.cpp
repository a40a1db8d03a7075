#include "lieb/solver.hpp"

#include <algorithm>
#include <cmath>

#include "lieb/errors.hpp"

namespace lieb {

void SolverConfig::validate(const Params& params) const {
  if (G.dimension() != 1) fail(ErrorCode::InvalidArgument, "the solver works on one-dimensional domains");
  if (params.n != 1) fail(ErrorCode::InvalidArgument, "the solver needs n = 1");
  if (lambda != params.lambda) fail(ErrorCode::InvalidArgument, "solver lambda differs from params");
  if (grid_size < 2) fail(ErrorCode::InvalidArgument, "grid_size must be at least 2");
  if (!(grading_exponent >= 1.0)) fail(ErrorCode::InvalidArgument, "grading_exponent must be >= 1");
  if (max_iters < 1) fail(ErrorCode::InvalidArgument, "max_iters must be >= 1");
  if (!(stop_tol > 0.0)) fail(ErrorCode::InvalidArgument, "stop_tol must be positive");
  if (!(damping > 0.0 && damping <= 1.0)) fail(ErrorCode::InvalidArgument, "damping must lie in (0, 1]");
}

std::vector<double> solver_grid(const SolverConfig& config) {
  const double a = config.G.a();
  const double b = config.G.b();
  const double half = 0.5 * (b - a);
  const int N = config.grid_size;
  std::vector<double> t(static_cast<std::size_t>(N) + 1);
  for (int i = 0; i <= N; ++i) {
    // Mirror the left half so the grid is exactly symmetric.
    const int j = std::min(i, N - i);
    const double g = half * std::pow(2.0 * j / N, config.grading_exponent);
    t[static_cast<std::size_t>(i)] = i <= N - i ? a + g : b - g;
  }
  t.front() = a;
  t.back() = b;
  return t;
}

namespace {

// Antiderivatives of |t|^{-lambda} and t |t|^{-lambda}.
double F0(double t, double lambda) {
  return std::copysign(std::pow(std::abs(t), 1.0 - lambda) / (1.0 - lambda), t);
}
double F1(double t, double lambda) { return std::pow(std::abs(t), 2.0 - lambda) / (2.0 - lambda); }

}  // namespace

std::vector<double> product_weights(const std::vector<double>& nodes, double lambda, double x) {
  if (!(lambda > 0.0 && lambda < 1.0)) fail(ErrorCode::Domain, "product integration needs 0 < lambda < 1");
  std::vector<double> w(nodes.size(), 0.0);
  for (std::size_t j = 0; j + 1 < nodes.size(); ++j) {
    const double tl = nodes[j];
    const double tr = nodes[j + 1];
    const double h = tr - tl;
    const double A = tl - x;
    const double B = tr - x;
    const double m0 = F0(B, lambda) - F0(A, lambda);
    const double m1 = F1(B, lambda) - F1(A, lambda);  // int (s - x) |s - x|^{-lambda} ds
    w[j] += ((tr - x) * m0 - m1) / h;
    w[j + 1] += ((x - tl) * m0 + m1) / h;
  }
  return w;
}

GridSolution::GridSolution(Params params, SolverConfig config, std::vector<double> nodes,
                           std::vector<double> values)
    : params_(params), config_(std::move(config)), nodes_(std::move(nodes)), values_(std::move(values)) {
  if (nodes_.size() != values_.size() || nodes_.size() < 2) {
    fail(ErrorCode::InvalidArgument, "grid solution needs matching nodes and values");
  }
}

double GridSolution::linear(double x) const {
  if (x < nodes_.front() || x > nodes_.back()) fail(ErrorCode::Domain, "point outside the solver domain");
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), x);
  std::size_t j = it == nodes_.begin() ? 0 : static_cast<std::size_t>(it - nodes_.begin()) - 1;
  if (j + 1 >= nodes_.size()) j = nodes_.size() - 2;
  const double t = (x - nodes_[j]) / (nodes_[j + 1] - nodes_[j]);
  return (1.0 - t) * values_[j] + t * values_[j + 1];
}

double GridSolution::potential(double x) const {
  const auto w = product_weights(nodes_, params_.lambda, x);
  double sum = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) sum += w[j] * values_[j];
  return sum;
}

double GridSolution::nystrom(double x) const { return std::pow(potential(x), 1.0 / params_.pm1); }

double GridSolution::probe_residual(const std::vector<double>& probes) const {
  double worst = 0.0;
  double scale = 0.0;
  for (double x : probes) {
    const double rhs = std::pow(linear(x), params_.pm1);
    worst = std::max(worst, std::abs(potential(x) - rhs));
    scale = std::max(scale, rhs);
  }
  return worst / scale;
}

namespace {

struct Operator {
  std::vector<double> nodes;
  std::vector<std::vector<double>> W;  // row i: weights for node i

  Operator(std::vector<double> t, double lambda) : nodes(std::move(t)) {
    for (double x : nodes) W.push_back(product_weights(nodes, lambda, x));
  }

  std::vector<double> apply(const std::vector<double>& u) const {
    std::vector<double> y(u.size(), 0.0);
    for (std::size_t i = 0; i < W.size(); ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < u.size(); ++j) s += W[i][j] * u[j];
      y[i] = s;
    }
    return y;
  }
};

struct Step {
  std::vector<double> next;  // damped, normalized update
  double sigma = 0.0;        // max (T_G w)^q
  double residual = 0.0;     // for u = c w
  double change = 0.0;
};

Step normalized_step(const Operator& T, const std::vector<double>& w, const Params& params, double damping) {
  const double q = 1.0 / params.pm1;
  const auto y = T.apply(w);
  std::vector<double> hat(y.size());
  Step s;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0.0) || !std::isfinite(y[i])) fail(ErrorCode::NonPositive, "potential lost positivity");
    hat[i] = std::pow(y[i], q);
    s.sigma = std::max(s.sigma, hat[i]);
  }
  if (!(s.sigma > 0.0) || !std::isfinite(s.sigma)) fail(ErrorCode::NonPositive, "iterate underflowed");
  double wmax = 0.0;
  double res = 0.0;
  double scale = 0.0;
  s.next.resize(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double target = hat[i] / s.sigma;
    s.next[i] = (1.0 - damping) * w[i] + damping * target;
    // With u = c w, T_G u / c^{p-1} = (hat / sigma)^{p-1}.
    const double wp = std::pow(w[i], params.pm1);
    res = std::max(res, std::abs(std::pow(target, params.pm1) - wp));
    scale = std::max(scale, wp);
    wmax = std::max(wmax, s.next[i]);
  }
  double change = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!(s.next[i] > 0.0)) fail(ErrorCode::NonPositive, "iterate lost positivity");
    change = std::max(change, std::abs(s.next[i] - w[i]));
  }
  s.residual = res / scale;
  s.change = change / wmax;
  return s;
}

double amplitude(double sigma, const Params& params) {
  return std::pow(sigma, -params.pm1 / (1.0 - params.pm1));
}

}  // namespace

SolveResult picard_solve(const SolverConfig& config, const Params& params,
                         const std::function<double(double)>& init) {
  config.validate(params);
  const Operator T(solver_grid(config), params.lambda);
  std::vector<double> w(T.nodes.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = init(T.nodes[i]);
    if (!(w[i] > 0.0) || !std::isfinite(w[i])) fail(ErrorCode::NonPositive, "initial guess must be positive");
  }
  const double w0 = *std::max_element(w.begin(), w.end());
  for (double& v : w) v /= w0;

  SolverTrace trace;
  int rising = 0;
  std::vector<double> u(w.size());
  for (int k = 0; k < config.max_iters; ++k) {
    const Step s = normalized_step(T, w, params, config.damping);
    const double c = amplitude(s.sigma, params);
    trace.residuals.push_back(s.residual);
    trace.step_changes.push_back(s.change);
    trace.amplitudes.push_back(c);
    double umin = kInfinity;
    for (std::size_t i = 0; i < w.size(); ++i) {
      u[i] = c * w[i];
      umin = std::min(umin, u[i]);
    }
    trace.min_values.push_back(umin);
    trace.iterations = k + 1;
    if (!(umin > 0.0)) fail(ErrorCode::NonPositive, "iterate lost positivity");
    if (s.residual <= config.stop_tol && s.change <= config.stop_tol) {
      trace.converged = true;
      break;
    }
    if (k > 0 && s.residual > trace.residuals[static_cast<std::size_t>(k) - 1]) {
      if (++rising >= 5) fail(ErrorCode::Diverged, "residual grew for 5 consecutive iterations");
    } else {
      rising = 0;
    }
    w = s.next;
  }
  return SolveResult{GridSolution(params, config, T.nodes, u), trace};
}

SolveResult picard_solve(const SolverConfig& config, const Params& params, double init) {
  return picard_solve(config, params, [init](double) { return init; });
}

std::vector<double> picard_step(const GridSolution& solution) {
  const Operator T(solution.nodes(), solution.params().lambda);
  const auto& u = solution.values();
  const double umax = *std::max_element(u.begin(), u.end());
  std::vector<double> w(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] / umax;
  const Step s = normalized_step(T, w, solution.params(), solution.config().damping);
  const double c = amplitude(s.sigma, solution.params());
  std::vector<double> out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = c * s.next[i];
  return out;
}

}  // namespace lieb
