#include "lieb/radial_riesz.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lieb/errors.hpp"

namespace lieb {

namespace {

constexpr double kPi = std::numbers::pi;

// Fritsch-Carlson monotone slopes for a piecewise cubic Hermite interpolant.
std::vector<double> monotone_slopes(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  std::vector<double> m(n);
  m[0] = delta[0];
  m[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      m[i] = 0.0;
    } else {
      const double h0 = x[i] - x[i - 1];
      const double h1 = x[i + 1] - x[i];
      const double w0 = 2.0 * h1 + h0;
      const double w1 = h1 + 2.0 * h0;
      m[i] = (w0 + w1) / (w0 / delta[i - 1] + w1 / delta[i]);
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      m[i] = m[i + 1] = 0.0;
      continue;
    }
    const double a = m[i] / delta[i];
    const double b = m[i + 1] / delta[i];
    const double s = a * a + b * b;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      m[i] = tau * a * delta[i];
      m[i + 1] = tau * b * delta[i];
    }
  }
  return m;
}

// Generic-dimension angular integral |S^{n-2}| int_0^pi base^{-lambda/2} sin^{n-2} dtheta,
// with base = delta^2 + 4 t sin^2(theta/2) written in units of the larger radius.
double angular_quadrature(int n, double lambda, double t, double delta) {
  static const QuadratureSpec inner = [] {
    QuadratureSpec q;
    q.rel_tol = 1e-13;
    q.abs_tol = 1e-300;
    return q;
  }();
  const double power = static_cast<double>(n - 2);
  const Integrand integrand = [=](const Abscissa& at) {
    const double half_sin = std::sin(0.5 * at.from_lo);
    const double base = delta * delta + 4.0 * t * half_sin * half_sin;
    const double weight = n == 2 ? 1.0 : std::pow(std::sin(at.x), power);
    return std::pow(base, -0.5 * lambda) * weight;
  };
  return sphere_area(n - 1) * integrate(integrand, 0.0, kPi, inner).value;
}

}  // namespace

const char* profile_kind_name(ProfileKind kind) noexcept {
  switch (kind) {
    case ProfileKind::PowerSingular: return "power";
    case ProfileKind::Lieb: return "lieb";
    case ProfileKind::GridSampled: return "grid";
  }
  return "unknown";
}

RadialProfile RadialProfile::power(double amplitude, double decay) {
  if (!(amplitude > 0.0) || !std::isfinite(decay)) {
    fail(ErrorCode::Domain, "power profile needs a positive amplitude and finite exponent");
  }
  RadialProfile p;
  p.kind_ = ProfileKind::PowerSingular;
  p.amplitude_ = amplitude;
  p.decay_ = decay;
  return p;
}

RadialProfile RadialProfile::lieb(double amplitude, double decay) {
  if (!(amplitude > 0.0) || !std::isfinite(decay)) {
    fail(ErrorCode::Domain, "Lieb profile needs a positive amplitude and finite exponent");
  }
  RadialProfile p;
  p.kind_ = ProfileKind::Lieb;
  p.amplitude_ = amplitude;
  p.decay_ = decay;
  return p;
}

RadialProfile RadialProfile::sampled(std::vector<double> radii, std::vector<double> values,
                                     double tail_decay) {
  if (radii.size() < 2 || radii.size() != values.size()) {
    fail(ErrorCode::InvalidArgument, "grid profile needs at least two (radius, value) samples");
  }
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (!(radii[i] > 0.0) || (i > 0 && !(radii[i] > radii[i - 1]))) {
      fail(ErrorCode::InvalidArgument, "grid radii must be positive and strictly increasing");
    }
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      fail(ErrorCode::InvalidArgument, "grid profile values must be positive");
    }
  }
  if (!std::isfinite(tail_decay)) fail(ErrorCode::InvalidArgument, "tail decay must be finite");
  RadialProfile p;
  p.kind_ = ProfileKind::GridSampled;
  p.amplitude_ = 1.0;
  p.decay_ = tail_decay;
  p.slopes_ = monotone_slopes(radii, values);
  p.inner_exponent_ = std::log(values[1] / values[0]) / std::log(radii[1] / radii[0]);
  p.radii_ = std::move(radii);
  p.values_ = std::move(values);
  return p;
}

double RadialProfile::grid_value(double r) const {
  if (r <= radii_.front()) return values_.front() * std::pow(r / radii_.front(), inner_exponent_);
  if (r >= radii_.back()) return values_.back() * std::pow(r / radii_.back(), -decay_);
  const auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
  const std::size_t i = static_cast<std::size_t>(it - radii_.begin()) - 1;
  const double h = radii_[i + 1] - radii_[i];
  const double t = (r - radii_[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  return (2 * t3 - 3 * t2 + 1) * values_[i] + (t3 - 2 * t2 + t) * h * slopes_[i] +
         (-2 * t3 + 3 * t2) * values_[i + 1] + (t3 - t2) * h * slopes_[i + 1];
}

double RadialProfile::operator()(double r) const {
  switch (kind_) {
    case ProfileKind::PowerSingular: return amplitude_ * std::pow(r, -decay_);
    case ProfileKind::Lieb: return amplitude_ * std::pow(1.0 + r * r, -decay_);
    case ProfileKind::GridSampled: return grid_value(r);
  }
  return 0.0;
}

double RadialProfile::log_value(double r) const {
  switch (kind_) {
    case ProfileKind::PowerSingular: return std::log(amplitude_) - decay_ * std::log(r);
    case ProfileKind::Lieb: return std::log(amplitude_) - decay_ * std::log1p(r * r);
    case ProfileKind::GridSampled: return std::log(grid_value(r));
  }
  return 0.0;
}

double RadialProfile::origin_exponent() const {
  switch (kind_) {
    case ProfileKind::PowerSingular: return -decay_;
    case ProfileKind::Lieb: return 0.0;
    case ProfileKind::GridSampled: return inner_exponent_;
  }
  return 0.0;
}

double RadialProfile::infinity_exponent() const {
  switch (kind_) {
    case ProfileKind::PowerSingular: return -decay_;
    case ProfileKind::Lieb: return -2.0 * decay_;
    case ProfileKind::GridSampled: return -decay_;
  }
  return 0.0;
}

RadialProfile RadialProfile::scaled(double factor) const {
  if (!(factor > 0.0)) fail(ErrorCode::Domain, "profile scale factor must be positive");
  RadialProfile p = *this;
  if (kind_ == ProfileKind::GridSampled) {
    for (double& v : p.values_) v *= factor;
    for (double& m : p.slopes_) m *= factor;
  } else {
    p.amplitude_ *= factor;
  }
  return p;
}

double kernel_diagonal_exponent(int n, double lambda) {
  if (n == 1) return -lambda;
  return std::min(0.0, n - 1.0 - lambda);
}

double angular_kernel_gap(int n, double lambda, double r, double s, double gap) {
  if (n < 1 || !(lambda > 0.0) || !(lambda < n)) {
    fail(ErrorCode::Domain, "angular_kernel requires n >= 1 and 0 < lambda < n");
  }
  if (!(r >= 0.0) || !(s >= 0.0)) fail(ErrorCode::Domain, "angular_kernel radii must be >= 0");
  if (!(gap > 0.0)) fail(ErrorCode::Domain, "angular_kernel is singular at r = s");
  if (n == 1) return std::pow(gap, -lambda) + std::pow(r + s, -lambda);

  const double big = std::max(r, s);
  const double t = std::min(r, s) / big;
  const double delta = gap / big;  // 1 - t without cancellation
  const double scale = std::pow(big, -lambda);
  if (t == 0.0) return sphere_area(n) * scale;

  if (n == 3) {
    // (r+s)^a - |r-s|^a = big^a (1-t)^a expm1(a log((1+t)/(1-t))), a = 2 - lambda.
    const double log_ratio = std::log1p(2.0 * t / delta);
    const double a = 2.0 - lambda;
    if (a == 0.0) return 2.0 * kPi * scale * log_ratio / t;
    return 2.0 * kPi * scale * std::pow(delta, a) * std::expm1(a * log_ratio) / (a * t);
  }
  return scale * angular_quadrature(n, lambda, t, delta);
}

double angular_kernel(int n, double lambda, double r, double s) {
  return angular_kernel_gap(n, lambda, r, s, std::abs(r - s));
}

SingularityBudget riesz_budget(const RadialProfile& f, const Params& params, double r) {
  const double radial = params.n - 1.0;
  SingularityBudget budget;
  if (r == 0.0) {
    budget.add(0.0, f.origin_exponent() + radial - params.lambda);
  } else {
    budget.add(0.0, f.origin_exponent() + radial);
    budget.add(r, kernel_diagonal_exponent(params.n, params.lambda));
  }
  budget.add(kInfinity, f.infinity_exponent() + radial - params.lambda);
  return budget;
}

QuadratureResult riesz_potential_radial_detailed(const RadialProfile& f, const Params& params,
                                                 double r, const QuadratureSpec& quad) {
  if (!(r >= 0.0) || !std::isfinite(r)) fail(ErrorCode::Domain, "evaluation radius must be >= 0");
  const SingularityBudget budget = riesz_budget(f, params, r);
  const ScreenResult screen = convergence_screen(budget);
  if (!screen.convergent) {
    std::ostringstream os;
    os << "Riesz potential at r=" << r << " rejected: exponent " << screen.failing_exponent
       << " at " << (std::isinf(screen.failing_location) ? std::string("infinity")
                                                         : std::to_string(screen.failing_location));
    fail(ErrorCode::ScreenRejected, os.str());
  }

  const int n = params.n;
  const double lambda = params.lambda;
  const double radial = n - 1.0;
  QuadratureSpec spec = r > 0.0 ? quad.with_split(r) : quad;
  spec.tail_exponent_hint = budget.local_exponents.back().exponent;

  if (r == 0.0) {
    const double area = sphere_area(n);
    const Integrand integrand = [&](const Abscissa& at) {
      return area * std::exp(f.log_value(at.x) + (radial - lambda) * std::log(at.x));
    };
    return integrate(integrand, 0.0, kInfinity, spec);
  }
  const Integrand integrand = [&](const Abscissa& at) {
    const double s = at.x;
    const double weight = n == 1 ? std::exp(f.log_value(s))
                                 : std::exp(f.log_value(s) + radial * std::log(s));
    return weight * angular_kernel_gap(n, lambda, r, s, at.distance_to(r));
  };
  return integrate(integrand, 0.0, kInfinity, spec);
}

double riesz_potential_radial(const RadialProfile& f, const Params& params, double r,
                              const QuadratureSpec& quad) {
  return riesz_potential_radial_detailed(f, params, r, quad).value;
}

}  // namespace lieb
