#include "lieb/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "lieb/errors.hpp"
#include "taylor.hpp"

namespace lieb {

Domain1D Domain1D::interval(double a, double b) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    fail(ErrorCode::InvalidArgument, "interval needs finite a < b");
  }
  Domain1D d;
  d.kind_ = Kind::Interval;
  d.n_ = 1;
  d.a_ = a;
  d.b_ = b;
  return d;
}

Domain1D Domain1D::ball(int n, double R) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "ball dimension must be >= 1");
  if (!(R > 0.0) || !std::isfinite(R)) fail(ErrorCode::InvalidArgument, "ball radius must be positive");
  Domain1D d;
  d.kind_ = Kind::Ball;
  d.n_ = n;
  d.a_ = -R;
  d.b_ = R;
  return d;
}

double Domain1D::rho(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) fail(ErrorCode::InvalidArgument, "point dimension does not match domain");
  if (kind_ == Kind::Interval) return std::min(x[0] - a_, b_ - x[0]);
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return b_ - std::sqrt(r2);
}

std::string Domain1D::to_string() const {
  std::ostringstream os;
  os.precision(17);
  if (kind_ == Kind::Interval) {
    os << "Interval(" << a_ << ", " << b_ << ")";
  } else {
    os << "Ball(" << n_ << ", " << b_ << ")";
  }
  return os.str();
}

double weight(double lam, std::span<const double> x, const Domain1D& G) {
  const double rho = G.rho(x);
  if (!(rho > 0.0)) fail(ErrorCode::Domain, "weight is defined only inside the domain");
  if (lam < 0.0) return 1.0;
  if (lam == 0.0) return 1.0 / (1.0 + std::abs(std::log(rho)));
  return std::pow(rho, lam);
}

namespace {

// Sample points of one refinement level: a uniform midpoint grid plus points
// at geometric distances diam * 2^{-k} from the boundary.
std::vector<std::vector<double>> level_points(const Domain1D& G, const GridSchedule& grid, int level) {
  const int count = grid.base_points << level;
  const int depth = grid.base_depth + grid.depth_step * level;
  std::vector<std::vector<double>> pts;
  if (G.kind() == Domain1D::Kind::Interval) {
    const double a = G.a();
    const double b = G.b();
    const double diam = b - a;
    for (int i = 0; i < count; ++i) pts.push_back({a + (i + 0.5) * diam / count});
    for (int k = 2; k <= depth; ++k) {
      const double d = std::ldexp(diam, -k);
      pts.push_back({a + d});
      pts.push_back({b - d});
    }
    return pts;
  }
  const int n = G.dimension();
  const double R = G.radius();
  std::vector<std::vector<double>> dirs;
  std::vector<double> e(static_cast<std::size_t>(n), 0.0);
  e[0] = 1.0;
  dirs.push_back(e);
  e[0] = -1.0;
  dirs.push_back(e);
  if (n >= 2) dirs.emplace_back(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ts;
  for (int i = 0; i < count; ++i) ts.push_back((i + 0.5) * R / count);
  for (int k = 1; k <= depth; ++k) ts.push_back(R - std::ldexp(R, -k));
  for (const auto& dir : dirs) {
    for (double t : ts) {
      std::vector<double> x(dir);
      for (double& v : x) v *= t;
      pts.push_back(std::move(x));
    }
  }
  return pts;
}

bool grows(double from, double to) { return !(to <= 1.1 * from); }

}  // namespace

WeightedNormResult weighted_norm(const Field& u, int m, double nu, const Domain1D& G, const GridSchedule& grid) {
  const int n = G.dimension();
  if (u.dimension() != n) fail(ErrorCode::InvalidArgument, "field and domain dimensions differ");
  if (m < 0) fail(ErrorCode::InvalidArgument, "m must be >= 0");
  if (!(nu < n)) fail(ErrorCode::InvalidArgument, "nu must be below n");
  if (grid.levels < 3 || grid.base_points < 2) fail(ErrorCode::InvalidArgument, "need at least 3 grid levels");

  WeightedNormResult res;
  res.m = m;
  res.nu = nu;
  res.indices = multi_indices_up_to(n, m);
  const std::size_t na = res.indices.size();
  res.level_suprema.assign(na, {});
  std::vector<double> running(na, 0.0);

  for (int level = 0; level < grid.levels; ++level) {
    for (const auto& x : level_points(G, grid, level)) {
      const double rho = G.rho(x);
      for (std::size_t i = 0; i < na; ++i) {
        const MultiIndex& alpha = res.indices[i];
        const double w = weight(alpha.order() - (n - nu), x, G);
        double d;
        try {
          d = u.derivative(alpha, x, 0.5 * rho);
        } catch (const Error&) {
          d = kInfinity;
        }
        const double v = w * std::abs(d);
        if (std::isnan(v) || v > running[i]) running[i] = std::isnan(v) ? kInfinity : v;
      }
    }
    for (std::size_t i = 0; i < na; ++i) res.level_suprema[i].push_back(running[i]);
  }

  res.per_alpha_suprema = running;
  res.per_alpha_unbounded.assign(na, false);
  for (std::size_t i = 0; i < na; ++i) {
    const auto& s = res.level_suprema[i];
    const std::size_t L = s.size();
    const bool unbounded = !std::isfinite(s[L - 1]) || (grows(s[L - 3], s[L - 2]) && grows(s[L - 2], s[L - 1]));
    res.per_alpha_unbounded[i] = unbounded;
    res.infinite = res.infinite || unbounded;
    res.total += s[L - 1];
  }
  if (res.infinite) res.total = kInfinity;
  return res;
}

std::vector<PointPair> sample_point_pairs(int n, int count, double min_gap, unsigned long long seed) {
  if (n < 1 || count < 0) fail(ErrorCode::InvalidArgument, "bad sample request");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::vector<PointPair> out;
  while (static_cast<int>(out.size()) < count) {
    PointPair pp{std::vector<double>(static_cast<std::size_t>(n)), std::vector<double>(static_cast<std::size_t>(n))};
    double d2 = 0.0;
    for (int i = 0; i < n; ++i) {
      pp.x[static_cast<std::size_t>(i)] = coord(rng);
      pp.y[static_cast<std::size_t>(i)] = coord(rng);
      const double d = pp.x[static_cast<std::size_t>(i)] - pp.y[static_cast<std::size_t>(i)];
      d2 += d * d;
    }
    if (std::sqrt(d2) >= min_gap) out.push_back(std::move(pp));
  }
  return out;
}

namespace {

double riesz_kernel(double lambda, std::span<const double> x, std::span<const double> y) {
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - y[i];
    d2 += d * d;
  }
  return std::pow(d2, -0.5 * lambda);
}

// The kernel as a function of (x, y, u); it ignores u.
double riesz_kernel_u(double lambda, double x, double y, double /*u*/) {
  return std::pow(std::abs(x - y), -lambda);
}

}  // namespace

namespace {

double translation_max(double lambda, int n, std::span<const PointPair> points, double h) {
  if (!(h > 0.0)) fail(ErrorCode::InvalidArgument, "step must be positive");
  double worst = 0.0;
  for (const auto& pp : points) {
    if (static_cast<int>(pp.x.size()) != n || static_cast<int>(pp.y.size()) != n) {
      fail(ErrorCode::InvalidArgument, "point dimension does not match n");
    }
    for (int i = 0; i < n; ++i) {
      auto xp = pp.x, yp = pp.y, xm = pp.x, ym = pp.y;
      const auto k = static_cast<std::size_t>(i);
      xp[k] += h;
      yp[k] += h;
      xm[k] -= h;
      ym[k] -= h;
      const double d = (riesz_kernel(lambda, xp, yp) - riesz_kernel(lambda, xm, ym)) / (2.0 * h);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

}  // namespace

double translation_annihilation_check(const Params& params, std::span<const PointPair> points, double h) {
  return translation_max(params.lambda, params.n, points, h);
}

KernelGrowthReport kernel_growth_check(const Params& params, int m, int sample_count) {
  if (m < 0 || m > 4) fail(ErrorCode::InvalidArgument, "kernel growth check supports m <= 4");
  if (sample_count < 1) fail(ErrorCode::InvalidArgument, "need at least one sample");
  const double lam = params.lambda;
  KernelGrowthReport rep;
  rep.lambda = lam;
  rep.sample_count = sample_count;
  const auto pairs = sample_point_pairs(1, sample_count);

  double expected = 1.0;
  for (int k = 0; k <= m; ++k) {
    KernelGrowthOrder o;
    o.order = k;
    o.expected = expected;
    o.min_ratio = kInfinity;
    for (const auto& pp : pairs) {
      const double d = pp.x[0] - pp.y[0];
      auto base = detail::Series::variable(static_cast<std::size_t>(k), d);
      if (d < 0.0) base *= -1.0;
      const double deriv = pow(base, -lam).derivative(static_cast<std::size_t>(k));
      const double ratio = std::abs(deriv) * std::pow(std::abs(d), lam + k);
      o.min_ratio = std::min(o.min_ratio, ratio);
      o.max_ratio = std::max(o.max_ratio, ratio);
      o.max_rel_deviation = std::max(o.max_rel_deviation, std::abs(ratio - expected) / expected);
    }
    rep.b1 = std::max(rep.b1, o.max_ratio);
    rep.orders.push_back(o);
    expected *= lam + k;
  }

  for (const auto& pp : pairs) {
    const double x = pp.x[0];
    const double y = pp.y[0];
    for (double u : {-1.0, 0.0, 0.5, 2.0}) {
      const double diff = riesz_kernel_u(lam, x, y, u + 1e-3) - riesz_kernel_u(lam, x, y, u - 1e-3);
      rep.u_slice_max = std::max(rep.u_slice_max, std::abs(diff));
    }
  }
  rep.translation_slice_max = translation_max(lam, 1, pairs, 1e-4);
  return rep;
}

ScanReport decay_singularity_scan(const RadialProfile& f, double r_outer, double blowup_threshold,
                                  const ScanOptions& options) {
  if (!(r_outer > 1.0)) fail(ErrorCode::InvalidArgument, "outer radius must exceed 1");
  if (!(blowup_threshold > 0.0)) fail(ErrorCode::InvalidArgument, "blow-up threshold must be positive");
  if (options.levels < 3) fail(ErrorCode::InvalidArgument, "need at least 3 scan levels");
  ScanReport rep;
  rep.r_outer = r_outer;
  rep.blowup_threshold = blowup_threshold;
  rep.reference_value = f(1.0);
  rep.value_at_outer = f(r_outer);
  rep.below_tolerance = rep.value_at_outer <= options.decay_rel_tol * rep.reference_value;

  struct Level {
    std::vector<double> r;
    std::vector<double> v;
  };
  std::vector<Level> levels;
  const double log_outer = std::log10(r_outer);
  for (int level = 0; level < options.levels; ++level) {
    Level L;
    const double log_min = -3.0 - 2.0 * level;
    const int per_decade = options.points_per_decade << level;
    const int count = static_cast<int>(std::ceil((log_outer - log_min) * per_decade));
    for (int i = 0; i <= count; ++i) {
      const double r = i == count ? r_outer : std::pow(10.0, log_min + (log_outer - log_min) * i / count);
      L.r.push_back(r);
      L.v.push_back(f(r));
    }
    levels.push_back(std::move(L));
  }

  // Candidate peaks on the coarsest level: the innermost sample stands for the origin.
  const Level& coarse = levels.front();
  std::vector<double> candidates;
  for (std::size_t i = 0; i + 1 < coarse.v.size(); ++i) {
    const bool peak = coarse.v[i] > blowup_threshold && coarse.v[i] >= coarse.v[i + 1] &&
                      (i == 0 || coarse.v[i] >= coarse.v[i - 1]);
    if (peak) candidates.push_back(i == 0 ? 0.0 : coarse.r[i]);
  }
  const double cell = std::pow(10.0, 1.0 / options.points_per_decade);
  for (double c : candidates) {
    SingularPoint sp;
    sp.radius = c;
    for (const auto& L : levels) {
      double peak = 0.0;
      for (std::size_t i = 0; i < L.r.size(); ++i) {
        const bool near = c == 0.0 ? L.r[i] <= coarse.r[0] : (L.r[i] >= c / cell && L.r[i] <= c * cell);
        if (near) peak = std::max(peak, L.v[i]);
      }
      sp.values.push_back(peak);
    }
    bool growing = true;
    for (std::size_t k = 1; k < sp.values.size(); ++k) growing = growing && grows(sp.values[k - 1], sp.values[k]);
    if (growing) rep.singular_points.push_back(std::move(sp));
  }

  const Level& fine = levels.back();
  std::size_t last_above = fine.r.size();
  for (std::size_t i = 0; i < fine.r.size(); ++i) {
    if (fine.v[i] > blowup_threshold) last_above = i;
  }
  const std::size_t start = last_above == fine.r.size() ? 0 : last_above + 1;
  rep.bounding_radius = last_above == fine.r.size() ? 0.0 : (start < fine.r.size() ? fine.r[start] : r_outer);
  for (std::size_t i = start; i < fine.r.size(); ++i) rep.sup_outside = std::max(rep.sup_outside, fine.v[i]);

  rep.monotone_last_decade = true;
  for (std::size_t i = 1; i < fine.r.size(); ++i) {
    if (fine.r[i - 1] >= r_outer / 10.0 && fine.v[i] > fine.v[i - 1]) rep.monotone_last_decade = false;
  }
  rep.decay_verified = rep.below_tolerance && rep.monotone_last_decade;
  return rep;
}

}  // namespace lieb
