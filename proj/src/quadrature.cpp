#include "lieb/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <sstream>

#include "lieb/errors.hpp"

namespace lieb {

namespace {

// 21-point Gauss-Kronrod rule (QUADPACK qk21): Kronrod abscissae xgk, weights
// wgk, and the embedded 10-point Gauss weights wg on the odd-indexed nodes.
constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077600525452450, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kGrading = 0.25;

// A stretch of the integration domain between consecutive split points. Panels
// are stored as offsets measured from the nearer end of their segment so that
// nodes next to a singular end keep full relative precision.
struct Segment {
  double lo = 0.0;
  double hi = 0.0;
  bool tail = false;  // hi = inf, parametrised by u = 1/x on (0, 1/lo]
  double length() const { return tail ? 1.0 / lo : hi - lo; }
};

struct Panel {
  int segment = 0;
  int side = 0;  // 0: offsets from the left end, 1: from the right end
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double err = 0.0;
  long order = 0;  // creation order, breaks ties deterministically
  bool splittable = true;
};

struct PanelWorse {
  bool operator()(const Panel& l, const Panel& r) const {
    if (l.err != r.err) return l.err < r.err;
    return l.order > r.order;
  }
};

class Engine {
 public:
  Engine(const Integrand& f, std::vector<Segment> segments, const QuadratureSpec& spec)
      : f_(f), segments_(std::move(segments)), spec_(spec) {}

  QuadratureResult run() {
    for (int s = 0; s < static_cast<int>(segments_.size()); ++s) {
      const double half = 0.5 * segments_[s].length();
      push(make_panel(s, 0, 0.0, half));
      push(make_panel(s, 1, 0.0, half));
    }
    while (!converged()) {
      if (heap_.empty()) give_up("no panel can be subdivided further");
      if (panel_count_ >= spec_.max_subdivisions) give_up("subdivision budget exhausted");
      Panel worst = heap_.top();
      heap_.pop();
      total_value_ -= worst.value;
      total_err_ -= worst.err;
      const double cut = worst.a == 0.0 ? kGrading * worst.b : 0.5 * (worst.a + worst.b);
      push(make_panel(worst.segment, worst.side, worst.a, cut));
      push(make_panel(worst.segment, worst.side, cut, worst.b));
      --panel_count_;
    }
    return finish();
  }

 private:
  Abscissa node(const Segment& seg, int side, double offset, double& jacobian) const {
    Abscissa at;
    if (!seg.tail) {
      const double len = seg.hi - seg.lo;
      at.lo = seg.lo;
      at.hi = seg.hi;
      if (side == 0) {
        at.x = seg.lo + offset;
        at.from_lo = offset;
        at.to_hi = len - offset;
      } else {
        at.x = seg.hi - offset;
        at.to_hi = offset;
        at.from_lo = len - offset;
      }
      jacobian = 1.0;
      return at;
    }
    const double u = side == 0 ? offset : seg.length() - offset;
    at.x = 1.0 / u;
    at.lo = seg.lo;
    at.hi = kInfinity;
    at.from_lo = at.x - seg.lo;
    at.to_hi = kInfinity;
    jacobian = at.x;  // applied twice: dx = x^2 du
    return at;
  }

  double eval(const Segment& seg, int side, double offset) {
    double jac = 1.0;
    const Abscissa at = node(seg, side, offset, jac);
    ++evaluations_;
    if (seg.tail && !std::isfinite(at.x)) return 0.0;
    double v = f_(at);
    if (seg.tail && v != 0.0) v = (v * jac) * jac;
    if (!std::isfinite(v)) {
      std::ostringstream os;
      os << "integrand is not finite at x=" << at.x;
      fail(ErrorCode::NonConvergent, os.str());
    }
    return v;
  }

  Panel make_panel(int segment, int side, double a, double b) {
    const Segment& seg = segments_[segment];
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = eval(seg, side, center);
    double kronrod = fc * kWgk[10];
    double gauss = 0.0;
    double absolute = std::abs(kronrod);
    std::array<double, 2> near_end{};  // values at the two nodes closest to offset 0
    for (int j = 0; j < 10; ++j) {
      const double dx = half * kXgk[j];
      const double f1 = eval(seg, side, center - dx);
      const double f2 = eval(seg, side, center + dx);
      kronrod += kWgk[j] * (f1 + f2);
      absolute += kWgk[j] * (std::abs(f1) + std::abs(f2));
      if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
      if (j < 2) near_end[j] = f1;
    }
    Panel p;
    p.segment = segment;
    p.side = side;
    p.a = a;
    p.b = b;
    p.value = kronrod * half;
    const double resabs = absolute * half;
    p.err = std::max(std::abs((kronrod - gauss) * half), 50.0 * kEps * resabs);
    if (a == 0.0) p.err = std::max(p.err, missed_end_mass(near_end, half));
    p.order = next_order_++;
    // Stop refining once the offsets no longer resolve the panel.
    const double width = b - a;
    p.splittable = width > 64.0 * kEps * b && b > 1e-290;
    return p;
  }

  // The Kronrod difference underestimates the error of a panel that ends on a
  // strong algebraic singularity. Fit f ~ t^e through the two nodes nearest the
  // end and bound the mass the rule cannot see, int_0^{t1} f = f(t1) t1 / (e+1).
  static double missed_end_mass(const std::array<double, 2>& f, double half) {
    const double t1 = half * (1.0 - kXgk[0]);
    const double t2 = half * (1.0 - kXgk[1]);
    if (!(f[0] * f[1] > 0.0)) return 0.0;
    const double e = std::log(f[1] / f[0]) / std::log(t2 / t1);
    if (!(e < -0.45) || !(e > -1.0)) return 0.0;
    return std::abs(f[0]) * t1 / (e + 1.0);
  }

  void push(const Panel& p) {
    total_value_ += p.value;
    total_err_ += p.err;
    ++panel_count_;
    if (p.splittable) {
      heap_.push(p);
    } else {
      frozen_.push_back(p);
    }
  }

  bool converged() const {
    return total_err_ <= std::max(spec_.rel_tol * std::abs(total_value_), spec_.abs_tol);
  }

  [[noreturn]] void give_up(const char* why) const {
    std::ostringstream os;
    os.precision(3);
    os << "quadrature did not converge (" << why << "): estimate " << total_value_
       << " with error " << total_err_ << " after " << panel_count_ << " panels";
    fail(ErrorCode::NonConvergent, os.str());
  }

  QuadratureResult finish() {
    std::vector<Panel> all = frozen_;
    while (!heap_.empty()) {
      all.push_back(heap_.top());
      heap_.pop();
    }
    // Reduce in domain order (segment, then position) for reproducible sums.
    std::sort(all.begin(), all.end(), [](const Panel& l, const Panel& r) {
      if (l.segment != r.segment) return l.segment < r.segment;
      if (l.side != r.side) return l.side < r.side;
      return l.side == 0 ? l.a < r.a : l.a > r.a;
    });
    QuadratureResult res;
    for (const Panel& p : all) {
      res.value += p.value;
      res.err_estimate += p.err;
    }
    res.panels = static_cast<int>(all.size());
    res.evaluations = evaluations_;
    return res;
  }

  const Integrand& f_;
  std::vector<Segment> segments_;
  const QuadratureSpec& spec_;
  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> heap_;
  std::vector<Panel> frozen_;
  double total_value_ = 0.0;
  double total_err_ = 0.0;
  int panel_count_ = 0;
  long next_order_ = 0;
  long evaluations_ = 0;
};

void probe_tail(const Integrand& f, double start, const QuadratureSpec& spec) {
  if (spec.tail_exponent_hint) {
    if (*spec.tail_exponent_hint >= -1.0) {
      std::ostringstream os;
      os << "declared tail exponent " << *spec.tail_exponent_hint << " >= -1";
      fail(ErrorCode::DivergentTail, os.str());
    }
    return;
  }
  std::array<double, 3> mags{};
  std::array<double, 3> where{};
  for (int j = 0; j < 3; ++j) {
    Abscissa at;
    at.x = start * std::pow(10.0, j + 2);
    at.lo = start;
    at.hi = kInfinity;
    at.from_lo = at.x - start;
    at.to_hi = kInfinity;
    where[j] = at.x;
    mags[j] = std::abs(f(at));
  }
  if (mags[2] == 0.0) return;
  if (mags[1] == 0.0 || !std::isfinite(mags[2])) {
    fail(ErrorCode::DivergentTail, "tail probe found a non-decaying integrand");
  }
  const double slope = std::log(mags[2] / mags[1]) / std::log(where[2] / where[1]);
  if (slope >= -1.0) {
    std::ostringstream os;
    os << "tail probe estimates decay exponent " << slope << " >= -1";
    fail(ErrorCode::DivergentTail, os.str());
  }
}

}  // namespace

double Abscissa::distance_to(double point) const {
  if (point == lo) return from_lo;
  if (point == hi) return to_hi;
  return std::abs(x - point);
}

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    fail(ErrorCode::InvalidArgument, "quadrature tolerances must be positive");
  }
  if (max_subdivisions < 1) fail(ErrorCode::InvalidArgument, "max_subdivisions must be >= 1");
  for (std::size_t i = 0; i < split_points.size(); ++i) {
    if (!std::isfinite(split_points[i])) {
      fail(ErrorCode::InvalidArgument, "split points must be finite");
    }
    if (i > 0 && !(split_points[i] > split_points[i - 1])) {
      fail(ErrorCode::InvalidArgument, "split points must be strictly increasing");
    }
  }
}

QuadratureSpec QuadratureSpec::with_split(double point) const {
  QuadratureSpec out = *this;
  auto it = std::lower_bound(out.split_points.begin(), out.split_points.end(), point);
  if (it == out.split_points.end() || *it != point) out.split_points.insert(it, point);
  return out;
}

QuadratureSpec QuadratureSpec::with_rel_tol(double tol) const {
  QuadratureSpec out = *this;
  out.rel_tol = tol;
  return out;
}

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(a)) fail(ErrorCode::InvalidArgument, "lower limit must be finite");
  if (std::isnan(b) || b < a) fail(ErrorCode::InvalidArgument, "integration requires a <= b");
  if (a == b) return {};

  std::vector<double> cuts{a};
  for (double s : spec.split_points) {
    if (s == a || s == b) continue;
    if (s < a || s > b) {
      std::ostringstream os;
      os << "split point " << s << " lies outside [" << a << ", " << b << "]";
      fail(ErrorCode::InvalidArgument, os.str());
    }
    cuts.push_back(s);
  }

  std::vector<Segment> segments;
  if (std::isinf(b)) {
    const double largest = cuts.back();
    const double start = std::max({1.0, 2.0 * largest, a});
    if (start > largest) cuts.push_back(start);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) segments.push_back({cuts[i], cuts[i + 1], false});
    probe_tail(f, start, spec);
    segments.push_back({start, kInfinity, true});
  } else {
    cuts.push_back(b);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) segments.push_back({cuts[i], cuts[i + 1], false});
  }
  return Engine(f, std::move(segments), spec).run();
}

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  return integrate(Integrand([&f](const Abscissa& at) { return f(at.x); }), a, b, spec);
}

ScreenResult convergence_screen(const SingularityBudget& budget) {
  for (const LocalExponent& le : budget.local_exponents) {
    const bool at_infinity = std::isinf(le.location);
    const bool ok = at_infinity ? le.exponent < -1.0 : le.exponent > -1.0;
    if (!ok) return {false, le.location, le.exponent};
  }
  return ScreenResult::pass();
}

}  // namespace lieb
