#include "lieb/forms.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "lieb/errors.hpp"
#include "taylor.hpp"

namespace lieb {

MultiIndex::MultiIndex(std::vector<int> components) : components_(std::move(components)) {
  if (components_.empty()) fail(ErrorCode::InvalidArgument, "multi-index needs dimension >= 1");
  for (int c : components_) {
    if (c < 0) fail(ErrorCode::InvalidArgument, "multi-index components must be non-negative");
  }
}

MultiIndex MultiIndex::axis(int n, int axis, int count) {
  if (axis < 0 || axis >= n) fail(ErrorCode::InvalidArgument, "axis out of range");
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  c[static_cast<std::size_t>(axis)] = count;
  return MultiIndex(std::move(c));
}

int MultiIndex::order() const {
  int sum = 0;
  for (int c : components_) sum += c;
  return sum;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.dimension() != dimension()) fail(ErrorCode::InvalidArgument, "multi-index dimension mismatch");
  std::vector<int> c = components_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.components_[i];
  return MultiIndex(std::move(c));
}

std::string MultiIndex::to_string() const {
  std::string s = "d";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    s.append(static_cast<std::size_t>(components_[i]), static_cast<char>('1' + i));
  }
  return s;
}

std::vector<MultiIndex> multi_indices_up_to(int n, int max_order) {
  std::vector<MultiIndex> out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  // Enumerate all component vectors with sum <= max_order.
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == c.size()) {
      out.emplace_back(c);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      c[i] = k;
      rec(i + 1, left - k);
    }
    c[i] = 0;
  };
  rec(0, max_order);
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.components() > b.components();
  });
  return out;
}

DifferentialForm DifferentialForm::single(const MultiIndex& index, double coefficient) {
  DifferentialForm f(index.dimension());
  f.add(coefficient, index);
  return f;
}

DifferentialForm& DifferentialForm::add(double coefficient, const MultiIndex& index) {
  if (index.dimension() != dimension_) fail(ErrorCode::InvalidArgument, "form term dimension mismatch");
  if (!std::isfinite(coefficient)) fail(ErrorCode::InvalidArgument, "form coefficient must be finite");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const FormTerm& t, const MultiIndex& m) { return t.index < m; });
  if (it != terms_.end() && it->index == index) {
    it->coefficient += coefficient;
    if (it->coefficient == 0.0) terms_.erase(it);
  } else if (coefficient != 0.0) {
    terms_.insert(it, FormTerm{coefficient, index});
  }
  return *this;
}

int DifferentialForm::max_order() const {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.index.order());
  return m;
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& other) const {
  DifferentialForm out = *this;
  for (const auto& t : other.terms_) out.add(t.coefficient, t.index);
  return out;
}

DifferentialForm DifferentialForm::scaled(double factor) const {
  DifferentialForm out(dimension_);
  for (const auto& t : terms_) out.add(factor * t.coefficient, t.index);
  return out;
}

std::string DifferentialForm::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const double c = terms_[i].coefficient;
    if (i > 0) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    os << std::abs(c) << "*" << terms_[i].index.to_string();
  }
  return os.str();
}

DifferentialForm parse_form(const std::string& text, int dimension) {
  if (dimension < 1 || dimension > 9) fail(ErrorCode::Parse, "form dimension must be 1..9");
  DifferentialForm form(dimension);
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  const auto error = [&](const std::string& why) {
    std::ostringstream os;
    os << "cannot parse form '" << text << "' at offset " << pos << ": " << why;
    fail(ErrorCode::Parse, os.str());
  };

  skip_ws();
  if (pos == text.size()) error("empty form");
  bool first = true;
  while (pos < text.size()) {
    double sign = 1.0;
    skip_ws();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1.0 : 1.0;
      ++pos;
      skip_ws();
    } else if (!first) {
      error("expected '+' or '-' between terms");
    }
    first = false;

    double coefficient = 1.0;
    bool have_coefficient = false;
    if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '.')) {
      std::size_t used = 0;
      try {
        coefficient = std::stod(text.substr(pos), &used);
      } catch (const std::exception&) {
        error("bad coefficient");
      }
      pos += used;
      have_coefficient = true;
      skip_ws();
    }
    std::vector<int> components(static_cast<std::size_t>(dimension), 0);
    bool have_operator = false;
    if (pos < text.size() && text[pos] == '*') {
      if (!have_coefficient) error("'*' without coefficient");
      ++pos;
      skip_ws();
      if (pos >= text.size() || text[pos] != 'd') error("expected 'd' after '*'");
    }
    if (pos < text.size() && text[pos] == 'd') {
      have_operator = true;
      ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        const int axis = text[pos] - '1';
        if (axis < 0 || axis >= dimension) error("axis digit out of range");
        ++components[static_cast<std::size_t>(axis)];
        ++pos;
      }
    }
    if (!have_coefficient && !have_operator) error("expected a coefficient or 'd'");
    form.add(sign * coefficient, MultiIndex(std::move(components)));
    skip_ws();
  }
  return form;
}

std::pair<DifferentialForm, DifferentialForm> parity_split(const DifferentialForm& form) {
  DifferentialForm even(form.dimension());
  DifferentialForm odd(form.dimension());
  for (const auto& t : form.terms()) {
    (t.index.parity() == 1 ? even : odd).add(t.coefficient, t.index);
  }
  return {even, odd};
}

Field Field::radial(const RadialProfile& profile, int n, double power) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "field dimension must be >= 1");
  if (!std::isfinite(power)) fail(ErrorCode::InvalidArgument, "field power must be finite");
  Field f;
  f.n_ = n;
  f.profile_ = profile;
  f.power_ = power;
  return f;
}

Field Field::function(int n, Function fn) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "field dimension must be >= 1");
  Field f;
  f.n_ = n;
  f.fn_ = std::move(fn);
  return f;
}

Field Field::raised(double q) const {
  if (!profile_) fail(ErrorCode::InvalidArgument, "only radial fields can be raised to a power");
  return radial(*profile_, n_, power_ * q);
}

double Field::value(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n_) fail(ErrorCode::InvalidArgument, "point dimension mismatch");
  if (!profile_) return fn_(x);
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  const double r = std::sqrt(r2);
  if (r == 0.0 && singular_at_origin()) fail(ErrorCode::Domain, "field is singular at the origin");
  const double v = (*profile_)(r);
  return power_ == 1.0 ? v : std::pow(v, power_);
}

bool Field::analytic() const {
  return n_ == 1 && profile_ && profile_->kind() != ProfileKind::GridSampled;
}

bool Field::singular_at_origin() const {
  return profile_ && !profile_->smooth_at_origin() && power_ * profile_->origin_exponent() < 0.0;
}

std::vector<double> Field::derivatives_1d(double x, int order) const {
  if (!analytic()) fail(ErrorCode::InvalidArgument, "analytic derivatives need a closed-form 1-D field");
  if (order < 0) fail(ErrorCode::InvalidArgument, "derivative order must be >= 0");
  const auto k = static_cast<std::size_t>(order);
  const RadialProfile& p = *profile_;
  detail::Series base(k);
  if (p.kind() == ProfileKind::PowerSingular) {
    if (x == 0.0) fail(ErrorCode::Domain, "power profile is singular at the origin");
    base = detail::Series::variable(k, x);
    if (x < 0.0) base *= -1.0;  // |x0 + h| = -(x0 + h) for x0 < 0
  } else {
    const auto var = detail::Series::variable(k, x);
    base = var * var;
    base += 1.0;
  }
  detail::Series s = pow(base, -p.decay() * power_);
  s *= std::pow(p.amplitude(), power_);
  std::vector<double> out(k + 1);
  for (std::size_t j = 0; j <= k; ++j) out[j] = s.derivative(j);
  return out;
}

std::vector<double> central_difference_weights(int k) {
  if (k < 0 || k > kMaxFiniteDifferenceOrder) {
    fail(ErrorCode::InvalidArgument, "finite-difference order cap exceeded");
  }
  const int half = (k + 1) / 2 + 1;
  const int count = 2 * half + 1;
  std::vector<double> z(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) z[static_cast<std::size_t>(i)] = i - half;
  // Fornberg (1988): weights c[j][m] for derivative m at 0 on nodes z.
  std::vector<std::vector<double>> c(static_cast<std::size_t>(count),
                                     std::vector<double>(static_cast<std::size_t>(k + 1), 0.0));
  double c1 = 1.0;
  double c4 = z[0];
  c[0][0] = 1.0;
  for (int i = 1; i < count; ++i) {
    const int mn = std::min(i, k);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = z[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) {
      const double c3 = z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
      c2 *= c3;
      auto& ci = c[static_cast<std::size_t>(i)];
      auto& cj = c[static_cast<std::size_t>(j)];
      if (j == i - 1) {
        const auto& prev = c[static_cast<std::size_t>(i - 1)];
        for (int m = mn; m >= 1; --m) ci[m] = c1 * (m * prev[m - 1] - c5 * prev[m]) / c2;
        ci[0] = -c1 * c5 * prev[0] / c2;
      }
      for (int m = mn; m >= 1; --m) cj[m] = (c4 * cj[m] - m * cj[m - 1]) / c3;
      cj[0] = c4 * cj[0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) w[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)][k];
  return w;
}

double Field::finite_difference(const MultiIndex& alpha, std::span<const double> x,
                                double max_reach) const {
  const int total = alpha.order();
  if (total > kMaxFiniteDifferenceOrder) {
    fail(ErrorCode::InvalidArgument, "finite-difference order cap exceeded");
  }
  double scale = 1.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  double h = std::pow(std::numeric_limits<double>::epsilon(), 1.0 / (total + 2)) * scale;

  int widest = 0;
  for (int a : alpha.components()) widest = std::max(widest, a > 0 ? (a + 1) / 2 + 1 : 0);
  double reach_limit = max_reach;
  if (singular_at_origin()) {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    reach_limit = std::min(reach_limit, 0.5 * std::sqrt(r2));
  }
  if (widest > 0 && widest * h > reach_limit) h = reach_limit / widest;
  if (!(h > 0.0)) fail(ErrorCode::Domain, "no room for a finite-difference stencil at this point");

  // Tensor product of one-dimensional stencils over the differentiated axes.
  struct AxisStencil {
    std::size_t axis;
    int half;
    std::vector<double> weights;
  };
  std::vector<AxisStencil> stencils;
  for (std::size_t i = 0; i < alpha.components().size(); ++i) {
    const int a = alpha.components()[i];
    if (a == 0) continue;
    auto w = central_difference_weights(a);
    stencils.push_back({i, static_cast<int>(w.size() / 2), std::move(w)});
  }
  std::vector<double> point(x.begin(), x.end());
  std::vector<int> cursor(stencils.size(), 0);
  double sum = 0.0;
  while (true) {
    double weight = 1.0;
    for (std::size_t s = 0; s < stencils.size(); ++s) {
      const int off = cursor[s] - stencils[s].half;
      point[stencils[s].axis] = x[stencils[s].axis] + off * h;
      weight *= stencils[s].weights[static_cast<std::size_t>(cursor[s])];
    }
    if (weight != 0.0) sum += weight * value(point);
    std::size_t s = 0;
    for (; s < stencils.size(); ++s) {
      if (++cursor[s] < static_cast<int>(stencils[s].weights.size())) break;
      cursor[s] = 0;
    }
    if (s == stencils.size()) break;
  }
  return sum / std::pow(h, total);
}

double Field::derivative(const MultiIndex& alpha, std::span<const double> x, double max_reach) const {
  if (alpha.dimension() != n_ || static_cast<int>(x.size()) != n_) {
    fail(ErrorCode::InvalidArgument, "derivative dimension mismatch");
  }
  const int k = alpha.order();
  if (k == 0) return value(x);
  if (analytic()) return derivatives_1d(x[0], k)[static_cast<std::size_t>(k)];
  return finite_difference(alpha, x, max_reach);
}

double Field::origin_exponent(int order) const {
  if (!profile_) fail(ErrorCode::InvalidArgument, "local exponents need a radial field");
  if (profile_->smooth_at_origin()) return 0.0;
  return power_ * profile_->origin_exponent() - order;
}

double Field::infinity_exponent(int order) const {
  if (!profile_) fail(ErrorCode::InvalidArgument, "local exponents need a radial field");
  return power_ * profile_->infinity_exponent() - order;
}

double apply_form(const DifferentialForm& form, const Field& field, std::span<const double> x) {
  if (form.dimension() != field.dimension()) fail(ErrorCode::InvalidArgument, "form/field dimension mismatch");
  if (field.analytic()) {
    const auto d = field.derivatives_1d(x[0], form.max_order());
    double sum = 0.0;
    for (const auto& t : form.terms()) sum += t.coefficient * d[static_cast<std::size_t>(t.index.order())];
    return sum;
  }
  double sum = 0.0;
  for (const auto& t : form.terms()) sum += t.coefficient * field.derivative(t.index, x);
  return sum;
}

}  // namespace lieb
