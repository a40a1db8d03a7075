#pragma once

// Constant-coefficient differential forms  sum_alpha a_alpha D_alpha  and the
// scalar fields they act on.

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lieb/radial_riesz.hpp"

namespace lieb {

/// Highest derivative order supported by the finite-difference path.
inline constexpr int kMaxFiniteDifferenceOrder = 6;

class MultiIndex {
 public:
  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> components);
  /// alpha = (order) in one dimension.
  static MultiIndex axis(int n, int axis, int count);
  static MultiIndex zero(int n) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(n), 0)); }

  const std::vector<int>& components() const { return components_; }
  int dimension() const { return static_cast<int>(components_.size()); }
  int order() const;
  /// (-1)^{|alpha|}
  int parity() const { return order() % 2 == 0 ? 1 : -1; }
  MultiIndex operator+(const MultiIndex& other) const;

  auto operator<=>(const MultiIndex&) const = default;

  /// "d", "d1", "d11", "d12", ... (one axis digit per differentiation).
  std::string to_string() const;

 private:
  std::vector<int> components_;
};

/// All multi-indices of dimension n with |alpha| <= max_order, ordered by
/// total order and then lexicographically.
std::vector<MultiIndex> multi_indices_up_to(int n, int max_order);

struct FormTerm {
  double coefficient = 0.0;
  MultiIndex index;
};

class DifferentialForm {
 public:
  explicit DifferentialForm(int dimension) : dimension_(dimension) {}
  static DifferentialForm single(const MultiIndex& index, double coefficient = 1.0);

  /// Adds a term, merging with an existing index and pruning zero coefficients.
  DifferentialForm& add(double coefficient, const MultiIndex& index);

  int dimension() const { return dimension_; }
  /// Terms sorted by multi-index; never contains duplicates or zero coefficients.
  const std::vector<FormTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  int max_order() const;

  DifferentialForm operator+(const DifferentialForm& other) const;
  DifferentialForm scaled(double factor) const;

  std::string to_string() const;

 private:
  int dimension_;
  std::vector<FormTerm> terms_;
};

/// Parses "1.0*d1 + 2.0*d11 - 0.5*d" (each digit after d is one derivative
/// along that 1-based axis; a bare coefficient or "d" is the identity).
DifferentialForm parse_form(const std::string& text, int dimension);

/// (even part, odd part) by total derivative order.
std::pair<DifferentialForm, DifferentialForm> parity_split(const DifferentialForm& form);

/// A scalar field on R^n: either profile(|x|)^power for a radial profile or an
/// arbitrary callable.
class Field {
 public:
  using Function = std::function<double(std::span<const double>)>;

  static Field radial(const RadialProfile& profile, int n, double power = 1.0);
  static Field function(int n, Function fn);

  int dimension() const { return n_; }
  const std::optional<RadialProfile>& profile() const { return profile_; }
  double power() const { return power_; }
  /// profile^{power * q}; radial fields only.
  Field raised(double q) const;

  double value(std::span<const double> x) const;

  /// True when derivatives come from Taylor arithmetic (closed-form radial profile, n = 1).
  bool analytic() const;

  /// D_alpha at x. Analytic when available, otherwise central differences of
  /// accuracy order >= 4 whose stencil half-width never exceeds max_reach.
  double derivative(const MultiIndex& alpha, std::span<const double> x,
                    double max_reach = kInfinity) const;

  /// f, f', ..., f^{(order)} at x for analytic one-dimensional fields.
  std::vector<double> derivatives_1d(double x, int order) const;

  /// Local exponents of D_alpha(field) with |alpha| = order: near the origin and at infinity.
  double origin_exponent(int order) const;
  double infinity_exponent(int order) const;
  /// Whether the field is singular at the origin (radial fields only).
  bool singular_at_origin() const;

 private:
  Field() = default;
  double finite_difference(const MultiIndex& alpha, std::span<const double> x,
                           double max_reach) const;

  int n_ = 1;
  std::optional<RadialProfile> profile_;
  double power_ = 1.0;
  Function fn_;
};

/// Central finite-difference weights for the k-th derivative on offsets -P..P (Fornberg).
std::vector<double> central_difference_weights(int k);

/// sum_alpha a_alpha D_alpha(field)(x)
double apply_form(const DifferentialForm& form, const Field& field, std::span<const double> x);

}  // namespace lieb
