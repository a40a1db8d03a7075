#pragma once

// Truncated Taylor series arithmetic used for exact-to-rounding derivatives of
// the closed-form profiles. Coefficient k holds f^{(k)}(x0) / k!.

#include <cstddef>
#include <vector>

namespace lieb::detail {

class Series {
 public:
  explicit Series(std::size_t order, double constant = 0.0) : c_(order + 1, 0.0) { c_[0] = constant; }

  /// x0 + h
  static Series variable(std::size_t order, double x0) {
    Series s(order, x0);
    if (order >= 1) s.c_[1] = 1.0;
    return s;
  }

  std::size_t order() const { return c_.size() - 1; }
  double operator[](std::size_t k) const { return c_[k]; }
  double& operator[](std::size_t k) { return c_[k]; }

  Series& operator*=(double a) {
    for (double& v : c_) v *= a;
    return *this;
  }
  Series& operator+=(double a) {
    c_[0] += a;
    return *this;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series out(a.order());
    for (std::size_t k = 0; k <= a.order(); ++k) {
      double sum = 0.0;
      for (std::size_t j = 0; j <= k; ++j) sum += a.c_[j] * b.c_[k - j];
      out.c_[k] = sum;
    }
    return out;
  }

  /// a^gamma for a[0] > 0, by the J.C.P. Miller recurrence.
  friend Series pow(const Series& a, double gamma);

  /// k-th derivative at x0.
  double derivative(std::size_t k) const {
    double factorial = 1.0;
    for (std::size_t j = 2; j <= k; ++j) factorial *= static_cast<double>(j);
    return factorial * c_[k];
  }

 private:
  std::vector<double> c_;
};

Series pow(const Series& a, double gamma);

}  // namespace lieb::detail
