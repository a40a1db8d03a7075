#include "taylor.hpp"

#include <cmath>

namespace lieb::detail {

Series pow(const Series& a, double gamma) {
  const std::size_t order = a.order();
  Series b(order, std::pow(a[0], gamma));
  for (std::size_t k = 1; k <= order; ++k) {
    double sum = 0.0;
    for (std::size_t j = 1; j <= k; ++j) {
      sum += (gamma * static_cast<double>(j) - static_cast<double>(k - j)) * a[j] * b[k - j];
    }
    b[k] = sum / (static_cast<double>(k) * a[0]);
  }
  return b;
}

}  // namespace lieb::detail
