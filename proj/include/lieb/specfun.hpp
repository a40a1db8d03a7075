#pragma once

// Gamma-function machinery and the closed-form constants of the
// weakly singular equation  int |x-y|^{-lambda} f(y) dy = f(x)^{p-1}.

#include "lieb/quadrature.hpp"

namespace lieb {

/// Problem instance: dimension n and kernel exponent lambda, 0 < lambda < n.
struct Params {
  int n = 1;
  double lambda = 0.5;
  double p = 0.0;    // 2n / (2n - lambda)
  double pm1 = 0.0;  // p - 1 = lambda / (2n - lambda)

  /// Validates and fills the derived exponents. Throws Domain on 0 >= lambda or lambda >= n.
  static Params make(int n, double lambda);

  /// Exponent -(2n - lambda) / (2(n - lambda)) that turns a linear
  /// amplitude relation c * k = c^{p-1} into c = k^{exponent}.
  double amplitude_exponent() const;
};

/// ln Gamma(x) for x > 0. Lanczos away from 1 and 2, Taylor series near them.
double log_gamma(double x);

/// ln B(a, b) for a, b > 0.
double log_beta(double a, double b);

/// Surface area |S^{n-1}| = 2 pi^{n/2} / Gamma(n/2) of the unit sphere in R^n.
double sphere_area(int n);

/// Coefficient c with FT(|y|^{-nu}) = c |x|^{nu-n}, transform phase exp(-2 pi i x.y).
double ft_riesz_coefficient(int n, double nu);

/// k with  int_{R^n} |x-y|^{-lambda} |y|^{-mu} dy = k |x|^{n-lambda-mu}.
/// Requires 0 < lambda, mu < n and lambda + mu > n.
double riesz_power_constant(int n, double lambda, double mu);

/// Amplitude of the singular power solution C(n,lambda) |x|^{-(n-lambda/2)}.
double lieb_constant_C(const Params& params);

/// Integral I(0) = int |y|^{-lambda} (1+|y|^2)^{-(n-lambda/2)} dy evaluated by radial quadrature.
QuadratureResult lieb_origin_integral(const Params& params, const QuadratureSpec& quad);

/// Amplitude L(n,lambda) of the bounded solution L (1+|x|^2)^{-(n-lambda/2)},
/// fixed by matching the equation at the origin: L = I(0)^{amplitude_exponent}.
double lieb_constant_L(const Params& params, const QuadratureSpec& quad = {});

}  // namespace lieb
