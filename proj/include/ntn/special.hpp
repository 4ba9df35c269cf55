#pragma once

#include <cmath>

namespace ntn {

/// Gaussian tail probability Q(x) = P[N(0,1) > x], via the erfc identity.
inline double q_function(double x) {
  return 0.5 * std::erfc(x * 0.70710678118654752440);
}

/// Scaled complementary error function exp(x^2) * erfc(x) for x >= 0.
/// Small arguments use erfc directly; large ones the Laplace continued
/// fraction, which keeps full precision where exp(x^2) would overflow.
inline double erfcx(double x) {
  if (x < 4.0) return std::exp(x * x) * std::erfc(x);
  // erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  // evaluated with the modified Lentz algorithm.
  constexpr double tiny = 1e-300;
  double f = x, c = x / tiny, d = 0.0;
  for (int n = 1; n < 64; ++n) {
    const double a = 0.5 * n;
    d = x + a * d;
    if (d == 0.0) d = tiny;
    c = x + a / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-17) break;
  }
  return 0.56418958354775628695 / f;  // 1/sqrt(pi)
}

/// Regularized lower incomplete gamma P(m, x) for integer shape m >= 1:
/// P(m, x) = 1 - e^{-x} sum_{k<m} x^k/k!.
inline double gamma_cdf_integer(int m, double x) {
  if (x <= 0.0) return 0.0;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < m; ++k) {
    term *= x / k;
    sum += term;
  }
  const double tail = sum * std::exp(-x);
  return tail >= 1.0 ? 0.0 : 1.0 - tail;
}

}  // namespace ntn
