#pragma once

#include <cmath>
#include <utility>

#include "ntn/types.hpp"

namespace ntn {

namespace detail {

// Gauss-Kronrod 7/15 nodes on [0,1] (abscissa, Gauss weight, Kronrod weight).
inline constexpr double kGk15[8][3] = {
    {0.000000000000000, 0.417959183673469, 0.209482141084728},
    {0.405845151377397, 0.381830050505119, 0.190350578064785},
    {0.741531185599394, 0.279705391489277, 0.140653259715525},
    {0.949107912342759, 0.129484966168870, 0.063092092629979},
    {0.207784955007898, 0.0,               0.204432940075298},
    {0.586087235467691, 0.0,               0.169004726639267},
    {0.864864423359769, 0.0,               0.104790010322250},
    {0.991455371120813, 0.0,               0.022935322010529},
};

template <class F>
std::pair<double, double> gk15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double y0 = f(mid);
  double g7 = kGk15[0][1] * y0;
  double k15 = kGk15[0][2] * y0;
  for (int i = 1; i < 8; ++i) {
    const double dx = half * kGk15[i][0];
    const double yi = f(mid + dx) + f(mid - dx);
    g7 += kGk15[i][1] * yi;
    k15 += kGk15[i][2] * yi;
  }
  g7 *= half;
  k15 *= half;
  return {k15, std::fabs(k15 - g7)};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod 7/15 on a finite interval. Bisects the worst
/// interval until the summed error estimate meets abs_tol (or rel_tol
/// against the running value). Throws numeric_failure if the interval
/// budget is exhausted, tagged with `tier` and `z` for context.
template <class F>
double integrate(const F& f, double a, double b, double abs_tol,
                 double rel_tol = 1e-12, int max_intervals = 4000,
                 int tier = 0, double z = 0.0) {
  if (!(b > a)) return 0.0;
  struct Seg { double a, b, value, err; };
  // Fixed-size explicit stack; splitting the worst-first is unnecessary
  // since every segment must individually converge.
  constexpr int kStack = 256;
  Seg stack[kStack];
  int top = 0;
  auto push = [&](double lo, double hi) {
    auto [v, e] = detail::gk15(f, lo, hi);
    stack[top++] = {lo, hi, v, e};
  };
  push(a, b);
  double sum = 0.0;
  int used = 1;
  const double local_tol = abs_tol;  // per-segment absolute budget
  while (top > 0) {
    Seg s = stack[--top];
    const double width_frac = (s.b - s.a) / (b - a);
    if (s.err <= local_tol * std::max(width_frac, 1e-3) ||
        s.err <= rel_tol * std::fabs(s.value) || (s.b - s.a) < 1e-12 * (b - a)) {
      sum += s.value;
      continue;
    }
    if (used + 2 > max_intervals || top + 2 > kStack) {
      throw numeric_failure("quadrature failed to converge", tier, z);
    }
    const double mid = 0.5 * (s.a + s.b);
    push(s.a, mid);
    push(mid, s.b);
    used += 2;
  }
  return sum;
}

/// Integral over [a, inf): integrates doubling segments [t, 2t] until a
/// segment contributes less than tail_tol. Valid for integrands whose
/// segment contributions decay at least geometrically (power-law tails
/// with exponent < -1, exponential or Gaussian tails).
template <class F>
double integrate_to_infinity(const F& f, double a, double first_span,
                             double abs_tol, double tail_tol,
                             int max_doublings = 64, int tier = 0,
                             double z = 0.0) {
  double lo = a;
  double span = first_span;
  double sum = integrate(f, lo, lo + span, abs_tol, 1e-12, 4000, tier, z);
  lo += span;
  for (int i = 0; i < max_doublings; ++i) {
    span *= 2.0;
    const double part = integrate(f, lo, lo + span, abs_tol, 1e-12, 4000, tier, z);
    sum += part;
    lo += span;
    if (std::fabs(part) < tail_tol) return sum;
  }
  throw numeric_failure("tail integration did not settle", tier, z);
}

}  // namespace ntn
