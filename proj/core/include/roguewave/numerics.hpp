#ifndef ROGUEWAVE_NUMERICS_HPP_
#define ROGUEWAVE_NUMERICS_HPP_

#include <cmath>
#include <functional>
#include <string>

#include "roguewave/errors.hpp"

namespace roguewave {

struct BisectOptions {
  double x_tol = 0.0;  // 0: iterate until the bracket stops shrinking
  int max_iterations = 200;
};

// Root of a continuous function on [lo, hi] with a sign change.
// Endpoint values may be passed in when the caller already has them.
template <class Fn>
double bisect(Fn&& f, double lo, double hi, double f_lo, double f_hi,
              BisectOptions options = {}) {
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) ||
      std::isnan(f_hi)) {
    throw NoSolutionError("bisect: no sign change on [" + std::to_string(lo) +
                          ", " + std::to_string(hi) + "]");
  }
  for (int i = 0; i < options.max_iterations; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi || (hi - lo) <= options.x_tol) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

template <class Fn>
double bisect(Fn&& f, double lo, double hi, BisectOptions options = {}) {
  const double f_lo = f(lo);
  const double f_hi = f(hi);
  return bisect(f, lo, hi, f_lo, f_hi, options);
}

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int intervals = 0;
};

// Globally adaptive 15-point Gauss-Kronrod integration. Converged when the
// summed error estimate is below max(abs_tol, rel_tol * |value|); throws
// QuadratureError once max_intervals is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, double abs_tol, double rel_tol,
                           int max_intervals = 4000);

}  // namespace roguewave

#endif  // ROGUEWAVE_NUMERICS_HPP_
