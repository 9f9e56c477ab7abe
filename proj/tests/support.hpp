#ifndef ROGUEWAVE_TESTS_SUPPORT_HPP_
#define ROGUEWAVE_TESTS_SUPPORT_HPP_

#include <cmath>
#include <random>

#include "roguewave/model.hpp"

namespace rwtest {

inline roguewave::WaveConfig scenario(double q_0) {
  const roguewave::PhysicalConstants consts;
  const double q_ref = roguewave::solve_max_qref(3700.0, q_0, consts);
  return roguewave::build_configuration(3700.0, q_0, q_ref, consts);
}

inline const roguewave::WaveConfig& ex1() {
  static const roguewave::WaveConfig c = scenario(3700.2);
  return c;
}

inline const roguewave::WaveConfig& ex2() {
  static const roguewave::WaveConfig c = scenario(3700.8);
  return c;
}

inline double rel_diff(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

// Uniform sample on the open interval (lo, hi).
inline double open_uniform(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double s = 0.0;
  while (s == 0.0) s = u(rng);
  return lo + (hi - lo) * s;
}

}  // namespace rwtest

#endif  // ROGUEWAVE_TESTS_SUPPORT_HPP_
