#include "roguewave/model.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "roguewave/errors.hpp"
#include "roguewave/numerics.hpp"

namespace roguewave {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

WaveConfig flat_configuration(double q_star, const PhysicalConstants& consts) {
  WaveConfig c;
  c.q_star = c.q_0 = c.q_ref = c.q_p = q_star;
  c.c_star = c.c_ref = c.a_ref = celerity(q_star, consts.g);
  c.m_ref = 0.0;
  c.froude_ref = 0.0;
  c.k = consts.k;
  c.g = consts.g;
  c.east_line = WaveLine::through(c.c_star, {q_star, 0.0});
  c.west_line = c.east_line;
  return c;
}

}  // namespace

void PhysicalConstants::validate() const {
  if (!(g > 0.0)) throw ConfigurationError("g > 0 violated");
  if (!(c_s > 0.0)) throw ConfigurationError("c_s > 0 violated");
  if (!(k > 0.0)) throw ConfigurationError("k > 0 violated");
  if (n_interactions < 1) throw ConfigurationError("n_interactions >= 1 violated");
}

double celerity(double q, double g) {
  if (q < 0.0) throw DomainError("celerity: negative depth " + num(q));
  return std::sqrt(g * q);
}

double min_wavelength(double h, int n, const PhysicalConstants& consts) {
  if (!(h > 0.0)) throw DomainError("min_wavelength: h > 0 required");
  if (n < 0) throw DomainError("min_wavelength: n >= 0 required");
  return 2.0 * n * h * std::sqrt(consts.g * h) / consts.c_s;
}

WaveConfig build_configuration(double q_star, double q_0, double q_ref,
                               const PhysicalConstants& consts) {
  consts.validate();
  if (!(q_star > 0.0)) throw ConfigurationError("q_star > 0 violated");
  if (q_0 == q_star && q_ref == q_0) return flat_configuration(q_star, consts);
  if (!(q_star < q_0)) {
    throw ConfigurationError("q_star < q_0 violated (q_star=" + num(q_star) +
                             ", q_0=" + num(q_0) + ")");
  }
  if (!(q_0 < q_ref)) {
    throw ConfigurationError("q_0 < q_ref violated (q_0=" + num(q_0) +
                             ", q_ref=" + num(q_ref) + ")");
  }

  WaveConfig c;
  c.q_star = q_star;
  c.q_0 = q_0;
  c.q_ref = q_ref;
  c.k = consts.k;
  c.g = consts.g;
  c.c_star = celerity(q_star, consts.g);
  c.c_ref = celerity(q_ref, consts.g);
  // A_ref = m_ref/q_ref + c_ref together with m_ref = A_ref (q_ref - q_0).
  c.a_ref = c.c_ref * q_ref / q_0;
  c.froude_ref = (q_ref - q_0) / q_0;
  c.m_ref = c.c_ref * q_ref * c.froude_ref;
  c.east_line = WaveLine::through(c.c_star, {q_star, 0.0});
  c.west_line = WaveLine::through(c.a_ref, {q_ref, c.m_ref});
  c.q_p = (c.a_ref * q_0 - c.c_star * q_star) / (c.a_ref - c.c_star);

  if (!(c.a_ref > c.c_star)) {
    throw ConfigurationError("A_ref > c_star violated");
  }
  if (!(q_0 < c.q_p)) {
    throw ConfigurationError("q_0 < q_P violated (q_P=" + num(c.q_p) + ")");
  }
  if (!(c.q_p < q_ref)) {
    throw ConfigurationError("q_P < q_ref violated (q_P=" + num(c.q_p) +
                             ", q_ref=" + num(q_ref) + "): q_ref too small");
  }
  return c;
}

double solve_max_qref(double q_star, double q_0,
                      const PhysicalConstants& consts) {
  consts.validate();
  if (!(q_star > 0.0)) throw ConfigurationError("q_star > 0 violated");
  if (q_0 == q_star) return q_star;
  if (!(q_star < q_0)) throw ConfigurationError("q_star < q_0 violated");

  const double g = consts.g;
  // Velocity jump of the West reference state against the Rankine-Hugoniot
  // jump to the still East state.
  auto jump = [&](double q_ref) {
    const double u_ref = std::sqrt(g * q_ref) * (q_ref - q_0) / q_0;
    return u_ref - (q_ref - q_star) *
                       std::sqrt(g * (q_ref + q_star) / (2.0 * q_ref * q_star));
  };

  const double lo = q_0;
  const double f_lo = jump(lo);
  double width = q_0 - q_star;
  double hi = q_0 + width;
  double f_hi = jump(hi);
  while (f_hi < 0.0) {
    width *= 2.0;
    hi = q_0 + width;
    if (hi > 10.0 * q_0) {
      throw NoSolutionError("solve_max_qref: no sign change below 10 q_0");
    }
    f_hi = jump(hi);
  }
  return bisect(jump, lo, hi, f_lo, f_hi);
}

}  // namespace roguewave
