#ifndef ROGUEWAVE_MODEL_HPP_
#define ROGUEWAVE_MODEL_HPP_

// Physical constants, ocean states, phase-plane wave lines and the solved
// two-branch wave configuration.

namespace roguewave {

struct PhysicalConstants {
  double g = 9.81;          // m/s^2
  double c_s = 1647.0;      // sonic speed in water, m/s
  double k = 0.45;          // Strickler friction coefficient
  int n_interactions = 25;  // minimum sonic back-and-forth count

  // Throws ConfigurationError when any invariant is broken.
  void validate() const;
};

struct OceanState {
  double q = 0.0;  // depth, m
  double m = 0.0;  // flux, m^2/s

  double velocity() const { return m / q; }
};

// A straight line m = a q - b in the (q, m) phase plane.
struct WaveLine {
  double a = 0.0;
  double b = 0.0;
  OceanState anchor;

  static WaveLine through(double a, OceanState anchor) {
    return WaveLine{a, a * anchor.q - anchor.m, anchor};
  }
  double flux(double q) const { return a * q - b; }
  // Depth at which the flux vanishes.
  double still_depth() const { return b / a; }
};

struct WaveConfig {
  double q_star = 0.0;
  double q_0 = 0.0;
  double q_ref = 0.0;
  double q_p = 0.0;
  double c_star = 0.0;
  double c_ref = 0.0;
  double a_ref = 0.0;
  double m_ref = 0.0;
  double froude_ref = 0.0;
  double k = 0.0;
  double g = 0.0;
  WaveLine east_line;
  WaveLine west_line;

  // Degenerate still ocean: q_star = q_0 = q_ref = q_p.
  bool flat() const { return q_0 == q_star; }
  OceanState reference_state() const { return {q_ref, m_ref}; }
  OceanState junction_state() const { return {q_p, east_line.flux(q_p)}; }
};

double celerity(double q, double g);

// Shortest wavelength for which the shallow-water model is admissible:
// at least n sonic round trips between bottom and surface per wavelength.
double min_wavelength(double h, int n, const PhysicalConstants& consts);

WaveConfig build_configuration(double q_star, double q_0, double q_ref,
                               const PhysicalConstants& consts);

// Largest admissible West reference depth: the one for which the jump
// (q_ref, 0) -> (q_star, 0) satisfies the Rankine-Hugoniot relation.
double solve_max_qref(double q_star, double q_0,
                      const PhysicalConstants& consts);

}  // namespace roguewave

#endif  // ROGUEWAVE_MODEL_HPP_
