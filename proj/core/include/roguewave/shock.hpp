#ifndef ROGUEWAVE_SHOCK_HPP_
#define ROGUEWAVE_SHOCK_HPP_

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "roguewave/model.hpp"
#include "roguewave/profiles.hpp"

namespace roguewave {

// Shock between the West profile (left) and the East profile (right).
struct ShockState {
  double t = 0.0;
  double x0 = 0.0;
  double q_l = 0.0;
  double q_r = 0.0;
  double m_l = 0.0;
  double m_r = 0.0;
  double amplitude = 0.0;
  double speed = 0.0;
  // (F(x0) - M0) / M0 between the material trajectories; NaN if not computed.
  double mass_rel_error = std::numeric_limits<double>::quiet_NaN();
};

// Material points bounding the mass budget.
struct TrajectoryPair {
  double x1 = 0.0;
  double x2 = 0.0;
  double t = 0.0;
};

enum class ShockMethod { MassFunctional, ThreeEquation };

const char* to_string(ShockMethod method);

struct LocusPoint {
  double q_l = 0.0;
  double m_l = 0.0;
  double q_r = 0.0;
  double m_r = 0.0;
};

// Jump relation between a West-line state (q_l) and an East-line state (q_r),
// with the shock speed eliminated. Zero for an admissible shock.
double rh_residual(double q_l, double q_r, const WaveConfig& config);

// Right depth on the East line matching q_l, q_P <= q_l <= rh_locus_end.
double rh_solve_qr(double q_l, const WaveConfig& config);

// Largest left depth reachable along the locus from P: q_ref, or the depth at
// which the right state reaches M_star first.
double rh_locus_end(const WaveConfig& config);

// Samples of the locus with q_l uniform on [q_P, rh_locus_end].
std::vector<LocusPoint> rh_locus(int n_samples, const WaveConfig& config);

// Mass-jump speed (m_l - m_r) / (q_l - q_r).
double shock_speed(double q_l, double q_r, double m_l, double m_r);

// Limit of shock_speed along the locus as the amplitude vanishes at P.
double junction_shock_speed(const WaveConfig& config);

// Mass between x1 < 0 < x2 at t = 0, integrating the profile depths.
double initial_mass(double x1, double x2, const WaveConfig& config);

// Same mass through the change of variable dx = psi'(q) dq:
//   int_{q1}^{q_l} q psi_W'(q) dq + int_{q_r}^{q2} q psi_E'(q) dq.
double mass_by_depth(double q1, double q_l, double q_r, double q2,
                     const WaveConfig& config);

// One trapezoid (Heun) step of x' = u along both material trajectories.
TrajectoryPair advance_trajectories(const TrajectoryPair& pair, double dt,
                                    const WaveConfig& config);

// F(x0): West depth integrated over [x1, x0] plus East over [x0, x2].
double mass_between(double x1, double x2, double x0, double t,
                    const WaveConfig& config);

// Shock position solving F(x0) = M0 by bisection over the bracket where the
// ordering q_star <= q_r <= q_P <= q_l <= q_ref holds. Throws BracketError if
// F - M0 does not change sign there.
ShockState locate_shock(double t, const TrajectoryPair& pair,
                        double initial_mass, const WaveConfig& config);

// Shock position from the three conditions psi_W(q_l) = x0 - A_ref t,
// psi_E(q_r) = x0 - c_star t and rh_residual(q_l, q_r) = 0.
ShockState solve_shock_system(
    double t, const WaveConfig& config,
    std::optional<std::pair<double, double>> bracket = std::nullopt);

struct CollapseOptions {
  double depth_eps = 1e-3;    // m
  double time_tol = 1.0;      // s
  double first_probe = 1000;  // s
  double horizon = 1e7;       // s
};

struct CollapseInfo {
  // +infinity when the event is not reached before the horizon.
  double time = std::numeric_limits<double>::infinity();
  double left_event_time = std::numeric_limits<double>::infinity();
  double right_event_time = std::numeric_limits<double>::infinity();
  bool reached() const { return time != std::numeric_limits<double>::infinity(); }
};

// First time q_l reaches q_ref - eps or q_r reaches q_star + eps.
CollapseInfo detect_collapse(const WaveConfig& config,
                             const CollapseOptions& options = {});

struct SimulationOptions {
  double t_end = 1000.0;
  double dt = 1.0;
  std::vector<double> output_times;  // empty: every 100 s from 0 to t_end
  double x1 = -5e4;
  double x2 = 0.0;  // 0: default_right_bound(config, t_end)
  ShockMethod method = ShockMethod::ThreeEquation;
  CollapseOptions collapse;
};

struct SimulationRecord {
  WaveConfig config;
  double initial_mass = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  std::vector<ShockState> states;
  std::vector<TrajectoryPair> trajectories;  // one per state
  bool collapsed = false;
  double collapse_time = std::numeric_limits<double>::infinity();
};

// Right material point far enough ahead of the shock at t_end.
double default_right_bound(const WaveConfig& config, double t_end);

std::vector<double> default_output_times(double t_end);

SimulationRecord simulate(const WaveConfig& config,
                          const SimulationOptions& options);

}  // namespace roguewave

#endif  // ROGUEWAVE_SHOCK_HPP_
