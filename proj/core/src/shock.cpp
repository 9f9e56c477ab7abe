#include "roguewave/shock.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "roguewave/errors.hpp"
#include "roguewave/numerics.hpp"

namespace roguewave {
namespace {

constexpr double kMassRelTol = 1e-12;
constexpr double kOrderingTol = 1e-9;
constexpr int kLocusScan = 4096;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

double depth_integral(const ProfileBranch& branch, double a, double b,
                      double t, const WaveConfig& config) {
  if (a == b) return 0.0;
  auto depth = [&](double x) { return profile_depth(x, t, branch, config); };
  return integrate(depth, a, b, 0.0, kMassRelTol).value;
}

ShockState junction_state(double t, const WaveConfig& config) {
  ShockState s;
  s.t = t;
  s.x0 = config.flat() ? config.c_star * t : 0.0;
  s.q_l = s.q_r = config.q_p;
  s.m_l = s.m_r = config.east_line.flux(config.q_p);
  s.amplitude = 0.0;
  s.speed = config.flat() ? config.c_star : junction_shock_speed(config);
  return s;
}

ShockState fill_state(double t, double x0, const WaveConfig& config) {
  const ProfileBranch west = make_branch(Side::West, config);
  const ProfileBranch east = make_branch(Side::East, config);
  ShockState s;
  s.t = t;
  s.x0 = x0;
  s.q_l = profile_depth(x0, t, west, config);
  s.q_r = profile_depth(x0, t, east, config);
  s.m_l = config.west_line.flux(s.q_l);
  s.m_r = config.east_line.flux(s.q_r);
  s.amplitude = s.q_l - s.q_r;
  s.speed = s.amplitude > 0.0 ? shock_speed(s.q_l, s.q_r, s.m_l, s.m_r)
                              : junction_shock_speed(config);
  return s;
}

void check_ordering(const ShockState& s, const WaveConfig& config) {
  const double tol = kOrderingTol * config.q_ref;
  const bool ok = config.q_star - tol <= s.q_r && s.q_r <= config.q_p + tol &&
                  config.q_p - tol <= s.q_l && s.q_l <= config.q_ref + tol;
  if (!ok) {
    throw NumericalError("shock ordering q_star <= q_r <= q_P <= q_l <= q_ref "
                         "violated at t=" + num(s.t) + " (q_l=" + num(s.q_l) +
                         ", q_r=" + num(s.q_r) + ")");
  }
}

}  // namespace

const char* to_string(ShockMethod method) {
  return method == ShockMethod::MassFunctional ? "mass" : "three-equation";
}

double rh_residual(double q_l, double q_r, const WaveConfig& config) {
  const double jump = (q_l - q_r) * std::sqrt(config.g * (q_r + q_l) /
                                              (2.0 * q_r * q_l));
  return jump + config.a_ref * config.q_0 / q_l -
         config.c_star * config.q_star / q_r - (config.a_ref - config.c_star);
}

double rh_solve_qr(double q_l, const WaveConfig& config) {
  const double qp = config.q_p;
  const double qs = config.q_star;
  const double tol = 1e-12 * config.q_ref;
  if (q_l < qp - tol || q_l > config.q_ref + tol) {
    throw DomainError("rh_solve_qr: q_l=" + num(q_l) + " outside [q_P, q_ref]");
  }
  if (q_l <= qp) return qp;
  auto f = [&](double q_r) { return rh_residual(q_l, q_r, config); };
  const double f_star = f(qs);
  const double f_p = f(qp);
  if (std::abs(f_star) <= 1e-12) return qs;
  if (std::signbit(f_star) == std::signbit(f_p)) {
    throw LocusError("rh_solve_qr: no right state on [q_star, q_P] for q_l=" +
                     num(q_l));
  }
  return bisect(f, qs, qp, f_star, f_p);
}

double rh_locus_end(const WaveConfig& config) {
  if (config.flat()) return config.q_p;
  auto at_star = [&](double q_l) {
    return rh_residual(q_l, config.q_star, config);
  };
  const double lo = config.q_p;
  const double hi = config.q_ref;
  const double step = (hi - lo) / kLocusScan;
  double prev_q = lo;
  double prev_f = at_star(lo);
  for (int i = 1; i <= kLocusScan; ++i) {
    const double q = i == kLocusScan ? hi : lo + i * step;
    const double f = at_star(q);
    if (f < 0.0 && std::abs(f) > 1e-12) {
      return bisect(at_star, prev_q, q, prev_f, f);
    }
    prev_q = q;
    prev_f = f;
  }
  return hi;
}

std::vector<LocusPoint> rh_locus(int n_samples, const WaveConfig& config) {
  if (n_samples < 2) throw DomainError("rh_locus: n_samples >= 2 required");
  const double end = rh_locus_end(config);
  std::vector<LocusPoint> out;
  out.reserve(n_samples);
  for (int i = 0; i < n_samples; ++i) {
    const double q_l =
        i + 1 == n_samples
            ? end
            : config.q_p + (end - config.q_p) * i / (n_samples - 1);
    const double q_r = rh_solve_qr(q_l, config);
    out.push_back({q_l, config.west_line.flux(q_l), q_r,
                   config.east_line.flux(q_r)});
  }
  return out;
}

double shock_speed(double q_l, double q_r, double m_l, double m_r) {
  if (q_l == q_r) {
    throw DomainError("shock_speed: undefined for zero amplitude");
  }
  return (m_l - m_r) / (q_l - q_r);
}

double junction_shock_speed(const WaveConfig& config) {
  // Linearise the jump relation at P: dq_r / dq_l along the locus.
  const double qp = config.q_p;
  const double s_p = std::sqrt(config.g / qp);
  const double d_left = s_p - config.a_ref * config.q_0 / (qp * qp);
  const double d_right = s_p - config.c_star * config.q_star / (qp * qp);
  const double ratio = d_left / d_right;
  return (config.a_ref - config.c_star * ratio) / (1.0 - ratio);
}

double initial_mass(double x1, double x2, const WaveConfig& config) {
  if (!(x1 <= 0.0 && 0.0 <= x2)) {
    throw DomainError("initial_mass: x1 <= 0 <= x2 required");
  }
  if (config.flat()) return config.q_star * (x2 - x1);
  return depth_integral(make_branch(Side::West, config), x1, 0.0, 0.0, config) +
         depth_integral(make_branch(Side::East, config), 0.0, x2, 0.0, config);
}

double mass_by_depth(double q1, double q_l, double q_r, double q2,
                     const WaveConfig& config) {
  const ProfileBranch west = make_branch(Side::West, config);
  const ProfileBranch east = make_branch(Side::East, config);
  auto west_density = [&](double q) { return q * psi_prime(q, west, config); };
  auto east_density = [&](double q) { return q * psi_prime(q, east, config); };
  double total = 0.0;
  if (q1 != q_l) total += integrate(west_density, q1, q_l, 0.0, kMassRelTol).value;
  if (q_r != q2) total += integrate(east_density, q_r, q2, 0.0, kMassRelTol).value;
  return total;
}

TrajectoryPair advance_trajectories(const TrajectoryPair& pair, double dt,
                                    const WaveConfig& config) {
  if (!(dt > 0.0)) throw DomainError("advance_trajectories: dt > 0 required");
  if (config.flat()) return {pair.x1, pair.x2, pair.t + dt};
  const ProfileBranch west = make_branch(Side::West, config);
  const ProfileBranch east = make_branch(Side::East, config);
  auto west_velocity = [&](double x, double t) {
    const double q = profile_depth(x, t, west, config);
    return config.a_ref - config.q_ref * config.c_ref / q;
  };
  auto east_velocity = [&](double x, double t) {
    const double q = profile_depth(x, t, east, config);
    return config.c_star * (1.0 - config.q_star / q);
  };
  try {
    const double t = pair.t;
    const double v1 = west_velocity(pair.x1, t);
    const double v2 = east_velocity(pair.x2, t);
    const double w1 = west_velocity(pair.x1 + dt * v1, t + dt);
    const double w2 = east_velocity(pair.x2 + dt * v2, t + dt);
    return {pair.x1 + 0.5 * dt * (v1 + w1), pair.x2 + 0.5 * dt * (v2 + w2),
            t + dt};
  } catch (const DomainError& e) {
    throw TrajectoryError(std::string("advance_trajectories: ") + e.what());
  }
}

double mass_between(double x1, double x2, double x0, double t,
                    const WaveConfig& config) {
  if (!(x1 <= x0 && x0 <= x2)) {
    throw DomainError("mass_between: x1 <= x0 <= x2 required");
  }
  if (config.flat()) return config.q_star * (x2 - x1);
  return depth_integral(make_branch(Side::West, config), x1, x0, t, config) +
         depth_integral(make_branch(Side::East, config), x0, x2, t, config);
}

ShockState locate_shock(double t, const TrajectoryPair& pair,
                        double initial_mass, const WaveConfig& config) {
  if (t == 0.0 || config.flat()) {
    ShockState s = junction_state(t, config);
    if (!config.flat()) {
      s.mass_rel_error =
          (mass_between(pair.x1, pair.x2, 0.0, 0.0, config) - initial_mass) /
          initial_mass;
    } else {
      s.mass_rel_error = 0.0;
    }
    return s;
  }
  const double crest = config.a_ref * t + psi_west(config.q_ref, config);
  const double lo = std::max(config.a_ref * t, pair.x1);
  const double hi = std::min(crest, pair.x2);
  if (!(lo < hi)) {
    throw BracketError("locate_shock: admissible shock interval [" + num(lo) +
                       ", " + num(hi) + "] lies outside the material bracket; "
                       "widen x1/x2");
  }
  auto defect = [&](double x0) {
    return mass_between(pair.x1, pair.x2, x0, t, config) - initial_mass;
  };
  const double d_lo = defect(lo);
  const double d_hi = defect(hi);
  if (std::signbit(d_lo) == std::signbit(d_hi) && d_lo != 0.0 && d_hi != 0.0) {
    throw BracketError(
        "locate_shock: F(x0) - M0 has no sign change at t=" + num(t) +
        " (relative defect " + num(d_lo / initial_mass) + " at x0=" + num(lo) +
        ", " + num(d_hi / initial_mass) + " at x0=" + num(hi) + ")");
  }
  BisectOptions options;
  options.x_tol = 1e-10 * initial_mass / config.q_ref;
  const double x0 = bisect(defect, lo, hi, d_lo, d_hi, options);
  ShockState s = fill_state(t, x0, config);
  s.mass_rel_error = defect(x0) / initial_mass;
  check_ordering(s, config);
  return s;
}

ShockState solve_shock_system(double t, const WaveConfig& config,
                              std::optional<std::pair<double, double>> bracket) {
  if (t < 0.0) throw DomainError("solve_shock_system: t >= 0 required");
  if (t == 0.0 || config.flat()) return junction_state(t, config);
  const ProfileBranch west = make_branch(Side::West, config);
  const ProfileBranch east = make_branch(Side::East, config);
  const double lo = bracket ? bracket->first : config.a_ref * t;
  const double hi = bracket ? bracket->second
                            : config.a_ref * t + psi_west(config.q_ref, config);
  auto residual = [&](double x0) {
    const double q_l = profile_depth(x0, t, west, config);
    const double q_r = profile_depth(x0, t, east, config);
    return rh_residual(q_l, q_r, config);
  };
  const double f_lo = residual(lo);
  const double f_hi = residual(hi);
  if (std::signbit(f_lo) == std::signbit(f_hi) && f_lo != 0.0 && f_hi != 0.0) {
    throw BracketError("solve_shock_system: jump residual has no sign change on [" +
                       num(lo) + ", " + num(hi) + "] at t=" + num(t));
  }
  const double x0 = bisect(residual, lo, hi, f_lo, f_hi);
  ShockState s = fill_state(t, x0, config);
  check_ordering(s, config);
  return s;
}

CollapseInfo detect_collapse(const WaveConfig& config,
                             const CollapseOptions& options) {
  CollapseInfo info;
  if (config.flat()) return info;
  const double eps = options.depth_eps;
  auto left_reached = [&](const ShockState& s) {
    return s.q_l >= config.q_ref - eps;
  };
  auto right_reached = [&](const ShockState& s) {
    return s.q_r <= config.q_star + eps;
  };
  auto first_time = [&](auto&& reached) {
    double lo = 0.0;
    double hi = options.first_probe;
    for (;;) {
      // Far beyond the right-state event the jump residual loses its sign
      // change; the event is then not reached by this construction.
      try {
        if (reached(solve_shock_system(hi, config))) break;
      } catch (const BracketError&) {
        return std::numeric_limits<double>::infinity();
      }
      lo = hi;
      hi *= 2.0;
      if (hi > options.horizon) {
        return std::numeric_limits<double>::infinity();
      }
    }
    while (hi - lo > options.time_tol) {
      const double mid = 0.5 * (lo + hi);
      if (reached(solve_shock_system(mid, config))) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    return hi;
  };
  info.left_event_time = first_time(left_reached);
  info.right_event_time = first_time(right_reached);
  info.time = std::min(info.left_event_time, info.right_event_time);
  return info;
}

double default_right_bound(const WaveConfig& config, double t_end) {
  if (config.flat()) return 5e4;
  return std::max(5e4, config.a_ref * t_end + psi_west(config.q_ref, config) + 5e4);
}

std::vector<double> default_output_times(double t_end) {
  std::vector<double> times;
  for (int i = 0; 100.0 * i <= t_end; ++i) times.push_back(100.0 * i);
  if (times.empty() || times.back() < t_end) times.push_back(t_end);
  return times;
}

SimulationRecord simulate(const WaveConfig& config,
                          const SimulationOptions& options) {
  if (!(options.dt > 0.0)) throw DomainError("simulate: dt > 0 required");
  if (!(options.t_end >= 0.0)) throw DomainError("simulate: t_end >= 0 required");
  SimulationRecord rec;
  rec.config = config;
  rec.x1 = options.x1;
  rec.x2 = options.x2 > 0.0 ? options.x2 : default_right_bound(config, options.t_end);
  if (!(rec.x1 < 0.0 && 0.0 < rec.x2)) {
    throw DomainError("simulate: x1 < 0 < x2 required");
  }
  rec.initial_mass = initial_mass(rec.x1, rec.x2, config);

  std::vector<double> times = options.output_times.empty()
                                  ? default_output_times(options.t_end)
                                  : options.output_times;
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::erase_if(times, [&](double t) { return t < 0.0 || t > options.t_end; });

  const CollapseInfo collapse = detect_collapse(config, options.collapse);
  if (collapse.reached() && collapse.time <= options.t_end) {
    rec.collapsed = true;
    rec.collapse_time = collapse.time;
    std::erase_if(times, [&](double t) { return t >= collapse.time; });
    times.push_back(collapse.time);
  }

  TrajectoryPair pair{rec.x1, rec.x2, 0.0};
  for (double t_out : times) {
    while (pair.t < t_out) {
      const double step = std::min(options.dt, t_out - pair.t);
      pair = advance_trajectories(pair, step, config);
      if (t_out - pair.t < 1e-9 * options.dt) pair.t = t_out;
    }
    ShockState s;
    if (options.method == ShockMethod::MassFunctional) {
      s = locate_shock(t_out, pair, rec.initial_mass, config);
    } else {
      s = solve_shock_system(t_out, config);
      if (config.flat()) {
        s.mass_rel_error = 0.0;
      } else {
        if (!(pair.x1 <= s.x0 && s.x0 <= pair.x2)) {
          throw BracketError("simulate: shock at x0=" + num(s.x0) +
                             " left the material bracket [" + num(pair.x1) +
                             ", " + num(pair.x2) + "]; widen x1/x2");
        }
        s.mass_rel_error =
            (mass_between(pair.x1, pair.x2, s.x0, t_out, config) -
             rec.initial_mass) / rec.initial_mass;
      }
    }
    rec.states.push_back(s);
    rec.trajectories.push_back(pair);
  }
  return rec;
}

}  // namespace roguewave
