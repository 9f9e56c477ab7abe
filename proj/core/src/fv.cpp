#include "roguewave/fv.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "roguewave/errors.hpp"
#include "roguewave/profiles.hpp"

namespace roguewave {
namespace {

struct Flux {
  double mass;
  double momentum;
};

Flux physical_flux(const OceanState& s, double g) {
  return {s.m, s.m * s.m / s.q + 0.5 * g * s.q * s.q};
}

double wave_speed(const OceanState& s, double g) {
  return std::abs(s.m / s.q) + std::sqrt(g * s.q);
}

Flux rusanov(const OceanState& left, const OceanState& right, double g) {
  const Flux fl = physical_flux(left, g);
  const Flux fr = physical_flux(right, g);
  const double a = std::max(wave_speed(left, g), wave_speed(right, g));
  return {0.5 * (fl.mass + fr.mass) - 0.5 * a * (right.q - left.q),
          0.5 * (fl.momentum + fr.momentum) - 0.5 * a * (right.m - left.m)};
}

double shock_position(double t, const WaveConfig& config, ShockMethod method) {
  if (config.flat() || t == 0.0) return 0.0;
  if (method == ShockMethod::ThreeEquation) {
    return solve_shock_system(t, config).x0;
  }
  SimulationOptions options;
  options.t_end = t;
  options.output_times = {t};
  options.method = method;
  return simulate(config, options).states.back().x0;
}

OceanState analytic_state(double x, double t, double x0,
                          const WaveConfig& config) {
  if (config.flat()) return {config.q_star, 0.0};
  const Side side = x < x0 ? Side::West : Side::East;
  const ProfileBranch branch = make_branch(side, config);
  const double q = profile_depth(x, t, branch, config);
  return {q, branch.line.flux(q)};
}

}  // namespace

FvGrid init_from_analytic(double t, double x_left, double x_right, double dx,
                          const WaveConfig& config, ShockMethod method) {
  if (!(dx > 0.0) || !(x_right > x_left)) {
    throw DomainError("init_from_analytic: need dx > 0 and x_right > x_left");
  }
  FvGrid grid;
  grid.x_left = x_left;
  grid.dx = dx;
  grid.t = t;
  const auto n = static_cast<std::size_t>(std::llround((x_right - x_left) / dx));
  grid.cells.resize(n);
  const double x0 = shock_position(t, config, method);
  for (std::size_t i = 0; i < n; ++i) {
    grid.cells[i] = analytic_state(grid.center(i), t, x0, config);
  }
  return grid;
}

double grid_mass(const FvGrid& grid) {
  double sum = 0.0;
  for (const auto& c : grid.cells) sum += c.q;
  return sum * grid.dx;
}

double stable_dt(const FvGrid& grid, double cfl, double g) {
  double a_max = 0.0;
  for (const auto& c : grid.cells) a_max = std::max(a_max, wave_speed(c, g));
  return cfl * grid.dx / a_max;
}

FvGrid fv_step_dt(const FvGrid& grid, double dt, const WaveConfig& config) {
  if (grid.cells.empty()) throw DomainError("fv_step: empty grid");
  if (!(dt > 0.0)) throw DomainError("fv_step: dt > 0 required");
  const double g = config.g;
  const std::size_t n = grid.cells.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(grid.cells[i].q > 0.0)) {
      throw SolverError("fv_step: vacuum in cell " + std::to_string(i));
    }
  }
  std::vector<Flux> faces(n + 1);
  // Zero-gradient ghosts make the boundary faces carry the physical flux.
  faces[0] = physical_flux(grid.cells.front(), g);
  faces[n] = physical_flux(grid.cells.back(), g);
  for (std::size_t i = 1; i < n; ++i) {
    faces[i] = rusanov(grid.cells[i - 1], grid.cells[i], g);
  }
  FvGrid next = grid;
  const double ratio = dt / grid.dx;
  for (std::size_t i = 0; i < n; ++i) {
    OceanState& c = next.cells[i];
    c.q -= ratio * (faces[i + 1].mass - faces[i].mass);
    c.m -= ratio * (faces[i + 1].momentum - faces[i].momentum);
    if (!(c.q > 0.0)) {
      throw SolverError("fv_step: vacuum in cell " + std::to_string(i));
    }
    const double u = c.m / c.q;
    c.m -= dt * config.k * std::abs(u) * u;
  }
  next.t = grid.t + dt;
  return next;
}

FvGrid fv_step(const FvGrid& grid, double cfl, const WaveConfig& config) {
  if (!(cfl > 0.0 && cfl <= 0.9)) {
    throw DomainError("fv_step: 0 < cfl <= 0.9 required");
  }
  if (grid.cells.empty()) throw DomainError("fv_step: empty grid");
  return fv_step_dt(grid, stable_dt(grid, cfl, config.g), config);
}

FvGrid fv_advance(FvGrid grid, double t_end, double cfl,
                  const WaveConfig& config, const FvObserver& observer) {
  if (!(cfl > 0.0 && cfl <= 0.9)) {
    throw DomainError("fv_advance: 0 < cfl <= 0.9 required");
  }
  while (grid.t < t_end) {
    const double dt = std::min(stable_dt(grid, cfl, config.g), t_end - grid.t);
    FvGrid next = fv_step_dt(grid, dt, config);
    if (observer) observer(grid, next);
    grid = std::move(next);
    if (t_end - grid.t < 1e-12 * std::max(1.0, t_end)) grid.t = t_end;
  }
  return grid;
}

ProfileErrors compare_profiles(const FvGrid& grid, const WaveConfig& config,
                               double x_from, double x_to, ShockMethod method) {
  ProfileErrors e;
  e.shock_x0 = shock_position(grid.t, config, method);
  const bool windowed = x_from < x_to;
  for (std::size_t i = 0; i < grid.cells.size(); ++i) {
    const double x = grid.center(i);
    if (windowed && (x < x_from || x > x_to)) continue;
    const double q_exact = analytic_state(x, grid.t, e.shock_x0, config).q;
    const double err = std::abs(grid.cells[i].q - q_exact);
    e.l1 += err * grid.dx;
    if (err > e.linf) {
      e.linf = err;
      e.linf_x = x;
    }
  }
  return e;
}

}  // namespace roguewave
