#ifndef ROGUEWAVE_FV_HPP_
#define ROGUEWAVE_FV_HPP_

#include <functional>
#include <vector>

#include "roguewave/model.hpp"
#include "roguewave/shock.hpp"

namespace roguewave {

// First-order finite-volume discretisation of
//   q_t + m_x = 0,
//   m_t + (m^2/q + g q^2/2)_x = -k |u| u,
// with local Lax-Friedrichs (Rusanov) interface fluxes and zero-gradient
// boundaries.
struct FvGrid {
  double x_left = 0.0;
  double dx = 1.0;
  std::vector<OceanState> cells;
  double t = 0.0;

  double center(std::size_t i) const { return x_left + (i + 0.5) * dx; }
  double x_right() const { return x_left + dx * cells.size(); }
};

// Midpoint samples of the analytic solution at time t; the shock position
// comes from `method` (ignored for flat configurations).
FvGrid init_from_analytic(double t, double x_left, double x_right, double dx,
                          const WaveConfig& config,
                          ShockMethod method = ShockMethod::ThreeEquation);

double grid_mass(const FvGrid& grid);

// CFL-limited step size dt = cfl dx / max(|u| + c).
double stable_dt(const FvGrid& grid, double cfl, double g);

FvGrid fv_step(const FvGrid& grid, double cfl, const WaveConfig& config);

// One step with an explicit dt (no CFL check).
FvGrid fv_step_dt(const FvGrid& grid, double dt, const WaveConfig& config);

using FvObserver = std::function<void(const FvGrid& before, const FvGrid& after)>;

// Steps until grid.t == t_end; the last step is shortened to land on t_end.
FvGrid fv_advance(FvGrid grid, double t_end, double cfl,
                  const WaveConfig& config, const FvObserver& observer = {});

struct ProfileErrors {
  double l1 = 0.0;    // sum |q - q_exact| dx over the window, m^2
  double linf = 0.0;  // m
  double linf_x = 0.0;
  double shock_x0 = 0.0;
};

// Errors of the cell depths against the analytic solution at grid.t, on the
// cells whose centres lie in [x_from, x_to] (whole grid if x_from >= x_to).
ProfileErrors compare_profiles(const FvGrid& grid, const WaveConfig& config,
                               double x_from = 0.0, double x_to = 0.0,
                               ShockMethod method = ShockMethod::ThreeEquation);

}  // namespace roguewave

#endif  // ROGUEWAVE_FV_HPP_
