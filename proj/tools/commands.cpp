#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>

#include "json.hpp"
#include "roguewave/errors.hpp"
#include "roguewave/fv.hpp"
#include "roguewave/profiles.hpp"

namespace roguewave::cli {
namespace {

using nlohmann::json;

// Margin kept clear of the FV boundaries, as a multiple of the distance a
// characteristic covers by t_end.
constexpr double kBoundaryMargin = 1.2;

// Runs a command body and maps exceptions to exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigurationError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfiguration;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidConfiguration;
  } catch (const NumericalError& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  }
}

// Returns false when strict admissibility fails.
bool check_admissibility(const Scenario& scenario, const WaveConfig& config,
                         Admissibility& verdict, std::ostream& err) {
  verdict = assess_admissibility(config, scenario.consts);
  if (verdict.admissible) return true;
  err << (scenario.strict_admissibility ? "error" : "warning")
      << ": profile extent " << format_number(verdict.profile_extent)
      << " m is below the minimum wavelength "
      << format_number(verdict.lambda_min) << " m\n";
  return !scenario.strict_admissibility;
}

}  // namespace

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

int cmd_setup(const Scenario& scenario, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WaveConfig config = resolve(scenario);
    Admissibility verdict;
    const bool ok = check_admissibility(scenario, config, verdict, err);
    json doc;
    doc["q_star"] = config.q_star;
    doc["q_0"] = config.q_0;
    doc["q_ref"] = config.q_ref;
    doc["q_P"] = config.q_p;
    doc["c_star"] = config.c_star;
    doc["c_ref"] = config.c_ref;
    doc["A_ref"] = config.a_ref;
    doc["m_ref"] = config.m_ref;
    doc["F_ref"] = config.froude_ref;
    doc["lambda_min"] = verdict.lambda_min;
    doc["profile_extent"] =
        std::isfinite(verdict.profile_extent) ? json(verdict.profile_extent) : json(nullptr);
    doc["admissible"] = verdict.admissible;
    doc["scenario_hash"] = hash_hex(scenario.hash);
    out << doc.dump(2) << '\n';
    return ok ? kOk : kNotAdmissible;
  });
}

int cmd_profile(const Scenario& scenario, const ProfileRequest& request,
                std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(request.dx > 0.0) || !(request.x_max >= request.x_min)) {
      throw DomainError("profile: need dx > 0 and x_max >= x_min");
    }
    if (request.t < 0.0) throw DomainError("profile: t >= 0 required");
    const WaveConfig config = resolve(scenario);
    Admissibility verdict;
    if (!check_admissibility(scenario, config, verdict, err)) return static_cast<int>(kNotAdmissible);

    double x0 = 0.0;
    if (!config.flat() && request.t > 0.0) {
      const CollapseInfo collapse = detect_collapse(config);
      if (request.t > collapse.time) {
        throw DomainError("profile: t beyond collapse time " +
                          format_number(collapse.time));
      }
      SimulationOptions options;
      options.t_end = request.t;
      options.dt = scenario.dt;
      options.output_times = {request.t};
      options.x1 = scenario.x1;
      options.x2 = scenario.x2.value_or(0.0);
      options.method = request.method;
      x0 = simulate(config, options).states.back().x0;
    }
    const auto rows = static_cast<long long>(
        std::floor((request.x_max - request.x_min) / request.dx + 1e-9)) + 1;
    out << "x,q,m,side\n";
    if (config.flat()) {
      for (long long i = 0; i < rows; ++i) {
        out << format_number(request.x_min + i * request.dx) << ','
            << format_number(config.q_star) << ",0,east\n";
      }
      return static_cast<int>(kOk);
    }
    const ProfileBranch west = make_branch(Side::West, config);
    const ProfileBranch east = make_branch(Side::East, config);
    for (long long i = 0; i < rows; ++i) {
      const double x = request.x_min + i * request.dx;
      const ProfileBranch& branch = x < x0 ? west : east;
      const double q = profile_depth(x, request.t, branch, config);
      out << format_number(x) << ',' << format_number(q) << ','
          << format_number(branch.line.flux(q)) << ',' << to_string(branch.side)
          << '\n';
    }
    return static_cast<int>(kOk);
  });
}

int cmd_simulate(const Scenario& scenario, ShockMethod method,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const WaveConfig config = resolve(scenario);
    Admissibility verdict;
    if (!check_admissibility(scenario, config, verdict, err)) return static_cast<int>(kNotAdmissible);
    SimulationOptions options;
    options.t_end = scenario.t_end;
    options.dt = scenario.dt;
    options.output_times = scenario.output_times;
    options.x1 = scenario.x1;
    options.x2 = scenario.x2.value_or(0.0);
    options.method = method;
    const SimulationRecord rec = simulate(config, options);
    out << "t,x0,ql,qr,amplitude,ml,mr,shock_speed,mass_rel_error\n";
    for (const ShockState& s : rec.states) {
      out << format_number(s.t) << ',' << format_number(s.x0) << ','
          << format_number(s.q_l) << ',' << format_number(s.q_r) << ','
          << format_number(s.amplitude) << ',' << format_number(s.m_l) << ','
          << format_number(s.m_r) << ',' << format_number(s.speed) << ','
          << format_number(s.mass_rel_error) << '\n';
    }
    if (rec.collapsed) {
      err << "note: collapse reached at t=" << format_number(rec.collapse_time)
          << " s; last row is the collapse state\n";
    }
    return static_cast<int>(kOk);
  });
}

int cmd_phase_plane(const Scenario& scenario, int n, std::ostream& out,
                    std::ostream& err) {
  return guarded(err, [&] {
    if (n < 2) throw DomainError("phase-plane: n >= 2 required");
    const WaveConfig config = resolve(scenario);
    Admissibility verdict;
    if (!check_admissibility(scenario, config, verdict, err)) return static_cast<int>(kNotAdmissible);
    out << "branch,q,m\n";
    auto line_rows = [&](const char* name, const WaveLine& line, double lo,
                         double hi) {
      for (int i = 0; i < n; ++i) {
        const double q = i + 1 == n ? hi : lo + (hi - lo) * i / (n - 1);
        out << name << ',' << format_number(q) << ','
            << format_number(line.flux(q)) << '\n';
      }
    };
    line_rows("west", config.west_line, config.q_0, config.q_ref);
    line_rows("east", config.east_line, config.q_star, config.q_p);
    if (!config.flat()) {
      for (const LocusPoint& p : rh_locus(n, config)) {
        out << "shock_left," << format_number(p.q_l) << ','
            << format_number(p.m_l) << '\n';
      }
      for (const LocusPoint& p : rh_locus(n, config)) {
        out << "shock_right," << format_number(p.q_r) << ','
            << format_number(p.m_r) << '\n';
      }
    }
    return static_cast<int>(kOk);
  });
}

int cmd_validate_fv(const Scenario& scenario, const FvRequest& request,
                    std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(request.t_end > 0.0 && request.t_end <= 200.0)) {
      throw DomainError("validate-fv: 0 < t_end <= 200 required");
    }
    if (!(request.dx > 0.0)) throw DomainError("validate-fv: dx > 0 required");
    if (!(request.cfl > 0.0 && request.cfl <= 0.9)) {
      throw DomainError("validate-fv: 0 < cfl <= 0.9 required");
    }
    const WaveConfig config = resolve(scenario);
    Admissibility verdict;
    if (!check_admissibility(scenario, config, verdict, err)) return static_cast<int>(kNotAdmissible);

    const double x_left = scenario.x1;
    const double right_bound =
        scenario.x2.value_or(default_right_bound(config, request.t_end));
    const double cells = std::ceil((right_bound - x_left) / request.dx);
    const double x_right = x_left + cells * request.dx;
    const double reach = kBoundaryMargin * celerity(config.q_ref, config.g) *
                         (1.0 + config.froude_ref) * request.t_end;
    const double window_from = x_left + reach;
    const double window_to = x_right - reach;
    if (!(window_from < window_to)) {
      throw DomainError("validate-fv: domain too short for t_end; widen x1/x2");
    }

    json levels = json::array();
    std::vector<double> l1;
    double worst_mass_defect = 0.0;
    for (const double dx : {request.dx, 0.5 * request.dx}) {
      FvGrid grid = init_from_analytic(0.0, x_left, x_right, dx, config);
      grid = fv_advance(grid, request.t_end, request.cfl, config,
                        [&](const FvGrid& before, const FvGrid& after) {
                          const double dt = after.t - before.t;
                          const double inflow =
                              dt * (before.cells.front().m - before.cells.back().m);
                          const double mass = grid_mass(before);
                          const double defect =
                              std::abs(grid_mass(after) - mass - inflow) / mass;
                          worst_mass_defect = std::max(worst_mass_defect, defect);
                        });
      const ProfileErrors e = compare_profiles(grid, config, window_from, window_to);
      l1.push_back(e.l1);
      levels.push_back({{"dx", dx},
                        {"l1_error", e.l1},
                        {"linf_error", e.linf},
                        {"linf_x", e.linf_x},
                        {"cells", grid.cells.size()}});
    }
    json doc;
    doc["scenario_hash"] = hash_hex(scenario.hash);
    doc["t_end"] = request.t_end;
    doc["cfl"] = request.cfl;
    doc["window"] = {window_from, window_to};
    doc["levels"] = levels;
    if (l1[0] > 0.0 && l1[1] > 0.0) {
      doc["convergence_order"] = std::log2(l1[0] / l1[1]);
    } else {
      doc["convergence_order"] = nullptr;  // exact at both resolutions
    }
    doc["mass_conservation"] = {{"max_step_relative_defect", worst_mass_defect},
                                {"tolerance", 1e-12},
                                {"ok", worst_mass_defect <= 1e-12}};
    out << doc.dump(2) << '\n';
    return static_cast<int>(kOk);
  });
}

}  // namespace roguewave::cli
