#ifndef ROGUEWAVE_TOOLS_COMMANDS_HPP_
#define ROGUEWAVE_TOOLS_COMMANDS_HPP_

#include <iosfwd>
#include <string>

#include "roguewave/shock.hpp"
#include "scenario.hpp"

namespace roguewave::cli {

enum ExitCode : int {
  kOk = 0,
  kInvalidConfiguration = 2,
  kNonConvergence = 3,
  kNotAdmissible = 4,
};

struct ProfileRequest {
  double t = 0.0;
  double x_min = -5e4;
  double x_max = 2.5e5;
  double dx = 10.0;
  ShockMethod method = ShockMethod::ThreeEquation;
};

struct FvRequest {
  double dx = 10.0;
  double cfl = 0.5;
  double t_end = 100.0;
};

// Each command writes its document to `out`, diagnostics to `err`, and
// returns the process exit code. Exceptions are mapped to exit codes here.
int cmd_setup(const Scenario& scenario, std::ostream& out, std::ostream& err);
int cmd_profile(const Scenario& scenario, const ProfileRequest& request,
                std::ostream& out, std::ostream& err);
int cmd_simulate(const Scenario& scenario, ShockMethod method,
                 std::ostream& out, std::ostream& err);
int cmd_phase_plane(const Scenario& scenario, int n, std::ostream& out,
                    std::ostream& err);
int cmd_validate_fv(const Scenario& scenario, const FvRequest& request,
                    std::ostream& out, std::ostream& err);

// Fixed CSV number format: 10 significant digits, '.' separator.
std::string format_number(double v);

}  // namespace roguewave::cli

#endif  // ROGUEWAVE_TOOLS_COMMANDS_HPP_
