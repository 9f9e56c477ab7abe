#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "roguewave/errors.hpp"

namespace rw = roguewave;
namespace cli = roguewave::cli;

namespace {

rw::ShockMethod parse_method(const std::string& name) {
  if (name == "mass") return rw::ShockMethod::MassFunctional;
  return rw::ShockMethod::ThreeEquation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Friction-balanced rogue-wave profiles and shock tracking"};
  app.require_subcommand(1);

  std::string scenario_path;
  bool strict = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    sub->add_flag("--strict", strict, "fail (exit 4) on inadmissible scale");
  };
  const std::vector<std::string> methods = {"mass", "three-equation"};

  auto* setup = app.add_subcommand("setup", "print derived configuration");
  add_common(setup);

  cli::ProfileRequest profile_req;
  std::string profile_method = "three-equation";
  auto* profile = app.add_subcommand("profile", "sample the depth profile");
  add_common(profile);
  profile->add_option("--t", profile_req.t, "time, s")->capture_default_str();
  profile->add_option("--xmin", profile_req.x_min, "m")->capture_default_str();
  profile->add_option("--xmax", profile_req.x_max, "m")->capture_default_str();
  profile->add_option("--dx", profile_req.dx, "m")->capture_default_str();
  profile->add_option("--method", profile_method)
      ->check(CLI::IsMember(methods))
      ->capture_default_str();

  std::string sim_method = "three-equation";
  auto* simulate = app.add_subcommand("simulate", "track the shock");
  add_common(simulate);
  simulate->add_option("--method", sim_method)
      ->check(CLI::IsMember(methods))
      ->capture_default_str();

  int n_points = 200;
  auto* phase = app.add_subcommand("phase-plane", "lines and shock locus");
  add_common(phase);
  phase->add_option("--n", n_points, "points per branch")->capture_default_str();

  cli::FvRequest fv_req;
  auto* fv = app.add_subcommand("validate-fv", "finite-volume cross-check");
  add_common(fv);
  fv->add_option("--dx", fv_req.dx, "coarse cell size, m")->capture_default_str();
  fv->add_option("--cfl", fv_req.cfl)->capture_default_str();
  fv->add_option("--t-end", fv_req.t_end, "s, at most 200")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kInvalidConfiguration;
  }

  cli::Scenario scenario;
  try {
    scenario = cli::load_scenario(scenario_path);
  } catch (const rw::ConfigurationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kInvalidConfiguration;
  }
  if (strict) scenario.strict_admissibility = true;

  std::ostream& out = std::cout;
  std::ostream& err = std::cerr;
  if (*setup) return cli::cmd_setup(scenario, out, err);
  if (*profile) {
    profile_req.method = parse_method(profile_method);
    return cli::cmd_profile(scenario, profile_req, out, err);
  }
  if (*simulate) return cli::cmd_simulate(scenario, parse_method(sim_method), out, err);
  if (*phase) return cli::cmd_phase_plane(scenario, n_points, out, err);
  return cli::cmd_validate_fv(scenario, fv_req, out, err);
}
