#ifndef ROGUEWAVE_TOOLS_SCENARIO_HPP_
#define ROGUEWAVE_TOOLS_SCENARIO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "roguewave/model.hpp"

namespace roguewave::cli {

// Scenario file (JSON). Only q_star and q_0 are required; q_ref may be a
// number or the string "max".
struct Scenario {
  double q_star = 0.0;
  double q_0 = 0.0;
  std::optional<double> q_ref;  // nullopt: solve for the maximal value
  PhysicalConstants consts;
  double t_end = 1000.0;
  double dt = 1.0;
  std::vector<double> output_times;  // empty: every 100 s
  double x1 = -5e4;
  std::optional<double> x2;          // nullopt: far enough ahead of the shock
  bool strict_admissibility = false;
  std::uint64_t hash = 0;            // of the canonical JSON form
};

Scenario parse_scenario(const nlohmann::json& doc);
Scenario load_scenario(const std::string& path);

nlohmann::json to_json(const Scenario& scenario);

// Resolves q_ref ("max" -> solve_max_qref) and builds the configuration.
WaveConfig resolve(const Scenario& scenario);

std::string hash_hex(std::uint64_t hash);

}  // namespace roguewave::cli

#endif  // ROGUEWAVE_TOOLS_SCENARIO_HPP_
