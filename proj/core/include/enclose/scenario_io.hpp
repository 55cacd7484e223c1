#pragma once

// JSON scenario documents.
//
//   {
//     "target":   {"x": 0, "y": 0},
//     "defaults": {"v": 40, "r_d": 100, "r_s": 50, "dt": 0.001, "t_end": 60,
//                  "collision_radius": 1, "K": 10, "lambda": 0.9, "eta": 70000,
//                  "delta_cap": 100, "a_max": 100, "boundary_layer": 0},
//     "agents":   [{"id": 0, "x": 300, "y": 0, "chi": 0.7}, ...],
//     "generator": {"n": 6, "radius_range": [150, 400], "seed": 7},
//     "seed": 7
//   }
//
// Every section and key is optional except that some agents must come from
// "agents" or "generator" (not both). Omitted defaults take the values in
// ScenarioDefaults. Agents may override guidance keys (K, lambda, eta,
// delta_cap, a_max, boundary_layer); run-wide keys may be repeated per agent
// only with the default's value. Unknown keys are rejected.

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "enclose/sim_engine.hpp"

namespace enclose {

/// Values used for any key the document leaves out.
struct ScenarioDefaults {
  double v = 40.0;
  double r_s = 50.0;
  double dt = 1e-3;
  double t_end = 60.0;
  double collision_radius = 1.0;
  GuidanceParams guidance;
};

struct GeneratorSpec {
  std::size_t n = 0;
  double radius_min = 150.0;
  double radius_max = 400.0;
  std::uint64_t seed = 0;
};

/// Deterministic random swarm: ranges uniform in [radius_min, radius_max],
/// polar angle uniform in [-pi, pi), bearing uniform in (0, pi). Positions
/// closer than or equal to `min_separation` to an earlier agent are redrawn.
/// Ids are 0..n-1. Throws ValidationError("generator", ...) if placement
/// keeps failing.
std::vector<AgentConfig> generate_agents(const GeneratorSpec& spec, const TargetState& target,
                                         const GuidanceParams& guidance,
                                         double min_separation);

/// Parses a document held in memory. `source` is only used in messages.
/// Throws ParseError with line and column for malformed JSON and
/// ValidationError with the field path for bad values.
Scenario parse_scenario_text(std::string_view text, std::string_view source = "<memory>");

/// Reads and parses a file. Throws IoError if it cannot be read.
Scenario parse_scenario(const std::filesystem::path& path);

/// Canonical writer. parse_scenario_text(serialize_scenario(s)) == s for
/// every valid s.
std::string serialize_scenario(const Scenario& scenario);

/// Sets one named parameter on a scenario, for sweeps. Guidance keys apply
/// to every agent. Throws ValidationError for an unknown name.
void apply_parameter(Scenario& scenario, std::string_view name, double value);

/// Names accepted by apply_parameter.
const std::vector<std::string>& sweepable_parameters();

}  // namespace enclose
