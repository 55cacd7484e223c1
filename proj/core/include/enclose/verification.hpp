#pragma once

// Independent oracles for the pair-geometry sign table, the neighbour-selection
// algorithm, the potential gradients and the closed-loop enclosing claim.
//
// Every oracle is deterministic given its seed. A violation records the input
// that produced it as JSON; closed-loop violations carry a complete scenario
// document that `enclose run` accepts as-is.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "enclose/sim_engine.hpp"

namespace enclose {

struct Violation {
  std::string input;  ///< JSON
  std::string expected;
  std::string observed;
};

struct OracleReport {
  std::string name;
  std::size_t cases_run = 0;
  std::vector<Violation> violations;
  bool pass = true;  ///< violations.empty()
  std::string note;
};

std::string report_to_json(const OracleReport& report);

/// Signs of (dd/dt, dpsi/dt) in each region for bearings in (0, pi/2) with
/// the ordering the sign table assumes. Includes bearings a hair apart.
OracleReport oracle_region_signs(std::size_t samples, std::uint64_t seed);

/// neighbor_select against a literal enumeration over Cartesian positions,
/// plus crafted triples from the selection argument and swarms with every
/// pair outside the sensing radius.
OracleReport oracle_algorithm1(std::size_t swarms, std::size_t n_max, std::uint64_t seed);

/// Analytic potential gradients against central differences of potential(),
/// step 1e-4, agreement to `relative_tolerance` * max(1, |gradient|).
OracleReport oracle_potential_gradients(std::size_t samples, std::uint64_t seed,
                                        double relative_tolerance = 1e-6);

struct Theorem2Options {
  std::vector<std::size_t> agent_counts{6};  ///< cycled over scenarios
  double radius_min = 150.0;
  double radius_max = 400.0;
  double t_end = 70.0;
  double settle_time = 60.0;  ///< convergence deadline for (b)
  double error_tolerance = 0.5;    ///< tol_e [m]
  double manifold_tolerance = 0.1;  ///< tol_S [m/s]
  double accel_tolerance = 0.1;     ///< tol_a [m/s^2]
  std::size_t reaching_slack_steps = 20;
  double steady_window = 1.0;
  GuidanceParams guidance;
  SpeedParams speed{40.0};
  SensorParams sensor{50.0};
  double dt = 1e-3;
  double collision_radius = 1.0;
  unsigned threads = 0;  ///< 0 picks the hardware concurrency
};

/// Random scenario meeting the closed-loop hypotheses: every agent outside
/// r_d, bearings in (0, pi), pairwise separation above r_s.
Scenario make_theorem2_scenario(std::size_t n, std::uint64_t seed, const Theorem2Options& options);

struct ReachingPhase {
  AgentId agent = 0;
  double start = 0.0;
  double manifold0 = 0.0;
  double bound = 0.0;          ///< T* = |S0| / K
  double reached_after = -1.0;  ///< -1 when never below tol_S in the phase
  bool censored = false;  ///< phase ended before the deadline without reaching
  bool pass = false;
};

/// Outcome of one closed-loop run against (a)-(d).
struct RunAssessment {
  double min_separation = 0.0;
  std::size_t collisions = 0;
  bool safe = false;  ///< (a)

  std::vector<double> convergence_times;
  std::vector<double> final_errors;
  bool converged = false;  ///< (b): |e| < tol_e from settle_time on

  std::vector<ReachingPhase> phases;
  bool reaching = false;  ///< (c): every uncensored phase reached in time

  std::vector<double> steady_accels;  ///< trailing-window mean of a
  bool steady = false;                ///< (d)

  std::size_t repulsion_on_events = 0;
};

RunAssessment assess_run(const Scenario& scenario, const Theorem2Options& options);

/// Runs `scenarios` generated cases and checks (a)-(d) on each.
OracleReport oracle_theorem2(std::size_t scenarios, std::uint64_t seed,
                             const Theorem2Options& options = {});

/// Names accepted by run_named_oracle.
const std::vector<std::string>& oracle_names();

/// Runs an oracle at its default size. Throws ValidationError for an
/// unknown name.
OracleReport run_named_oracle(const std::string& name, std::uint64_t seed);

}  // namespace enclose
