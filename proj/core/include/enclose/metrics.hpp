#pragma once

// Run summaries: convergence times, safety margin and angular ordering.

#include <cstddef>
#include <span>
#include <vector>

#include "enclose/sim_engine.hpp"

namespace enclose {

struct MetricsOptions {
  double error_tolerance = 0.5;  ///< tol_e [m]
  /// Length of the trailing window averaged for steady-state values [s].
  double steady_window = 1.0;
};

struct AgentMetrics {
  AgentId id = 0;
  /// First sample time after which |e| stays below tolerance; +inf if the
  /// final sample is still outside.
  double convergence_time = 0.0;
  double final_error = 0.0;
  double final_accel = 0.0;
  /// Mean of a over the trailing window, i.e. the equivalent control with
  /// the switching chatter averaged out.
  double steady_accel = 0.0;
  double steady_bearing = 0.0;
  bool repulsion_logged = false;
};

struct Metrics {
  std::vector<AgentMetrics> agents;
  double min_separation = 0.0;  ///< +inf when fewer than two agents
  std::vector<AgentId> initial_ordering;  ///< ids by ascending LOS angle at t = 0
  std::vector<AgentId> final_ordering;    ///< ids by ascending LOS angle at t_end
  std::size_t ordering_swaps = 0;
  /// Whether the cyclic order is preserved among agents that never logged
  /// RepulsionOn.
  bool ordering_consistent = true;
  std::size_t collisions = 0;
  std::size_t repulsion_switches = 0;
  std::size_t saturations = 0;
};

/// Ids sorted by line-of-sight angle (ties by id).
std::vector<AgentId> angular_ordering(std::span<const AgentSample> samples,
                                      std::span<const AgentId> ids);

/// Number of agents that must move to turn one cyclic order into the other:
/// n minus the longest common subsequence over all rotations.
std::size_t cyclic_ordering_swaps(std::span<const AgentId> before,
                                  std::span<const AgentId> after);

/// Incremental form of compute_metrics, fed by simulate().
class MetricsAccumulator {
 public:
  /// `final_time` is the time of the last sample the run will produce.
  MetricsAccumulator(std::vector<AgentId> ids, double dt, double final_time,
                     MetricsOptions options = {});

  /// Sized from the scenario's ids, dt and sample count.
  explicit MetricsAccumulator(const Scenario& scenario, MetricsOptions options = {});

  void observe(std::size_t step, double time, std::span<const AgentSample> samples,
               double min_separation);
  Metrics finish(std::span<const Event> events) const;

 private:
  std::vector<AgentId> ids_;
  MetricsOptions options_;
  double dt_;
  double window_start_;
  std::vector<std::size_t> last_violation_;  ///< step index + 1, 0 if none
  std::size_t last_step_ = 0;
  std::vector<double> accel_sum_;
  std::vector<double> bearing_sum_;
  std::size_t window_samples_ = 0;
  std::vector<double> final_error_;
  std::vector<double> final_accel_;
  double min_separation_;
  std::vector<AgentId> initial_ordering_;
  std::vector<AgentId> final_ordering_;
};

Metrics compute_metrics(const SimTrace& trace, const MetricsOptions& options = {});

}  // namespace enclose
