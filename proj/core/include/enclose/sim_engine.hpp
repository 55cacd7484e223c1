#pragma once

// Fixed-step closed-loop propagation of a pursuer swarm around a stationary
// target.
//
// Each step evaluates every pursuer's neighbour decision and control from one
// shared snapshot, then advances all poses by a classical RK4 step with the
// lateral acceleration held constant across the step.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "enclose/engagement.hpp"
#include "enclose/guidance.hpp"
#include "enclose/neighbor_select.hpp"

namespace enclose {

struct AgentConfig {
  AgentId id = 0;
  AgentState initial;
  GuidanceParams guidance;

  friend bool operator==(const AgentConfig&, const AgentConfig&) = default;
};

struct Scenario {
  TargetState target;
  std::vector<AgentConfig> agents;
  SpeedParams speed{40.0};
  SensorParams sensor{50.0};
  double dt = 1e-3;
  double t_end = 60.0;
  double collision_radius = 1.0;
  std::uint64_t seed = 0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Throws ValidationError naming the first offending field. Returns
/// non-fatal warnings, such as initial bearings outside (0, pi).
std::vector<std::string> validate(const Scenario& scenario);

/// floor(t_end / dt) + 1, with a small guard so that t_end = k * dt written
/// in decimal still yields k + 1 samples.
std::size_t sample_count(const Scenario& scenario);

/// Poses of all pursuers at one instant, in scenario order.
struct Snapshot {
  double time = 0.0;
  std::vector<AgentState> agents;
};

Snapshot initial_snapshot(const Scenario& scenario);

struct AgentSample {
  AgentState state;
  RelativeState rel;
  double range_error = 0.0;
  GuidanceOutput control;
  NeighborDecision decision;
};

/// Neighbour decisions and controls for every pursuer, all computed from the
/// same snapshot.
std::vector<AgentSample> evaluate(const Snapshot& snapshot, const Scenario& scenario);

/// Advances every pose by one step with the given accelerations held fixed.
/// Throws NumericalBlowup if a resulting state is not finite.
Snapshot advance(const Snapshot& snapshot, std::span<const double> accel,
                 const Scenario& scenario);

/// evaluate() followed by advance().
Snapshot step(const Snapshot& snapshot, const Scenario& scenario);

enum class EventKind { RepulsionOn, RepulsionOff, Saturated, Collision };

std::string_view to_string(EventKind kind);

struct Event {
  double time = 0.0;
  AgentId agent = 0;
  EventKind kind = EventKind::RepulsionOn;
  std::string detail;

  friend bool operator==(const Event&, const Event&) = default;
};

/// Smallest Cartesian distance over unordered pairs; +inf with fewer than
/// two pursuers.
double min_pair_separation(std::span<const AgentState> agents);

/// Called once per sample with the step index, time, per-agent samples and
/// the minimum pair separation at that time.
using SampleObserver = std::function<void(std::size_t, double,
                                          std::span<const AgentSample>, double)>;

/// Runs the scenario to t_end, streaming each sample to `observer` and
/// returning the event log. The scenario is validated first.
std::vector<Event> simulate(const Scenario& scenario, const SampleObserver& observer);

struct SimTrace {
  std::vector<AgentId> ids;  ///< scenario order
  std::vector<double> times;
  std::vector<std::vector<AgentSample>> samples;  ///< [step][agent]
  std::vector<double> min_separation;
  std::vector<Event> events;
};

SimTrace run(const Scenario& scenario);

}  // namespace enclose
