#pragma once

#include <cmath>

#include "enclose/angles.hpp"
#include "enclose/sim_engine.hpp"

namespace enclose::test {

/// Pose at polar coordinates (radius, polar) about the target with the
/// given bearing relative to the line of sight.
inline AgentState place(double radius, double polar, double bearing,
                        const TargetState& target = {}) {
  const double los = wrap_angle(polar + kPi);
  return {target.x + radius * std::cos(polar), target.y + radius * std::sin(polar),
          wrap_angle(los + bearing)};
}

/// The reference simulation parameters: v=40, r_d=100, K=10, lambda=0.9,
/// eta=70000, Delta=100, r_s=50.
inline Scenario reference_scenario(double t_end) {
  Scenario s;
  s.speed.v = 40.0;
  s.sensor.sensing_radius = 50.0;
  s.dt = 1e-3;
  s.t_end = t_end;
  return s;
}

inline AgentConfig agent(AgentId id, const AgentState& pose, const GuidanceParams& g = {}) {
  return {id, pose, g};
}

}  // namespace enclose::test
