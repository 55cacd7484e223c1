#include "enclose/sim_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>

#include "enclose/angles.hpp"
#include "enclose/errors.hpp"

namespace enclose {
namespace {

std::string agent_field(std::size_t index, const char* key) {
  return "agents[" + std::to_string(index) + "]." + key;
}

void require(bool ok, const std::string& field, const char* what) {
  if (!ok) throw ValidationError(field, what);
}

bool finite(double value) { return std::isfinite(value); }

void validate_guidance(const GuidanceParams& g, std::size_t index, const SensorParams& sensor) {
  const PotentialParams& p = g.potential;
  require(finite(g.reaching_gain) && g.reaching_gain > 0.0, agent_field(index, "K"),
          "must be positive");
  require(finite(p.attraction) && p.attraction > 0.0, agent_field(index, "lambda"),
          "must be positive");
  require(finite(p.repulsion) && p.repulsion > 0.0, agent_field(index, "eta"),
          "must be positive");
  require(finite(p.width) && p.width > 0.0, agent_field(index, "delta_cap"),
          "must be positive");
  require(p.width > sensor.sensing_radius, agent_field(index, "delta_cap"),
          "must exceed the sensing radius r_s");
  require(offset_exists(p), agent_field(index, "eta"),
          "must exceed lambda * delta_cap^2 for a positive offset to exist");
  require(finite(g.desired_range) && g.desired_range > 0.0, agent_field(index, "r_d"),
          "must be positive");
  require(finite(g.accel_limit) && g.accel_limit > 0.0, agent_field(index, "a_max"),
          "must be positive");
  require(finite(g.boundary_layer) && g.boundary_layer >= 0.0,
          agent_field(index, "boundary_layer"), "must be non-negative");
}

// dx/dt, dy/dt, dchi/dt of one unicycle.
struct Rate {
  double x, y, chi;
};

Rate unicycle(double chi, double v, double chi_rate) {
  return {v * std::cos(chi), v * std::sin(chi), chi_rate};
}

AgentState rk4(const AgentState& s, double v, double accel, double dt) {
  const double w = accel / v;
  const Rate k1 = unicycle(s.chi, v, w);
  const Rate k2 = unicycle(s.chi + 0.5 * dt * k1.chi, v, w);
  const Rate k3 = unicycle(s.chi + 0.5 * dt * k2.chi, v, w);
  const Rate k4 = unicycle(s.chi + dt * k3.chi, v, w);
  AgentState next;
  next.x = s.x + dt / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
  next.y = s.y + dt / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
  next.chi = wrap_angle(s.chi + dt / 6.0 * (k1.chi + 2.0 * k2.chi + 2.0 * k3.chi + k4.chi));
  return next;
}

std::string format_double(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

}  // namespace

std::vector<std::string> validate(const Scenario& scenario) {
  require(finite(scenario.target.x) && finite(scenario.target.y), "target",
          "coordinates must be finite");
  require(finite(scenario.speed.v) && scenario.speed.v > 0.0, "defaults.v", "must be positive");
  require(finite(scenario.sensor.sensing_radius) && scenario.sensor.sensing_radius >= 0.0,
          "defaults.r_s", "must be non-negative");
  require(finite(scenario.dt) && scenario.dt > 0.0, "defaults.dt", "must be positive");
  require(finite(scenario.t_end) && scenario.t_end >= 0.0, "defaults.t_end",
          "must be non-negative");
  require(finite(scenario.collision_radius) && scenario.collision_radius >= 0.0,
          "defaults.collision_radius", "must be non-negative");
  require(!scenario.agents.empty(), "agents", "at least one agent is required");

  std::vector<std::string> warnings;
  std::set<AgentId> seen;
  const double shared_rd = scenario.agents.front().guidance.desired_range;
  for (std::size_t i = 0; i < scenario.agents.size(); ++i) {
    const AgentConfig& a = scenario.agents[i];
    require(seen.insert(a.id).second, agent_field(i, "id"), "duplicate agent id");
    require(finite(a.initial.x) && finite(a.initial.y) && finite(a.initial.chi),
            agent_field(i, "x"), "pose must be finite");
    validate_guidance(a.guidance, i, scenario.sensor);
    require(a.guidance.desired_range == shared_rd, agent_field(i, "r_d"),
            "all agents must share the desired orbit radius");
    const double dx = scenario.target.x - a.initial.x;
    const double dy = scenario.target.y - a.initial.y;
    require(std::hypot(dx, dy) >= kMinTargetRange, agent_field(i, "x"),
            "agent starts on the target");
    const RelativeState rel = relative_state(a.initial, scenario.target);
    if (!(rel.bearing > 0.0 && rel.bearing < kPi)) {
      warnings.push_back("agent " + std::to_string(a.id) + ": initial bearing " +
                         format_double("%.6g", rel.bearing) +
                         " rad is outside (0, pi); clockwise enclosing is assumed");
    }
  }
  return warnings;
}

std::size_t sample_count(const Scenario& scenario) {
  return static_cast<std::size_t>(std::floor(scenario.t_end / scenario.dt + 1e-9)) + 1;
}

Snapshot initial_snapshot(const Scenario& scenario) {
  Snapshot snap;
  snap.agents.reserve(scenario.agents.size());
  for (const AgentConfig& a : scenario.agents) snap.agents.push_back(a.initial);
  return snap;
}

std::vector<AgentSample> evaluate(const Snapshot& snapshot, const Scenario& scenario) {
  const std::size_t n = scenario.agents.size();
  std::vector<AgentSample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    AgentSample& s = out[i];
    s.state = snapshot.agents[i];
    s.rel = relative_state(s.state, scenario.target);
    s.range_error = s.rel.range - scenario.agents[i].guidance.desired_range;
  }

  std::vector<Neighbor> neighbors;
  neighbors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    neighbors.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      neighbors.push_back({scenario.agents[j].id, pair_geometry(out[i].rel, out[j].rel)});
    }
    AgentSample& s = out[i];
    s.decision = decide_neighbors(scenario.agents[i].id, neighbors, scenario.sensor);

    double e_neighbor = 0.0;
    if (s.decision.nearest_colliding) {
      for (std::size_t j = 0; j < n; ++j) {
        if (scenario.agents[j].id == *s.decision.nearest_colliding) {
          e_neighbor = out[j].range_error;
          break;
        }
      }
    }
    s.control = lateral_acceleration(s.rel, s.range_error, e_neighbor,
                                     s.decision.repulsion_active(),
                                     scenario.agents[i].guidance, scenario.speed);
  }
  return out;
}

Snapshot advance(const Snapshot& snapshot, std::span<const double> accel,
                 const Scenario& scenario) {
  Snapshot next;
  next.time = snapshot.time + scenario.dt;
  next.agents.reserve(snapshot.agents.size());
  for (std::size_t i = 0; i < snapshot.agents.size(); ++i) {
    const AgentState s = rk4(snapshot.agents[i], scenario.speed.v, accel[i], scenario.dt);
    if (!finite(s.x) || !finite(s.y) || !finite(s.chi)) {
      throw NumericalBlowup(next.time, "non-finite state for agent " +
                                           std::to_string(scenario.agents[i].id) +
                                           " at t=" + format_double("%.9g", next.time));
    }
    next.agents.push_back(s);
  }
  return next;
}

Snapshot step(const Snapshot& snapshot, const Scenario& scenario) {
  const std::vector<AgentSample> samples = evaluate(snapshot, scenario);
  std::vector<double> accel;
  accel.reserve(samples.size());
  for (const AgentSample& s : samples) accel.push_back(s.control.accel);
  return advance(snapshot, accel, scenario);
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::RepulsionOn: return "RepulsionOn";
    case EventKind::RepulsionOff: return "RepulsionOff";
    case EventKind::Saturated: return "Saturated";
    case EventKind::Collision: return "Collision";
  }
  return "Unknown";
}

double min_pair_separation(std::span<const AgentState> agents) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < agents.size(); ++i) {
    for (std::size_t j = i + 1; j < agents.size(); ++j) {
      best = std::min(best, std::hypot(agents[i].x - agents[j].x, agents[i].y - agents[j].y));
    }
  }
  return best;
}

std::vector<Event> simulate(const Scenario& scenario, const SampleObserver& observer) {
  validate(scenario);
  const std::size_t n = scenario.agents.size();
  const std::size_t count = sample_count(scenario);

  std::vector<Event> events;
  std::vector<char> was_active(n, 0);
  std::vector<char> was_saturated(n, 0);
  std::vector<char> was_touching(n * n, 0);
  std::vector<double> accel(n);

  Snapshot snap = initial_snapshot(scenario);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) * scenario.dt;
    snap.time = t;
    const std::vector<AgentSample> samples = evaluate(snap, scenario);

    for (std::size_t i = 0; i < n; ++i) {
      const AgentSample& s = samples[i];
      const AgentId id = scenario.agents[i].id;
      const bool active = s.decision.repulsion_active();
      if (active && !was_active[i]) {
        events.push_back({t, id, EventKind::RepulsionOn,
                          "nearest_colliding=" + std::to_string(*s.decision.nearest_colliding)});
      } else if (!active && was_active[i]) {
        events.push_back({t, id, EventKind::RepulsionOff, ""});
      }
      if (s.control.saturated && !was_saturated[i]) {
        events.push_back({t, id, EventKind::Saturated,
                          "a=" + format_double("%.9g", s.control.accel)});
      }
      was_active[i] = active;
      was_saturated[i] = s.control.saturated;
      accel[i] = s.control.accel;
    }

    double min_sep = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double r = std::hypot(snap.agents[i].x - snap.agents[j].x,
                                    snap.agents[i].y - snap.agents[j].y);
        min_sep = std::min(min_sep, r);
        const bool touching = r < scenario.collision_radius;
        char& flag = was_touching[i * n + j];
        if (touching && !flag) {
          events.push_back({t, scenario.agents[i].id, EventKind::Collision,
                            "with=" + std::to_string(scenario.agents[j].id) +
                                " r_ij=" + format_double("%.9g", r)});
        }
        flag = touching;
      }
    }

    if (observer) observer(k, t, samples, min_sep);
    if (k + 1 < count) snap = advance(snap, accel, scenario);
  }
  return events;
}

SimTrace run(const Scenario& scenario) {
  SimTrace trace;
  for (const AgentConfig& a : scenario.agents) trace.ids.push_back(a.id);
  // Validation happens inside simulate(); sample_count needs a positive dt.
  if (scenario.dt > 0.0 && std::isfinite(scenario.t_end) && scenario.t_end >= 0.0) {
    const std::size_t count = sample_count(scenario);
    trace.times.reserve(count);
    trace.samples.reserve(count);
    trace.min_separation.reserve(count);
  }
  trace.events = simulate(scenario, [&](std::size_t, double t,
                                        std::span<const AgentSample> samples, double min_sep) {
    trace.times.push_back(t);
    trace.samples.emplace_back(samples.begin(), samples.end());
    trace.min_separation.push_back(min_sep);
  });
  return trace;
}

}  // namespace enclose
