#include "enclose/scenario_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include <json.hpp>

#include "enclose/angles.hpp"
#include "enclose/errors.hpp"
#include "enclose/random.hpp"

namespace enclose {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

constexpr int kPlacementAttemptsPerAgent = 10000;

const std::set<std::string> kRootKeys{"target", "defaults", "agents", "generator", "seed"};
const std::set<std::string> kTargetKeys{"x", "y"};
const std::set<std::string> kRunKeys{"v", "r_d", "r_s", "dt", "t_end", "collision_radius"};
const std::set<std::string> kGuidanceKeys{"K", "lambda", "eta", "delta_cap", "a_max",
                                          "boundary_layer"};
const std::set<std::string> kPoseKeys{"id", "x", "y", "chi"};
const std::set<std::string> kGeneratorKeys{"n", "radius_range", "seed"};

std::string join(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

void require_object(const json& node, const std::string& field) {
  if (!node.is_object()) throw ValidationError(field, "expected an object");
}

void reject_unknown(const json& node, const std::string& field,
                    std::initializer_list<const std::set<std::string>*> allowed) {
  for (const auto& item : node.items()) {
    bool known = false;
    for (const auto* keys : allowed) known = known || keys->count(item.key()) > 0;
    if (!known) throw ValidationError(join(field, item.key()), "unknown key");
  }
}

double number(const json& node, const std::string& field) {
  if (!node.is_number()) throw ValidationError(field, "expected a number");
  return node.get<double>();
}

std::uint64_t unsigned_integer(const json& node, const std::string& field,
                               std::uint64_t max = std::numeric_limits<std::uint64_t>::max()) {
  if (!node.is_number_unsigned() && !(node.is_number_integer() && node.get<std::int64_t>() >= 0)) {
    throw ValidationError(field, "expected a non-negative integer");
  }
  const auto value = node.get<std::uint64_t>();
  if (value > max) throw ValidationError(field, "value out of range");
  return value;
}

std::optional<double> optional_number(const json& obj, const std::string& key,
                                      const std::string& parent) {
  const auto it = obj.find(key);
  if (it == obj.end()) return std::nullopt;
  return number(*it, join(parent, key));
}

void read_guidance_keys(const json& obj, const std::string& parent, GuidanceParams& g) {
  if (auto v = optional_number(obj, "K", parent)) g.reaching_gain = *v;
  if (auto v = optional_number(obj, "lambda", parent)) g.potential.attraction = *v;
  if (auto v = optional_number(obj, "eta", parent)) g.potential.repulsion = *v;
  if (auto v = optional_number(obj, "delta_cap", parent)) g.potential.width = *v;
  if (auto v = optional_number(obj, "a_max", parent)) g.accel_limit = *v;
  if (auto v = optional_number(obj, "boundary_layer", parent)) g.boundary_layer = *v;
}

struct RunValues {
  double v, r_d, r_s, dt, t_end, collision_radius;

  double get(const std::string& key) const {
    if (key == "v") return v;
    if (key == "r_d") return r_d;
    if (key == "r_s") return r_s;
    if (key == "dt") return dt;
    if (key == "t_end") return t_end;
    return collision_radius;
  }
};

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

AgentState place(const TargetState& target, double radius, double polar, double bearing) {
  const double los = wrap_angle(polar + kPi);
  return {target.x + radius * std::cos(polar), target.y + radius * std::sin(polar),
          wrap_angle(los + bearing)};
}

}  // namespace

std::vector<AgentConfig> generate_agents(const GeneratorSpec& spec, const TargetState& target,
                                         const GuidanceParams& guidance,
                                         double min_separation) {
  if (!(spec.radius_min > 0.0) || !(spec.radius_max >= spec.radius_min) ||
      !std::isfinite(spec.radius_max)) {
    throw ValidationError("generator.radius_range", "expected 0 < min <= max");
  }
  PortableRng rng(spec.seed);
  std::vector<AgentConfig> agents;
  agents.reserve(spec.n);
  const std::size_t max_attempts = kPlacementAttemptsPerAgent * std::max<std::size_t>(spec.n, 1);
  std::size_t attempts = 0;
  while (agents.size() < spec.n) {
    if (++attempts > max_attempts) {
      throw ValidationError("generator", "could not place agents with pairwise separation above r_s");
    }
    const double radius = rng.uniform(spec.radius_min, spec.radius_max);
    const double polar = rng.uniform(-kPi, kPi);
    const double bearing = rng.uniform_open(0.0, kPi);
    const AgentState pose = place(target, radius, polar, bearing);
    const bool clear = std::all_of(agents.begin(), agents.end(), [&](const AgentConfig& a) {
      return std::hypot(a.initial.x - pose.x, a.initial.y - pose.y) > min_separation;
    });
    if (!clear) continue;
    agents.push_back({static_cast<AgentId>(agents.size()), pose, guidance});
  }
  return agents;
}

Scenario parse_scenario_text(std::string_view text, std::string_view source) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    std::ostringstream msg;
    msg << source << ":" << line << ":" << column << ": malformed JSON (" << e.what() << ")";
    throw ParseError(msg.str());
  }

  require_object(doc, "<root>");
  reject_unknown(doc, "", {&kRootKeys});

  ScenarioDefaults defaults;
  Scenario scenario;

  if (auto it = doc.find("target"); it != doc.end()) {
    require_object(*it, "target");
    reject_unknown(*it, "target", {&kTargetKeys});
    if (auto v = optional_number(*it, "x", "target")) scenario.target.x = *v;
    if (auto v = optional_number(*it, "y", "target")) scenario.target.y = *v;
  }

  RunValues run{defaults.v, defaults.guidance.desired_range, defaults.r_s, defaults.dt,
                defaults.t_end, defaults.collision_radius};
  GuidanceParams guidance = defaults.guidance;
  if (auto it = doc.find("defaults"); it != doc.end()) {
    require_object(*it, "defaults");
    reject_unknown(*it, "defaults", {&kRunKeys, &kGuidanceKeys});
    if (auto v = optional_number(*it, "v", "defaults")) run.v = *v;
    if (auto v = optional_number(*it, "r_d", "defaults")) run.r_d = *v;
    if (auto v = optional_number(*it, "r_s", "defaults")) run.r_s = *v;
    if (auto v = optional_number(*it, "dt", "defaults")) run.dt = *v;
    if (auto v = optional_number(*it, "t_end", "defaults")) run.t_end = *v;
    if (auto v = optional_number(*it, "collision_radius", "defaults")) run.collision_radius = *v;
    read_guidance_keys(*it, "defaults", guidance);
  }
  guidance.desired_range = run.r_d;
  scenario.speed.v = run.v;
  scenario.sensor.sensing_radius = run.r_s;
  scenario.dt = run.dt;
  scenario.t_end = run.t_end;
  scenario.collision_radius = run.collision_radius;

  std::optional<std::uint64_t> seed;
  if (auto it = doc.find("seed"); it != doc.end()) seed = unsigned_integer(*it, "seed");

  const bool has_agents = doc.contains("agents");
  const bool has_generator = doc.contains("generator");
  if (has_agents && has_generator) {
    throw ValidationError("generator", "cannot be combined with an explicit agents list");
  }

  if (has_agents) {
    const json& list = doc["agents"];
    if (!list.is_array()) throw ValidationError("agents", "expected an array");
    std::uint64_t next_id = 0;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string field = "agents[" + std::to_string(i) + "]";
      const json& entry = list[i];
      require_object(entry, field);
      reject_unknown(entry, field, {&kPoseKeys, &kRunKeys, &kGuidanceKeys});

      AgentConfig agent;
      if (auto it = entry.find("id"); it != entry.end()) {
        agent.id = static_cast<AgentId>(
            unsigned_integer(*it, join(field, "id"), std::numeric_limits<AgentId>::max()));
      } else {
        agent.id = static_cast<AgentId>(next_id);
      }
      next_id = std::uint64_t{agent.id} + 1;

      for (const char* key : {"x", "y", "chi"}) {
        if (!entry.contains(key)) throw ValidationError(join(field, key), "missing");
      }
      agent.initial.x = number(entry["x"], join(field, "x"));
      agent.initial.y = number(entry["y"], join(field, "y"));
      agent.initial.chi = number(entry["chi"], join(field, "chi"));

      for (const std::string& key : kRunKeys) {
        if (auto v = optional_number(entry, key, field); v && *v != run.get(key)) {
          throw ValidationError(join(field, key),
                                "run-wide value cannot differ between agents");
        }
      }
      agent.guidance = guidance;
      read_guidance_keys(entry, field, agent.guidance);
      scenario.agents.push_back(agent);
    }
  }

  if (has_generator) {
    const json& gen = doc["generator"];
    require_object(gen, "generator");
    reject_unknown(gen, "generator", {&kGeneratorKeys});
    GeneratorSpec spec;
    if (!gen.contains("n")) throw ValidationError("generator.n", "missing");
    spec.n = unsigned_integer(gen["n"], "generator.n", 100000);
    if (spec.n == 0) throw ValidationError("generator.n", "must be positive");
    if (auto it = gen.find("radius_range"); it != gen.end()) {
      if (!it->is_array() || it->size() != 2) {
        throw ValidationError("generator.radius_range", "expected [min, max]");
      }
      spec.radius_min = number((*it)[0], "generator.radius_range[0]");
      spec.radius_max = number((*it)[1], "generator.radius_range[1]");
    }
    if (auto it = gen.find("seed"); it != gen.end()) {
      spec.seed = unsigned_integer(*it, "generator.seed");
      if (seed && *seed != spec.seed) {
        throw ValidationError("seed", "differs from generator.seed");
      }
    } else if (seed) {
      spec.seed = *seed;
    }
    seed = spec.seed;
    scenario.agents = generate_agents(spec, scenario.target, guidance, run.r_s);
  }

  scenario.seed = seed.value_or(0);
  validate(scenario);
  return scenario;
}

Scenario parse_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot open scenario file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return parse_scenario_text(buffer.str(), path.string());
}

std::string serialize_scenario(const Scenario& scenario) {
  const GuidanceParams base =
      scenario.agents.empty() ? ScenarioDefaults{}.guidance : scenario.agents.front().guidance;

  ordered_json doc;
  doc["target"] = {{"x", scenario.target.x}, {"y", scenario.target.y}};
  doc["defaults"] = {{"v", scenario.speed.v},
                     {"r_d", base.desired_range},
                     {"r_s", scenario.sensor.sensing_radius},
                     {"dt", scenario.dt},
                     {"t_end", scenario.t_end},
                     {"collision_radius", scenario.collision_radius},
                     {"K", base.reaching_gain},
                     {"lambda", base.potential.attraction},
                     {"eta", base.potential.repulsion},
                     {"delta_cap", base.potential.width},
                     {"a_max", base.accel_limit},
                     {"boundary_layer", base.boundary_layer}};
  ordered_json agents = ordered_json::array();
  for (const AgentConfig& a : scenario.agents) {
    ordered_json entry = {{"id", a.id}, {"x", a.initial.x}, {"y", a.initial.y},
                          {"chi", a.initial.chi}};
    const GuidanceParams& g = a.guidance;
    if (g.reaching_gain != base.reaching_gain) entry["K"] = g.reaching_gain;
    if (g.potential.attraction != base.potential.attraction) entry["lambda"] = g.potential.attraction;
    if (g.potential.repulsion != base.potential.repulsion) entry["eta"] = g.potential.repulsion;
    if (g.potential.width != base.potential.width) entry["delta_cap"] = g.potential.width;
    if (g.accel_limit != base.accel_limit) entry["a_max"] = g.accel_limit;
    if (g.boundary_layer != base.boundary_layer) entry["boundary_layer"] = g.boundary_layer;
    if (g.desired_range != base.desired_range) entry["r_d"] = g.desired_range;
    agents.push_back(std::move(entry));
  }
  doc["agents"] = std::move(agents);
  doc["seed"] = scenario.seed;
  return doc.dump(2) + "\n";
}

const std::vector<std::string>& sweepable_parameters() {
  static const std::vector<std::string> names{
      "K", "lambda", "eta", "delta_cap", "a_max", "boundary_layer",
      "r_d", "v", "r_s", "dt", "t_end", "collision_radius"};
  return names;
}

void apply_parameter(Scenario& scenario, std::string_view name, double value) {
  auto each = [&](auto&& set) {
    for (AgentConfig& a : scenario.agents) set(a.guidance);
  };
  if (name == "K") {
    each([&](GuidanceParams& g) { g.reaching_gain = value; });
  } else if (name == "lambda") {
    each([&](GuidanceParams& g) { g.potential.attraction = value; });
  } else if (name == "eta") {
    each([&](GuidanceParams& g) { g.potential.repulsion = value; });
  } else if (name == "delta_cap") {
    each([&](GuidanceParams& g) { g.potential.width = value; });
  } else if (name == "a_max") {
    each([&](GuidanceParams& g) { g.accel_limit = value; });
  } else if (name == "boundary_layer") {
    each([&](GuidanceParams& g) { g.boundary_layer = value; });
  } else if (name == "r_d") {
    each([&](GuidanceParams& g) { g.desired_range = value; });
  } else if (name == "v") {
    scenario.speed.v = value;
  } else if (name == "r_s") {
    scenario.sensor.sensing_radius = value;
  } else if (name == "dt") {
    scenario.dt = value;
  } else if (name == "t_end") {
    scenario.t_end = value;
  } else if (name == "collision_radius") {
    scenario.collision_radius = value;
  } else {
    throw ValidationError("param", "unknown parameter '" + std::string(name) + "'");
  }
}

}  // namespace enclose
