#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "enclose/errors.hpp"
#include "enclose/guidance.hpp"
#include "enclose/metrics.hpp"
#include "enclose/potential_field.hpp"
#include "enclose/scenario_io.hpp"
#include "enclose/sim_engine.hpp"
#include "enclose/trace_io.hpp"
#include "enclose/verification.hpp"

namespace enclose::cli {
namespace {

std::string g9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string g5(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.5g", v);
  return buf;
}

std::string g6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double parse_double(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw std::invalid_argument("bad " + what + " '" + text + "'");
  }
  return value;
}

std::string join_ids(const std::vector<AgentId>& ids) {
  std::string s;
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + std::to_string(ids[k]);
  return s;
}

// ---------------------------------------------------------------------------

int do_run(const std::string& path, const std::string& out_dir, bool plot, std::ostream& out,
           std::ostream& err) {
  const Scenario scenario = parse_scenario(path);
  for (const std::string& w : validate(scenario)) err << "warning: " << w << '\n';
  const SimTrace trace = run(scenario);
  const Metrics metrics = compute_metrics(trace);
  const auto files = write_outputs(scenario, trace, metrics, out_dir, OutputOptions{plot});

  out << "samples: " << trace.times.size() << ", agents: " << trace.ids.size()
      << ", events: " << trace.events.size() << '\n';
  out << "min separation: "
      << (std::isfinite(metrics.min_separation) ? g9(metrics.min_separation) + " m" : "n/a")
      << ", collisions: " << metrics.collisions << '\n';
  for (const AgentMetrics& a : metrics.agents) {
    out << "agent " << a.id << ": convergence "
        << (std::isfinite(a.convergence_time) ? g9(a.convergence_time) + " s" : "not reached")
        << ", final e " << g9(a.final_error) << " m, steady a " << g9(a.steady_accel)
        << " m/s^2\n";
  }
  for (const auto& f : files) out << "wrote " << f.string() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------

struct SweepCell {
  std::vector<double> values;
  std::string row;
  int code = kOk;
};

std::string sweep_row(const Scenario& scenario) {
  MetricsAccumulator acc(scenario);
  const auto events = simulate(scenario, [&](std::size_t k, double t,
                                             std::span<const AgentSample> s, double sep) {
    acc.observe(k, t, s, sep);
  });
  const Metrics m = acc.finish(events);
  double latest = 0.0;
  for (const AgentMetrics& a : m.agents) latest = std::max(latest, a.convergence_time);
  const bool converged = std::isfinite(latest);
  std::string row = std::to_string(m.agents.size()) + "," + (converged ? "1" : "0") + ",";
  row += (converged ? g9(latest) : "") + ",";
  row += (std::isfinite(m.min_separation) ? g9(m.min_separation) : "") + ",";
  row += std::to_string(m.collisions) + "," + std::to_string(m.repulsion_switches) + "," +
         std::to_string(m.saturations) + "," + std::to_string(m.ordering_swaps) + ",ok";
  return row;
}

int do_sweep(const std::string& path, const std::vector<std::string>& params, unsigned jobs,
             const std::string& out_path, std::ostream& out, std::ostream& err) {
  const Scenario base = parse_scenario(path);
  std::vector<SweepAxis> axes;
  for (const std::string& p : params) {
    SweepAxis axis = parse_sweep_axis(p);
    const auto& known = sweepable_parameters();
    if (std::find(known.begin(), known.end(), axis.name) == known.end()) {
      throw ValidationError("param", "unknown parameter '" + axis.name + "'");
    }
    axes.push_back(axis);
  }

  // Cartesian product, first axis outermost.
  std::vector<SweepCell> cells(1);
  for (const SweepAxis& axis : axes) {
    std::vector<SweepCell> next;
    for (const SweepCell& c : cells) {
      for (double v : axis.values()) {
        SweepCell cell = c;
        cell.values.push_back(v);
        next.push_back(cell);
      }
    }
    cells = std::move(next);
  }

  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t k = cursor++; k < cells.size(); k = cursor++) {
      SweepCell& cell = cells[k];
      Scenario s = base;
      try {
        for (std::size_t a = 0; a < axes.size(); ++a) apply_parameter(s, axes[a].name, cell.values[a]);
        cell.row = sweep_row(s);
      } catch (const ValidationError& e) {
        cell.code = kInvalidInput;
        cell.row = std::to_string(s.agents.size()) + ",0,,,,,,,invalid: " + e.what();
      } catch (const Error& e) {
        cell.code = kRuntimeFailure;
        cell.row = std::to_string(s.agents.size()) + ",0,,,,,,,error: " + e.what();
      }
    }
  };
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::ofstream file;
  std::ostream* sink = &out;
  if (!out_path.empty()) {
    file.open(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError(out_path, "cannot open for writing");
    sink = &file;
  }
  for (const SweepAxis& axis : axes) *sink << axis.name << ',';
  *sink << "agents,all_converged,max_convergence_time,min_separation,collisions,"
           "repulsion_switches,saturations,ordering_swaps,status\n";
  int code = kOk;
  for (const SweepCell& cell : cells) {
    for (double v : cell.values) *sink << g9(v) << ',';
    *sink << cell.row << '\n';
    code = std::max(code, cell.code);
  }
  if (file.is_open()) {
    file.flush();
    if (!file) throw IoError(out_path, "write failed");
  }
  if (code != kOk) err << "some sweep cells failed; see the status column\n";
  return code;
}

// ---------------------------------------------------------------------------

int do_check(const std::string& path, std::ostream& out) {
  const Scenario scenario = parse_scenario(path);
  const std::vector<std::string> warnings = validate(scenario);
  out << "scenario: " << path << '\n';
  out << "agents: " << scenario.agents.size() << ", v=" << g5(scenario.speed.v)
      << ", r_d=" << g5(scenario.agents.front().guidance.desired_range)
      << ", r_s=" << g5(scenario.sensor.sensing_radius) << ", dt=" << g5(scenario.dt)
      << ", t_end=" << g5(scenario.t_end) << '\n';
  out << "validation: OK\n";
  for (const std::string& w : warnings) out << "WARNING: " << w << '\n';

  std::vector<std::pair<GuidanceParams, std::vector<AgentId>>> groups;
  for (const AgentConfig& a : scenario.agents) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == a.guidance; });
    if (it == groups.end()) {
      groups.push_back({a.guidance, {a.id}});
    } else {
      it->second.push_back(a.id);
    }
  }

  for (const auto& [g, ids] : groups) {
    const PotentialParams& p = g.potential;
    out << "agents [" << join_ids(ids) << "]: K=" << g5(g.reaching_gain)
        << ", lambda=" << g5(p.attraction) << ", eta=" << g5(p.repulsion)
        << ", delta_cap=" << g5(p.width) << ", a_max=" << g5(g.accel_limit) << '\n';

    const GainFloor floor = gain_floor(g, scenario.speed, scenario.sensor);
    if (floor.satisfied) {
      out << "  OK: K=" << g5(g.reaching_gain) << " > K_min=" << g5(floor.minimum) << '\n';
    } else {
      out << "  WARNING: K=" << g5(g.reaching_gain) << " < K_min=" << g5(floor.minimum)
          << " (sufficient reaching-gain bound not met)\n";
    }

    const double eps = epsilon_offset(0.0, p);
    out << "  offset: epsilon(e_j=0)=" << g6(eps) << " m (closed form "
        << g6(epsilon_offset_closed_form(p)) << " m)";
    if (eps > scenario.sensor.sensing_radius) {
      out << "; exceeds r_s, so repulsion switches off before the offset is reached";
    }
    out << '\n';

    // Repulsion is only active with 0 < e_i - e_j <= r_s, evaluated at the
    // initial errors of this group's agents.
    std::vector<ErrorSample> samples;
    for (const AgentConfig& a : scenario.agents) {
      if (std::find(ids.begin(), ids.end(), a.id) == ids.end()) continue;
      const double e = range_error(relative_state(a.initial, scenario.target).range,
                                   DesiredOrbit{g.desired_range});
      for (int k = 1; k <= 8; ++k) {
        const double gap = scenario.sensor.sensing_radius * k / 8.0;
        samples.push_back({e, e - gap});
      }
    }
    const DominanceReport dom = check_dominance_condition(samples, p);
    out << "  dominance: eta/(delta_cap^2 lambda)=" << g5(p.repulsion / (p.width * p.width * p.attraction))
        << ", sampled supremum=" << g5(dom.supremum) << ": " << (dom.pass ? "OK" : "WARNING: not met")
        << '\n';
  }
  return kOk;
}

int do_oracle(const std::string& name, std::uint64_t seed, const std::string& out_path,
              std::ostream& out) {
  const OracleReport report = run_named_oracle(name, seed);
  const std::string json = report_to_json(report);
  if (out_path.empty()) {
    out << json;
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError(out_path, "cannot open for writing");
    file << json;
    if (!file) throw IoError(out_path, "write failed");
    out << report.name << ": " << (report.pass ? "PASS" : "FAIL") << " (" << report.cases_run
        << " cases, " << report.violations.size() << " violations)\n";
  }
  return report.pass ? kOk : kRuntimeFailure;
}

}  // namespace

std::vector<double> SweepAxis::values() const {
  std::vector<double> v;
  v.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    v.push_back(count == 1 ? first
                           : first + (last - first) * static_cast<double>(k) /
                                         static_cast<double>(count - 1));
  }
  return v;
}

SweepAxis parse_sweep_axis(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw std::invalid_argument("expected NAME=a:b:n, got '" + text + "'");
  }
  SweepAxis axis;
  axis.name = text.substr(0, eq);
  const std::string range = text.substr(eq + 1);
  const auto c1 = range.find(':');
  const auto c2 = c1 == std::string::npos ? c1 : range.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw std::invalid_argument("expected NAME=a:b:n, got '" + text + "'");
  }
  axis.first = parse_double(range.substr(0, c1), "range start");
  axis.last = parse_double(range.substr(c1 + 1, c2 - c1 - 1), "range end");
  const std::string n = range.substr(c2 + 1);
  std::size_t count = 0;
  const auto [ptr, ec] = std::from_chars(n.data(), n.data() + n.size(), count);
  if (ec != std::errc() || ptr != n.data() + n.size() || count == 0) {
    throw std::invalid_argument("bad point count '" + n + "'");
  }
  axis.count = count;
  return axis;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Target-enclosing swarm simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = "out";
  bool plot = false;
  auto* run_cmd = app.add_subcommand("run", "Simulate a scenario and write trace, events and metrics");
  run_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run_cmd->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run_cmd->add_flag("--plot", plot, "Also write trajectories.svg and timeseries.svg");

  std::vector<std::string> params;
  unsigned jobs = 1;
  std::string sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "Cartesian parameter sweep, one metrics row per cell");
  sweep_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  sweep_cmd->add_option("--param", params, "NAME=a:b:n (repeatable)")->required();
  sweep_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  sweep_cmd->add_option("--out", sweep_out, "Write the CSV here instead of stdout");

  auto* check_cmd = app.add_subcommand("check", "Validate a scenario and report gain and offset conditions");
  check_cmd->add_option("scenario", scenario_path, "Scenario JSON file")->required();

  std::string oracle_name;
  std::uint64_t seed = 1;
  std::string oracle_out;
  auto* oracle_cmd = app.add_subcommand("oracle", "Run a verification oracle and print its JSON report");
  oracle_cmd->add_option("name", oracle_name, "Oracle name")
      ->required()
      ->check(CLI::IsMember(oracle_names()));
  oracle_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
  oracle_cmd->add_option("--out", oracle_out, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*run_cmd) return do_run(scenario_path, out_dir, plot, out, err);
    if (*sweep_cmd) return do_sweep(scenario_path, params, jobs, sweep_out, out, err);
    if (*check_cmd) return do_check(scenario_path, out);
    if (*oracle_cmd) return do_oracle(oracle_name, seed, oracle_out, out);
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NumericalBlowup& e) {
    err << "numerical failure at t=" << g9(e.time()) << ": " << e.what() << '\n';
    return kRuntimeFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kRuntimeFailure;
  }
  return kUsage;
}

}  // namespace enclose::cli
