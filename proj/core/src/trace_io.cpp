#include "enclose/trace_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <system_error>

#include <json.hpp>

#include "enclose/errors.hpp"
#include "enclose/svg_plot.hpp"

namespace enclose {
namespace {

using ordered_json = nlohmann::ordered_json;

void append(std::string& line, double value) {
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.9g", value);
  line.append(buf, static_cast<std::size_t>(len));
}

ordered_json finite_or_null(double value) {
  if (std::isfinite(value)) return value;
  return nullptr;
}

template <typename Writer>
std::filesystem::path write_file(const std::filesystem::path& path, Writer&& writer) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  writer(out);
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
  return path;
}

}  // namespace

void write_trace_csv(std::ostream& out, const SimTrace& trace) {
  out << kTraceCsvHeader << '\n';
  std::string line;
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    for (std::size_t i = 0; i < trace.samples[k].size(); ++i) {
      const AgentSample& s = trace.samples[k][i];
      line.clear();
      append(line, trace.times[k]);
      line += ',';
      line += std::to_string(trace.ids[i]);
      for (double v : {s.state.x, s.state.y, s.state.chi, s.rel.range, s.rel.los, s.rel.bearing,
                       s.range_error, s.control.manifold, s.control.accel}) {
        line += ',';
        append(line, v);
      }
      line += s.control.repulsion_active ? ",1," : ",0,";
      if (s.decision.nearest_colliding) line += std::to_string(*s.decision.nearest_colliding);
      line += ',';
      if (std::isfinite(trace.min_separation[k])) append(line, trace.min_separation[k]);
      line += '\n';
      out << line;
    }
  }
}

void write_events_jsonl(std::ostream& out, std::span<const Event> events) {
  for (const Event& e : events) {
    ordered_json row = {{"t", e.time},
                        {"agent", e.agent},
                        {"kind", std::string(to_string(e.kind))},
                        {"detail", e.detail}};
    out << row.dump() << '\n';
  }
}

std::string metrics_to_json(const Metrics& m) {
  ordered_json agents = ordered_json::array();
  for (const AgentMetrics& a : m.agents) {
    agents.push_back({{"id", a.id},
                      {"convergence_time", finite_or_null(a.convergence_time)},
                      {"final_error", a.final_error},
                      {"final_accel", a.final_accel},
                      {"steady_accel", a.steady_accel},
                      {"steady_bearing", a.steady_bearing},
                      {"repulsion_logged", a.repulsion_logged}});
  }
  ordered_json doc = {{"agents", agents},
                      {"min_separation", finite_or_null(m.min_separation)},
                      {"initial_ordering", m.initial_ordering},
                      {"final_ordering", m.final_ordering},
                      {"ordering_swaps", m.ordering_swaps},
                      {"ordering_consistent", m.ordering_consistent},
                      {"collisions", m.collisions},
                      {"repulsion_switches", m.repulsion_switches},
                      {"saturations", m.saturations}};
  return doc.dump(2) + "\n";
}

std::vector<std::filesystem::path> write_outputs(const Scenario& scenario, const SimTrace& trace,
                                                 const Metrics& metrics,
                                                 const std::filesystem::path& out_dir,
                                                 const OutputOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(out_dir.string(), "cannot create directory: " + ec.message());

  std::vector<std::filesystem::path> written;
  written.push_back(write_file(out_dir / "trace.csv",
                               [&](std::ostream& out) { write_trace_csv(out, trace); }));
  written.push_back(write_file(out_dir / "events.jsonl",
                               [&](std::ostream& out) { write_events_jsonl(out, trace.events); }));
  written.push_back(write_file(out_dir / "metrics.json",
                               [&](std::ostream& out) { out << metrics_to_json(metrics); }));
  if (options.plot) {
    written.push_back(write_file(out_dir / "trajectories.svg", [&](std::ostream& out) {
      write_trajectories_svg(out, scenario, trace);
    }));
    written.push_back(write_file(out_dir / "timeseries.svg",
                                 [&](std::ostream& out) { write_timeseries_svg(out, trace); }));
  }
  return written;
}

}  // namespace enclose
