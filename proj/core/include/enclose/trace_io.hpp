#pragma once

// Serialization of a finished run: trace.csv, events.jsonl, metrics.json and
// the optional SVG plots. Every writer is byte-stable for identical input.

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "enclose/metrics.hpp"
#include "enclose/sim_engine.hpp"

namespace enclose {

/// Exact header row of trace.csv (without the newline).
inline constexpr const char* kTraceCsvHeader =
    "t,agent_id,x,y,chi,r_iT,theta_iT,sigma_i,e_i,S_i,a_i,delta_i,"
    "nearest_colliding_id,r_ij_min_global";

/// One row per (sample, agent), 9 significant digits. nearest_colliding_id
/// is empty when there is none; r_ij_min_global is empty with one agent.
void write_trace_csv(std::ostream& out, const SimTrace& trace);

/// One JSON object per line: {"t", "agent", "kind", "detail"}.
void write_events_jsonl(std::ostream& out, std::span<const Event> events);

/// Pretty-printed JSON; infinite values are written as null.
std::string metrics_to_json(const Metrics& metrics);

struct OutputOptions {
  bool plot = false;
};

/// Creates `out_dir` if needed and writes the file set. Returns the paths
/// written. Throws IoError naming the path on failure.
std::vector<std::filesystem::path> write_outputs(const Scenario& scenario, const SimTrace& trace,
                                                 const Metrics& metrics,
                                                 const std::filesystem::path& out_dir,
                                                 const OutputOptions& options = {});

}  // namespace enclose
