#pragma once

#include <iosfwd>

#include "enclose/sim_engine.hpp"

namespace enclose {

/// Plan view: desired orbit, target, each path with a square at its start
/// and a circle at its end.
void write_trajectories_svg(std::ostream& out, const Scenario& scenario, const SimTrace& trace);

/// Four stacked panels sharing the time axis: e_i, S_i, a_i and the global
/// minimum pair separation.
void write_timeseries_svg(std::ostream& out, const SimTrace& trace);

}  // namespace enclose
