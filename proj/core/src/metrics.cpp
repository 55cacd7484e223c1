#include "enclose/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

namespace enclose {
namespace {

std::size_t lcs(std::span<const AgentId> a, const std::vector<AgentId>& b) {
  std::vector<std::size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<AgentId> without(std::span<const AgentId> order, const std::set<AgentId>& drop) {
  std::vector<AgentId> out;
  for (AgentId id : order) {
    if (!drop.count(id)) out.push_back(id);
  }
  return out;
}

}  // namespace

std::vector<AgentId> angular_ordering(std::span<const AgentSample> samples,
                                      std::span<const AgentId> ids) {
  std::vector<std::size_t> idx(samples.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (samples[a].rel.los != samples[b].rel.los) return samples[a].rel.los < samples[b].rel.los;
    return ids[a] < ids[b];
  });
  std::vector<AgentId> out;
  out.reserve(idx.size());
  for (std::size_t i : idx) out.push_back(ids[i]);
  return out;
}

std::size_t cyclic_ordering_swaps(std::span<const AgentId> before,
                                  std::span<const AgentId> after) {
  const std::size_t n = before.size();
  if (n == 0 || after.size() != n) return std::max(before.size(), after.size());
  std::size_t best = 0;
  std::vector<AgentId> rotated(after.begin(), after.end());
  for (std::size_t r = 0; r < n; ++r) {
    best = std::max(best, lcs(before, rotated));
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
  }
  return n - best;
}

MetricsAccumulator::MetricsAccumulator(std::vector<AgentId> ids, double dt, double final_time,
                                       MetricsOptions options)
    : ids_(std::move(ids)),
      options_(options),
      dt_(dt),
      window_start_(final_time - options.steady_window),
      last_violation_(ids_.size(), 0),
      accel_sum_(ids_.size(), 0.0),
      bearing_sum_(ids_.size(), 0.0),
      final_error_(ids_.size(), 0.0),
      final_accel_(ids_.size(), 0.0),
      min_separation_(std::numeric_limits<double>::infinity()) {}

MetricsAccumulator::MetricsAccumulator(const Scenario& scenario, MetricsOptions options)
    : MetricsAccumulator(
          [&] {
            std::vector<AgentId> ids;
            for (const AgentConfig& a : scenario.agents) ids.push_back(a.id);
            return ids;
          }(),
          scenario.dt, static_cast<double>(sample_count(scenario) - 1) * scenario.dt,
          options) {}

void MetricsAccumulator::observe(std::size_t step, double time,
                                 std::span<const AgentSample> samples, double min_separation) {
  if (step == 0) initial_ordering_ = angular_ordering(samples, ids_);
  final_ordering_ = angular_ordering(samples, ids_);
  last_step_ = step;
  min_separation_ = std::min(min_separation_, min_separation);
  const bool in_window = time >= window_start_ - 1e-9;
  if (in_window) ++window_samples_;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const AgentSample& s = samples[i];
    if (!(std::abs(s.range_error) < options_.error_tolerance)) last_violation_[i] = step + 1;
    if (in_window) {
      accel_sum_[i] += s.control.accel;
      bearing_sum_[i] += s.rel.bearing;
    }
    final_error_[i] = s.range_error;
    final_accel_[i] = s.control.accel;
  }
}

Metrics MetricsAccumulator::finish(std::span<const Event> events) const {
  std::set<AgentId> repelled;
  Metrics m;
  for (const Event& e : events) {
    switch (e.kind) {
      case EventKind::RepulsionOn:
        repelled.insert(e.agent);
        ++m.repulsion_switches;
        break;
      case EventKind::RepulsionOff: ++m.repulsion_switches; break;
      case EventKind::Saturated: ++m.saturations; break;
      case EventKind::Collision: ++m.collisions; break;
    }
  }

  const double inf = std::numeric_limits<double>::infinity();
  const double window_n = window_samples_ > 0 ? static_cast<double>(window_samples_) : 1.0;
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    AgentMetrics a;
    a.id = ids_[i];
    const std::size_t v = last_violation_[i];
    if (v == 0) {
      a.convergence_time = 0.0;
    } else if (v - 1 >= last_step_) {
      a.convergence_time = inf;
    } else {
      a.convergence_time = static_cast<double>(v) * dt_;
    }
    a.final_error = final_error_[i];
    a.final_accel = final_accel_[i];
    a.steady_accel = accel_sum_[i] / window_n;
    a.steady_bearing = bearing_sum_[i] / window_n;
    a.repulsion_logged = repelled.count(a.id) > 0;
    m.agents.push_back(a);
  }

  m.min_separation = min_separation_;
  m.initial_ordering = initial_ordering_;
  m.final_ordering = final_ordering_;
  m.ordering_swaps = cyclic_ordering_swaps(initial_ordering_, final_ordering_);
  const std::vector<AgentId> kept_before = without(initial_ordering_, repelled);
  const std::vector<AgentId> kept_after = without(final_ordering_, repelled);
  m.ordering_consistent = cyclic_ordering_swaps(kept_before, kept_after) == 0;
  return m;
}

Metrics compute_metrics(const SimTrace& trace, const MetricsOptions& options) {
  const double dt = trace.times.size() > 1 ? trace.times[1] - trace.times[0] : 0.0;
  const double final_time = trace.times.empty() ? 0.0 : trace.times.back();
  MetricsAccumulator acc(trace.ids, dt, final_time, options);
  for (std::size_t k = 0; k < trace.times.size(); ++k) {
    acc.observe(k, trace.times[k], trace.samples[k], trace.min_separation[k]);
  }
  return acc.finish(trace.events);
}

}  // namespace enclose
