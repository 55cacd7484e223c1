#include "enclose/neighbor_select.hpp"

#include <algorithm>
#include <limits>

namespace enclose {
namespace {

bool is_colliding(const PairGeometry& pair, const SensorParams& sensor) {
  return pair.radial_gap > 0.0 && pair.angular_spacing < 0.0 &&
         pair.separation <= sensor.sensing_radius;
}

std::vector<Neighbor> subset(std::span<const Neighbor> all,
                             const std::vector<AgentId>& ids) {
  std::vector<Neighbor> out;
  out.reserve(ids.size());
  for (const Neighbor& n : all) {
    if (std::binary_search(ids.begin(), ids.end(), n.id)) out.push_back(n);
  }
  return out;
}

}  // namespace

std::vector<AgentId> colliding_neighbors(AgentId self_id,
                                         std::span<const Neighbor> neighbors,
                                         const SensorParams& sensor) {
  std::vector<AgentId> ids;
  for (const Neighbor& n : neighbors) {
    if (n.id == self_id) continue;
    if (is_colliding(n.pair, sensor)) ids.push_back(n.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<AgentId> nearest_loiter_set(std::span<const Neighbor> candidates) {
  std::vector<AgentId> ids;
  if (candidates.empty()) return ids;
  double min_gap = std::numeric_limits<double>::infinity();
  for (const Neighbor& n : candidates) min_gap = std::min(min_gap, n.pair.radial_gap);
  for (const Neighbor& n : candidates) {
    if (n.pair.radial_gap - min_gap <= kLoiterTieTolerance) ids.push_back(n.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::optional<AgentId> select_nearest_colliding(std::span<const Neighbor> loiter_set) {
  std::optional<AgentId> best;
  double best_spacing = -std::numeric_limits<double>::infinity();
  for (const Neighbor& n : loiter_set) {
    const double psi = n.pair.angular_spacing;
    if (!best || psi > best_spacing || (psi == best_spacing && n.id < *best)) {
      best = n.id;
      best_spacing = psi;
    }
  }
  return best;
}

NeighborDecision decide_neighbors(AgentId self_id, std::span<const Neighbor> neighbors,
                                  const SensorParams& sensor) {
  NeighborDecision decision;
  decision.colliding = colliding_neighbors(self_id, neighbors, sensor);
  if (decision.colliding.empty()) return decision;

  const std::vector<Neighbor> colliding = subset(neighbors, decision.colliding);
  decision.nearest_loiter = nearest_loiter_set(colliding);
  const std::vector<Neighbor> loiter = subset(colliding, decision.nearest_loiter);
  decision.nearest_colliding = select_nearest_colliding(loiter);
  return decision;
}

}  // namespace enclose
