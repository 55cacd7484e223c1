#pragma once

// Selection of the single nearest colliding pursuer.
//
// A neighbour j is "colliding" for pursuer i when it sits on a smaller loiter
// circle (d_ij > 0), trails i in the clockwise sense (psi_ij < 0) and is
// inside the sensing radius. Among those, only the ones on the closest loiter
// circle are kept, and of these the one with the largest angular spacing is
// the pursuer i must stay clear of.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "enclose/engagement.hpp"

namespace enclose {

using AgentId = std::uint32_t;

struct SensorParams {
  double sensing_radius = 0.0;  ///< r_s [m]

  friend bool operator==(const SensorParams&, const SensorParams&) = default;
};

/// Pair geometry of pursuer i against neighbour `id`.
struct Neighbor {
  AgentId id = 0;
  PairGeometry pair;
};

/// Radial gaps closer than this are treated as the same loiter circle.
inline constexpr double kLoiterTieTolerance = 1e-9;

struct NeighborDecision {
  std::vector<AgentId> colliding;       ///< N_i, ascending id
  std::vector<AgentId> nearest_loiter;  ///< Z_i, ascending id
  std::optional<AgentId> nearest_colliding;

  /// The repulsion switch: on exactly when a nearest colliding pursuer exists.
  bool repulsion_active() const { return nearest_colliding.has_value(); }
};

/// N_i. Entries whose id equals `self_id` are ignored.
std::vector<AgentId> colliding_neighbors(AgentId self_id,
                                         std::span<const Neighbor> neighbors,
                                         const SensorParams& sensor);

/// Z_i: ids whose radial gap is within kLoiterTieTolerance of the minimum.
std::vector<AgentId> nearest_loiter_set(std::span<const Neighbor> candidates);

/// Largest angular spacing wins; exact ties go to the lowest id.
std::optional<AgentId> select_nearest_colliding(std::span<const Neighbor> loiter_set);

/// Full selection for one pursuer. The result does not depend on the order of
/// `neighbors`.
NeighborDecision decide_neighbors(AgentId self_id, std::span<const Neighbor> neighbors,
                                  const SensorParams& sensor);

}  // namespace enclose
