#include "enclose/neighbor_select.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "enclose/angles.hpp"
#include "enclose/random.hpp"

namespace enclose {
namespace {

Neighbor make(AgentId id, double d, double psi, double r) {
  return {id, PairGeometry{d, psi, r, classify_region(d, psi)}};
}

const SensorParams kSensor{50.0};

TEST(CollidingNeighbors, SensingGate) {
  const std::vector<Neighbor> all{make(1, 5, -0.3, 60), make(2, 20, -0.1, 51)};
  EXPECT_TRUE(colliding_neighbors(0, all, kSensor).empty());
}

TEST(CollidingNeighbors, AllPredicatesHold) {
  const std::vector<Neighbor> all{make(7, 5, -0.3, 10)};
  EXPECT_EQ(colliding_neighbors(0, all, kSensor), std::vector<AgentId>{7});
}

TEST(CollidingNeighbors, RegionsOtherThanFourExcluded) {
  const std::vector<Neighbor> all{make(1, 5, 0.3, 10), make(2, -5, 0.3, 10),
                                  make(3, -5, -0.3, 10), make(4, 0, -0.3, 10),
                                  make(5, 5, 0, 5)};
  EXPECT_TRUE(colliding_neighbors(0, all, kSensor).empty());
}

TEST(CollidingNeighbors, SensingRadiusInclusiveAndSelfIgnored) {
  const std::vector<Neighbor> all{make(3, 5, -0.3, 50), make(0, 5, -0.3, 10)};
  EXPECT_EQ(colliding_neighbors(0, all, kSensor), std::vector<AgentId>{3});
}

TEST(NearestLoiterSet, ExactTie) {
  const std::vector<Neighbor> c{make(4, 5, -0.1, 10), make(2, 5, -0.2, 10), make(9, 8, -0.1, 10)};
  EXPECT_EQ(nearest_loiter_set(c), (std::vector<AgentId>{2, 4}));
}

TEST(NearestLoiterSet, Single) {
  const std::vector<Neighbor> c{make(6, 3, -0.1, 10)};
  EXPECT_EQ(nearest_loiter_set(c), std::vector<AgentId>{6});
}

TEST(NearestLoiterSet, TieTolerance) {
  const std::vector<Neighbor> c{make(1, 5, -0.1, 10), make(2, 5 + 1e-12, -0.1, 10),
                                make(3, 8, -0.1, 10)};
  EXPECT_EQ(nearest_loiter_set(c), (std::vector<AgentId>{1, 2}));
  const std::vector<Neighbor> apart{make(1, 5, -0.1, 10), make(2, 5 + 1e-8, -0.1, 10)};
  EXPECT_EQ(nearest_loiter_set(apart), std::vector<AgentId>{1});
}

TEST(SelectNearestColliding, LargestSpacingWithinLoiterSet) {
  const std::vector<Neighbor> all{make(1, 5, -0.3, 30), make(2, 5, -0.1, 20), make(3, 8, -0.05, 15)};
  const NeighborDecision d = decide_neighbors(0, all, kSensor);
  EXPECT_EQ(d.colliding, (std::vector<AgentId>{1, 2, 3}));
  EXPECT_EQ(d.nearest_loiter, (std::vector<AgentId>{1, 2}));
  ASSERT_TRUE(d.nearest_colliding);
  EXPECT_EQ(*d.nearest_colliding, 2u);
  EXPECT_TRUE(d.repulsion_active());
}

TEST(SelectNearestColliding, EmptyAndSingleton) {
  EXPECT_FALSE(select_nearest_colliding({}));
  const std::vector<Neighbor> one{make(5, 1, -0.1, 10)};
  EXPECT_EQ(select_nearest_colliding(one), std::optional<AgentId>(5));
  const NeighborDecision none = decide_neighbors(0, {}, kSensor);
  EXPECT_FALSE(none.repulsion_active());
}

TEST(SelectNearestColliding, SpacingTieGoesToLowestId) {
  const std::vector<Neighbor> z{make(9, 5, -0.2, 10), make(3, 5, -0.2, 10), make(6, 5, -0.2, 10)};
  EXPECT_EQ(select_nearest_colliding(z), std::optional<AgentId>(3));
}

TEST(DecideNeighbors, InvariantsAndPermutationInvariance) {
  PortableRng rng(21);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Neighbor> all;
    const int n = static_cast<int>(rng.integer(0, 12));
    for (int k = 0; k < n; ++k) {
      // Coarse values so that ties actually happen.
      const double d = static_cast<double>(rng.integer(0, 6)) - 2.0;
      const double psi = (static_cast<double>(rng.integer(0, 8)) - 4.0) * 0.05;
      const double r = rng.uniform(1, 80);
      all.push_back(make(static_cast<AgentId>(k + 1), d, psi, r));
    }
    const NeighborDecision base = decide_neighbors(0, all, kSensor);
    if (base.nearest_colliding) {
      const auto& z = base.nearest_loiter;
      EXPECT_TRUE(std::find(z.begin(), z.end(), *base.nearest_colliding) != z.end());
      EXPECT_TRUE(std::includes(base.colliding.begin(), base.colliding.end(), z.begin(), z.end()));
    } else {
      EXPECT_TRUE(base.colliding.empty());
    }
    for (int shuffle = 0; shuffle < 3; ++shuffle) {
      for (std::size_t k = all.size(); k > 1; --k) std::swap(all[k - 1], all[rng.integer(0, k - 1)]);
      const NeighborDecision again = decide_neighbors(0, all, kSensor);
      EXPECT_EQ(again.colliding, base.colliding);
      EXPECT_EQ(again.nearest_loiter, base.nearest_loiter);
      EXPECT_EQ(again.nearest_colliding, base.nearest_colliding);
    }
  }
}

// The selected neighbour sits on the closest loiter circle, so every other
// colliding neighbour has a gap no smaller than the selected one.
TEST(DecideNeighbors, SelectedGapIsMinimalAndPositive) {
  PortableRng rng(4);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Neighbor> all;
    for (int k = 0; k < 10; ++k) {
      all.push_back(make(static_cast<AgentId>(k + 1), rng.uniform(-30, 30), rng.uniform(-1, 1),
                         rng.uniform(0, 70)));
    }
    const NeighborDecision d = decide_neighbors(0, all, kSensor);
    if (!d.nearest_colliding) continue;
    double chosen = 0.0;
    for (const Neighbor& n : all) {
      if (n.id == *d.nearest_colliding) chosen = n.pair.radial_gap;
    }
    EXPECT_GT(chosen, 0.0);
    for (const Neighbor& n : all) {
      if (std::binary_search(d.colliding.begin(), d.colliding.end(), n.id)) {
        EXPECT_GE(n.pair.radial_gap, chosen - kLoiterTieTolerance);
      }
    }
  }
}

}  // namespace
}  // namespace enclose
