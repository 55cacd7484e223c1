#include <benchmark/benchmark.h>

#include "enclose/neighbor_select.hpp"
#include "enclose/potential_field.hpp"
#include "enclose/random.hpp"
#include "enclose/scenario_io.hpp"
#include "enclose/sim_engine.hpp"

namespace {

using namespace enclose;

Scenario swarm(std::size_t n) {
  Scenario s;
  GeneratorSpec spec;
  spec.n = n;
  spec.seed = 7;
  spec.radius_max = n > 20 ? 900.0 : 400.0;
  s.agents = generate_agents(spec, s.target, GuidanceParams{}, s.sensor.sensing_radius);
  return s;
}

// One fixed-step update: pair geometry, neighbour selection, control law
// and RK4 for every agent.
void BM_Step(benchmark::State& state) {
  const Scenario s = swarm(static_cast<std::size_t>(state.range(0)));
  Snapshot snap = initial_snapshot(s);
  for (auto _ : state) {
    snap = step(snap, s);
    benchmark::DoNotOptimize(snap);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Step)->Arg(2)->Arg(6)->Arg(10)->Arg(50);

void BM_DecideNeighbors(benchmark::State& state) {
  PortableRng rng(3);
  std::vector<Neighbor> all;
  for (int k = 0; k < state.range(0); ++k) {
    const double d = rng.uniform(-40, 40), psi = rng.uniform(-1, 1);
    all.push_back({static_cast<AgentId>(k + 1),
                   PairGeometry{d, psi, rng.uniform(0, 80), classify_region(d, psi)}});
  }
  const SensorParams sensor{50.0};
  for (auto _ : state) benchmark::DoNotOptimize(decide_neighbors(0, all, sensor));
}
BENCHMARK(BM_DecideNeighbors)->Arg(10)->Arg(50);

void BM_EpsilonOffset(benchmark::State& state) {
  const PotentialParams p{0.9, 70000.0, 100.0};
  double e_j = -50.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(epsilon_offset(e_j, p));
    e_j = e_j > 50.0 ? -50.0 : e_j + 0.37;
  }
}
BENCHMARK(BM_EpsilonOffset);

}  // namespace

BENCHMARK_MAIN();
