#include "enclose/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include <json.hpp>

#include "enclose/angles.hpp"
#include "enclose/errors.hpp"
#include "enclose/metrics.hpp"
#include "enclose/potential_field.hpp"
#include "enclose/random.hpp"
#include "enclose/scenario_io.hpp"

namespace enclose {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void finish(OracleReport& report) { report.pass = report.violations.empty(); }

// ---------------------------------------------------------------------------
// Region signs

struct SignRow {
  Region region;
  int gap_sign;          // sign of d_ij
  int spacing_sign;      // sign of psi_ij
  bool self_smaller;     // hypothesis sigma_i < sigma_j (else sigma_i > sigma_j)
  int gap_rate_sign;     // expected sign of dd/dt
  int spacing_rate_sign; // expected sign of dpsi/dt
};

constexpr SignRow kSignTable[] = {
    {Region::I, +1, +1, true, -1, +1},
    {Region::II, -1, +1, false, +1, -1},
    {Region::III, -1, -1, false, +1, -1},
    {Region::IV, +1, -1, true, -1, +1},
};

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

void check_sign_case(OracleReport& report, const SignRow& row, const RelativeState& self,
                     const RelativeState& other, const SpeedParams& speed) {
  ++report.cases_run;
  const PairGeometry pair = pair_geometry(self, other);
  const PairRates rates = pair_rates(self, other, speed);
  const bool ok = pair.region == row.region && sign_of(rates.radial_gap_rate) == row.gap_rate_sign &&
                  sign_of(rates.angular_spacing_rate) == row.spacing_rate_sign;
  if (ok) return;
  ordered_json input = {{"region", std::string(to_string(row.region))},
                        {"r_i", self.range},   {"theta_i", self.los},  {"sigma_i", self.bearing},
                        {"r_j", other.range},  {"theta_j", other.los}, {"sigma_j", other.bearing},
                        {"v", speed.v}};
  std::string expected = std::string("region ") + std::string(to_string(row.region)) +
                         ", sign(d_dot)=" + std::to_string(row.gap_rate_sign) +
                         ", sign(psi_dot)=" + std::to_string(row.spacing_rate_sign);
  std::string observed = std::string("region ") + std::string(to_string(pair.region)) +
                         ", d_dot=" + fmt(rates.radial_gap_rate) +
                         ", psi_dot=" + fmt(rates.angular_spacing_rate);
  report.violations.push_back({input.dump(), expected, observed});
}

// ---------------------------------------------------------------------------
// Neighbour selection against a Cartesian brute force

struct BruteDecision {
  std::vector<AgentId> colliding;
  std::vector<AgentId> nearest_loiter;
  std::optional<AgentId> nearest;
};

// Literal enumeration from Cartesian positions: sets built by direct
// filtering, no shared helpers with neighbor_select.
BruteDecision brute_force(std::size_t i, const std::vector<AgentState>& poses,
                          const std::vector<AgentId>& ids, const TargetState& target,
                          double sensing_radius) {
  const double ri = std::hypot(poses[i].x - target.x, poses[i].y - target.y);
  const double ti = std::atan2(target.y - poses[i].y, target.x - poses[i].x);
  struct Cand {
    AgentId id;
    double d, psi;
  };
  std::vector<Cand> n_set;
  for (std::size_t j = 0; j < poses.size(); ++j) {
    if (j == i) continue;
    const double rj = std::hypot(poses[j].x - target.x, poses[j].y - target.y);
    const double tj = std::atan2(target.y - poses[j].y, target.x - poses[j].x);
    const double d = ri - rj;
    const double psi = wrap_angle(ti - tj);
    const double rij = std::hypot(poses[i].x - poses[j].x, poses[i].y - poses[j].y);
    if (d > 0.0 && psi < 0.0 && rij <= sensing_radius) n_set.push_back({ids[j], d, psi});
  }
  BruteDecision out;
  for (const Cand& c : n_set) out.colliding.push_back(c.id);
  std::sort(out.colliding.begin(), out.colliding.end());
  if (n_set.empty()) return out;

  double dmin = n_set[0].d;
  for (const Cand& c : n_set) dmin = std::min(dmin, c.d);
  std::vector<Cand> z_set;
  for (const Cand& c : n_set) {
    if (c.d - dmin <= kLoiterTieTolerance) z_set.push_back(c);
  }
  for (const Cand& c : z_set) out.nearest_loiter.push_back(c.id);
  std::sort(out.nearest_loiter.begin(), out.nearest_loiter.end());

  Cand best = z_set[0];
  for (const Cand& c : z_set) {
    if (c.psi > best.psi || (c.psi == best.psi && c.id < best.id)) best = c;
  }
  out.nearest = best.id;
  return out;
}

std::string ids_to_string(const std::vector<AgentId>& ids) {
  std::string s = "[";
  for (std::size_t k = 0; k < ids.size(); ++k) s += (k ? "," : "") + std::to_string(ids[k]);
  return s + "]";
}

std::string decision_string(const std::vector<AgentId>& n, const std::vector<AgentId>& z,
                            const std::optional<AgentId>& c) {
  return "N=" + ids_to_string(n) + " Z=" + ids_to_string(z) +
         " C=" + (c ? std::to_string(*c) : std::string("none"));
}

ordered_json swarm_json(const std::vector<AgentState>& poses, const std::vector<AgentId>& ids,
                        double sensing_radius, std::size_t self) {
  ordered_json agents = ordered_json::array();
  for (std::size_t k = 0; k < poses.size(); ++k) {
    agents.push_back({{"id", ids[k]}, {"x", poses[k].x}, {"y", poses[k].y}});
  }
  return {{"r_s", sensing_radius}, {"self", ids[self]}, {"agents", agents}};
}

// Compares the library against the brute force for every agent of a swarm
// (target at the origin). Neighbours are fed in shuffled order.
void check_swarm(OracleReport& report, const std::vector<AgentState>& poses,
                 const std::vector<AgentId>& ids, double sensing_radius, PortableRng& rng) {
  const TargetState target{};
  const SensorParams sensor{sensing_radius};
  std::vector<RelativeState> rel;
  rel.reserve(poses.size());
  for (const AgentState& p : poses) rel.push_back(relative_state(p, target));

  for (std::size_t i = 0; i < poses.size(); ++i) {
    ++report.cases_run;
    std::vector<Neighbor> neighbors;
    for (std::size_t j = 0; j < poses.size(); ++j) {
      if (j != i) neighbors.push_back({ids[j], pair_geometry(rel[i], rel[j])});
    }
    for (std::size_t k = neighbors.size(); k > 1; --k) {
      std::swap(neighbors[k - 1], neighbors[rng.integer(0, k - 1)]);
    }
    const NeighborDecision got = decide_neighbors(ids[i], neighbors, sensor);
    const BruteDecision want = brute_force(i, poses, ids, target, sensing_radius);
    if (got.colliding == want.colliding && got.nearest_loiter == want.nearest_loiter &&
        got.nearest_colliding == want.nearest) {
      continue;
    }
    report.violations.push_back({swarm_json(poses, ids, sensing_radius, i).dump(),
                                 decision_string(want.colliding, want.nearest_loiter, want.nearest),
                                 decision_string(got.colliding, got.nearest_loiter,
                                                 got.nearest_colliding)});
  }
}

AgentState pose_at(double radius, double polar) {
  return {radius * std::cos(polar), radius * std::sin(polar), 0.0};
}

// The selection argument's configuration: k has the smallest radial gap, l
// the largest angular spacing and j the smallest separation; k must win.
void check_selection_triple(OracleReport& report, PortableRng& rng) {
  constexpr double kSensing = 50.0;
  const TargetState target{};
  for (int attempt = 0; attempt < 100; ++attempt) {
    const double ri = rng.uniform(200.0, 600.0);
    const double phi_i = rng.uniform(-kPi, kPi);
    // (radial gap, |psi| * r_i) per neighbour, jittered around a valid layout.
    const double dk = rng.uniform(1.0, 3.0), ak = rng.uniform(42.0, 46.0);
    const double dj = rng.uniform(6.0, 10.0), aj = rng.uniform(20.0, 26.0);
    const double dl = rng.uniform(36.0, 42.0), al = rng.uniform(4.0, 8.0);
    // psi_ij = theta_i - theta_j < 0 means j sits ahead in polar angle.
    const std::vector<AgentState> poses{
        pose_at(ri, phi_i),
        pose_at(ri - dk, wrap_angle(phi_i + ak / ri)),
        pose_at(ri - dj, wrap_angle(phi_i + aj / ri)),
        pose_at(ri - dl, wrap_angle(phi_i + al / ri)),
    };
    const std::vector<AgentId> ids{10, 11, 12, 13};  // i, k, j, l

    const RelativeState self = relative_state(poses[0], target);
    PairGeometry g[4];
    for (int m = 1; m < 4; ++m) g[m] = pair_geometry(self, relative_state(poses[m], target));
    const bool layout = g[1].radial_gap < g[2].radial_gap && g[2].radial_gap < g[3].radial_gap &&
                        g[3].angular_spacing > g[2].angular_spacing &&
                        g[2].angular_spacing > g[1].angular_spacing &&
                        g[1].angular_spacing < 0.0 && g[3].angular_spacing < 0.0 &&
                        g[2].separation < g[1].separation && g[2].separation < g[3].separation &&
                        g[1].separation <= kSensing && g[3].separation <= kSensing;
    if (!layout) continue;

    ++report.cases_run;
    std::vector<Neighbor> neighbors;
    for (int m = 1; m < 4; ++m) neighbors.push_back({ids[m], g[m]});
    const NeighborDecision got = decide_neighbors(ids[0], neighbors, SensorParams{kSensing});
    if (got.nearest_colliding != std::optional<AgentId>(ids[1])) {
      report.violations.push_back(
          {swarm_json(poses, ids, kSensing, 0).dump(), "C=11 (minimum radial gap)",
           decision_string(got.colliding, got.nearest_loiter, got.nearest_colliding)});
    }
    return;
  }
  report.violations.push_back({"{}", "a valid selection triple", "layout sampling failed"});
}

// ---------------------------------------------------------------------------
// Closed-loop runs: safety, convergence, reaching time and steady control

struct PhaseTracker {
  bool open = false;
  bool last_active = false;
  std::optional<AgentId> last_nearest;
  ReachingPhase phase;
  double deadline = 0.0;
};

}  // namespace

std::string report_to_json(const OracleReport& report) {
  ordered_json violations = ordered_json::array();
  for (const Violation& v : report.violations) {
    ordered_json input = ordered_json::parse(v.input, nullptr, false);
    if (input.is_discarded()) input = v.input;
    violations.push_back({{"input", input}, {"expected", v.expected}, {"observed", v.observed}});
  }
  ordered_json doc = {{"name", report.name},
                      {"cases_run", report.cases_run},
                      {"pass", report.pass},
                      {"violation_count", report.violations.size()},
                      {"note", report.note},
                      {"violations", violations}};
  return doc.dump(2) + "\n";
}

OracleReport oracle_region_signs(std::size_t samples, std::uint64_t seed) {
  OracleReport report;
  report.name = "region_signs";
  PortableRng rng(seed);
  const SpeedParams speed{40.0};

  auto draw = [&](const SignRow& row, bool adversarial) {
    const double rj = rng.uniform(60.0, 500.0);
    const double gap_mag = adversarial ? rng.uniform(1e-6, 1e-3) : rng.uniform(0.5, 50.0);
    const double ri = rj + row.gap_sign * gap_mag;
    const double psi = row.spacing_sign * rng.uniform_open(1e-6, kPi - 1e-6);
    const double theta_j = rng.uniform(-kPi, kPi);
    const double theta_i = wrap_angle(theta_j + psi);
    // Bearings in (0, pi/2), ordered per the row's hypothesis.
    double lo = rng.uniform_open(0.0, kPi / 2.0);
    double hi = rng.uniform_open(0.0, kPi / 2.0);
    if (lo > hi) std::swap(lo, hi);
    if (lo == hi) return;
    const double sigma_i = row.self_smaller ? lo : hi;
    const double sigma_j = row.self_smaller ? hi : lo;
    check_sign_case(report, row, {ri, theta_i, sigma_i}, {rj, theta_j, sigma_j}, speed);
  };

  // Regular interior samples, then the same count split among adversarial
  // cases: bearings 1e-9 apart and radial gaps near zero.
  for (std::size_t s = 0; s < samples; ++s) draw(kSignTable[s % 4], false);
  const std::size_t boundary = std::max<std::size_t>(samples / 10, 4);
  for (std::size_t s = 0; s < boundary; ++s) draw(kSignTable[s % 4], true);
  for (std::size_t s = 0; s < boundary; ++s) {
    const SignRow& row = kSignTable[s % 4];
    const double rj = rng.uniform(60.0, 500.0);
    const double ri = rj + row.gap_sign * rng.uniform(0.5, 50.0);
    const double psi = row.spacing_sign * rng.uniform_open(0.01, 3.0);
    const double theta_j = rng.uniform(-kPi, kPi);
    const double sigma_j = rng.uniform(0.2, kPi / 2.0 - 0.2);
    const double sigma_i = row.self_smaller ? sigma_j - 1e-9 : sigma_j + 1e-9;
    check_sign_case(report, row, {ri, wrap_angle(theta_j + psi), sigma_i},
                    {rj, theta_j, sigma_j}, speed);
  }
  report.note = "bearings drawn in (0, pi/2) with strict ordering; equal bearings are excluded";
  finish(report);
  return report;
}

OracleReport oracle_algorithm1(std::size_t swarms, std::size_t n_max, std::uint64_t seed) {
  OracleReport report;
  report.name = "algorithm1";
  PortableRng rng(seed);
  n_max = std::max<std::size_t>(n_max, 2);

  for (std::size_t s = 0; s < swarms; ++s) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, n_max));
    std::vector<AgentState> poses;
    std::vector<AgentId> ids;
    const int style = static_cast<int>(s % 4);
    const double center = rng.uniform(-kPi, kPi);
    for (std::size_t k = 0; k < n; ++k) {
      double radius = 0.0, polar = 0.0;
      if (style == 0) {  // spread swarm
        radius = rng.uniform(100.0, 400.0);
        polar = rng.uniform(-kPi, kPi);
      } else if (style == 1) {  // tight cluster, many pairs inside r_s
        radius = rng.uniform(100.0, 180.0);
        polar = wrap_angle(center + rng.uniform(-0.4, 0.4));
      } else if (style == 2 && k > 0 && rng.uniform() < 0.5) {  // shared loiter circles
        const AgentState& ref = poses[rng.integer(0, k - 1)];
        radius = std::hypot(ref.x, ref.y);
        polar = wrap_angle(std::atan2(ref.y, ref.x) + rng.uniform(-0.3, 0.3));
      } else {  // cluster straddling the +-pi seam
        radius = rng.uniform(100.0, 180.0);
        polar = wrap_angle(kPi + rng.uniform(-0.4, 0.4));
      }
      poses.push_back(pose_at(radius, polar));
      ids.push_back(static_cast<AgentId>(k));
    }
    for (std::size_t k = ids.size(); k > 1; --k) {
      std::swap(ids[k - 1], ids[rng.integer(0, k - 1)]);
    }
    check_swarm(report, poses, ids, 50.0, rng);
  }

  const std::size_t triples = std::max<std::size_t>(swarms / 100, 10);
  for (std::size_t s = 0; s < triples; ++s) check_selection_triple(report, rng);

  // Swarms spaced so that every pair is outside r_s: C_i must be empty.
  const std::size_t sparse = std::max<std::size_t>(swarms / 100, 10);
  for (std::size_t s = 0; s < sparse; ++s) {
    const std::size_t n = static_cast<std::size_t>(rng.integer(2, 12));
    std::vector<AgentState> poses;
    std::vector<AgentId> ids;
    for (std::size_t k = 0; k < n; ++k) {
      const double radius = 150.0 + 60.0 * static_cast<double>(k);
      poses.push_back(pose_at(radius, rng.uniform(-kPi, kPi)));
      ids.push_back(static_cast<AgentId>(k));
    }
    const TargetState target{};
    std::vector<RelativeState> rel;
    for (const AgentState& p : poses) rel.push_back(relative_state(p, target));
    for (std::size_t i = 0; i < n; ++i) {
      ++report.cases_run;
      std::vector<Neighbor> neighbors;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) neighbors.push_back({ids[j], pair_geometry(rel[i], rel[j])});
      }
      const NeighborDecision got = decide_neighbors(ids[i], neighbors, SensorParams{50.0});
      if (got.nearest_colliding || !got.colliding.empty()) {
        report.violations.push_back({swarm_json(poses, ids, 50.0, i).dump(), "N=[] C=none",
                                     decision_string(got.colliding, got.nearest_loiter,
                                                     got.nearest_colliding)});
      }
    }
  }
  report.note = "agent-level comparisons against a Cartesian brute force, shuffled ids and "
                "neighbour order";
  finish(report);
  return report;
}

OracleReport oracle_potential_gradients(std::size_t samples, std::uint64_t seed,
                                        double relative_tolerance) {
  constexpr double kStep = 1e-4;
  OracleReport report;
  report.name = "potential_gradients";
  PortableRng rng(seed);
  for (std::size_t s = 0; s < samples; ++s) {
    ++report.cases_run;
    const PotentialParams p{rng.uniform(0.05, 2.0), rng.uniform(1e3, 2e5), rng.uniform(50.0, 600.0)};
    const double ej = rng.uniform(-150.0, 300.0);
    const double ei = ej + rng.uniform(-2.0, 2.0) * p.width;
    const bool active = s % 4 != 0;

    const PotentialGradient g = potential_gradients(ei, ej, active, p);
    const double fd_i =
        (potential(ei + kStep, ej, active, p) - potential(ei - kStep, ej, active, p)) / (2 * kStep);
    const double fd_j =
        (potential(ei, ej + kStep, active, p) - potential(ei, ej - kStep, active, p)) / (2 * kStep);
    const double err_i = std::abs(g.self - fd_i);
    const double err_j = std::abs(g.neighbor - fd_j);
    const bool ok = err_i <= relative_tolerance * std::max(1.0, std::abs(g.self)) &&
                    err_j <= relative_tolerance * std::max(1.0, std::abs(g.neighbor));
    if (ok) continue;
    ordered_json input = {{"e_i", ei}, {"e_j", ej}, {"delta", active ? 1 : 0},
                          {"lambda", p.attraction}, {"eta", p.repulsion},
                          {"delta_cap", p.width}};
    report.violations.push_back({input.dump(), "dU/de_i=" + fmt(fd_i) + " dU/de_j=" + fmt(fd_j),
                                 "dU/de_i=" + fmt(g.self) + " dU/de_j=" + fmt(g.neighbor)});
  }
  report.note = "central differences with step 1e-4; tolerance relative with a unit floor";
  finish(report);
  return report;
}

Scenario make_theorem2_scenario(std::size_t n, std::uint64_t seed,
                                const Theorem2Options& options) {
  Scenario scenario;
  scenario.speed = options.speed;
  scenario.sensor = options.sensor;
  scenario.dt = options.dt;
  scenario.t_end = options.t_end;
  scenario.collision_radius = options.collision_radius;
  scenario.seed = seed;
  GeneratorSpec spec;
  spec.n = n;
  spec.radius_min = std::max(options.radius_min, options.guidance.desired_range + 1e-6);
  spec.radius_max = options.radius_max;
  spec.seed = seed;
  scenario.agents =
      generate_agents(spec, scenario.target, options.guidance, options.sensor.sensing_radius);
  return scenario;
}

RunAssessment assess_run(const Scenario& scenario, const Theorem2Options& options) {
  const std::size_t n = scenario.agents.size();
  const double slack = static_cast<double>(options.reaching_slack_steps) * scenario.dt;
  MetricsOptions mopts;
  mopts.error_tolerance = options.error_tolerance;
  mopts.steady_window = options.steady_window;
  MetricsAccumulator acc(scenario, mopts);

  RunAssessment out;
  std::vector<PhaseTracker> trackers(n);
  auto close = [&](PhaseTracker& tr, bool censored) {
    if (!tr.open) return;
    tr.phase.censored = censored && tr.phase.reached_after < 0.0;
    tr.phase.pass = tr.phase.reached_after >= 0.0 || tr.phase.censored;
    out.phases.push_back(tr.phase);
    tr.open = false;
  };

  const auto events = simulate(scenario, [&](std::size_t k, double t,
                                             std::span<const AgentSample> samples,
                                             double min_sep) {
    acc.observe(k, t, samples, min_sep);
    for (std::size_t i = 0; i < n; ++i) {
      const AgentSample& s = samples[i];
      PhaseTracker& tr = trackers[i];
      const bool active = s.decision.repulsion_active();
      const bool switched = k == 0 || active != tr.last_active ||
                            s.decision.nearest_colliding != tr.last_nearest;
      if (switched) {
        close(tr, true);
        tr.open = true;
        tr.phase = ReachingPhase{};
        tr.phase.agent = scenario.agents[i].id;
        tr.phase.start = t;
        tr.phase.manifold0 = s.control.manifold;
        tr.phase.bound = reaching_time_bound(s.control.manifold, scenario.agents[i].guidance);
        tr.deadline = t + tr.phase.bound + slack;
      }
      tr.last_active = active;
      tr.last_nearest = s.decision.nearest_colliding;
      if (tr.open && tr.phase.reached_after < 0.0) {
        if (std::abs(s.control.manifold) < options.manifold_tolerance && t <= tr.deadline + 1e-12) {
          tr.phase.reached_after = t - tr.phase.start;
          close(tr, false);
        } else if (t > tr.deadline + 1e-12) {
          close(tr, false);
        }
      }
    }
  });
  for (PhaseTracker& tr : trackers) close(tr, true);

  const Metrics m = acc.finish(events);
  out.min_separation = m.min_separation;
  out.collisions = m.collisions;
  out.safe = m.min_separation > scenario.collision_radius && m.collisions == 0;

  out.converged = true;
  out.steady = true;
  for (std::size_t i = 0; i < n; ++i) {
    const AgentMetrics& a = m.agents[i];
    out.convergence_times.push_back(a.convergence_time);
    out.final_errors.push_back(a.final_error);
    out.converged = out.converged && a.convergence_time <= options.settle_time;
    out.steady_accels.push_back(a.steady_accel);
    const double rd = scenario.agents[i].guidance.desired_range;
    const double target_accel = -scenario.speed.v * scenario.speed.v / rd;
    out.steady = out.steady && std::abs(a.steady_accel - target_accel) < options.accel_tolerance;
  }
  out.reaching = std::all_of(out.phases.begin(), out.phases.end(),
                             [](const ReachingPhase& p) { return p.pass; });
  for (const Event& e : events) {
    if (e.kind == EventKind::RepulsionOn) ++out.repulsion_on_events;
  }
  return out;
}

OracleReport oracle_theorem2(std::size_t scenarios, std::uint64_t seed,
                             const Theorem2Options& options) {
  OracleReport report;
  report.name = "theorem2";
  const std::vector<std::size_t> counts =
      options.agent_counts.empty() ? std::vector<std::size_t>{6} : options.agent_counts;

  std::vector<Scenario> cases;
  cases.reserve(scenarios);
  for (std::size_t s = 0; s < scenarios; ++s) {
    cases.push_back(make_theorem2_scenario(counts[s % counts.size()], seed + s, options));
  }

  std::vector<RunAssessment> results(cases.size());
  std::vector<std::string> failures(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < cases.size(); k = next++) {
      try {
        results[k] = assess_run(cases[k], options);
      } catch (const Error& e) {
        failures[k] = e.what();
      }
    }
  };
  unsigned threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cases.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (std::size_t k = 0; k < cases.size(); ++k) {
    ++report.cases_run;
    const std::string input = serialize_scenario(cases[k]);
    if (!failures[k].empty()) {
      report.violations.push_back({input, "run completes", failures[k]});
      continue;
    }
    const RunAssessment& r = results[k];
    if (!r.safe) {
      report.violations.push_back({input, "(a) min r_ij > " + fmt(cases[k].collision_radius),
                                   "min r_ij = " + fmt(r.min_separation) + ", collisions = " +
                                       std::to_string(r.collisions)});
    }
    if (!r.converged) {
      double worst = 0.0;
      for (double t : r.convergence_times) worst = std::max(worst, t);
      report.violations.push_back({input, "(b) |e_i| < tol_e from t = " + fmt(options.settle_time),
                                   "latest convergence time = " + fmt(worst)});
    }
    if (!r.reaching) {
      for (const ReachingPhase& p : r.phases) {
        if (p.pass) continue;
        report.violations.push_back(
            {input, "(c) agent " + std::to_string(p.agent) + ": |S| < tol_S within " +
                        fmt(p.bound) + " s + slack of t = " + fmt(p.start),
             "not reached (S0 = " + fmt(p.manifold0) + ")"});
        break;
      }
    }
    if (!r.steady) {
      std::string observed = "steady a =";
      for (double a : r.steady_accels) observed += " " + fmt(a);
      report.violations.push_back({input, "(d) steady a_i within tol_a of -v^2/r_d", observed});
    }
  }
  report.note = "finite sample of initial conditions; passing is evidence, not proof";
  finish(report);
  return report;
}

const std::vector<std::string>& oracle_names() {
  static const std::vector<std::string> names{"region_signs", "algorithm1", "potential_gradients",
                                              "theorem2"};
  return names;
}

OracleReport run_named_oracle(const std::string& name, std::uint64_t seed) {
  if (name == "region_signs") return oracle_region_signs(10000, seed);
  if (name == "algorithm1") return oracle_algorithm1(10000, 50, seed);
  if (name == "potential_gradients") return oracle_potential_gradients(10000, seed);
  if (name == "theorem2") return oracle_theorem2(100, seed);
  throw ValidationError("oracle", "unknown oracle '" + name + "'");
}

}  // namespace enclose
