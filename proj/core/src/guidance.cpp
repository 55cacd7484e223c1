#include "enclose/guidance.hpp"

#include <algorithm>
#include <cmath>

namespace enclose {
namespace {

double sign(double value) {
  return static_cast<double>((value > 0.0) - (value < 0.0));
}

}  // namespace

double sliding_manifold(double e_self, double e_self_rate, double e_neighbor,
                        bool repulsion_active, const PotentialParams& p) {
  return e_self_rate +
         potential_gradients(e_self, e_neighbor, repulsion_active, p).self;
}

double switching_term(double manifold, double boundary_layer) {
  if (boundary_layer > 0.0) return std::clamp(manifold / boundary_layer, -1.0, 1.0);
  return sign(manifold);
}

GuidanceOutput lateral_acceleration(const RelativeState& rel, double e_self,
                                    double e_neighbor, bool repulsion_active,
                                    const GuidanceParams& g, const SpeedParams& speed) {
  const PotentialParams& p = g.potential;
  const double v = speed.v;
  const double sin_b = std::sin(rel.bearing);
  const double cos_b = std::cos(rel.bearing);
  const double e_rate = -v * cos_b;

  GuidanceOutput out;
  out.repulsion_active = repulsion_active;
  out.mode = repulsion_active ? Mode::II : Mode::I;
  out.manifold = sliding_manifold(e_self, e_rate, e_neighbor, repulsion_active, p);

  double bracket = -g.reaching_gain * switching_term(out.manifold, g.boundary_layer) -
                   v * v * sin_b * sin_b / rel.range + p.attraction * v * cos_b;
  if (repulsion_active) {
    const double offset = e_self - e_neighbor;
    const double w2 = p.width * p.width;
    const double gauss = std::exp(-(offset * offset) / (2.0 * w2));
    bracket += p.repulsion * v / w2 * gauss * (offset * offset / w2 - 1.0) * cos_b;
  }

  if (std::abs(sin_b) < kSingularBearingSine) {
    const double direction = sin_b == 0.0 ? sign(bracket) : sign(bracket) * sign(sin_b);
    out.accel = g.accel_limit * direction;
    out.saturated = true;
    return out;
  }

  const double raw = bracket / sin_b;
  out.accel = std::clamp(raw, -g.accel_limit, g.accel_limit);
  out.saturated = std::abs(raw) > g.accel_limit;
  return out;
}

GainFloor gain_floor(const GuidanceParams& g, const SpeedParams& speed,
                     const SensorParams& sensor) {
  const PotentialParams& p = g.potential;
  const double w2 = p.width * p.width;
  const double r2 = sensor.sensing_radius * sensor.sensing_radius;
  GainFloor floor;
  floor.minimum = p.repulsion * speed.v / w2 * (1.0 - r2 / w2);
  floor.satisfied = g.reaching_gain > floor.minimum;
  return floor;
}

double reaching_time_bound(double manifold0, const GuidanceParams& g) {
  return std::abs(manifold0) / g.reaching_gain;
}

double mode1_prediction(double e0, double attraction, double t) {
  return e0 * std::exp(-attraction * t);
}

}  // namespace enclose
