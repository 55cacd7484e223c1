#include "enclose/engagement.hpp"

#include <algorithm>
#include <cmath>

#include "enclose/angles.hpp"
#include "enclose/errors.hpp"

namespace enclose {

std::string_view to_string(Region region) {
  switch (region) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::Boundary: return "Boundary";
  }
  return "?";
}

RelativeState relative_state(const AgentState& agent, const TargetState& target) {
  const double dx = target.x - agent.x;
  const double dy = target.y - agent.y;
  const double range = std::hypot(dx, dy);
  if (!(range >= kMinTargetRange)) {
    throw CoincidentWithTarget("pursuer is coincident with the target");
  }
  RelativeState rel;
  rel.range = range;
  rel.los = wrap_angle(std::atan2(dy, dx));
  rel.bearing = wrap_angle(agent.chi - rel.los);
  return rel;
}

RelativeRates relative_rates(const RelativeState& rel, const SpeedParams& speed) {
  return {-speed.v * std::cos(rel.bearing),
          -speed.v * std::sin(rel.bearing) / rel.range};
}

Region classify_region(double radial_gap, double angular_spacing) {
  if (radial_gap == 0.0 || angular_spacing == 0.0) return Region::Boundary;
  if (radial_gap > 0.0) return angular_spacing > 0.0 ? Region::I : Region::IV;
  return angular_spacing > 0.0 ? Region::II : Region::III;
}

double separation_from_gap(double radial_gap, double angular_spacing,
                           double neighbor_range) {
  // 1 - cos(psi) written as 2 sin^2(psi/2) keeps precision for small psi.
  const double half = std::sin(0.5 * angular_spacing);
  const double one_minus_cos = 2.0 * half * half;
  const double squared = 2.0 * neighbor_range * neighbor_range * one_minus_cos +
                         radial_gap * radial_gap +
                         2.0 * neighbor_range * radial_gap * one_minus_cos;
  return std::sqrt(std::max(squared, 0.0));
}

PairGeometry pair_geometry(const RelativeState& self, const RelativeState& other) {
  PairGeometry pair;
  pair.radial_gap = self.range - other.range;
  pair.angular_spacing = wrap_angle(self.los - other.los);
  pair.separation =
      separation_from_gap(pair.radial_gap, pair.angular_spacing, other.range);
  pair.region = classify_region(pair.radial_gap, pair.angular_spacing);
  return pair;
}

PairRates pair_rates(const RelativeState& self, const RelativeState& other,
                     const SpeedParams& speed) {
  const double v = speed.v;
  return {-v * (std::cos(self.bearing) - std::cos(other.bearing)),
          -v * (std::sin(self.bearing) / self.range -
                std::sin(other.bearing) / other.range)};
}

std::optional<double> critical_look_angle(const RelativeState& self,
                                          const RelativeState& other) {
  const double rhs = self.range / other.range * std::sin(other.bearing);
  if (std::abs(rhs) > 1.0) return std::nullopt;
  const double principal = std::asin(rhs);
  const double half_pi = 0.5 * kPi;
  if (other.bearing > half_pi) return wrap_angle(kPi - principal);
  if (other.bearing < -half_pi) return wrap_angle(-kPi - principal);
  return principal;
}

SeparationCurvature separation_gradient_hessian(const PairGeometry& pair,
                                                double reference_range) {
  const double d = pair.radial_gap;
  const double s = std::sin(pair.angular_spacing);
  const double c = std::cos(pair.angular_spacing);
  const double r = reference_range;

  SeparationCurvature out;
  out.gradient = {2.0 * d + 2.0 * r * (1.0 - c), 2.0 * r * r * s + 2.0 * r * d * s};
  out.hessian[0] = {2.0, 2.0 * r * s};
  out.hessian[1] = {2.0 * r * s, 2.0 * r * r * c + 2.0 * r * d * c};
  return out;
}

}  // namespace enclose
