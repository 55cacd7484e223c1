#pragma once

// Target-relative kinematics and pairwise geometry for constant-speed
// pursuers orbiting a stationary target.
//
// Conventions:
//   * The line-of-sight angle is the direction of the pursuer->target ray,
//     measured counter-clockwise from the +x axis.
//   * The bearing is heading minus line-of-sight angle, so a pursuer pointed
//     straight at the target has bearing 0 and closes at full speed.
//   * Bearings in (0, pi) give clockwise revolution about the target.
//   * Every angle this module produces lies in [-pi, pi).

#include <array>
#include <optional>
#include <string_view>

namespace enclose {

struct AgentState {
  double x = 0.0;    ///< east [m]
  double y = 0.0;    ///< north [m]
  double chi = 0.0;  ///< heading [rad]

  friend bool operator==(const AgentState&, const AgentState&) = default;
};

struct TargetState {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const TargetState&, const TargetState&) = default;
};

struct RelativeState {
  double range = 0.0;    ///< r_iT [m], always > 0
  double los = 0.0;      ///< theta_iT [rad]
  double bearing = 0.0;  ///< sigma_i = wrap(chi - theta_iT) [rad]
};

/// Common forward speed of every pursuer in a run.
struct SpeedParams {
  double v = 0.0;  ///< [m/s]

  friend bool operator==(const SpeedParams&, const SpeedParams&) = default;
};

/// Quadrant of the (radial gap, angular spacing) sign plane around a
/// pursuer. Collisions can only originate in II and IV. `Boundary` is used
/// when either coordinate is exactly zero.
enum class Region { I, II, III, IV, Boundary };

std::string_view to_string(Region region);

struct PairGeometry {
  double radial_gap = 0.0;       ///< d_ij = r_iT - r_jT [m]
  double angular_spacing = 0.0;  ///< psi_ij = wrap(theta_iT - theta_jT)
  double separation = 0.0;       ///< r_ij [m]
  Region region = Region::Boundary;
};

struct RelativeRates {
  double range_rate = 0.0;  ///< dr_iT/dt
  double los_rate = 0.0;    ///< dtheta_iT/dt
};

struct PairRates {
  double radial_gap_rate = 0.0;       ///< dd_ij/dt
  double angular_spacing_rate = 0.0;  ///< dpsi_ij/dt
};

/// Gradient and Hessian of r_ij^2 in (d_ij, psi_ij) coordinates.
struct SeparationCurvature {
  std::array<double, 2> gradient{};
  std::array<std::array<double, 2>, 2> hessian{};
};

/// Ranges below this are treated as coincident with the target.
inline constexpr double kMinTargetRange = 1e-9;

/// Throws CoincidentWithTarget when the pursuer is within kMinTargetRange of
/// the target.
RelativeState relative_state(const AgentState& agent, const TargetState& target);

RelativeRates relative_rates(const RelativeState& rel, const SpeedParams& speed);

Region classify_region(double radial_gap, double angular_spacing);

/// Separation from the law of cosines written in terms of the neighbour's
/// range: r^2 = 2 r_j^2 (1 - cos psi) + d^2 + 2 r_j d (1 - cos psi).
double separation_from_gap(double radial_gap, double angular_spacing,
                           double neighbor_range);

PairGeometry pair_geometry(const RelativeState& self, const RelativeState& other);

PairRates pair_rates(const RelativeState& self, const RelativeState& other,
                     const SpeedParams& speed);

/// Bearing of `self` at which the angular-spacing rate changes sign, i.e.
/// sin(sigma*) = (r_iT / r_jT) sin(sigma_j). The returned branch lies in the
/// same half-plane (|sigma| below or above pi/2) as the neighbour's bearing.
/// Empty when the right-hand side exceeds one in magnitude.
std::optional<double> critical_look_angle(const RelativeState& self,
                                          const RelativeState& other);

/// Gradient and Hessian of r_ij^2 with respect to (d_ij, psi_ij), holding
/// `reference_range` fixed while d and psi vary. Matches the differentiated
/// law of cosines when `reference_range` is the neighbour's range.
SeparationCurvature separation_gradient_hessian(const PairGeometry& pair,
                                                double reference_range);

}  // namespace enclose
