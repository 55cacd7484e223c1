#pragma once

// Sliding-mode lateral-acceleration law for target enclosing.
//
// The manifold S = de/dt + dU/de_i ties the range-error rate to the negative
// potential gradient. The control cancels the known terms of dS/dt and adds a
// switching term -K sign(S), so S reaches zero in at most |S(0)| / K seconds
// whenever the gain dominates the neighbour's contribution.

#include "enclose/engagement.hpp"
#include "enclose/neighbor_select.hpp"
#include "enclose/potential_field.hpp"

namespace enclose {

struct GuidanceParams {
  double reaching_gain = 10.0;  ///< K [m/s^2]
  PotentialParams potential{0.9, 70000.0, 100.0};
  double desired_range = 100.0;  ///< r_d [m]
  double accel_limit = 100.0;    ///< a_max [m/s^2]
  /// Width of the boundary layer replacing sign(S) by clamp(S / phi, -1, 1).
  /// Zero keeps the pure switching law.
  double boundary_layer = 0.0;

  friend bool operator==(const GuidanceParams&, const GuidanceParams&) = default;
};

enum class Mode { I, II };

struct GuidanceOutput {
  double accel = 0.0;     ///< commanded lateral acceleration, |a| <= a_max
  double manifold = 0.0;  ///< S [m/s]
  bool repulsion_active = false;
  bool saturated = false;
  Mode mode = Mode::I;  ///< II exactly when repulsion is active
};

/// Below this |sin(sigma)| the raw command is taken to be unbounded and the
/// limiter decides the output.
inline constexpr double kSingularBearingSine = 1e-6;

double sliding_manifold(double e_self, double e_self_rate, double e_neighbor,
                        bool repulsion_active, const PotentialParams& p);

/// The switching function: sign(S) with sign(0) = 0, or the saturated linear
/// ramp when a boundary layer is configured.
double switching_term(double manifold, double boundary_layer);

/// Lateral acceleration from the relative state of the pursuer itself and the
/// range error of its nearest colliding pursuer (ignored when repulsion is
/// off). The neighbour's error rate is deliberately not an input.
GuidanceOutput lateral_acceleration(const RelativeState& rel, double e_self,
                                    double e_neighbor, bool repulsion_active,
                                    const GuidanceParams& g, const SpeedParams& speed);

struct GainFloor {
  double minimum = 0.0;  ///< (eta v / Delta^2)(1 - r_s^2 / Delta^2)
  bool satisfied = false;
};

GainFloor gain_floor(const GuidanceParams& g, const SpeedParams& speed,
                     const SensorParams& sensor);

/// Finite reaching time T* = |S(0)| / K.
double reaching_time_bound(double manifold0, const GuidanceParams& g);

/// Range error on the manifold with repulsion off: e0 exp(-lambda t).
double mode1_prediction(double e0, double attraction, double t);

}  // namespace enclose
