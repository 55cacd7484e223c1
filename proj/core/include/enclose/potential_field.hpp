#pragma once

// Combined attractive/repulsive potential on range errors.
//
//   U(e_i, e_j) = lambda e_i^2 / 2 + eta * delta * exp(-(e_i - e_j)^2 / (2 Delta^2))
//
// The quadratic term pulls pursuer i onto the desired orbit; the Gaussian
// term, switched on only while a nearest colliding pursuer j exists, pushes
// i's loiter circle outward from j's.

#include <span>
#include <vector>

namespace enclose {

struct PotentialParams {
  double attraction = 0.0;  ///< lambda [1/s]
  double repulsion = 0.0;   ///< eta [m^2]
  double width = 0.0;       ///< Delta [m]

  friend bool operator==(const PotentialParams&, const PotentialParams&) = default;
};

/// Desired proximity r_d; identical for all pursuers in a run.
struct DesiredOrbit {
  double radius = 0.0;

  friend bool operator==(const DesiredOrbit&, const DesiredOrbit&) = default;
};

/// e = r_iT - r_d.
inline double range_error(double range, const DesiredOrbit& orbit) {
  return range - orbit.radius;
}

struct PotentialGradient {
  double self = 0.0;      ///< dU/de_i
  double neighbor = 0.0;  ///< dU/de_j
};

double potential(double e_self, double e_neighbor, bool repulsion_active,
                 const PotentialParams& p);

PotentialGradient potential_gradients(double e_self, double e_neighbor,
                                      bool repulsion_active, const PotentialParams& p);

/// Whether eta > lambda * Delta^2, the condition for the repulsive slope at
/// zero offset to beat the attractive one.
bool offset_exists(const PotentialParams& p);

/// Offset eps > 0 at which dU/de_i vanishes with repulsion on and the
/// neighbour error fixed at `e_neighbor`. For e_neighbor > 0 the gradient
/// may vanish twice; the larger root (the potential minimum) is returned.
/// Throws NoPositiveRoot when eta <= lambda Delta^2 or when no minimum exists
/// for this neighbour error.
double epsilon_offset(double e_neighbor, const PotentialParams& p);

/// Closed form of epsilon_offset at e_neighbor = 0:
/// Delta * sqrt(2 ln(eta / (lambda Delta^2))). Throws NoPositiveRoot when the
/// logarithm is not positive.
double epsilon_offset_closed_form(const PotentialParams& p);

struct ErrorSample {
  double e_self = 0.0;
  double e_neighbor = 0.0;
};

struct DominanceReport {
  std::vector<bool> sample_pass;
  /// Largest right-hand side observed; +inf when a sample sits at contact.
  double supremum = 0.0;
  bool pass = true;
};

/// Pointwise check of eta / (Delta^2 lambda) > e_i / (e_i - e_j) *
/// exp((e_i - e_j)^2 / (2 Delta^2)) over samples taken with repulsion on.
/// An empty sample set passes vacuously.
DominanceReport check_dominance_condition(std::span<const ErrorSample> samples,
                                          const PotentialParams& p);

}  // namespace enclose
