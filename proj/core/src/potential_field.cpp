#include "enclose/potential_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "enclose/errors.hpp"

namespace enclose {
namespace {

// Bisection bracket and stopping rule for the offset root.
constexpr double kBracketLow = 1e-9;
constexpr double kBracketWidths = 10.0;
constexpr double kRootTolerance = 1e-10;
constexpr int kMaxBisections = 200;
constexpr int kScanPoints = 4096;

double gaussian(double offset, double width) {
  return std::exp(-(offset * offset) / (2.0 * width * width));
}

}  // namespace

double potential(double e_self, double e_neighbor, bool repulsion_active,
                 const PotentialParams& p) {
  double u = 0.5 * p.attraction * e_self * e_self;
  if (repulsion_active) u += p.repulsion * gaussian(e_self - e_neighbor, p.width);
  return u;
}

PotentialGradient potential_gradients(double e_self, double e_neighbor,
                                      bool repulsion_active, const PotentialParams& p) {
  PotentialGradient g{p.attraction * e_self, 0.0};
  if (!repulsion_active) return g;
  const double offset = e_self - e_neighbor;
  const double push =
      p.repulsion / (p.width * p.width) * gaussian(offset, p.width) * offset;
  g.self -= push;
  g.neighbor += push;
  return g;
}

bool offset_exists(const PotentialParams& p) {
  return p.repulsion > p.attraction * p.width * p.width;
}

double epsilon_offset(double e_neighbor, const PotentialParams& p) {
  if (!offset_exists(p)) {
    throw NoPositiveRoot("repulsion does not dominate attraction (eta <= lambda Delta^2)");
  }
  auto slope = [&](double offset) {
    return potential_gradients(e_neighbor + offset, e_neighbor, true, p).self;
  };

  // The gradient is positive beyond the upper bracket; walk down to find the
  // last negative-to-positive crossing, which is the minimum of U.
  const double high = kBracketWidths * p.width;
  const double step = (high - kBracketLow) / kScanPoints;
  double hi = high;
  double f_hi = slope(hi);
  if (!(f_hi > 0.0)) {
    throw NoPositiveRoot("gradient not positive at the upper bracket");
  }
  double lo = hi;
  bool bracketed = false;
  for (int k = kScanPoints - 1; k >= 0; --k) {
    lo = kBracketLow + step * k;
    if (slope(lo) < 0.0) {
      bracketed = true;
      break;
    }
    hi = lo;
  }
  if (!bracketed) {
    throw NoPositiveRoot("no minimum of the combined potential at a positive offset");
  }

  for (int it = 0; it < kMaxBisections && hi - lo > kRootTolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (slope(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double epsilon_offset_closed_form(const PotentialParams& p) {
  const double ratio = p.repulsion / (p.attraction * p.width * p.width);
  if (!(ratio > 1.0)) {
    throw NoPositiveRoot("eta / (lambda Delta^2) must exceed one");
  }
  return p.width * std::sqrt(2.0 * std::log(ratio));
}

DominanceReport check_dominance_condition(std::span<const ErrorSample> samples,
                                          const PotentialParams& p) {
  DominanceReport report;
  report.sample_pass.reserve(samples.size());
  report.supremum = samples.empty() ? 0.0 : -std::numeric_limits<double>::infinity();
  const double lhs = p.repulsion / (p.width * p.width * p.attraction);
  for (const ErrorSample& s : samples) {
    const double offset = s.e_self - s.e_neighbor;
    double rhs = std::numeric_limits<double>::infinity();
    if (offset != 0.0) {
      rhs = s.e_self / offset * std::exp(offset * offset / (2.0 * p.width * p.width));
    }
    const bool ok = lhs > rhs;
    report.sample_pass.push_back(ok);
    report.pass = report.pass && ok;
    report.supremum = std::max(report.supremum, rhs);
  }
  return report;
}

}  // namespace enclose
