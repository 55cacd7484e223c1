#include "enclose/potential_field.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "enclose/errors.hpp"
#include "enclose/random.hpp"

namespace enclose {
namespace {

const PotentialParams kFigure{0.2, 100000.0, 500.0};
const PotentialParams kPaper{0.9, 70000.0, 100.0};

// Series evaluation of exp(-x) in long double, independent of the library's
// use of std::exp on doubles.
long double exp_neg_series(long double x) {
  long double term = 1.0L, sum = 1.0L;
  for (int k = 1; k < 60; ++k) {
    term *= -x / k;
    sum += term;
  }
  return sum;
}

TEST(Potential, Examples) {
  EXPECT_DOUBLE_EQ(potential(0, 0, false, kPaper), 0);
  EXPECT_DOUBLE_EQ(potential(30, 30, true, kPaper), 0.5 * 0.9 * 900 + 70000);

  const long double expected = 0.5L * 0.2L * 100 * 100 + 100000.0L * exp_neg_series(0.02L);
  EXPECT_NEAR(potential(100, 0, true, kFigure), static_cast<double>(expected), 1e-9);
  EXPECT_NEAR(potential(100, 0, true, kFigure), 99019.8673, 1e-4);
}

TEST(Potential, TranslationChangesOnlyAttraction) {
  PortableRng rng(2);
  for (int k = 0; k < 1000; ++k) {
    const double ei = rng.uniform(-100, 300), ej = rng.uniform(-100, 300), c = rng.uniform(-50, 50);
    const double lhs = potential(ei + c, ej + c, true, kPaper) - potential(ei, ej, true, kPaper);
    const double rhs = 0.5 * kPaper.attraction * ((ei + c) * (ei + c) - ei * ei);
    EXPECT_NEAR(lhs, rhs, 1e-9 * std::max(1.0, std::abs(potential(ei, ej, true, kPaper))));
  }
}

TEST(PotentialGradients, Examples) {
  PotentialGradient g = potential_gradients(12, 3, false, kPaper);
  EXPECT_DOUBLE_EQ(g.self, 0.9 * 12);
  EXPECT_DOUBLE_EQ(g.neighbor, 0);

  g = potential_gradients(12, 12, true, kPaper);
  EXPECT_DOUBLE_EQ(g.self, 0.9 * 12);
  EXPECT_DOUBLE_EQ(g.neighbor, 0);

  g = potential_gradients(100, 0, true, kFigure);
  const double h = 1e-4;
  const double fd_i = (potential(100 + h, 0, true, kFigure) - potential(100 - h, 0, true, kFigure)) / (2 * h);
  const double fd_j = (potential(100, h, true, kFigure) - potential(100, -h, true, kFigure)) / (2 * h);
  EXPECT_NEAR(g.self, fd_i, 1e-6 * std::abs(fd_i));
  EXPECT_NEAR(g.neighbor, fd_j, 1e-6 * std::abs(fd_j));
  EXPECT_NEAR(g.self, -19.208, 1e-3);
  EXPECT_NEAR(g.neighbor, 39.208, 1e-3);
}

TEST(PotentialGradients, FiniteDifferenceProperty) {
  PortableRng rng(99);
  const double h = 1e-4;
  for (int k = 0; k < 10000; ++k) {
    const PotentialParams p{rng.uniform(0.05, 2), rng.uniform(1e3, 2e5), rng.uniform(50, 600)};
    const double ej = rng.uniform(-150, 300);
    const double ei = ej + rng.uniform(-2, 2) * p.width;
    const bool active = k % 2 == 0;
    const PotentialGradient g = potential_gradients(ei, ej, active, p);
    const double fd_i = (potential(ei + h, ej, active, p) - potential(ei - h, ej, active, p)) / (2 * h);
    const double fd_j = (potential(ei, ej + h, active, p) - potential(ei, ej - h, active, p)) / (2 * h);
    ASSERT_NEAR(g.self, fd_i, 1e-6 * std::max(1.0, std::abs(g.self))) << k;
    ASSERT_NEAR(g.neighbor, fd_j, 1e-6 * std::max(1.0, std::abs(g.neighbor))) << k;
  }
}

TEST(EpsilonOffset, FigureParameters) {
  const double eps = epsilon_offset(0, kFigure);
  EXPECT_NEAR(eps, 500 * std::sqrt(2 * std::log(2.0)), 1e-7);
  EXPECT_NEAR(eps, 588.71, 5e-3);
}

TEST(EpsilonOffset, PaperParameters) {
  const double closed = epsilon_offset_closed_form(kPaper);
  EXPECT_NEAR(closed, 100 * std::sqrt(2 * std::log(70000.0 / 9000.0)), 1e-12);
  EXPECT_NEAR(closed, 202.54, 0.01);
  EXPECT_NEAR(epsilon_offset(0, kPaper), closed, 1e-9 * closed);
}

TEST(EpsilonOffset, NoPositiveRoot) {
  EXPECT_FALSE(offset_exists({0.9, 9000, 100}));
  EXPECT_THROW(epsilon_offset(0, {0.9, 9000, 100}), NoPositiveRoot);
  EXPECT_THROW(epsilon_offset(0, {0.9, 5000, 100}), NoPositiveRoot);
  EXPECT_THROW(epsilon_offset_closed_form({0.9, 9000, 100}), NoPositiveRoot);
}

TEST(EpsilonOffset, RootOfGradient) {
  for (double ej : {-80.0, -20.0, 0.0, 15.0, 60.0}) {
    const double eps = epsilon_offset(ej, kPaper);
    EXPECT_NEAR(potential_gradients(ej + eps, ej, true, kPaper).self, 0.0, 1e-7) << ej;
  }
}

// For e_j <= 0 the gradient is negative on the whole interval (0, eps) and
// positive beyond, so the combined minimum sits at a positive offset.
TEST(EpsilonOffset, MinimumShiftNonPositiveNeighbourError) {
  for (const PotentialParams& p : {kPaper, kFigure, PotentialParams{0.9, 11700, 100}}) {
    for (double ej : {-60.0, -10.0, 0.0}) {
      const double eps = epsilon_offset(ej, p);
      for (int k = 1; k < 200; ++k) {
        const double below = eps * k / 200.0;
        const double above = eps + 2 * eps * k / 200.0;
        ASSERT_LT(potential_gradients(ej + below, ej, true, p).self, 0.0) << ej << " " << below;
        ASSERT_GT(potential_gradients(ej + above, ej, true, p).self, 0.0) << ej << " " << above;
      }
    }
  }
}

// For e_j > 0 the gradient starts positive at zero offset (lambda e_j > 0),
// so the sign pattern only holds on a neighbourhood of eps.
TEST(EpsilonOffset, MinimumShiftPositiveNeighbourError) {
  const double ej = 20.0;
  const double eps = epsilon_offset(ej, kPaper);
  EXPECT_GT(potential_gradients(ej + 1e-6, ej, true, kPaper).self, 0.0);
  EXPECT_LT(potential_gradients(ej + 0.9 * eps, ej, true, kPaper).self, 0.0);
  for (int k = 1; k < 200; ++k) {
    ASSERT_GT(potential_gradients(ej + eps + 2 * eps * k / 200.0, ej, true, kPaper).self, 0.0);
  }
}

TEST(DominanceCondition, ContactFails) {
  const ErrorSample s{40, 40};
  const DominanceReport r = check_dominance_condition({&s, 1}, kPaper);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(std::isinf(r.supremum));
  ASSERT_EQ(r.sample_pass.size(), 1u);
  EXPECT_FALSE(r.sample_pass[0]);
}

TEST(DominanceCondition, DirectEvaluation) {
  // e_i = 2 e_j, e_j = 50: rhs = 2 exp(0.125), lhs = 70000 / (10000 * 0.9).
  const ErrorSample s{100, 50};
  const DominanceReport r = check_dominance_condition({&s, 1}, kPaper);
  EXPECT_NEAR(r.supremum, 2 * std::exp(0.125), 1e-12);
  EXPECT_TRUE(r.pass);
  const ErrorSample far{300, 290};
  EXPECT_FALSE(check_dominance_condition({&far, 1}, kPaper).pass);
}

TEST(DominanceCondition, EmptyIsVacuous) {
  const DominanceReport r = check_dominance_condition({}, kPaper);
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.sample_pass.empty());
}

TEST(RangeError, Definition) {
  EXPECT_DOUBLE_EQ(range_error(130, DesiredOrbit{100}), 30);
  EXPECT_DOUBLE_EQ(range_error(70, DesiredOrbit{100}), -30);
}

}  // namespace
}  // namespace enclose
