#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "suframe/error.h"
#include "suframe/numeric_lab.h"

namespace suframe {
namespace {

constexpr double kPi = std::numbers::pi;

double MaxAbs(const CMatrix& a) { return a.cwiseAbs().maxCoeff(); }

CellPoint RandomPoint(int m, std::uint64_t seed, bool torus = false) {
  return SampleCell(m, seed, SampleOptions{true, 0.3, torus});
}

TEST(NumericLabTest, SamplingContract) {
  CellPoint x = SampleCell(5, 42, SampleOptions{true, 0.3, true});
  ASSERT_EQ(x.sphere.size(), 4u);
  for (std::size_t j = 0; j < x.sphere.size(); ++j) {
    ASSERT_EQ(x.sphere[j].size(), 4u - j);
    for (const auto& c : x.sphere[j]) {
      EXPECT_GE(c.r, 0.3);
      EXPECT_LE(c.r, 1.0);
      EXPECT_LT(std::abs(c.r * c.r + std::norm(c.w) - 1.0), 1e-14);
    }
  }
  ASSERT_EQ(x.torus.size(), 1u);
  EXPECT_GE(std::abs(std::arg(x.torus[0].z)), 1e-3 - 1e-15);
  CellPoint y = SampleCell(5, 42, SampleOptions{true, 0.3, true});
  EXPECT_EQ(CellDistance(x, y), 0.0);
  EXPECT_THROW(SampleCell(3, 1, SampleOptions{true, 1.0, false}), Error);
}

TEST(NumericLabTest, DegenerateAndBasePoints) {
  CellPoint x = RandomPoint(4, 3);
  for (auto& block : x.sphere) {
    for (auto& c : block) c = SphereCoord{1.0, 0.0};
  }
  EXPECT_LT(MaxAbs(EvalCellMap(x) - CMatrix::Identity(4, 4)), 1e-15);

  CellPoint two = RandomPoint(2, 4);
  const SphereCoord c = two.sphere[0][0];
  EXPECT_LT(MaxAbs(EvalCellMap(two) - CMatrix(Rot2(c.r, c.w))), 1e-15);
}

TEST(NumericLabTest, FirstColumnAtThreeMatchesEntryFormulas) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CellPoint x = RandomPoint(3, seed);
    const SphereCoord a = x.sphere[0][0];
    const SphereCoord b = x.sphere[0][1];
    CMatrix g = EvalCellMap(x);
    EXPECT_LT(std::abs(g(0, 0) - a.r * b.r), 1e-12);
    EXPECT_LT(std::abs(g(1, 0) + b.r * std::conj(a.w)), 1e-12);
    EXPECT_LT(std::abs(g(2, 0) + std::conj(b.w)), 1e-12);
  }
}

TEST(NumericLabTest, CellMapLandsInSpecialUnitaryGroup) {
  for (int m = 2; m <= 8; ++m) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      CellPoint x = SampleCell(m, seed, SampleOptions{false, 0.0, true});
      EXPECT_LT(SuResidual(EvalCellMap(x)), 1e-10) << "m=" << m;
    }
  }
}

TEST(NumericLabTest, CosetEqualExamples) {
  for (int m = 2; m <= 6; ++m) {
    CMatrix g = EvalCellMap(RandomPoint(m, 10 + m, m >= 4));
    EXPECT_TRUE(CosetEqual(g, g * SmallDNumeric(m, std::polar(1.0, 0.3)), CosetGroup::kS, 1e-10));
    CMatrix rot = EmbedRotation(m, 0, 1, std::cos(0.4), std::sin(0.4) * std::polar(1.0, 1.0));
    EXPECT_FALSE(CosetEqual(g, g * rot, CosetGroup::kS, 1e-8));
  }
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int m : {3, 5, 7}) {
    for (int k = 0; k < 20; ++k) {
      CMatrix g = EvalCellMap(RandomPoint(m, 100 + k, m >= 5));
      Complex z = std::polar(1.0, angle(rng));
      Complex zeta = std::polar(1.0, angle(rng));
      CMatrix h = g * SxCElement(m, z, zeta);
      EXPECT_TRUE(CosetEqual(g, h, CosetGroup::kSxC, 1e-10)) << "m=" << m;
      EXPECT_FALSE(CosetEqual(g, h, CosetGroup::kS, 1e-8)) << "m=" << m;
    }
  }
}

TEST(NumericLabTest, CosetEqualRejectsBadInput) {
  CMatrix g = EvalCellMap(RandomPoint(3, 1));
  try {
    CosetEqual(g, 2.0 * g, CosetGroup::kS, 1e-10);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNonUnitary);
  }
  CMatrix four = EvalCellMap(RandomPoint(4, 1));
  EXPECT_THROW(CosetEqual(four, four, CosetGroup::kSxC, 1e-10), Error);
  EXPECT_THROW(CosetEqual(g, four, CosetGroup::kS, 1e-10), Error);
}

TEST(NumericLabPropertyTest, CosetEqualityIsAnEquivalenceOnOrbits) {
  std::mt19937_64 rng(72);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int m : {3, 4, 5}) {
    for (int k = 0; k < 50; ++k) {
      CMatrix g = EvalCellMap(RandomPoint(m, 200 + k, m >= 4));
      CMatrix a = g * SmallDNumeric(m, std::polar(1.0, angle(rng)));
      CMatrix b = a * SmallDNumeric(m, std::polar(1.0, angle(rng)));
      EXPECT_TRUE(CosetEqual(g, g, CosetGroup::kS, 1e-10));
      EXPECT_EQ(CosetEqual(g, a, CosetGroup::kS, 1e-10), CosetEqual(a, g, CosetGroup::kS, 1e-10));
      EXPECT_TRUE(CosetEqual(g, a, CosetGroup::kS, 1e-10));
      EXPECT_TRUE(CosetEqual(a, b, CosetGroup::kS, 1e-10));
      EXPECT_TRUE(CosetEqual(g, b, CosetGroup::kS, 1e-10));
    }
  }
}

TEST(NumericLabTest, RecoverIdentity) {
  CellPoint x = RecoverCell(CMatrix::Identity(4, 4), 4);
  for (const auto& block : x.sphere) {
    for (const auto& c : block) {
      EXPECT_DOUBLE_EQ(c.r, 1.0);
      EXPECT_EQ(c.w, Complex(0.0));
    }
  }
}

TEST(NumericLabTest, RecoverPrescribedPoint) {
  std::mt19937_64 rng(73);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  CellPoint x;
  x.m = 3;
  const double r[3] = {0.6, 0.8, 0.7};
  x.sphere = {{SphereCoord{r[0], std::sqrt(1 - r[0] * r[0]) * std::polar(1.0, angle(rng))},
               SphereCoord{r[1], std::sqrt(1 - r[1] * r[1]) * std::polar(1.0, angle(rng))}},
              {SphereCoord{r[2], std::sqrt(1 - r[2] * r[2]) * std::polar(1.0, angle(rng))}}};
  EXPECT_LT(CellDistance(RecoverCell(EvalCellMap(x), 3), x), 1e-9);
}

TEST(NumericLabTest, RecoverRejectsShiftedRepresentative) {
  CMatrix g = EvalCellMap(RandomPoint(3, 5)) * SmallDNumeric(3, std::polar(1.0, 0.3));
  try {
    RecoverCell(g, 3);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotCanonical);
  }
}

TEST(NumericLabTest, RecoverFlagsIllConditionedRadii) {
  CellPoint x = RandomPoint(3, 6);
  x.sphere[0][1] = SphereCoord{1e-9, std::sqrt(1 - 1e-18) * std::polar(1.0, 0.5)};
  try {
    RecoverCell(EvalCellMap(x), 3);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIllConditioned);
  }
}

TEST(NumericLabTest, RoundtripTrials) {
  for (int m : {3, 4, 5}) {
    TrialReport t = RoundtripTrial(m, 100, 1, 1e-9);
    EXPECT_EQ(t.trials, 100);
    EXPECT_EQ(t.failures, 0) << "m=" << m << " worst " << t.worst_error;
  }
  TrialReport zero = RoundtripTrial(3, 20, 1, 0.0);
  EXPECT_EQ(zero.failures, 20);
  EXPECT_TRUE(zero.witness.has_value());
}

TEST(NumericLabTest, CollisionTrials) {
  EXPECT_EQ(CollisionTrial(3, 2000, 42, CellMapKind::kPhi).failures, 0);
  EXPECT_EQ(CollisionTrial(4, 2000, 42, CellMapKind::kPsi).failures, 0);
  EXPECT_EQ(CollisionTrial(5, 2000, 42, CellMapKind::kPsiModC).failures, 0);
  TrialReport t = CollisionTrial(3, 10, 9, CellMapKind::kPhi);
  EXPECT_EQ(t.seed, 9u);
  EXPECT_GT(t.worst_error, kCollisionTol);
}

TEST(NumericLabTest, CollisionDetectorSelfTest) {
  for (int m : {3, 5}) {
    CellPoint x = SampleCell(m, 77, SampleOptions{true, 1e-3, true});
    EXPECT_TRUE(SameImage(x, x, CellMapKind::kPhi));
    EXPECT_TRUE(SameImage(x, x, CellMapKind::kPsiModC));
  }
  CellPoint y = SampleCell(4, 78, SampleOptions{true, 1e-3, true});
  EXPECT_TRUE(SameImage(y, y, CellMapKind::kPsi));
}

TEST(NumericLabTest, CollisionPreconditions) {
  EXPECT_THROW(CollisionTrial(3, 1, 1, CellMapKind::kPsi), Error);
  EXPECT_THROW(CollisionTrial(4, 1, 1, CellMapKind::kPsiModC), Error);
}

TEST(NumericLabTest, DimensionBookkeeping) {
  for (int n : {2, 3, 4}) {
    const int m = 2 * n;
    DimensionCount d = CellDimension(m);
    EXPECT_EQ(d.cell_parameters, 4 * n * n - 2);
    EXPECT_EQ(d.cell_parameters, d.quotient_dimension);
    EXPECT_EQ(SampleCell(m, 1, SampleOptions{true, 0.3, true}).RealParameterCount(),
              d.cell_parameters);
  }
  for (int m : {3, 5, 7}) {
    DimensionCount d = CellDimension(m);
    EXPECT_EQ(d.cell_parameters, m * m - 3);
    EXPECT_EQ(d.cell_parameters, d.quotient_dimension);
    EXPECT_EQ(SampleCell(m, 1, SampleOptions{true, 0.3, true}).RealParameterCount(),
              d.cell_parameters);
  }
}

}  // namespace
}  // namespace suframe
