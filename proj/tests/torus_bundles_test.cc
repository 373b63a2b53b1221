#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "suframe/torus_bundles.h"

namespace suframe {
namespace {

constexpr double kPi = std::numbers::pi;

double MaxAbs(const CMatrix2& a) { return a.cwiseAbs().maxCoeff(); }

struct Sampler {
  std::mt19937_64 rng{61};
  std::uniform_real_distribution<double> angle{0.0, 2.0 * kPi};
  Complex Phase() { return std::polar(1.0, angle(rng)); }
  double Angle() { return angle(rng); }
};

TEST(TorusBundlesTest, SphereEncodingRoundTrips) {
  Sampler s;
  for (int k = 0; k < 100; ++k) {
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    double r = unit(s.rng);
    Complex w = std::sqrt(1 - r * r) * s.Phase();
    SpherePoint p = SphereFromRw(r, w);
    EXPECT_NEAR(p.first * p.first + std::norm(p.second), 1.0, 1e-12);
    double r_back = std::sqrt((1 - p.first) / 2);
    EXPECT_NEAR(r_back, r, 1e-12);
    EXPECT_NEAR(std::abs(p.second / (2 * r_back) - w), 0.0, 1e-12);
  }
  SpherePoint base = SphereFromRw(1.0, 0.0);
  EXPECT_DOUBLE_EQ(base.first, -1.0);
  EXPECT_EQ(ProjectSU2(CMatrix2::Identity()).first, base.first);
}

TEST(TorusBundlesTest, MuPointExamples) {
  Sampler s;
  for (int k = 0; k < 20; ++k) {
    double theta = s.Angle();
    Complex z = s.Phase();
    EXPECT_LT(SphereDistance(MuPoint(0.0, theta, z), SphereFromRw(1.0, 0.0)), 1e-15);
    EXPECT_LT(SphereDistance(MuPoint(kPi, theta, z), SphereFromRw(0.0, z * std::polar(1.0, theta))),
              1e-15);
    EXPECT_LT(SphereDistance(MuPoint(kPi, theta, z, MuBranch::kLower),
                             MuPoint(kPi, theta, z, MuBranch::kUpper)),
              1e-15);
  }
}

TEST(TorusBundlesTest, MuPointDependsOnFiberOnlyAwayFromBase) {
  Sampler s;
  const double theta = 1.1;
  EXPECT_LT(SphereDistance(MuPoint(0.0, theta, s.Phase()), MuPoint(0.0, theta, s.Phase())), 1e-15);
  EXPECT_GT(SphereDistance(MuPoint(kPi / 2, theta, std::polar(1.0, 0.2)),
                           MuPoint(kPi / 2, theta, std::polar(1.0, 1.7))),
            1e-3);
}

TEST(TorusBundlesTest, MuLiftExamples) {
  Sampler s;
  for (int k = 0; k < 20; ++k) {
    double theta = s.Angle();
    Complex z = s.Phase();
    CMatrix2 base;
    base << std::conj(z), 0.0, 0.0, z;
    EXPECT_LT(MaxAbs(MuLift(0.0, theta, z) - base), 1e-15);
    EXPECT_LT(MaxAbs(MuLift(kPi, theta, z) - Rot2(0.0, std::polar(1.0, theta))), 1e-15);
    EXPECT_LT(MaxAbs(MuLift(2 * kPi - 1e-6, theta, z) - base), 1e-4);
    for (double eta : {0.3, 2.0, 3.5, 5.9}) {
      CMatrix2 u = MuLift(eta, theta, z);
      EXPECT_LT(MaxAbs(u * u.adjoint() - CMatrix2::Identity()), 1e-12);
      EXPECT_LT(std::abs(u.determinant() - 1.0), 1e-12);
    }
  }
}

TEST(TorusBundlesTest, PrintedLiftCoversAtRealFiber) {
  EXPECT_LT(SphereDistance(ProjectSU2(MuLift(kPi / 2, 0.0, 1.0)), MuPoint(kPi / 2, 0.0, 1.0)),
            1e-15);
  // Equivariance with zeta = 1 is the identity action.
  TorusPoint q{1.0, 2.0, std::polar(1.0, 0.4)};
  TorusPoint moved = ActRight(q, 1.0);
  EXPECT_LT(MaxAbs(MuLift(moved.eta, moved.theta, moved.z) - MuLift(q.eta, q.theta, q.z)), 1e-15);
}

TEST(TorusBundlesTest, PrintedLiftCoversTheConjugateFiber) {
  // p(printed lift at z) = mu at conj(z); the conjugate-phase lift covers mu.
  Sampler s;
  for (int k = 0; k < 100; ++k) {
    double eta = s.Angle();
    double theta = s.Angle();
    Complex z = s.Phase();
    EXPECT_LT(SphereDistance(ProjectSU2(MuLift(eta, theta, z)),
                             MuPoint(eta, theta, std::conj(z))),
              1e-12);
    EXPECT_LT(SphereDistance(ProjectSU2(MuLift(eta, theta, z, LiftConvention::kConjugatePhase)),
                             MuPoint(eta, theta, z)),
              1e-12);
  }
}

TEST(TorusBundlesTest, RightActionParametrization) {
  Sampler s;
  for (int m : {4, 5, 6}) {
    for (int k = 1; 2 * k + 1 < m; ++k) {
      TorusPoint q{s.Angle(), s.Angle(), s.Phase()};
      Complex zeta = s.Phase();
      CMatrix lhs = QkElement(m, k, q) * SmallDNumeric(m, zeta);
      CMatrix rhs = QkElement(m, k, ActRight(q, zeta));
      EXPECT_LT((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12);
      EXPECT_LT(SuResidual(lhs), 1e-12);
    }
  }
}

CheckStatus StatusOf(const std::vector<CheckReport>& reports, const std::string& name,
                     const std::string& params) {
  for (const auto& r : reports) {
    if (r.name == name && r.params == params) return r.status;
  }
  ADD_FAILURE() << "missing " << name << " " << params;
  return CheckStatus::kFail;
}

TEST(TorusBundlesTest, PrintedConventionReport) {
  TorusCheckConfig config{4, 200, 7, 1e-10, LiftConvention::kPrinted};
  auto reports = CheckTorusBundle(config);
  const std::string p = "m=4,k=1,convention=printed";
  EXPECT_EQ(StatusOf(reports, "covering[lower]", p), CheckStatus::kExpectedFailConfirmed);
  EXPECT_EQ(StatusOf(reports, "covering[upper]", p), CheckStatus::kExpectedFailConfirmed);
  EXPECT_EQ(StatusOf(reports, "equivariance[lower]", p), CheckStatus::kExpectedFailConfirmed);
  EXPECT_EQ(StatusOf(reports, "equivariance[upper]", p), CheckStatus::kExpectedFailConfirmed);
  EXPECT_EQ(StatusOf(reports, "seam[eta=pi]", p), CheckStatus::kPass);
  EXPECT_EQ(StatusOf(reports, "seam[eta=0|2pi]", p), CheckStatus::kPass);
  EXPECT_EQ(StatusOf(reports, "action-parametrization", p), CheckStatus::kPass);
}

TEST(TorusBundlesTest, ConjugatePhaseConventionReport) {
  for (int m : {4, 5, 6}) {
    TorusCheckConfig config{m, 200, 8, 1e-10, LiftConvention::kConjugatePhase};
    for (const auto& r : CheckTorusBundle(config)) {
      if (r.name == "equivariance[upper]") {
        EXPECT_EQ(r.status, CheckStatus::kExpectedFailConfirmed) << r.params;
      } else {
        EXPECT_EQ(r.status, CheckStatus::kPass) << r.name << " " << r.params << " " << r.note;
      }
    }
  }
}

TEST(TorusBundlesTest, DeterministicForSeed) {
  TorusCheckConfig config{6, 50, 3, 1e-10, LiftConvention::kPrinted};
  auto a = CheckTorusBundle(config);
  auto b = CheckTorusBundle(config);
  ASSERT_EQ(a.size(), b.size());
  EXPECT_EQ(a.size(), 2u * 7u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].note, b[i].note);
    EXPECT_EQ(a[i].status, b[i].status);
  }
}

}  // namespace
}  // namespace suframe
