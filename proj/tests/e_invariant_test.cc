#include <gtest/gtest.h>

#include <vector>

#include "suframe/e_invariant.h"
#include "suframe/error.h"

namespace suframe {
namespace {

// Classical Bernoulli numbers from sum_{k=0}^{n} C(n+1, k) B_k = 0.
std::vector<Rational> RecurrenceBernoulli(int upto) {
  std::vector<Rational> b{Rational(1)};
  for (int n = 1; n <= upto; ++n) {
    Rational sum(0);
    BigInt binom = 1;  // C(n+1, k)
    for (int k = 0; k < n; ++k) {
      sum += Rational(binom) * b[static_cast<std::size_t>(k)];
      binom = binom * (n + 1 - k) / (k + 1);
    }
    b.push_back(-sum / Rational(n + 1));
  }
  return b;
}

BigInt FactorialOracle(int n) {
  BigInt f = 1;
  for (int k = 1; k <= n; ++k) f *= k;
  return f;
}

Rational Q(std::int64_t n, std::int64_t d) { return RatReduce(n, d); }

TEST(EInvariantTest, BernoulliExamples) {
  EXPECT_EQ(BernoulliTop(1), Q(1, 6));
  EXPECT_EQ(BernoulliTop(1) / Rational(4), Q(1, 24));
  EXPECT_EQ(BernoulliTop(2), Q(1, 30));
  EXPECT_EQ(BernoulliTop(3), Q(1, 42));
  EXPECT_EQ(BernoulliTop(4), Q(1, 30));
  EXPECT_EQ(BernoulliTop(9), Q(43867, 798));
  EXPECT_THROW(BernoulliTop(0), Error);
}

TEST(EInvariantTest, BernoulliMatchesRecurrenceOracle) {
  const auto oracle = RecurrenceBernoulli(24);
  for (int l = 1; l <= 12; ++l) {
    EXPECT_EQ(BernoulliTop(l), oracle[static_cast<std::size_t>(2 * l)].Abs()) << "l=" << l;
    EXPECT_EQ(BernoulliClassical(2 * l), oracle[static_cast<std::size_t>(2 * l)]) << "l=" << l;
  }
}

TEST(EInvariantTest, ImageOfJOrders) {
  const std::int64_t expected[] = {24, 240, 504, 480};
  for (int l = 1; l <= 4; ++l) {
    EXPECT_EQ((BernoulliTop(l) / Rational(4 * l)).den(), expected[l - 1]);
  }
}

TEST(EInvariantTest, ChernPairing) {
  EXPECT_EQ(ChernTopPairing(1), 1);
  EXPECT_EQ(ChernTopPairing(3, true), 6);
  EXPECT_EQ(ChernTopPairing(7), 5040);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(ChernTopPairing(n, true), FactorialOracle(n)) << "N=" << n;
    EXPECT_EQ(ChernTopPairing(n, false), FactorialOracle(n)) << "N=" << n;
  }
  EXPECT_THROW(ChernTopPairing(7, true), Error);
}

TEST(EInvariantTest, AdamsTargetExamples) {
  QmodZ a1 = AdamsTarget(1);
  EXPECT_EQ(a1.signed_value, Q(1, 12));
  EXPECT_EQ(a1.class_rep, Q(1, 12));
  QmodZ a2 = AdamsTarget(2);
  EXPECT_EQ(a2.signed_value, Q(-1, 120));
  EXPECT_EQ(a2.class_rep, Q(119, 120));
  QmodZ a4 = AdamsTarget(4);
  EXPECT_EQ(a4.signed_value, Q(-1, 240));
  EXPECT_EQ(a4.class_rep, Q(239, 240));
}

TEST(EInvariantTest, TheoremValues) {
  EInvariantResult two = ETheorem(2);
  EXPECT_EQ(two.l, 4);
  EXPECT_EQ(two.value.signed_value, Q(-1, 240));
  EXPECT_EQ(two.value.class_rep, Q(239, 240));
  EXPECT_EQ(ElementOrder(two.value), 240);
  EXPECT_EQ(two.GroupLabel(), "SU(4)");

  const auto oracle = RecurrenceBernoulli(18);
  EInvariantResult three = ETheorem(3);
  EXPECT_EQ(three.value.signed_value, oracle[18].Abs() / Rational(18));
  EXPECT_EQ(three.value.signed_value, Q(43867, 14364));
  EXPECT_EQ(three.value.class_rep, Q(775, 14364));

  try {
    ETheorem(1);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfHypothesis);
  }
}

TEST(EInvariantTest, PropositionValues) {
  EInvariantResult one = EProposition(1);
  EXPECT_EQ(one.l, 2);
  EXPECT_EQ(one.value.signed_value, Q(-1, 120));
  EXPECT_EQ(one.value.class_rep, Q(119, 120));
  EXPECT_EQ(ElementOrder(one.value), 120);
  EXPECT_EQ(one.GroupLabel(), "SU(3)/C");
  const auto oracle = RecurrenceBernoulli(12);
  EXPECT_EQ(EProposition(2).value.signed_value, -oracle[12].Abs() / Rational(12));
  EXPECT_THROW(EProposition(0), Error);
}

TEST(EInvariantTest, FormulasAgreeWithAdamsTarget) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(ETheorem(n).value.signed_value, AdamsTarget(n * n).signed_value) << n;
    EXPECT_EQ(ETheorem(n).value.class_rep, AdamsTarget(n * n).class_rep) << n;
  }
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(EProposition(n).value.signed_value, AdamsTarget(n * n + n).signed_value) << n;
  }
}

TEST(EInvariantTest, FromChernCalibration) {
  EXPECT_EQ(EFromChern(4, 5040, -1).signed_value, ETheorem(2).value.signed_value);
  EXPECT_EQ(EFromChern(1, 1, 1).signed_value, AdamsTarget(1).signed_value);
  EXPECT_EQ(EFromChern(1, 1, 1).signed_value, Rational(2) * Q(1, 24));
  for (int l = 1; l <= 10; ++l) {
    EXPECT_TRUE(EFromChern(l, 0, 1).signed_value.IsZero());
    EXPECT_TRUE(EFromChern(l, 0, -1).class_rep.IsZero());
    const int sign = l % 2 == 1 ? 1 : -1;
    QmodZ v = EFromChern(l, FactorialOracle(2 * l - 1), sign);
    EXPECT_EQ(v.signed_value, AdamsTarget(l).signed_value) << l;
    EXPECT_EQ(v.class_rep, AdamsTarget(l).class_rep) << l;
  }
}

TEST(EInvariantTest, ElementOrders) {
  EXPECT_EQ(ElementOrder(QmodZ::From(Q(239, 240))), 240);
  EXPECT_EQ(ElementOrder(QmodZ::From(Rational(0))), 1);
  EXPECT_EQ(ElementOrder(QmodZ::From(Q(1, 12))), 12);
  EXPECT_EQ(ElementOrder(QmodZ::From(Q(-25, 12))), 12);
}

TEST(EInvariantTest, DimensionAudit) {
  AuditReport four = DimensionAudit(4);
  EXPECT_EQ(four.l, 4);
  EXPECT_EQ(four.dim_base, 14);
  EXPECT_EQ(four.chern_power, 7);
  EXPECT_TRUE(four.ok);
  AuditReport three = DimensionAudit(3);
  EXPECT_EQ(three.l, 2);
  EXPECT_EQ(three.dim_base, 6);
  EXPECT_EQ(three.chern_power, 3);
  EXPECT_TRUE(three.ok);
  AuditReport five = DimensionAudit(5);
  EXPECT_EQ(five.l, 6);
  EXPECT_EQ(five.dim_base, 22);
  EXPECT_EQ(five.chern_power, 11);
  for (int m = 3; m <= 8; ++m) {
    AuditReport a = DimensionAudit(m);
    EXPECT_TRUE(a.ok) << m;
    EXPECT_EQ(a.dim_manifold, 4 * a.l - 1);
  }
  EXPECT_THROW(DimensionAudit(2), Error);
}

}  // namespace
}  // namespace suframe
