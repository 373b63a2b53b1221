#include <gtest/gtest.h>

#include "suframe/constructions.h"
#include "suframe/error.h"
#include "suframe/sym_matrix.h"

namespace suframe {
namespace {

const RelationConfig kRel{};

SymMatrix Substituted(const SymMatrix& a, SymbolId s, const GaussianRational& value) {
  SymMatrix out(a.dim(), a.relations());
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) out.Set(r, c, a(r, c).Substitute(s, value));
  }
  return out;
}

TEST(ConstructionsTest, Rot2Entries) {
  SymMatrix m = BuildMatrix(MatrixKind{MatrixTag::kRot2, 2});
  Polynomial r = R(1, 0, kRel);
  Polynomial v = V(1, 0, kRel);
  Polynomial z = Circ("z", kRel);
  EXPECT_EQ(m(0, 0), r * z);
  EXPECT_EQ(m(0, 1), v);
  EXPECT_EQ(m(1, 0), -v.Conj());
  EXPECT_EQ(m(1, 1), r * z.Conj());
}

TEST(ConstructionsTest, SmallDAtThree) {
  SymMatrix d = BuildMatrix(MatrixKind{MatrixTag::kDSmall, 3});
  Polynomial z = Circ("z", kRel);
  EXPECT_EQ(d, SymMatrix::Diagonal({z.Conj().Pow(2), z, z}, kRel));
}

TEST(ConstructionsTest, DegenerateRotationIsDiagonal) {
  SymMatrix a = BuildMatrix(MatrixKind{MatrixTag::kRij, 3, 1, 0});
  a = Substituted(a, SymbolId::Radial(1, 0), GaussianRational(1));
  a = Substituted(a, SymbolId::VParam(1, 0), GaussianRational(0));
  Polynomial z = Circ("z", kRel);
  EXPECT_EQ(a, SymMatrix::Diagonal({z, z.Conj(), Polynomial::Constant(1, kRel)}, kRel));
}

TEST(ConstructionsTest, InvalidIndicesNameTheBound) {
  try {
    BuildMatrix(MatrixKind{MatrixTag::kRij, 3, 3, 0});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidIndex);
    EXPECT_NE(std::string(e.what()).find("i"), std::string::npos);
  }
  EXPECT_THROW(BuildMatrix(MatrixKind{MatrixTag::kDPair, 3, 0, 0, 1}), Error);
  EXPECT_THROW(BuildMatrix(MatrixKind{MatrixTag::kRj, 4, 0, 3}), Error);
}

TEST(ConstructionsTest, ClosedFormAtTwoIsRot2) {
  EXPECT_EQ(ClosedFormBlock(2, 0), BuildMatrix(MatrixKind{MatrixTag::kRot2, 2}));
}

TEST(ConstructionsTest, ClosedFormEntryA10) {
  SymMatrix b = ClosedFormBlock(3, 0);
  Polynomial expected = -(R(2, 0, kRel) * Circ("z", kRel) * V(1, 0, kRel).Conj());
  EXPECT_EQ(b(1, 0), expected);
}

TEST(ConstructionsTest, ClosedFormEntryC13) {
  // c_{1,3;1} needs m_1 >= 3, i.e. m = 5.
  SymMatrix b = ClosedFormBlock(5, 1);
  Polynomial expected =
      -(R(2, 1, kRel) * Circ("z", kRel) * V(1, 1, kRel).Conj() * V(3, 1, kRel));
  EXPECT_EQ(b(1 + 1, 1 + 3), expected);
  SymMatrix b0 = ClosedFormBlock(4, 0);
  EXPECT_EQ(b0(1, 3), -(R(2, 0, kRel) * Circ("z", kRel) * V(1, 0, kRel).Conj() *
                        V(3, 0, kRel)));
}

TEST(ConstructionsTest, ClosedFormIsUpperHessenbergBelowFirstColumn) {
  for (int m = 2; m <= 6; ++m) {
    for (int j = 0; j <= m - 2; ++j) {
      SymMatrix b = ClosedFormBlock(m, j);
      const int mj = m - j - 1;
      for (int s = 1; s <= mj; ++s) {
        for (int t = 1; t < s; ++t) {
          EXPECT_TRUE(b(j + s, j + t).IsZero()) << "m=" << m << " j=" << j;
        }
      }
    }
  }
}

TEST(SymMatrixTest, Rot2IsUnitaryWithUnitDeterminant) {
  SymMatrix a = BuildMatrix(MatrixKind{MatrixTag::kRot2, 2});
  auto prod = MatOpApply(MatOp::kMul, std::vector<SymMatrix>{a.ConjTranspose(), a});
  EXPECT_TRUE(std::get<SymMatrix>(prod).IsIdentity());
  auto det = MatOpApply(MatOp::kDet, std::vector<SymMatrix>{a});
  EXPECT_TRUE(std::get<Polynomial>(det).IsOne());
}

TEST(SymMatrixTest, SmallDIsMultiplicative) {
  Polynomial z = Circ("z", kRel);
  Polynomial zp = Circ("zp", kRel);
  for (int m = 2; m <= 5; ++m) {
    EXPECT_EQ(SmallD(m, z) * SmallD(m, zp), SmallD(m, z * zp));
  }
}

TEST(SymMatrixTest, DimensionMismatchAndDetLimit) {
  try {
    (void)(SymMatrix::Identity(2, kRel) * SymMatrix::Identity(3, kRel));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
  try {
    SymMatrix::Identity(8, kRel).Det();
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupported);
  }
  EXPECT_TRUE(SymMatrix::Identity(7, kRel).Det().IsOne());
}

TEST(SymMatrixTest, DeterminantOfScaledBlock) {
  for (int m = 2; m <= 4; ++m) {
    SymMatrix a = BuildMatrix(MatrixKind{MatrixTag::kRj, m, 0, 0});
    // Scale one row so the determinant is not trivially one.
    SymMatrix s = SymMatrix::Identity(m, kRel);
    s.Set(0, 0, Polynomial::Constant(GaussianRational(Rational(2), Rational(1)), kRel));
    SymMatrix b = s * a;
    EXPECT_EQ(b.Det(), Polynomial::Constant(GaussianRational(Rational(2), Rational(1)), kRel));
  }
}

TEST(SymMatrixTest, FirstMismatchReportsEntry) {
  SymMatrix a = SymMatrix::Identity(3, kRel);
  SymMatrix b = a;
  b.Set(2, 1, Circ("z", kRel));
  auto mm = FirstMismatch(a, b);
  ASSERT_TRUE(mm.has_value());
  EXPECT_EQ(mm->row, 2);
  EXPECT_EQ(mm->col, 1);
  EXPECT_EQ(mm->difference, -Circ("z", kRel));
  EXPECT_FALSE(FirstMismatch(a, a).has_value());
}

TEST(SymMatrixTest, EveryBuilderIsSpecialUnitaryUpToFive) {
  for (int m = 2; m <= 5; ++m) {
    for (const MatrixKind& kind : EnumerateKinds(m, kRel)) {
      SymMatrix a = BuildMatrix(kind);
      EXPECT_TRUE((a * a.ConjTranspose()).IsIdentity()) << kind.ToString();
      EXPECT_TRUE(a.Det().IsOne()) << kind.ToString();
    }
  }
}

}  // namespace
}  // namespace suframe
