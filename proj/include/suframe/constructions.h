#ifndef SUFRAME_CONSTRUCTIONS_H_
#define SUFRAME_CONSTRUCTIONS_H_

// Builders for the SU(m) matrix families: the 2x2 rotation R(a, b), its
// embeddings R_{i;j}, the circle-subgroup diagonals d(z), d_j(z), D_j(z),
// the block products R^{i}_j, R_j, their full product, the torus diagonal
// D(a, b), and the twisted product R~.
//
// Indices follow the usual conventions: 0 <= j <= m-2, m_j = m-j-1,
// 1 <= i <= m_j, 1 <= k <= m/2 - 1. Rows and columns are 0-based in code;
// R_{i;j} acts on rows j and j+i.
//
// Symbol scheme: r{i,j}, v{i,j}; circle "z" for the common phase, "z<i>"
// for per-factor phases, "zp"/"zp<i>" for primed phases, "t<2k-1>" and
// "t<2k>" for torus coordinates, "w" and "u" as auxiliary circles.

#include <string>
#include <vector>

#include "suframe/sym_matrix.h"

namespace suframe {

enum class MatrixTag {
  kRot2,
  kRij,
  kDSmall,
  kDjSmall,
  kDjCap,
  kRHatIJ,
  kRj,
  kRFull,
  kDPair,
  kRTilde,
};

const char* MatrixTagName(MatrixTag tag);

struct MatrixKind {
  MatrixTag tag = MatrixTag::kRot2;
  int m = 2;
  int i = 0;
  int j = 0;
  int k = 0;
  RelationConfig rel{};

  std::string ToString() const;
};

// Throws Error(kInvalidIndex) naming the violated bound.
void ValidateKind(const MatrixKind& kind);

// Builds the family member with the default symbol scheme.
SymMatrix BuildMatrix(const MatrixKind& kind);

// Every valid MatrixKind of size m (all index tuples).
std::vector<MatrixKind> EnumerateKinds(int m, RelationConfig rel);

// Symbol shorthands.
Polynomial Sym(SymbolId s, RelationConfig rel);
Polynomial R(int i, int j, RelationConfig rel);
Polynomial V(int i, int j, RelationConfig rel);
Polynomial Circ(const std::string& name, RelationConfig rel);
Polynomial Circ(const std::string& prefix, int index, RelationConfig rel);

// Parametrized builders. `alpha`/`beta` are arbitrary entries; `u` must be
// a circle-valued polynomial (a product of circle symbols), so conj(u) is
// its inverse under circle_pairs.
SymMatrix RotationBlock(int m, int p, int q, const Polynomial& alpha,
                        const Polynomial& beta);
SymMatrix Rij(int m, int i, int j, const Polynomial& alpha,
              const Polynomial& beta);
SymMatrix SmallD(int m, const Polynomial& u);
SymMatrix SmallDj(int m, int j, const Polynomial& u);
SymMatrix CapDj(int m, int j, const Polynomial& u);
// R^{i}_j(r u, v): factors s != i are R_{s;j}(u, 0), then times D_j(u).
SymMatrix RHat(int m, int i, int j, const Polynomial& r, const Polynomial& v,
               const Polynomial& u);
// R_j = prod_i R^{i}_j(r_i u_i, v_i); vectors are indexed by i-1.
SymMatrix RBlock(int m, int j, const std::vector<Polynomial>& r,
                 const std::vector<Polynomial>& v,
                 const std::vector<Polynomial>& u);
// D(a, b) = diag(1 x (2k-1), a, conj(a) b, conj(b), 1, ...).
SymMatrix DPair(int m, int k, const Polynomial& a, const Polynomial& b);

// Product prod_{i=1}^{m_j} R_{i;j}(r{i,j} u, v{i,j}) and
// prod_{i=1}^{m_j} R_{i;j}(r{i,j}, u^i v{i,j}).
SymMatrix BlockProduct(int m, int j, const Polynomial& u);
SymMatrix BlockProductShifted(int m, int j, const Polynomial& u);

// Entry-formula assembly of the block product with u = z, independent of
// matrix multiplication.
SymMatrix ClosedFormBlock(int m, int j, RelationConfig rel = {});

}  // namespace suframe

#endif  // SUFRAME_CONSTRUCTIONS_H_
