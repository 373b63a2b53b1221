#ifndef SUFRAME_SYM_MATRIX_H_
#define SUFRAME_SYM_MATRIX_H_

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "suframe/laurent.h"

namespace suframe {

// Square matrix of Polynomials sharing one RelationConfig.
class SymMatrix {
 public:
  static constexpr int kMaxDetDimension = 7;

  SymMatrix(int m, RelationConfig rel);
  static SymMatrix Identity(int m, RelationConfig rel);
  static SymMatrix Diagonal(const std::vector<Polynomial>& diag,
                            RelationConfig rel);

  int dim() const { return m_; }
  const RelationConfig& relations() const { return rel_; }

  const Polynomial& operator()(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * m_ + col)];
  }
  // Throws Error(kRelationMismatch) if `p` was built under other relations.
  void Set(int row, int col, Polynomial p);

  // Throws Error(kDimensionMismatch) on size mismatch.
  SymMatrix operator*(const SymMatrix& other) const;
  SymMatrix ConjTranspose() const;
  // Division-free cofactor expansion with memoized minors; the sum is the
  // Leibniz sum regrouped. Throws Error(kUnsupported) above 7x7.
  Polynomial Det() const;

  bool IsIdentity() const;
  std::vector<std::vector<std::complex<double>>> Eval(
      const Assignment& assignment) const;
  std::set<SymbolId> Symbols() const;
  std::string ToString() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  int m_;
  RelationConfig rel_;
  std::vector<Polynomial> entries_;
};

struct EntryMismatch {
  int row;
  int col;
  Polynomial difference;  // lhs(row, col) - rhs(row, col)
};

// First entry in row-major order where a and b differ.
std::optional<EntryMismatch> FirstMismatch(const SymMatrix& a,
                                           const SymMatrix& b);

// Largest entrywise |a - b| after numeric evaluation.
double MaxEvalDifference(const SymMatrix& a, const SymMatrix& b,
                         const Assignment& assignment);

enum class MatOp { kMul, kConjTranspose, kDet };

// kMul folds left over all args (at least one); kConjTranspose and kDet take
// exactly one argument.
std::variant<SymMatrix, Polynomial> MatOpApply(MatOp op,
                                               std::span<const SymMatrix> args);

}  // namespace suframe

#endif  // SUFRAME_SYM_MATRIX_H_
