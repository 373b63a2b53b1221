#include "suframe/sym_matrix.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "suframe/error.h"

namespace suframe {

SymMatrix::SymMatrix(int m, RelationConfig rel)
    : m_(m), rel_(rel), entries_(static_cast<std::size_t>(m * m), Polynomial(rel)) {
  if (m < 1) throw Error(ErrorCode::kDimensionMismatch, "matrix dimension < 1");
}

SymMatrix SymMatrix::Identity(int m, RelationConfig rel) {
  SymMatrix out(m, rel);
  for (int d = 0; d < m; ++d) out.Set(d, d, Polynomial::Constant(1, rel));
  return out;
}

SymMatrix SymMatrix::Diagonal(const std::vector<Polynomial>& diag,
                              RelationConfig rel) {
  SymMatrix out(static_cast<int>(diag.size()), rel);
  for (int d = 0; d < out.m_; ++d) out.Set(d, d, diag[static_cast<std::size_t>(d)]);
  return out;
}

void SymMatrix::Set(int row, int col, Polynomial p) {
  if (!(p.relations() == rel_)) {
    throw Error(ErrorCode::kRelationMismatch, "entry relations differ from matrix");
  }
  entries_[static_cast<std::size_t>(row * m_ + col)] = std::move(p);
}

SymMatrix SymMatrix::operator*(const SymMatrix& other) const {
  if (m_ != other.m_) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::to_string(m_) + "x" + std::to_string(m_) + " times " +
                    std::to_string(other.m_) + "x" + std::to_string(other.m_));
  }
  if (!(rel_ == other.rel_)) {
    throw Error(ErrorCode::kRelationMismatch, "matrix product");
  }
  SymMatrix out(m_, rel_);
  for (int r = 0; r < m_; ++r) {
    for (int k = 0; k < m_; ++k) {
      const Polynomial& a = (*this)(r, k);
      if (a.IsZero()) continue;
      for (int c = 0; c < m_; ++c) {
        const Polynomial& b = other(k, c);
        if (b.IsZero()) continue;
        out.entries_[static_cast<std::size_t>(r * m_ + c)] += a * b;
      }
    }
  }
  return out;
}

SymMatrix SymMatrix::ConjTranspose() const {
  SymMatrix out(m_, rel_);
  for (int r = 0; r < m_; ++r) {
    for (int c = 0; c < m_; ++c) out.Set(c, r, (*this)(r, c).Conj());
  }
  return out;
}

Polynomial SymMatrix::Det() const {
  if (m_ > kMaxDetDimension) {
    throw Error(ErrorCode::kUnsupported,
                "determinant limited to m <= 7, got m = " + std::to_string(m_));
  }
  // minor[mask] = det of the bottom popcount(mask) rows restricted to the
  // columns in mask.
  const unsigned full = (1u << m_) - 1u;
  std::vector<Polynomial> minor(full + 1u, Polynomial(rel_));
  minor[0] = Polynomial::Constant(1, rel_);
  for (unsigned mask = 1; mask <= full; ++mask) {
    int row = m_ - std::popcount(mask);
    Polynomial acc(rel_);
    int position = 0;
    for (int c = 0; c < m_; ++c) {
      if (!(mask & (1u << c))) continue;
      const Polynomial& entry = (*this)(row, c);
      const Polynomial& sub = minor[mask & ~(1u << c)];
      if (!entry.IsZero() && !sub.IsZero()) {
        Polynomial term = entry * sub;
        if (position % 2 == 0) {
          acc += term;
        } else {
          acc -= term;
        }
      }
      ++position;
    }
    minor[mask] = std::move(acc);
  }
  return minor[full];
}

bool SymMatrix::IsIdentity() const {
  return *this == Identity(m_, rel_);
}

std::vector<std::vector<std::complex<double>>> SymMatrix::Eval(
    const Assignment& assignment) const {
  std::vector<std::vector<std::complex<double>>> out(
      static_cast<std::size_t>(m_),
      std::vector<std::complex<double>>(static_cast<std::size_t>(m_)));
  for (int r = 0; r < m_; ++r) {
    for (int c = 0; c < m_; ++c) {
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          (*this)(r, c).Eval(assignment);
    }
  }
  return out;
}

std::set<SymbolId> SymMatrix::Symbols() const {
  std::set<SymbolId> out;
  for (const auto& p : entries_) {
    auto s = p.Symbols();
    out.insert(s.begin(), s.end());
  }
  return out;
}

std::string SymMatrix::ToString() const {
  std::string out = "[";
  for (int r = 0; r < m_; ++r) {
    out += r == 0 ? "[" : ", [";
    for (int c = 0; c < m_; ++c) {
      if (c > 0) out += ", ";
      out += (*this)(r, c).ToString();
    }
    out += "]";
  }
  return out + "]";
}

std::optional<EntryMismatch> FirstMismatch(const SymMatrix& a,
                                           const SymMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "comparing matrices of different size");
  }
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      if (!(a(r, c) == b(r, c))) return EntryMismatch{r, c, a(r, c) - b(r, c)};
    }
  }
  return std::nullopt;
}

double MaxEvalDifference(const SymMatrix& a, const SymMatrix& b,
                         const Assignment& assignment) {
  auto ea = a.Eval(assignment);
  auto eb = b.Eval(assignment);
  double worst = 0.0;
  for (std::size_t r = 0; r < ea.size(); ++r) {
    for (std::size_t c = 0; c < ea.size(); ++c) {
      worst = std::max(worst, std::abs(ea[r][c] - eb[r][c]));
    }
  }
  return worst;
}

std::variant<SymMatrix, Polynomial> MatOpApply(MatOp op,
                                               std::span<const SymMatrix> args) {
  if (args.empty()) throw Error(ErrorCode::kDimensionMismatch, "no matrix arguments");
  switch (op) {
    case MatOp::kMul: {
      SymMatrix acc = args[0];
      for (std::size_t t = 1; t < args.size(); ++t) acc = acc * args[t];
      return acc;
    }
    case MatOp::kConjTranspose:
      if (args.size() != 1) break;
      return args[0].ConjTranspose();
    case MatOp::kDet:
      if (args.size() != 1) break;
      return args[0].Det();
  }
  throw Error(ErrorCode::kDimensionMismatch, "operation takes exactly one matrix");
}

}  // namespace suframe
