#include "suframe/constructions.h"

#include <sstream>

#include "suframe/error.h"

namespace suframe {
namespace {

void Require(bool ok, const std::string& bound) {
  if (!ok) throw Error(ErrorCode::kInvalidIndex, "violated bound " + bound);
}

void CheckBlockIndex(int m, int j) {
  Require(m >= 2, "m >= 2 (m = " + std::to_string(m) + ")");
  Require(j >= 0 && j <= m - 2,
          "0 <= j <= m-2 (j = " + std::to_string(j) + ", m = " + std::to_string(m) + ")");
}

void CheckFactorIndex(int m, int i, int j) {
  CheckBlockIndex(m, j);
  Require(i >= 1 && i <= m - j - 1,
          "1 <= i <= m_j = " + std::to_string(m - j - 1) +
              " (i = " + std::to_string(i) + ")");
}

void CheckTorusIndex(int m, int k) {
  Require(k >= 1 && k <= m / 2 - 1,
          "1 <= k <= m/2-1 = " + std::to_string(m / 2 - 1) +
              " (k = " + std::to_string(k) + ")");
}

// r{from,j} * ... * r{to,j}; empty range gives 1.
Polynomial RadialRun(int from, int to, int j, RelationConfig rel) {
  Polynomial out = Polynomial::Constant(1, rel);
  for (int s = from; s <= to; ++s) out = out * R(s, j, rel);
  return out;
}

}  // namespace

const char* MatrixTagName(MatrixTag tag) {
  switch (tag) {
    case MatrixTag::kRot2: return "ROT2";
    case MatrixTag::kRij: return "R_IJ";
    case MatrixTag::kDSmall: return "D_SMALL";
    case MatrixTag::kDjSmall: return "D_J_SMALL";
    case MatrixTag::kDjCap: return "D_J_CAP";
    case MatrixTag::kRHatIJ: return "R_HAT_IJ";
    case MatrixTag::kRj: return "R_J";
    case MatrixTag::kRFull: return "R_FULL";
    case MatrixTag::kDPair: return "D_PAIR";
    case MatrixTag::kRTilde: return "R_TILDE";
  }
  return "?";
}

std::string MatrixKind::ToString() const {
  std::ostringstream os;
  os << MatrixTagName(tag) << "(m=" << m;
  switch (tag) {
    case MatrixTag::kRij:
    case MatrixTag::kRHatIJ: os << ",i=" << i << ",j=" << j; break;
    case MatrixTag::kDjSmall:
    case MatrixTag::kDjCap:
    case MatrixTag::kRj: os << ",j=" << j; break;
    case MatrixTag::kDPair: os << ",k=" << k; break;
    default: break;
  }
  os << ")";
  return os.str();
}

void ValidateKind(const MatrixKind& kind) {
  switch (kind.tag) {
    case MatrixTag::kRot2:
      Require(kind.m == 2, "ROT2 requires m = 2");
      break;
    case MatrixTag::kRij:
    case MatrixTag::kRHatIJ:
      CheckFactorIndex(kind.m, kind.i, kind.j);
      break;
    case MatrixTag::kDSmall:
    case MatrixTag::kRFull:
      Require(kind.m >= 2, "m >= 2");
      break;
    case MatrixTag::kDjSmall:
    case MatrixTag::kRj:
      CheckBlockIndex(kind.m, kind.j);
      break;
    case MatrixTag::kDjCap:
      CheckBlockIndex(kind.m, kind.j);
      break;
    case MatrixTag::kDPair:
      Require(kind.m >= 4, "D_PAIR requires m >= 4");
      CheckTorusIndex(kind.m, kind.k);
      break;
    case MatrixTag::kRTilde:
      Require(kind.m >= 2, "m >= 2");
      break;
  }
}

Polynomial Sym(SymbolId s, RelationConfig rel) { return Polynomial::Symbol(s, rel); }
Polynomial R(int i, int j, RelationConfig rel) { return Sym(SymbolId::Radial(i, j), rel); }
Polynomial V(int i, int j, RelationConfig rel) { return Sym(SymbolId::VParam(i, j), rel); }
Polynomial Circ(const std::string& name, RelationConfig rel) {
  return Sym(SymbolId::Circle(name), rel);
}
Polynomial Circ(const std::string& prefix, int index, RelationConfig rel) {
  return Circ(prefix + std::to_string(index), rel);
}

SymMatrix RotationBlock(int m, int p, int q, const Polynomial& alpha,
                        const Polynomial& beta) {
  RelationConfig rel = alpha.relations();
  SymMatrix out = SymMatrix::Identity(m, rel);
  out.Set(p, p, alpha);
  out.Set(p, q, beta);
  out.Set(q, p, -beta.Conj());
  out.Set(q, q, alpha.Conj());
  return out;
}

SymMatrix Rij(int m, int i, int j, const Polynomial& alpha,
              const Polynomial& beta) {
  CheckFactorIndex(m, i, j);
  return RotationBlock(m, j, j + i, alpha, beta);
}

SymMatrix SmallD(int m, const Polynomial& u) {
  RelationConfig rel = u.relations();
  std::vector<Polynomial> diag(static_cast<std::size_t>(m), u);
  diag[0] = u.Conj().Pow(static_cast<unsigned>(m - 1));
  return SymMatrix::Diagonal(diag, rel);
}

SymMatrix SmallDj(int m, int j, const Polynomial& u) {
  CheckBlockIndex(m, j);
  RelationConfig rel = u.relations();
  std::vector<Polynomial> diag(static_cast<std::size_t>(m), u);
  for (int d = 0; d < j; ++d) diag[static_cast<std::size_t>(d)] = Polynomial::Constant(1, rel);
  diag[static_cast<std::size_t>(j)] = u.Conj().Pow(static_cast<unsigned>(m - j - 1));
  return SymMatrix::Diagonal(diag, rel);
}

SymMatrix CapDj(int m, int j, const Polynomial& u) {
  CheckBlockIndex(m, j);
  RelationConfig rel = u.relations();
  if (j == 0) return SymMatrix::Identity(m, rel);
  std::vector<Polynomial> diag(static_cast<std::size_t>(m), Polynomial::Constant(1, rel));
  diag[0] = u.Pow(static_cast<unsigned>(m - 1));
  for (int d = 1; d < j; ++d) diag[static_cast<std::size_t>(d)] = u.Conj();
  diag[static_cast<std::size_t>(j)] = u.Conj().Pow(static_cast<unsigned>(m - j));
  return SymMatrix::Diagonal(diag, rel);
}

SymMatrix RHat(int m, int i, int j, const Polynomial& r, const Polynomial& v,
               const Polynomial& u) {
  CheckFactorIndex(m, i, j);
  RelationConfig rel = u.relations();
  SymMatrix out = SymMatrix::Identity(m, rel);
  Polynomial zero(rel);
  for (int s = 1; s <= m - j - 1; ++s) {
    out = out * (s == i ? Rij(m, s, j, r * u, v) : Rij(m, s, j, u, zero));
  }
  return out * CapDj(m, j, u);
}

SymMatrix RBlock(int m, int j, const std::vector<Polynomial>& r,
                 const std::vector<Polynomial>& v,
                 const std::vector<Polynomial>& u) {
  CheckBlockIndex(m, j);
  const std::size_t mj = static_cast<std::size_t>(m - j - 1);
  if (r.size() != mj || v.size() != mj || u.size() != mj) {
    throw Error(ErrorCode::kDimensionMismatch, "R_j parameter lists must have m_j entries");
  }
  SymMatrix out = SymMatrix::Identity(m, u[0].relations());
  for (std::size_t t = 0; t < mj; ++t) {
    out = out * RHat(m, static_cast<int>(t) + 1, j, r[t], v[t], u[t]);
  }
  return out;
}

SymMatrix DPair(int m, int k, const Polynomial& a, const Polynomial& b) {
  Require(m >= 4, "D_PAIR requires m >= 4");
  CheckTorusIndex(m, k);
  RelationConfig rel = a.relations();
  std::vector<Polynomial> diag(static_cast<std::size_t>(m), Polynomial::Constant(1, rel));
  const auto p = static_cast<std::size_t>(2 * k - 1);
  diag[p] = a;
  diag[p + 1] = a.Conj() * b;
  diag[p + 2] = b.Conj();
  return SymMatrix::Diagonal(diag, rel);
}

SymMatrix BlockProduct(int m, int j, const Polynomial& u) {
  CheckBlockIndex(m, j);
  RelationConfig rel = u.relations();
  SymMatrix out = SymMatrix::Identity(m, rel);
  for (int i = 1; i <= m - j - 1; ++i) out = out * Rij(m, i, j, R(i, j, rel) * u, V(i, j, rel));
  return out;
}

SymMatrix BlockProductShifted(int m, int j, const Polynomial& u) {
  CheckBlockIndex(m, j);
  RelationConfig rel = u.relations();
  SymMatrix out = SymMatrix::Identity(m, rel);
  for (int i = 1; i <= m - j - 1; ++i) {
    out = out * Rij(m, i, j, R(i, j, rel), u.Pow(static_cast<unsigned>(i)) * V(i, j, rel));
  }
  return out;
}

SymMatrix ClosedFormBlock(int m, int j, RelationConfig rel) {
  CheckBlockIndex(m, j);
  const int mj = m - j - 1;
  Polynomial z = Circ("z", rel);
  Polynomial zb = z.Conj();
  auto zpow = [&](int e) { return z.Pow(static_cast<unsigned>(e)); };
  auto vb = [&](int s) { return V(s, j, rel).Conj(); };
  auto at = [&](int s, int t) { return std::pair{j + s, j + t}; };

  SymMatrix out = SymMatrix::Identity(m, rel);
  auto put = [&](std::pair<int, int> rc, Polynomial p) { out.Set(rc.first, rc.second, std::move(p)); };

  // First column a_{s;j}.
  put(at(0, 0), RadialRun(1, mj, j, rel) * zpow(mj));
  for (int s = 1; s <= mj - 1; ++s) {
    put(at(s, 0), -(RadialRun(s + 1, mj, j, rel) * zpow(mj - s) * vb(s)));
  }
  put(at(mj, 0), -vb(mj));

  // First row b_{s;j}.
  put(at(0, 1), V(1, j, rel));
  for (int s = 2; s <= mj; ++s) {
    put(at(0, s), RadialRun(1, s - 1, j, rel) * zpow(s - 1) * V(s, j, rel));
  }

  // Lower-right block c_{s,t;j}.
  for (int s = 1; s <= mj; ++s) {
    for (int t = 1; t <= mj; ++t) {
      Polynomial c(rel);
      if (s == t) {
        c = R(s, j, rel) * zb;
      } else if (t == s + 1) {
        c = -(vb(s) * V(s + 1, j, rel));
      } else if (s <= t - 2) {
        c = -(RadialRun(s + 1, t - 1, j, rel) * zpow(t - s - 1) * vb(s) * V(t, j, rel));
      }
      put(at(s, t), std::move(c));
    }
  }
  return out;
}

SymMatrix BuildMatrix(const MatrixKind& kind) {
  ValidateKind(kind);
  const RelationConfig rel = kind.rel;
  const int m = kind.m;
  Polynomial z = Circ("z", rel);
  auto per_factor = [&](int j) {
    std::vector<Polynomial> r, v, u;
    for (int i = 1; i <= m - j - 1; ++i) {
      r.push_back(R(i, j, rel));
      v.push_back(V(i, j, rel));
      u.push_back(Circ("z", i, rel));
    }
    return RBlock(m, j, r, v, u);
  };
  switch (kind.tag) {
    case MatrixTag::kRot2:
      return RotationBlock(2, 0, 1, R(1, 0, rel) * z, V(1, 0, rel));
    case MatrixTag::kRij:
      return Rij(m, kind.i, kind.j, R(kind.i, kind.j, rel) * z, V(kind.i, kind.j, rel));
    case MatrixTag::kDSmall:
      return SmallD(m, z);
    case MatrixTag::kDjSmall:
      return SmallDj(m, kind.j, z);
    case MatrixTag::kDjCap:
      return CapDj(m, kind.j, z);
    case MatrixTag::kRHatIJ:
      return RHat(m, kind.i, kind.j, R(kind.i, kind.j, rel), V(kind.i, kind.j, rel), z);
    case MatrixTag::kRj:
      return per_factor(kind.j);
    case MatrixTag::kRFull: {
      SymMatrix out = SymMatrix::Identity(m, rel);
      for (int j = 0; j <= m - 2; ++j) out = out * per_factor(j);
      return out;
    }
    case MatrixTag::kDPair:
      return DPair(m, kind.k, Circ("t", 2 * kind.k - 1, rel), z * Circ("t", 2 * kind.k, rel));
    case MatrixTag::kRTilde: {
      SymMatrix out = SymMatrix::Identity(m, rel);
      for (int j = 0; j <= m - 2; ++j) out = out * per_factor(j);
      for (int k = 1; k <= m / 2 - 1; ++k) {
        Polynomial zk = Circ("zp", k, rel);
        out = out * DPair(m, k, Circ("t", 2 * k - 1, rel), zk * Circ("t", 2 * k, rel)) *
              SmallD(m, zk.Conj());
      }
      return out;
    }
  }
  throw Error(ErrorCode::kInvalidIndex, "unknown matrix tag");
}

std::vector<MatrixKind> EnumerateKinds(int m, RelationConfig rel) {
  std::vector<MatrixKind> out;
  auto add = [&](MatrixTag tag, int i, int j, int k) {
    out.push_back(MatrixKind{tag, m, i, j, k, rel});
  };
  if (m == 2) add(MatrixTag::kRot2, 0, 0, 0);
  for (int j = 0; j <= m - 2; ++j) {
    for (int i = 1; i <= m - j - 1; ++i) add(MatrixTag::kRij, i, j, 0);
  }
  add(MatrixTag::kDSmall, 0, 0, 0);
  for (int j = 0; j <= m - 2; ++j) add(MatrixTag::kDjSmall, 0, j, 0);
  for (int j = 0; j <= m - 2; ++j) add(MatrixTag::kDjCap, 0, j, 0);
  for (int j = 0; j <= m - 2; ++j) {
    for (int i = 1; i <= m - j - 1; ++i) add(MatrixTag::kRHatIJ, i, j, 0);
  }
  for (int j = 0; j <= m - 2; ++j) add(MatrixTag::kRj, 0, j, 0);
  add(MatrixTag::kRFull, 0, 0, 0);
  for (int k = 1; k <= m / 2 - 1; ++k) add(MatrixTag::kDPair, 0, 0, k);
  add(MatrixTag::kRTilde, 0, 0, 0);
  return out;
}

}  // namespace suframe
