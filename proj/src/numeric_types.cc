#include "suframe/numeric_types.h"

#include <algorithm>

namespace suframe {

CMatrix EmbedRotation(int m, int p, int q, Complex a, Complex b) {
  CMatrix out = CMatrix::Identity(m, m);
  out(p, p) = a;
  out(p, q) = b;
  out(q, p) = -std::conj(b);
  out(q, q) = std::conj(a);
  return out;
}

CMatrix SmallDNumeric(int m, Complex z) {
  CMatrix out = CMatrix::Zero(m, m);
  out(0, 0) = std::pow(std::conj(z), m - 1);
  for (int d = 1; d < m; ++d) out(d, d) = z;
  return out;
}

CMatrix DPairNumeric(int m, int k, Complex a, Complex b) {
  CMatrix out = CMatrix::Identity(m, m);
  const int p = 2 * k - 1;
  out(p, p) = a;
  out(p + 1, p + 1) = std::conj(a) * b;
  out(p + 2, p + 2) = std::conj(b);
  return out;
}

double SuResidual(const CMatrix& u) {
  const auto n = u.rows();
  double gram = (u * u.adjoint() - CMatrix::Identity(n, n)).cwiseAbs().maxCoeff();
  return std::max(gram, std::abs(u.determinant() - Complex(1.0)));
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t x = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace suframe
