#ifndef SUFRAME_NUMERIC_TYPES_H_
#define SUFRAME_NUMERIC_TYPES_H_

#include <complex>
#include <cstdint>

#include <Eigen/Dense>

namespace suframe {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CMatrix2 = Eigen::Matrix2cd;

// 2x2 special unitary block [[a, b], [-conj(b), conj(a)]].
inline CMatrix2 Rot2(Complex a, Complex b) {
  CMatrix2 out;
  out << a, b, -std::conj(b), std::conj(a);
  return out;
}

// Identity of size m with Rot2(a, b) on rows/cols p, q.
CMatrix EmbedRotation(int m, int p, int q, Complex a, Complex b);

// d(z) = diag(conj(z)^(m-1), z, ..., z).
CMatrix SmallDNumeric(int m, Complex z);

// D(a, b) = diag(1 x (2k-1), a, conj(a) b, conj(b), 1, ...).
CMatrix DPairNumeric(int m, int k, Complex a, Complex b);

// max(|U U^H - I|, |det U - 1|), entrywise.
double SuResidual(const CMatrix& u);

// Deterministic per-index seed stream (splitmix64 of seed and index).
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t index);

}  // namespace suframe

#endif  // SUFRAME_NUMERIC_TYPES_H_
