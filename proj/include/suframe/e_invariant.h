#ifndef SUFRAME_E_INVARIANT_H_
#define SUFRAME_E_INVARIANT_H_

// Exact Bernoulli numbers, top Chern pairings and the complex e-invariant
// values of SU(2n) and SU(2n+1)/C with their Adams targets.

#include <optional>
#include <string>
#include <vector>

#include "suframe/rational.h"

namespace suframe {

// A value of Q/Z: the formula value and its representative in [0, 1).
struct QmodZ {
  Rational signed_value;
  Rational class_rep;

  static QmodZ From(const Rational& value);
};

// Classical Bernoulli number B^_k (B^_1 = -1/2 convention irrelevant for
// even k), k >= 0.
Rational BernoulliClassical(int k);

// Topologists' B_l = |B^_{2l}|: B_1 = 1/6, B_2 = 1/30, ...
Rational BernoulliTop(int l);

// Pairing of c_1^N on a product of N two-dimensional factors: N!. With
// symbolic_oracle the coefficient is read off an expansion of
// (x_1 + ... + x_N)^N with x_i^2 = 0 (N <= 6, else kUnsupported).
BigInt ChernTopPairing(int N, bool symbolic_oracle = false);

// (-1)^(l-1) B_l / 2l.
QmodZ AdamsTarget(int l);

enum class EProvenance { kTheorem, kProposition, kFromChern, kAdamsTarget };

const char* EProvenanceName(EProvenance provenance);

struct EInvariantResult {
  int l = 0;
  QmodZ value;
  EProvenance provenance = EProvenance::kAdamsTarget;
  std::optional<int> n;

  // "SU(2n)" or "SU(2n+1)/C" with n substituted.
  std::string GroupLabel() const;
};

// SU(2n) with framing L^{(n-1) rho}: (-1)^(n-1) B_{n^2} / 2n^2. Throws
// kOutOfHypothesis for n < 2.
EInvariantResult ETheorem(int n);

// SU(2n+1)/C: -B_{n^2+n} / 2(n^2+n). Throws kOutOfHypothesis for n < 1.
EInvariantResult EProposition(int n);

// sign * B_l / (2l (2l-1)!) * chern_number.
QmodZ EFromChern(int l, const BigInt& chern_number, int sign);

// Order of the class in Q/Z.
BigInt ElementOrder(const QmodZ& value);

struct AuditReport {
  int m = 0;
  int n = 0;
  int l = 0;
  int dim_manifold = 0;
  int dim_base = 0;
  int chern_power = 0;
  bool ok = false;
};

// Requires m >= 3 (kInvalidIndex otherwise).
AuditReport DimensionAudit(int m);

}  // namespace suframe

#endif  // SUFRAME_E_INVARIANT_H_
