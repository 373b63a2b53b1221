#include "suframe/e_invariant.h"

#include <map>

#include "suframe/error.h"

namespace suframe {
namespace {

BigInt Factorial(int n) {
  BigInt out = 1;
  for (int k = 2; k <= n; ++k) out *= k;
  return out;
}

Rational SignedBernoulliOverTwoL(int l, int sign) {
  return Rational(sign) * BernoulliTop(l) / Rational(2 * l);
}

}  // namespace

QmodZ QmodZ::From(const Rational& value) {
  return QmodZ{value, value.FractionalPart()};
}

Rational BernoulliClassical(int k) {
  if (k < 0) throw Error(ErrorCode::kInvalidIndex, "Bernoulli index must be >= 0");
  // Akiyama-Tanigawa; yields B^_1 = +1/2, which only matters for k = 1.
  std::vector<Rational> a(static_cast<std::size_t>(k) + 1);
  for (int m = 0; m <= k; ++m) {
    a[static_cast<std::size_t>(m)] = Rational::Reduce(1, m + 1);
    for (int j = m; j >= 1; --j) {
      auto jj = static_cast<std::size_t>(j);
      a[jj - 1] = Rational(j) * (a[jj - 1] - a[jj]);
    }
  }
  return a[0];
}

Rational BernoulliTop(int l) {
  if (l < 1) throw Error(ErrorCode::kInvalidIndex, "Bernoulli index l must be >= 1");
  return BernoulliClassical(2 * l).Abs();
}

BigInt ChernTopPairing(int N, bool symbolic_oracle) {
  if (N < 1) throw Error(ErrorCode::kInvalidIndex, "N must be >= 1");
  if (!symbolic_oracle) return Factorial(N);
  if (N > 6) throw Error(ErrorCode::kUnsupported, "symbolic oracle limited to N <= 6");
  // Monomials in square-zero generators are subsets, keyed by bitmask.
  std::map<unsigned, BigInt> poly{{0u, BigInt(1)}};
  for (int step = 0; step < N; ++step) {
    std::map<unsigned, BigInt> next;
    for (const auto& [mask, coef] : poly) {
      for (int g = 0; g < N; ++g) {
        unsigned bit = 1u << g;
        if (mask & bit) continue;
        next[mask | bit] += coef;
      }
    }
    poly = std::move(next);
  }
  auto it = poly.find((1u << N) - 1);
  return it == poly.end() ? BigInt(0) : it->second;
}

QmodZ AdamsTarget(int l) {
  return QmodZ::From(SignedBernoulliOverTwoL(l, l % 2 == 1 ? 1 : -1));
}

const char* EProvenanceName(EProvenance provenance) {
  switch (provenance) {
    case EProvenance::kTheorem: return "theorem";
    case EProvenance::kProposition: return "proposition";
    case EProvenance::kFromChern: return "from_chern";
    case EProvenance::kAdamsTarget: return "adams_target";
  }
  return "?";
}

std::string EInvariantResult::GroupLabel() const {
  if (!n) return "l=" + std::to_string(l);
  if (provenance == EProvenance::kProposition) {
    return "SU(" + std::to_string(2 * *n + 1) + ")/C";
  }
  return "SU(" + std::to_string(2 * *n) + ")";
}

EInvariantResult ETheorem(int n) {
  if (n < 2) throw Error(ErrorCode::kOutOfHypothesis, "the SU(2n) formula requires n >= 2");
  const int l = n * n;
  return EInvariantResult{l, QmodZ::From(SignedBernoulliOverTwoL(l, n % 2 == 1 ? 1 : -1)),
                          EProvenance::kTheorem, n};
}

EInvariantResult EProposition(int n) {
  if (n < 1) {
    throw Error(ErrorCode::kOutOfHypothesis, "the SU(2n+1)/C formula requires n >= 1");
  }
  const int l = n * n + n;
  return EInvariantResult{l, QmodZ::From(SignedBernoulliOverTwoL(l, -1)),
                          EProvenance::kProposition, n};
}

QmodZ EFromChern(int l, const BigInt& chern_number, int sign) {
  if (l < 1) throw Error(ErrorCode::kInvalidIndex, "l must be >= 1");
  if (sign != 1 && sign != -1) throw Error(ErrorCode::kUsage, "sign must be +1 or -1");
  Rational value = Rational(sign) * BernoulliTop(l) * Rational(chern_number) /
                   (Rational(2 * l) * Rational(Factorial(2 * l - 1)));
  return QmodZ::From(value);
}

BigInt ElementOrder(const QmodZ& value) { return value.class_rep.den(); }

AuditReport DimensionAudit(int m) {
  if (m < 3) throw Error(ErrorCode::kInvalidIndex, "dimension audit requires m >= 3");
  AuditReport a;
  a.m = m;
  a.n = m / 2;
  const bool even = m % 2 == 0;
  a.l = even ? a.n * a.n : a.n * a.n + a.n;
  a.dim_manifold = 4 * a.l - 1;
  a.dim_base = (m * m - m) + 2 * (a.n - 1);
  a.chern_power = 2 * a.l - 1;
  const int quotient = even ? m * m - 2 : m * m - 3;
  const int manifold = even ? m * m - 1 : m * m - 2;
  a.ok = a.dim_base == quotient && 2 * a.chern_power == a.dim_base &&
         a.dim_manifold == manifold;
  return a;
}

}  // namespace suframe
