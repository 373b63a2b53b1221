#include "suframe/identity_checks.h"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "suframe/constructions.h"
#include "suframe/error.h"

namespace suframe {
namespace {

using Clock = std::chrono::steady_clock;

constexpr IdentityTag kAllTags[] = {
    IdentityTag::kEq1,           IdentityTag::kEq2,
    IdentityTag::kEq3,           IdentityTag::kEq4,
    IdentityTag::kEq5,           IdentityTag::kEq5B,
    IdentityTag::kEq5BCumulative, IdentityTag::kEq6A,
    IdentityTag::kEq6B,          IdentityTag::kEq6BCumulative,
    IdentityTag::kSec3Displayed, IdentityTag::kSec3Closure,
    IdentityTag::kDFactor,       IdentityTag::kSuCheck,
    IdentityTag::kSu2Base,
};

std::uint64_t Fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// A point satisfying every relation: unit-circle phases, and r^2 + |v|^2 = 1
// for each (i, j) pair that appears.
Assignment RandomValidAssignment(const std::set<SymbolId>& symbols,
                                 std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  Assignment a;
  for (SymbolId s : symbols) {
    if (a.contains(s)) continue;
    if (s.IsCircular()) {
      Assign(a, s.kind() == SymbolKind::kCircle ? s : s.Conj(),
             std::polar(1.0, angle(rng)));
    } else {
      double r = unit(rng);
      a[SymbolId::Radial(s.i(), s.j())] = r;
      Assign(a, SymbolId::VParam(s.i(), s.j()),
             std::polar(std::sqrt(1.0 - r * r), angle(rng)));
    }
  }
  return a;
}

std::string Params(int m, std::initializer_list<std::pair<const char*, int>> extra) {
  std::ostringstream os;
  os << "m=" << m;
  for (const auto& [key, value] : extra) os << "," << key << "=" << value;
  return os.str();
}

class CaseRunner {
 public:
  CaseRunner(IdentityTag tag, RelationConfig rel) : tag_(tag), rel_(rel) {}

  // Compares lhs and rhs entrywise (symbolically, then numerically).
  void Compare(const std::string& params, const SymMatrix& lhs,
               const SymMatrix& rhs, bool expect_failure,
               Clock::time_point started) {
    CheckReport report = Start(params);
    auto mismatch = FirstMismatch(lhs, rhs);
    const bool holds = !mismatch.has_value();
    report.status = ResolveStatus(holds, expect_failure);
    if (mismatch) {
      report.witness = Witness{mismatch->row, mismatch->col,
                               mismatch->difference.ToString(),
                               mismatch->difference};
    }
    CrossCheck(report, holds, lhs, rhs);
    Finish(std::move(report), started);
  }

  void Record(CheckReport report, Clock::time_point started) {
    Finish(std::move(report), started);
  }

  CheckReport Start(const std::string& params) const {
    CheckReport r;
    r.suite = "symbolic";
    r.name = IdentityTagName(tag_);
    r.params = params;
    if (!(rel_ == RelationConfig{})) r.params += "," + rel_.ToString();
    return r;
  }

  // Numeric consistency: if the symbolic comparison says equal, both sides
  // must also agree at sampled valid points. A disagreement flags an engine
  // defect and turns the report into a failure.
  void CrossCheck(CheckReport& report, bool holds, const SymMatrix& lhs,
                  const SymMatrix& rhs) const {
    std::set<SymbolId> symbols = lhs.Symbols();
    auto more = rhs.Symbols();
    symbols.insert(more.begin(), more.end());
    std::mt19937_64 rng(Fnv1a(report.name + "|" + report.params));
    double worst = 0.0;
    for (int t = 0; t < kNumericCrossCheckPoints; ++t) {
      worst = std::max(worst, MaxEvalDifference(lhs, rhs, RandomValidAssignment(symbols, rng)));
    }
    if (holds && worst > kNumericCrossCheckTol) {
      report.status = CheckStatus::kFail;
      std::ostringstream os;
      os << "symbolic equality contradicted numerically (max diff " << worst << ")";
      report.note = os.str();
      report.witness = Witness{-1, -1, report.note, std::nullopt};
    } else if (!holds && worst <= kNumericCrossCheckTol) {
      report.note = "sides agree numerically at valid points; symbolic difference "
                    "vanishes only modulo relations not enabled";
    }
  }

  std::vector<CheckReport> Take() { return std::move(reports_); }
  const RelationConfig& rel() const { return rel_; }

 private:
  void Finish(CheckReport report, Clock::time_point started) {
    report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             Clock::now() - started)
                             .count();
    reports_.push_back(std::move(report));
  }

  IdentityTag tag_;
  RelationConfig rel_;
  std::vector<CheckReport> reports_;
};

// prod_i d(u_i) over a list of circle polynomials.
SymMatrix DProduct(int m, const std::vector<Polynomial>& us, RelationConfig rel) {
  SymMatrix out = SymMatrix::Identity(m, rel);
  for (const auto& u : us) out = out * SmallD(m, u);
  return out;
}

struct BlockSymbols {
  std::vector<Polynomial> r, v, z, zp;
};

BlockSymbols SymbolsForBlock(int m, int j, RelationConfig rel) {
  BlockSymbols b;
  for (int i = 1; i <= m - j - 1; ++i) {
    b.r.push_back(R(i, j, rel));
    b.v.push_back(V(i, j, rel));
    b.z.push_back(Circ("z", i, rel));
    b.zp.push_back(Circ("zp", i, rel));
  }
  return b;
}

// Phase multiplying v_{i;0} on the right side of the j = 0 relations:
// printed form z_{i-1}^m z_i^i, cumulative form (z_1...z_{i-1})^m z_i^i.
Polynomial BlockZeroPhase(int m, int i, const std::vector<Polynomial>& z,
                          bool cumulative, RelationConfig rel) {
  Polynomial prefix = Polynomial::Constant(1, rel);
  if (cumulative) {
    for (int s = 1; s < i; ++s) prefix = prefix * z[static_cast<std::size_t>(s - 1)];
  } else if (i >= 2) {
    prefix = z[static_cast<std::size_t>(i - 2)];
  }
  return prefix.Pow(static_cast<unsigned>(m)) *
         z[static_cast<std::size_t>(i - 1)].Pow(static_cast<unsigned>(i));
}

void RunEq1(CaseRunner& run, int m) {
  for (int j = 0; j <= m - 2; ++j) {
    auto t0 = Clock::now();
    Polynomial z = Circ("z", run.rel());
    run.Compare(Params(m, {{"j", j}}), BlockProduct(m, j, z),
                ClosedFormBlock(m, j, run.rel()), false, t0);
  }
}

void RunEq2(CaseRunner& run, int m) {
  for (int j = 0; j <= m - 2; ++j) {
    auto t0 = Clock::now();
    Polynomial z = Circ("z", run.rel());
    run.Compare(Params(m, {{"j", j}}), BlockProduct(m, j, z) * SmallDj(m, j, z),
                BlockProductShifted(m, j, z), false, t0);
  }
}

void RunEq3(CaseRunner& run, int m) {
  const RelationConfig rel = run.rel();
  for (int j = 0; j <= m - 2; ++j) {
    auto t0 = Clock::now();
    const int mj = m - j - 1;
    Polynomial z = Circ("z", rel);
    SymMatrix shifted = BlockProductShifted(m, j, z);
    // Expected first column of the block, with w_s = z^s v_s.
    auto wbar = [&](int s) { return (z.Pow(static_cast<unsigned>(s)) * V(s, j, rel)).Conj(); };
    auto radials = [&](int from) {
      Polynomial p = Polynomial::Constant(1, rel);
      for (int s = from; s <= mj; ++s) p = p * R(s, j, rel);
      return p;
    };
    std::vector<Polynomial> expected(static_cast<std::size_t>(m), Polynomial(rel));
    expected[static_cast<std::size_t>(j)] = radials(1);
    for (int s = 1; s <= mj - 1; ++s) {
      expected[static_cast<std::size_t>(j + s)] = -(radials(s + 1) * wbar(s));
    }
    expected[static_cast<std::size_t>(j + mj)] = -wbar(mj);
    // Compare as diagonal carriers so the generic comparison applies.
    std::vector<Polynomial> actual;
    for (int row = 0; row < m; ++row) actual.push_back(shifted(row, j));
    run.Compare(Params(m, {{"j", j}}), SymMatrix::Diagonal(actual, rel),
                SymMatrix::Diagonal(expected, rel), false, t0);
  }
}

void RunEq4(CaseRunner& run, int m) {
  const RelationConfig rel = run.rel();
  Polynomial z = Circ("z", rel);
  for (int j = 0; j <= m - 2; ++j) {
    for (int i = 1; i <= m - j - 1; ++i) {
      auto t0 = Clock::now();
      SymMatrix lhs = RHat(m, i, j, R(i, j, rel), V(i, j, rel), z) * SmallD(m, z);
      SymMatrix rhs = Rij(m, i, j, R(i, j, rel), z.Pow(static_cast<unsigned>(i)) * V(i, j, rel));
      run.Compare(Params(m, {{"i", i}, {"j", j}}), lhs, rhs, false, t0);
    }
  }
}

void RunEq5(CaseRunner& run, int m) {
  const RelationConfig rel = run.rel();
  for (int j = 1; j <= m - 2; ++j) {
    auto t0 = Clock::now();
    BlockSymbols b = SymbolsForBlock(m, j, rel);
    SymMatrix lhs = RBlock(m, j, b.r, b.v, b.z) * DProduct(m, b.z, rel);
    SymMatrix rhs = SymMatrix::Identity(m, rel);
    for (int i = 1; i <= m - j - 1; ++i) {
      const auto t = static_cast<std::size_t>(i - 1);
      rhs = rhs * Rij(m, i, j, b.r[t], b.z[t].Pow(static_cast<unsigned>(i)) * b.v[t]);
    }
    run.Compare(Params(m, {{"j", j}}), lhs, rhs, false, t0);
  }
}

void RunEq5B(CaseRunner& run, int m, bool cumulative) {
  const RelationConfig rel = run.rel();
  auto t0 = Clock::now();
  BlockSymbols b = SymbolsForBlock(m, 0, rel);
  SymMatrix lhs = RBlock(m, 0, b.r, b.v, b.z) * DProduct(m, b.z, rel);
  SymMatrix rhs = SymMatrix::Identity(m, rel);
  for (int i = 1; i <= m - 1; ++i) {
    const auto t = static_cast<std::size_t>(i - 1);
    rhs = rhs * Rij(m, i, 0, b.r[t], BlockZeroPhase(m, i, b.z, cumulative, rel) * b.v[t]);
  }
  IdentityTag tag = cumulative ? IdentityTag::kEq5BCumulative : IdentityTag::kEq5B;
  run.Compare(Params(m, {{"j", 0}}), lhs, rhs, IsRegisteredErratum(tag, m, 0), t0);
}

void RunEq6A(CaseRunner& run, int m) {
  const RelationConfig rel = run.rel();
  Polynomial z = Circ("z", rel);
  Polynomial zp = Circ("zp", rel);
  for (int j = 0; j <= m - 2; ++j) {
    for (int i = 1; i <= m - j - 1; ++i) {
      auto t0 = Clock::now();
      SymMatrix lhs = RHat(m, i, j, R(i, j, rel), V(i, j, rel), z * zp) * SmallD(m, z);
      SymMatrix rhs = RHat(m, i, j, R(i, j, rel), z.Pow(static_cast<unsigned>(i)) * V(i, j, rel), zp);
      run.Compare(Params(m, {{"i", i}, {"j", j}}), lhs, rhs, false, t0);
    }
  }
}

void RunEq6B(CaseRunner& run, int m, bool cumulative) {
  const RelationConfig rel = run.rel();
  IdentityTag tag = cumulative ? IdentityTag::kEq6BCumulative : IdentityTag::kEq6B;
  // The cumulative variant only differs from the printed one at j = 0.
  const int last_j = cumulative ? 0 : m - 2;
  for (int j = 0; j <= last_j; ++j) {
    auto t0 = Clock::now();
    BlockSymbols b = SymbolsForBlock(m, j, rel);
    std::vector<Polynomial> zz, shifted_v;
    for (std::size_t t = 0; t < b.z.size(); ++t) {
      const int i = static_cast<int>(t) + 1;
      zz.push_back(b.z[t] * b.zp[t]);
      Polynomial phase = j >= 1 ? b.z[t].Pow(static_cast<unsigned>(i))
                                : BlockZeroPhase(m, i, b.z, cumulative, rel);
      shifted_v.push_back(phase * b.v[t]);
    }
    SymMatrix lhs = RBlock(m, j, b.r, b.v, zz) * DProduct(m, b.z, rel);
    SymMatrix rhs = RBlock(m, j, b.r, shifted_v, b.zp);
    run.Compare(Params(m, {{"j", j}}), lhs, rhs, IsRegisteredErratum(tag, m, j), t0);
  }
}

void RunSec3(CaseRunner& run, int m, bool displayed) {
  const RelationConfig rel = run.rel();
  Polynomial z = Circ("z", rel);
  for (int k = 1; k <= m / 2 - 1; ++k) {
    auto t0 = Clock::now();
    Polynomial a = Circ("t", 2 * k - 1, rel);
    Polynomial b = Circ("t", 2 * k, rel);
    SymMatrix lhs(m, rel), rhs(m, rel);
    if (displayed) {
      Polynomial zp = Circ("zp", rel);
      lhs = SmallD(m, zp.Conj()) * DPair(m, k, a, z * zp.Pow(2) * b) * SmallD(m, z.Conj());
      rhs = DPair(m, k, a, z * b) * SmallD(m, z.Conj()) * SmallD(m, zp.Conj());
    } else {
      Polynomial w = Circ("w", rel);
      lhs = DPair(m, k, a, z * b) * SmallD(m, z.Conj()) * SmallD(m, w);
      rhs = DPair(m, k, a, (z * w.Conj()) * (w * b)) * SmallD(m, (z * w.Conj()).Conj());
    }
    IdentityTag tag = displayed ? IdentityTag::kSec3Displayed : IdentityTag::kSec3Closure;
    run.Compare(Params(m, {{"k", k}}), lhs, rhs, IsRegisteredErratum(tag, m, 0), t0);
  }
}

void RunDFactor(CaseRunner& run, int m) {
  const RelationConfig rel = run.rel();
  for (int k = 1; k <= m / 2 - 1; ++k) {
    auto t0 = Clock::now();
    Polynomial a = Circ("t", 2 * k - 1, rel);
    Polynomial zeta = Circ("t", 2 * k, rel);
    Polynomial zero(rel);
    SymMatrix lhs = DPair(m, k, a, zeta);
    SymMatrix rhs = Rij(m, 1, 2 * k - 1, a, zero) * Rij(m, 1, 2 * k, zeta, zero);
    run.Compare(Params(m, {{"k", k}}), lhs, rhs, false, t0);
  }
}

void RunSu2Base(CaseRunner& run, int m) {
  if (m != 2) return;
  const RelationConfig rel = run.rel();
  Polynomial z = Circ("z", rel);
  {
    auto t0 = Clock::now();
    SymMatrix lhs = RotationBlock(2, 0, 1, R(1, 0, rel) * z, V(1, 0, rel)) * SmallD(2, z);
    SymMatrix rhs = RotationBlock(2, 0, 1, R(1, 0, rel), z * V(1, 0, rel));
    run.Compare("m=2,relation=rotation", lhs, rhs, false, t0);
  }
  {
    // At r = 0 the unit-norm relation puts v on the unit circle; it is
    // instantiated by the circle symbol u.
    auto t0 = Clock::now();
    Polynomial u = Circ("u", rel);
    Polynomial zero(rel);
    SymMatrix lhs = RotationBlock(2, 0, 1, zero, z * u) * SmallD(2, (z * u).Conj());
    SymMatrix rhs = RotationBlock(2, 0, 1, zero, Polynomial::Constant(1, rel));
    run.Compare("m=2,relation=zero-radius", lhs, rhs, false, t0);
  }
}

void RunSuCheck(CaseRunner& run, int m) {
  const RelationConfig rel = run.rel();
  for (const MatrixKind& kind : EnumerateKinds(m, rel)) {
    auto t0 = Clock::now();
    SymMatrix mat = BuildMatrix(kind);
    SymMatrix gram = mat * mat.ConjTranspose();
    SymMatrix id = SymMatrix::Identity(m, rel);
    Polynomial det = mat.Det();
    Polynomial one = Polynomial::Constant(1, rel);

    CheckReport report = run.Start(kind.ToString());
    auto mismatch = FirstMismatch(gram, id);
    const bool det_ok = det == one;
    report.status = ResolveStatus(!mismatch && det_ok, false);
    if (mismatch) {
      report.witness = Witness{mismatch->row, mismatch->col,
                               "M*M^H - I: " + mismatch->difference.ToString(),
                               mismatch->difference};
    } else if (!det_ok) {
      Polynomial diff = det - one;
      report.witness = Witness{-1, -1, "det - 1: " + diff.ToString(), diff};
    }
    run.CrossCheck(report, !mismatch.has_value(), gram, id);
    run.Record(std::move(report), t0);
  }
}

}  // namespace

const char* IdentityTagName(IdentityTag tag) {
  switch (tag) {
    case IdentityTag::kEq1: return "EQ1";
    case IdentityTag::kEq2: return "EQ2";
    case IdentityTag::kEq3: return "EQ3";
    case IdentityTag::kEq4: return "EQ4";
    case IdentityTag::kEq5: return "EQ5";
    case IdentityTag::kEq5B: return "EQ5B";
    case IdentityTag::kEq5BCumulative: return "EQ5B_CUMULATIVE";
    case IdentityTag::kEq6A: return "EQ6A";
    case IdentityTag::kEq6B: return "EQ6B";
    case IdentityTag::kEq6BCumulative: return "EQ6B_CUMULATIVE";
    case IdentityTag::kSec3Displayed: return "SEC3_DISPLAYED";
    case IdentityTag::kSec3Closure: return "SEC3_CLOSURE";
    case IdentityTag::kDFactor: return "D_FACTOR";
    case IdentityTag::kSuCheck: return "SU_CHECK";
    case IdentityTag::kSu2Base: return "SU2_BASE";
  }
  return "?";
}

std::optional<IdentityTag> ParseIdentityTag(std::string_view name) {
  for (IdentityTag tag : kAllTags) {
    if (name == IdentityTagName(tag)) return tag;
  }
  return std::nullopt;
}

std::vector<IdentityTag> AllIdentityTags() {
  return {std::begin(kAllTags), std::end(kAllTags)};
}

bool IsRegisteredErratum(IdentityTag tag, int m, int j) {
  switch (tag) {
    case IdentityTag::kSec3Displayed:
      return true;
    case IdentityTag::kEq5B:
      // z_{i-1}^m misses the phases z_1...z_{i-2} once m_0 >= 3.
      return m >= 4;
    case IdentityTag::kEq6B:
      return j == 0 && m >= 4;
    default:
      return false;
  }
}

std::vector<CheckReport> CheckIdentity(IdentityTag tag, int m,
                                       RelationConfig rel) {
  if (m < 2 || m > 7) {
    throw Error(ErrorCode::kUnsupported,
                "symbolic checks require 2 <= m <= 7, got " + std::to_string(m));
  }
  CaseRunner run(tag, rel);
  switch (tag) {
    case IdentityTag::kEq1: RunEq1(run, m); break;
    case IdentityTag::kEq2: RunEq2(run, m); break;
    case IdentityTag::kEq3: RunEq3(run, m); break;
    case IdentityTag::kEq4: RunEq4(run, m); break;
    case IdentityTag::kEq5: RunEq5(run, m); break;
    case IdentityTag::kEq5B: RunEq5B(run, m, false); break;
    case IdentityTag::kEq5BCumulative: RunEq5B(run, m, true); break;
    case IdentityTag::kEq6A: RunEq6A(run, m); break;
    case IdentityTag::kEq6B: RunEq6B(run, m, false); break;
    case IdentityTag::kEq6BCumulative: RunEq6B(run, m, true); break;
    case IdentityTag::kSec3Displayed: RunSec3(run, m, true); break;
    case IdentityTag::kSec3Closure: RunSec3(run, m, false); break;
    case IdentityTag::kDFactor: RunDFactor(run, m); break;
    case IdentityTag::kSuCheck: RunSuCheck(run, m); break;
    case IdentityTag::kSu2Base: RunSu2Base(run, m); break;
  }
  std::vector<CheckReport> reports = run.Take();
  for (auto& report : reports) {
    if (tag == IdentityTag::kSec3Displayed && report.witness &&
        report.witness->difference) {
      report.note = DivisibleByCircleSquareMinusOne(*report.witness->difference,
                                                    SymbolId::Circle("zp"))
                        ? "witness divisible by (zp^2 - 1)"
                        : "witness NOT divisible by (zp^2 - 1)";
    }
  }
  return reports;
}

bool DivisibleByCircleSquareMinusOne(const Polynomial& p, SymbolId c) {
  if (p.IsZero()) return true;
  return p.Substitute(c, GaussianRational(1)).IsZero() &&
         p.Substitute(c, GaussianRational(-1)).IsZero();
}

}  // namespace suframe
