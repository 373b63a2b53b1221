#include "suframe/laurent.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "suframe/error.h"

namespace suframe {
namespace {

constexpr std::uint64_t kNameMask = (std::uint64_t{1} << 40) - 1;

// Binomial coefficient for the small exponents seen under unit_norm.
std::int64_t Binomial(unsigned n, unsigned k) {
  std::int64_t c = 1;
  for (unsigned t = 1; t <= k; ++t) c = c * (n - k + t) / t;
  return c;
}

void AddTo(Polynomial::TermMap& out, const Monomial& m,
           const GaussianRational& c) {
  if (c.IsZero()) return;
  auto [it, inserted] = out.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.IsZero()) out.erase(it);
  }
}

// Applies the active rewrite rules to one merged monomial and accumulates
// the (possibly expanded) result into `out`.
void NormalizeInto(const Monomial& merged, const GaussianRational& coef,
                   const RelationConfig& rel, Polynomial::TermMap& out) {
  if (coef.IsZero()) return;
  const auto& in = merged.factors();

  bool needs_work = false;
  for (const auto& [s, e] : in) {
    if (rel.unit_norm && s.kind() == SymbolKind::kRadial && e >= 2) {
      needs_work = true;
      break;
    }
    if (rel.circle_pairs && s.kind() == SymbolKind::kCircle &&
        merged.Exponent(s.Conj()) > 0) {
      needs_work = true;
      break;
    }
  }
  if (!needs_work) {
    AddTo(out, merged, coef);
    return;
  }

  std::vector<Monomial::Factor> kept;
  // Radial pairs reduced away: (i, j) with the number of (1 - v vb) factors.
  std::vector<std::pair<SymbolId, unsigned>> expansions;
  for (const auto& [s, e] : in) {
    std::uint32_t exp = e;
    if (rel.circle_pairs && s.IsCircular()) {
      std::uint32_t partner = merged.Exponent(s.Conj());
      if (exp <= partner) continue;
      exp -= partner;
    }
    if (rel.unit_norm && s.kind() == SymbolKind::kRadial && exp >= 2) {
      expansions.emplace_back(s, exp / 2);
      exp %= 2;
    }
    if (exp > 0) kept.emplace_back(s, exp);
  }

  std::vector<std::pair<Monomial, GaussianRational>> partial;
  partial.emplace_back(Monomial::FromFactors(std::move(kept)), coef);
  for (const auto& [radial, q] : expansions) {
    SymbolId v = SymbolId::VParam(radial.i(), radial.j());
    SymbolId vb = SymbolId::VConj(radial.i(), radial.j());
    std::vector<std::pair<Monomial, GaussianRational>> next;
    for (const auto& [m, c] : partial) {
      for (unsigned t = 0; t <= q; ++t) {
        std::int64_t b = Binomial(q, t) * ((t % 2 == 0) ? 1 : -1);
        Monomial vv = t == 0 ? Monomial()
                             : Monomial::FromFactors({{v, t}, {vb, t}});
        next.emplace_back(m * vv, c * GaussianRational(b));
      }
    }
    partial = std::move(next);
  }
  for (const auto& [m, c] : partial) AddTo(out, m, c);
}

}  // namespace

SymbolId SymbolId::Make(SymbolKind kind, int i, int j, std::string_view name) {
  if (i < 0 || i > 255 || j < 0 || j > 255) {
    throw Error(ErrorCode::kInvalidIndex,
                "symbol indices must lie in [0, 255]");
  }
  std::uint64_t packed = 0;
  if (name.size() > kMaxNameLength) {
    throw Error(ErrorCode::kInvalidIndex,
                "circle name longer than 5 characters: " + std::string(name));
  }
  for (std::size_t t = 0; t < kMaxNameLength; ++t) {
    packed <<= 8;
    if (t < name.size()) packed |= static_cast<unsigned char>(name[t]);
  }
  return SymbolId((static_cast<std::uint64_t>(kind) << 56) |
                  (static_cast<std::uint64_t>(j) << 48) |
                  (static_cast<std::uint64_t>(i) << 40) | packed);
}

SymbolId SymbolId::Radial(int i, int j) {
  return Make(SymbolKind::kRadial, i, j, "");
}
SymbolId SymbolId::VParam(int i, int j) {
  return Make(SymbolKind::kVParam, i, j, "");
}
SymbolId SymbolId::VConj(int i, int j) {
  return Make(SymbolKind::kVConj, i, j, "");
}
SymbolId SymbolId::Circle(std::string_view name) {
  if (name.empty()) throw Error(ErrorCode::kInvalidIndex, "empty circle name");
  return Make(SymbolKind::kCircle, 0, 0, name);
}
SymbolId SymbolId::CircleConj(std::string_view name) {
  if (name.empty()) throw Error(ErrorCode::kInvalidIndex, "empty circle name");
  return Make(SymbolKind::kCircleConj, 0, 0, name);
}

std::string SymbolId::name() const {
  std::string out;
  std::uint64_t packed = key_ & kNameMask;
  for (int t = static_cast<int>(kMaxNameLength) - 1; t >= 0; --t) {
    char c = static_cast<char>((packed >> (8 * t)) & 0xff);
    if (c != 0) out.push_back(c);
  }
  return out;
}

SymbolId SymbolId::Conj() const {
  auto swap_kind = [this](SymbolKind k) {
    return SymbolId((key_ & ~(std::uint64_t{0xff} << 56)) |
                    (static_cast<std::uint64_t>(k) << 56));
  };
  switch (kind()) {
    case SymbolKind::kRadial: return *this;
    case SymbolKind::kVParam: return swap_kind(SymbolKind::kVConj);
    case SymbolKind::kVConj: return swap_kind(SymbolKind::kVParam);
    case SymbolKind::kCircle: return swap_kind(SymbolKind::kCircleConj);
    case SymbolKind::kCircleConj: return swap_kind(SymbolKind::kCircle);
  }
  return *this;
}

std::string SymbolId::ToString() const {
  std::ostringstream os;
  switch (kind()) {
    case SymbolKind::kRadial: os << "r{" << i() << "," << j() << "}"; break;
    case SymbolKind::kVParam: os << "v{" << i() << "," << j() << "}"; break;
    case SymbolKind::kVConj: os << "~v{" << i() << "," << j() << "}"; break;
    case SymbolKind::kCircle: os << name(); break;
    case SymbolKind::kCircleConj: os << "~" << name(); break;
  }
  return os.str();
}

std::string RelationConfig::ToString() const {
  std::string out = "circle_pairs=";
  out += circle_pairs ? "on" : "off";
  out += ",unit_norm=";
  out += unit_norm ? "on" : "off";
  return out;
}

Monomial Monomial::FromFactors(std::vector<Factor> factors) {
  std::sort(factors.begin(), factors.end());
  Monomial m;
  for (const auto& [s, e] : factors) {
    if (e == 0) continue;
    if (!m.factors_.empty() && m.factors_.back().first == s) {
      m.factors_.back().second += e;
    } else {
      m.factors_.emplace_back(s, e);
    }
  }
  return m;
}

std::uint32_t Monomial::Exponent(SymbolId s) const {
  auto it = std::lower_bound(
      factors_.begin(), factors_.end(), s,
      [](const Factor& f, SymbolId key) { return f.first < key; });
  return (it != factors_.end() && it->first == s) ? it->second : 0;
}

std::uint32_t Monomial::Degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() ||
        (a != factors_.end() && a->first < b->first)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  return out;
}

Monomial Monomial::Conj() const {
  std::vector<Factor> f;
  f.reserve(factors_.size());
  for (const auto& [s, e] : factors_) f.emplace_back(s.Conj(), e);
  return FromFactors(std::move(f));
}

std::string Monomial::ToString() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [s, e] : factors_) {
    if (!out.empty()) out += "*";
    out += s.ToString();
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

Polynomial Polynomial::Constant(const GaussianRational& c, RelationConfig rel) {
  Polynomial p(rel);
  p.AddTerm(Monomial(), c);
  return p;
}

Polynomial Polynomial::Symbol(SymbolId s, RelationConfig rel) {
  Polynomial p(rel);
  p.terms_.emplace(Monomial::FromFactors({{s, 1}}), GaussianRational(1));
  return p;
}

Polynomial Polynomial::Normalize(const std::vector<RawTerm>& terms,
                                 RelationConfig rel) {
  Polynomial p(rel);
  for (const auto& t : terms) {
    NormalizeInto(Monomial::FromFactors(t.factors), t.coef, rel, p.terms_);
  }
  return p;
}

bool Polynomial::IsOne() const {
  return terms_.size() == 1 && terms_.begin()->first.IsOne() &&
         terms_.begin()->second.IsOne();
}

std::set<SymbolId> Polynomial::Symbols() const {
  std::set<SymbolId> out;
  for (const auto& [m, c] : terms_) {
    for (const auto& f : m.factors()) out.insert(f.first);
  }
  return out;
}

void Polynomial::AddTerm(const Monomial& m, const GaussianRational& c) {
  AddTo(terms_, m, c);
}

void Polynomial::CheckCompatible(const Polynomial& other) const {
  if (!(rel_ == other.rel_)) {
    throw Error(ErrorCode::kRelationMismatch,
                rel_.ToString() + " vs " + other.rel_.ToString());
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial p(rel_);
  for (const auto& [m, c] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, -c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  CheckCompatible(other);
  for (const auto& [m, c] : other.terms_) AddTerm(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  CheckCompatible(other);
  for (const auto& [m, c] : other.terms_) AddTerm(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.CheckCompatible(b);
  Polynomial out(a.rel_);
  if (a.IsZero() || b.IsZero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      NormalizeInto(ma * mb, ca * cb, a.rel_, out.terms_);
    }
  }
  return out;
}

Polynomial Polynomial::Pow(unsigned e) const {
  Polynomial result = Constant(1, rel_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::Scaled(const GaussianRational& c) const {
  Polynomial p(rel_);
  if (c.IsZero()) return p;
  for (const auto& [m, coef] : terms_) p.terms_.emplace_hint(p.terms_.end(), m, coef * c);
  return p;
}

Polynomial Polynomial::Conj() const {
  // Conjugation maps normal forms to normal forms; the rules are symmetric
  // under the symbol swap, so no renormalization is needed.
  Polynomial p(rel_);
  for (const auto& [m, c] : terms_) p.terms_.emplace(m.Conj(), c.Conj());
  return p;
}

Polynomial Polynomial::Substitute(SymbolId s, const GaussianRational& value) const {
  SymbolId sc = s.Conj();
  GaussianRational value_conj = value.Conj();
  Polynomial out(rel_);
  for (const auto& [m, c] : terms_) {
    GaussianRational coef = c;
    std::vector<Monomial::Factor> kept;
    for (const auto& [sym, e] : m.factors()) {
      const GaussianRational* v = nullptr;
      if (sym == s) {
        v = &value;
      } else if (sym == sc) {
        v = &value_conj;
      }
      if (v == nullptr) {
        kept.emplace_back(sym, e);
        continue;
      }
      for (std::uint32_t t = 0; t < e; ++t) coef *= *v;
    }
    NormalizeInto(Monomial::FromFactors(std::move(kept)), coef, rel_, out.terms_);
  }
  return out;
}

std::complex<double> Polynomial::Eval(const Assignment& assignment) const {
  for (const auto& [s, value] : assignment) {
    if (s.kind() == SymbolKind::kVParam || s.kind() == SymbolKind::kCircle) {
      auto it = assignment.find(s.Conj());
      if (it != assignment.end() &&
          std::abs(it->second - std::conj(value)) > 1e-12) {
        throw Error(ErrorCode::kInconsistentConjugate,
                    s.ToString() + " and " + s.Conj().ToString());
      }
    }
  }
  std::complex<double> total = 0.0;
  for (const auto& [m, c] : terms_) {
    std::complex<double> term(c.re().ToDouble(), c.im().ToDouble());
    for (const auto& [s, e] : m.factors()) {
      auto it = assignment.find(s);
      if (it == assignment.end()) {
        throw Error(ErrorCode::kMissingSymbol, s.ToString());
      }
      for (std::uint32_t t = 0; t < e; ++t) term *= it->second;
    }
    total += term;
  }
  return total;
}

std::string Polynomial::ToString() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    GaussianRational coef = c;
    bool negative = coef.im().IsZero() && coef.re().Sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (negative) coef = -coef;
    if (m.IsOne()) {
      out += coef.ToString();
    } else if (coef.IsOne()) {
      out += m.ToString();
    } else {
      out += coef.ToString() + "*" + m.ToString();
    }
    first = false;
  }
  return out;
}

Polynomial PolyAdd(const Polynomial& p, const Polynomial& q) { return p + q; }
Polynomial PolyMul(const Polynomial& p, const Polynomial& q) { return p * q; }
Polynomial PolyConj(const Polynomial& p) { return p.Conj(); }
Polynomial PolyNormalize(const std::vector<RawTerm>& terms, RelationConfig rel) {
  return Polynomial::Normalize(terms, rel);
}
std::complex<double> PolyEval(const Polynomial& p, const Assignment& assignment) {
  return p.Eval(assignment);
}

void Assign(Assignment& assignment, SymbolId s, std::complex<double> value) {
  assignment[s] = value;
  if (s.Conj() != s) assignment[s.Conj()] = std::conj(value);
}

std::string ValidateAssignment(const Assignment& assignment,
                               const RelationConfig& rel, double tol) {
  for (const auto& [s, value] : assignment) {
    switch (s.kind()) {
      case SymbolKind::kCircle:
      case SymbolKind::kCircleConj:
        if (rel.circle_pairs && std::abs(std::abs(value) - 1.0) > tol) {
          return s.ToString() + " is off the unit circle";
        }
        break;
      case SymbolKind::kRadial: {
        if (std::abs(value.imag()) > tol || value.real() < -tol ||
            value.real() > 1.0 + tol) {
          return s.ToString() + " is not a radius in [0, 1]";
        }
        auto it = assignment.find(SymbolId::VParam(s.i(), s.j()));
        if (rel.unit_norm && it != assignment.end() &&
            std::abs(std::norm(value) + std::norm(it->second) - 1.0) > tol) {
          return s.ToString() + " violates r^2 + |v|^2 = 1";
        }
        break;
      }
      default:
        break;
    }
  }
  return {};
}

}  // namespace suframe
