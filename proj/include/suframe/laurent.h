#ifndef SUFRAME_LAURENT_H_
#define SUFRAME_LAURENT_H_

// Normalizing polynomial ring used by every symbolic identity check.
//
// Symbols are radial parameters r{i,j}, complex parameters v{i,j} with
// their conjugates, and named unit-circle variables with their conjugates.
// Two rewrite rules may be active:
//   circle_pairs:  c * conj(c)  -> 1
//   unit_norm:     r{i,j}^2     -> 1 - v{i,j} * conj(v{i,j})
// Both rules touch disjoint symbols and strictly lower a degree, so the
// normal form is unique and equality of polynomials is structural equality.

#include <complex>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "suframe/rational.h"

namespace suframe {

enum class SymbolKind : std::uint8_t {
  kRadial = 0,
  kVParam = 1,
  kVConj = 2,
  kCircle = 3,
  kCircleConj = 4,
};

// Packed symbol identifier. The packing puts (kind, j, i, name) in
// descending significance, so integer order is the canonical symbol order.
class SymbolId {
 public:
  static constexpr std::size_t kMaxNameLength = 5;

  static SymbolId Radial(int i, int j);
  static SymbolId VParam(int i, int j);
  static SymbolId VConj(int i, int j);
  // Names are 1..5 printable ASCII characters, e.g. "z", "z1", "zp".
  static SymbolId Circle(std::string_view name);
  static SymbolId CircleConj(std::string_view name);

  SymbolKind kind() const { return static_cast<SymbolKind>(key_ >> 56); }
  int i() const { return static_cast<int>((key_ >> 40) & 0xff); }
  int j() const { return static_cast<int>((key_ >> 48) & 0xff); }
  std::string name() const;
  std::uint64_t key() const { return key_; }

  bool IsCircular() const {
    return kind() == SymbolKind::kCircle || kind() == SymbolKind::kCircleConj;
  }
  // v <-> conj(v), c <-> conj(c); radial symbols are fixed.
  SymbolId Conj() const;

  std::string ToString() const;

  friend auto operator<=>(const SymbolId&, const SymbolId&) = default;

 private:
  explicit SymbolId(std::uint64_t key) : key_(key) {}
  static SymbolId Make(SymbolKind kind, int i, int j, std::string_view name);

  std::uint64_t key_ = 0;
};

struct RelationConfig {
  bool circle_pairs = true;
  bool unit_norm = true;

  friend bool operator==(const RelationConfig&, const RelationConfig&) = default;
  std::string ToString() const;
};

// Sorted (symbol, exponent) list; exponents are positive.
class Monomial {
 public:
  using Factor = std::pair<SymbolId, std::uint32_t>;

  Monomial() = default;
  // Merges duplicate symbols and drops zero exponents. No rewriting.
  static Monomial FromFactors(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const { return factors_; }
  bool IsOne() const { return factors_.empty(); }
  std::uint32_t Exponent(SymbolId s) const;
  std::uint32_t Degree() const;

  Monomial operator*(const Monomial& other) const;
  Monomial Conj() const;
  std::string ToString() const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

struct RawTerm {
  GaussianRational coef;
  std::vector<Monomial::Factor> factors;
};

using Assignment = std::map<SymbolId, std::complex<double>>;

class Polynomial {
 public:
  using TermMap = std::map<Monomial, GaussianRational>;

  explicit Polynomial(RelationConfig rel = {}) : rel_(rel) {}

  static Polynomial Constant(const GaussianRational& c, RelationConfig rel = {});
  static Polynomial Symbol(SymbolId s, RelationConfig rel = {});
  // Normalizes an arbitrary (unreduced, possibly duplicated) term list.
  static Polynomial Normalize(const std::vector<RawTerm>& terms,
                              RelationConfig rel);

  const RelationConfig& relations() const { return rel_; }
  const TermMap& terms() const { return terms_; }
  bool IsZero() const { return terms_.empty(); }
  bool IsOne() const;
  std::size_t size() const { return terms_.size(); }
  std::set<SymbolId> Symbols() const;

  Polynomial operator-() const;
  // The binary operators throw Error(kRelationMismatch) when the operands
  // were built under different RelationConfigs.
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial Pow(unsigned e) const;
  Polynomial Scaled(const GaussianRational& c) const;

  Polynomial Conj() const;

  // Replaces `s` by `value` and its conjugate symbol by conj(value), then
  // renormalizes.
  Polynomial Substitute(SymbolId s, const GaussianRational& value) const;

  // Throws Error(kMissingSymbol) if a symbol is unassigned and
  // Error(kInconsistentConjugate) if a conjugate pair disagrees by more
  // than 1e-12.
  std::complex<double> Eval(const Assignment& assignment) const;

  std::string ToString() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void AddTerm(const Monomial& m, const GaussianRational& c);
  void CheckCompatible(const Polynomial& other) const;

  RelationConfig rel_;
  TermMap terms_;
};

// Free-function spellings used by the CLI and tests.
Polynomial PolyAdd(const Polynomial& p, const Polynomial& q);
Polynomial PolyMul(const Polynomial& p, const Polynomial& q);
Polynomial PolyConj(const Polynomial& p);
Polynomial PolyNormalize(const std::vector<RawTerm>& terms, RelationConfig rel);
std::complex<double> PolyEval(const Polynomial& p, const Assignment& assignment);

// Sets `s` and its conjugate symbol together.
void Assign(Assignment& assignment, SymbolId s, std::complex<double> value);

// Checks the relation-side preconditions of an assignment: circle values on
// the unit circle and, under unit_norm, r^2 + |v|^2 = 1 for every assigned
// radial/parameter pair. Returns an empty string when valid, else a reason.
std::string ValidateAssignment(const Assignment& assignment,
                               const RelationConfig& rel, double tol = 1e-12);

}  // namespace suframe

#endif  // SUFRAME_LAURENT_H_
