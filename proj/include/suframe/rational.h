#ifndef SUFRAME_RATIONAL_H_
#define SUFRAME_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace suframe {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number. Always held reduced with a positive denominator,
// so structural equality is numeric equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT

  // Throws Error(kZeroDenominator) when den == 0.
  static Rational Reduce(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool IsZero() const { return num_ == 0; }
  bool IsInteger() const { return den_ == 1; }
  int Sign() const { return num_.sign(); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

  Rational Abs() const;
  // Largest integer <= value.
  BigInt Floor() const;
  // Representative of value mod 1 in [0, 1).
  Rational FractionalPart() const;
  double ToDouble() const;
  std::string ToString() const;

 private:
  Rational(BigInt num, BigInt den, bool) : num_(std::move(num)), den_(std::move(den)) {}

  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

// Free-function spelling of Rational::Reduce.
Rational RatReduce(const BigInt& num, const BigInt& den);

// Element of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(std::int64_t re) : re_(re) {}          // NOLINT
  GaussianRational(Rational re, Rational im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational I() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool IsZero() const { return re_.IsZero() && im_.IsZero(); }
  bool IsOne() const { return im_.IsZero() && re_ == Rational(1); }

  GaussianRational Conj() const { return {re_, -im_}; }
  // |a|^2 as an exact rational.
  Rational NormSquared() const { return re_ * re_ + im_ * im_; }
  // Throws Error(kDivisionByZero) on zero.
  GaussianRational Inverse() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& other);
  GaussianRational& operator-=(const GaussianRational& other);
  GaussianRational& operator*=(const GaussianRational& other);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational& b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational& b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational& b) {
    return a *= b;
  }
  friend bool operator==(const GaussianRational&,
                         const GaussianRational&) = default;

  std::string ToString() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);

enum class GaussOp { kAdd, kMul, kConj, kInv };

// Dispatching entry point over the field operations; `b` is ignored for
// kConj and kInv.
GaussianRational GaussOpApply(const GaussianRational& a,
                              const GaussianRational& b, GaussOp op);

}  // namespace suframe

#endif  // SUFRAME_RATIONAL_H_
