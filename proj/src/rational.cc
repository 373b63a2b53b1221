#include "suframe/rational.h"

#include <sstream>

#include "suframe/error.h"

namespace suframe {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kZeroDenominator: return "zero denominator";
    case ErrorCode::kDivisionByZero: return "division by zero";
    case ErrorCode::kRelationMismatch: return "relation config mismatch";
    case ErrorCode::kMissingSymbol: return "missing symbol";
    case ErrorCode::kInconsistentConjugate: return "inconsistent conjugate";
    case ErrorCode::kInvalidIndex: return "invalid index";
    case ErrorCode::kDimensionMismatch: return "dimension mismatch";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kOutOfHypothesis: return "out of hypothesis";
    case ErrorCode::kIllConditioned: return "ill-conditioned";
    case ErrorCode::kNotCanonical: return "not a canonical representative";
    case ErrorCode::kNonUnitary: return "non-unitary input";
    case ErrorCode::kUsage: return "usage";
  }
  return "unknown";
}

Rational Rational::Reduce(BigInt num, BigInt den) {
  if (den == 0) {
    throw Error(ErrorCode::kZeroDenominator, "rational with denominator 0");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) return Rational();
  if (den != 1) {
    BigInt g = boost::multiprecision::gcd(num, den);
    if (g != 1) {
      num /= g;
      den /= g;
    }
  }
  return Rational(std::move(num), std::move(den), true);
}

Rational RatReduce(const BigInt& num, const BigInt& den) {
  return Rational::Reduce(num, den);
}

Rational Rational::operator-() const { return Rational(-num_, den_, true); }

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == 1 && other.den_ == 1) {
    num_ += other.num_;
    return *this;
  }
  *this = Reduce(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  if (den_ == 1 && other.den_ == 1) {
    num_ *= other.num_;
    return *this;
  }
  *this = Reduce(num_ * other.num_, den_ * other.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.IsZero()) {
    throw Error(ErrorCode::kDivisionByZero, "rational division by zero");
  }
  *this = Reduce(num_ * other.den_, den_ * other.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::Abs() const {
  return num_ < 0 ? -*this : *this;
}

BigInt Rational::Floor() const {
  // cpp_int division truncates toward zero.
  BigInt q = num_ / den_;
  if (num_ < 0 && q * den_ != num_) q -= 1;
  return q;
}

Rational Rational::FractionalPart() const {
  return *this - Rational(Floor());
}

double Rational::ToDouble() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.ToString();
}

GaussianRational GaussianRational::Inverse() const {
  if (IsZero()) {
    throw Error(ErrorCode::kDivisionByZero, "inverse of zero Gaussian rational");
  }
  Rational n = NormSquared();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& other) {
  re_ += other.re_;
  im_ += other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& other) {
  re_ -= other.re_;
  im_ -= other.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& other) {
  if (im_.IsZero() && other.im_.IsZero()) {
    re_ *= other.re_;
    return *this;
  }
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string GaussianRational::ToString() const {
  if (im_.IsZero()) return re_.ToString();
  std::ostringstream os;
  if (re_.IsZero()) {
    os << im_ << "i";
  } else {
    os << "(" << re_ << (im_.Sign() < 0 ? "-" : "+") << im_.Abs() << "i)";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) {
  return os << g.ToString();
}

GaussianRational GaussOpApply(const GaussianRational& a,
                              const GaussianRational& b, GaussOp op) {
  switch (op) {
    case GaussOp::kAdd: return a + b;
    case GaussOp::kMul: return a * b;
    case GaussOp::kConj: return a.Conj();
    case GaussOp::kInv: return a.Inverse();
  }
  return a;
}

}  // namespace suframe
