#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace weylkit {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using BigRational = mpq_class;
using BigInteger = mpz_class;

/// Raised when inverting or dividing by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero in Q(i)") {}
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds num/den in canonical form. Throws DivisionByZero for den == 0.
BigRational make_rational(const BigInteger& num, const BigInteger& den = 1);

/// An element a + b i of the Gaussian rationals Q(i).
///
/// Values are immutable in spirit: every operation returns a fresh canonical
/// value, so equality is structural and instances can be shared freely.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(std::int64_t re) : re_(static_cast<long>(re)) {}  // NOLINT(implicit)
  GaussianRational(BigRational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  GaussianRational(BigRational re, BigRational im)
      : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {BigRational(0), BigRational(1)}; }
  static GaussianRational ratio(std::int64_t num, std::int64_t den) {
    return make_rational(BigInteger(static_cast<long>(num)),
                         BigInteger(static_cast<long>(den)));
  }

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_imaginary() const { return sgn(re_) == 0; }
  /// True for the four units of Z[i]: 1, -1, i, -i.
  bool is_unit() const;

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2 = a^2 + b^2.
  BigRational norm() const { return re_ * re_ + im_ * im_; }
  /// Multiplicative inverse. Throws DivisionByZero for zero.
  GaussianRational inv() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Canonical text form: "0", "-3/2", "i", "-1/2 i", "1/2 + 3 i", "2 - i".
  std::string str() const;
  /// Inverse of str(). Also accepts "a/b + c/d i" with arbitrary spacing.
  static GaussianRational parse(std::string_view text);

 private:
  BigRational re_{0};
  BigRational im_{0};
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

enum class ArithKind { Add, Sub, Mul, Neg, Conj };

/// Single entry point for the field operations. For unary kinds b is ignored.
GaussianRational gq_arith(const GaussianRational& a, const GaussianRational& b, ArithKind kind);
GaussianRational gq_inv(const GaussianRational& a);

/// Rational rendering "p" or "p/q".
std::string rational_str(const BigRational& r);

}  // namespace weylkit
