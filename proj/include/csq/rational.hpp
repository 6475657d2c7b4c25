#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "csq/integer.hpp"

namespace csq {

/// Exact rational number.
///
/// Invariants: always in lowest terms, denominator > 0, zero is 0/1.
/// Construction canonicalizes; GMP's mpq arithmetic preserves canonical form,
/// so every value handed out satisfies the invariants.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(int v) : value_(v) {}                     // NOLINT: implicit by design
  Rational(long v) : value_(static_cast<signed long>(v)) {}  // NOLINT
  Rational(const Integer& v) : value_(v) {}          // NOLINT

  Rational(const Integer& num, const Integer& den) : value_(num, den) {
    if (sgn(den) == 0) throw std::domain_error("zero denominator");
    value_.canonicalize();
  }
  Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

  /// Parses "p" or "p/q" in base 10.
  static Rational from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) {
      throw std::invalid_argument("not a rational: '" + s + "'");
    }
    if (sgn(v.get_den()) == 0) throw std::domain_error("zero denominator");
    v.canonicalize();
    Rational r;
    r.value_ = std::move(v);
    return r;
  }

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational r;
    r.value_ = 1 / value_;
    return r;
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.value_.get_mpq_t(), b.value_.get_mpq_t()) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  /// "p/q", or just "p" when the value is an integer.
  std::string to_string() const {
    if (is_integer()) return value_.get_num().get_str();
    return value_.get_str();
  }

  double to_double() const { return value_.get_d(); }

 private:
  mpq_class value_;
};

inline Rational operator*(const Integer& a, const Rational& b) {
  return Rational(a) * b;
}

}  // namespace csq
