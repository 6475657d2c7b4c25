#pragma once

#include <string>

#include "csq/errors.hpp"
#include "csq/rational.hpp"

namespace csq {

/// Element of the field Q(sqrt5): value = a + b*sqrt(5) with rational a, b.
/// The representation is unique because sqrt(5) is irrational, so equality
/// is componentwise. Multiplication uses (sqrt5)^2 = 5 exactly.
class Surd5 {
 public:
  Surd5() = default;
  Surd5(Rational a) : a_(std::move(a)) {}  // NOLINT: rational embeds implicitly
  Surd5(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static Surd5 sqrt5() { return Surd5(Rational(0), Rational(1)); }
  /// The golden ratio (1 + sqrt5)/2.
  static Surd5 golden() { return Surd5(Rational(1, 2), Rational(1, 2)); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  /// The rational value, provided the sqrt5 component vanishes.
  Rational to_rational() const {
    if (!b_.is_zero()) throw IrrationalResult(to_string());
    return a_;
  }

  Surd5 conjugate() const { return Surd5(a_, -b_); }

  /// Field norm a^2 - 5 b^2; multiplicative, zero only at zero.
  Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

  Surd5 operator-() const { return Surd5(-a_, -b_); }

  friend Surd5 operator+(const Surd5& x, const Surd5& y) {
    return Surd5(x.a_ + y.a_, x.b_ + y.b_);
  }
  friend Surd5 operator-(const Surd5& x, const Surd5& y) {
    return Surd5(x.a_ - y.a_, x.b_ - y.b_);
  }
  friend Surd5 operator*(const Surd5& x, const Surd5& y) {
    return Surd5(x.a_ * y.a_ + Rational(5) * x.b_ * y.b_,
                 x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend Surd5 operator/(const Surd5& x, const Surd5& y) {
    if (y.is_zero()) throw std::domain_error("division by zero");
    Rational n = y.norm();
    Surd5 t = x * y.conjugate();
    return Surd5(t.a_ / n, t.b_ / n);
  }

  Surd5 pow(unsigned long k) const {
    Surd5 result(Rational(1));
    Surd5 base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      base = base * base;
      k >>= 1;
    }
    return result;
  }

  friend bool operator==(const Surd5& x, const Surd5& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Surd5& x, const Surd5& y) { return !(x == y); }

  std::string to_string() const {
    return a_.to_string() + " + (" + b_.to_string() + ")*sqrt(5)";
  }

 private:
  Rational a_;
  Rational b_;
};

}  // namespace csq
