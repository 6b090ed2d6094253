#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace liebra {

// Arbitrary-precision rational, always reduced, denominator >= 1.
// Zero is canonically 0/1. Backed by GMP.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d);

  // Accepts "p/q" or "p" with optional sign, arbitrary length.
  static Rational parse(const std::string& s);

  std::string str() const { return v_.get_str(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  std::string num_str() const { return v_.get_num().get_str(); }
  std::string den_str() const { return v_.get_den().get_str(); }

  // Valid only when the value fits in a long (checked).
  long to_long() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational inverse() const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  // Internal escape hatch (root finding works on the raw mpq/mpz level).
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  const mpq_class& raw() const { return v_; }

private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace liebra
