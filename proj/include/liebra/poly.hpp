#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liebra/matrix.hpp"
#include "liebra/rational.hpp"

namespace liebra {

// Univariate polynomial over Q, coefficients lowest degree first,
// normalized so the leading coefficient is nonzero (zero poly = empty).
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1 by convention here.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& coeff(std::size_t i) const;
  const Rational& leading() const;

  Rational eval(const Rational& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial monic() const;

  std::string str() const; // "x^3 - 2*x + 1/2"

private:
  std::vector<Rational> c_;
};

// Monic characteristic polynomial det(xI - m) via the Faddeev-LeVerrier
// recurrence (exact, division only by integers).
Polynomial char_poly(const Matrix& m);

struct RootReport {
  std::map<Rational, int> roots; // root -> multiplicity
  bool splits;                   // true iff multiplicities sum to the degree
};

// All rational roots with multiplicity. Works on the primitive integer model
// of the polynomial; candidate roots come from divisor enumeration of the
// outer coefficients (Pollard rho behind it, so big smooth values are fine).
RootReport rational_roots(const Polynomial& p);

// Quotient of p by (x - r); throws std::domain_error unless r is a root.
Polynomial divide_linear(const Polynomial& p, const Rational& r);

// Monic gcd over Q (Euclid). gcd(0,0) = 0.
Polynomial poly_gcd(Polynomial a, Polynomial b);

} // namespace liebra
