#include "liebra/poly.hpp"

#include <gmpxx.h>

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace liebra {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) {
  return Polynomial(std::vector<Rational>{c});
}

const Rational& Polynomial::coeff(std::size_t i) const {
  static const Rational kZero;
  return i < c_.size() ? c_[i] : kZero;
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw std::domain_error("Polynomial::leading: zero polynomial");
  return c_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational v;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      if (!b.c_[j].is_zero()) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return Polynomial();
  const Rational inv = leading().inverse();
  std::vector<Rational> c(c_);
  for (auto& x : c) x *= inv;
  return Polynomial(std::move(c));
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational c = coeff(static_cast<std::size_t>(i));
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational mag = neg ? -c : c;
    const bool unit = (mag == Rational(1));
    if (i == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial char_poly(const Matrix& a) {
  if (!a.is_square()) throw std::domain_error("char_poly: not square");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = Rational(1);
  if (n == 0) return Polynomial(std::move(c));
  Matrix m = a;
  c[n - 1] = -m.trace();
  for (std::size_t k = 2; k <= n; ++k) {
    Matrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k + 1];
    m = a * shifted;
    c[n - k] = -(m.trace() / Rational(static_cast<long>(k)));
  }
  return Polynomial(std::move(c));
}

Polynomial divide_linear(const Polynomial& p, const Rational& root) {
  if (p.is_zero() || p.degree() < 1)
    throw std::domain_error("divide_linear: degree too small");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<Rational> q(n);
  q[n - 1] = p.coeff(n);
  for (std::size_t k = n - 1; k >= 1; --k) q[k - 1] = p.coeff(k) + root * q[k];
  const Rational rem = p.coeff(0) + root * q[0];
  if (!rem.is_zero()) throw std::domain_error("divide_linear: not a root");
  return Polynomial(std::move(q));
}

namespace {

mpz_class pollard_rho_factor(const mpz_class& n, gmp_randclass& rng) {
  if (n % 2 == 0) return 2;
  while (true) {
    mpz_class x = rng.get_z_range(n - 3) + 2;
    mpz_class y = x;
    mpz_class c = rng.get_z_range(n - 1) + 1;
    mpz_class d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break; // cycle without a factor; restart with a new c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out, gmp_randclass& rng) {
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  while (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 32)) {
      ++out[n];
      return;
    }
    mpz_class d = pollard_rho_factor(n, rng);
    factor_into(d, out, rng);
    n /= d;
  }
}

std::vector<mpz_class> all_divisors(const mpz_class& n) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x5eedUL);
  std::map<mpz_class, int> f;
  mpz_class m = n < 0 ? mpz_class(-n) : n;
  if (m > 1) factor_into(m, f, rng);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : f) {
    std::vector<mpz_class> next;
    mpz_class pk = 1;
    for (int k = 0; k <= e; ++k) {
      for (const auto& d : divs) next.push_back(d * pk);
      pk *= p;
    }
    divs = std::move(next);
  }
  return divs;
}

} // namespace

RootReport rational_roots(const Polynomial& p) {
  if (p.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
  RootReport rep;
  rep.splits = false;

  // Multiplicity of 0 as a root = number of vanishing low-order coefficients.
  std::size_t zero_mult = 0;
  while (p.coeff(zero_mult).is_zero()) ++zero_mult;
  Polynomial q = p;
  for (std::size_t i = 0; i < zero_mult; ++i) q = divide_linear(q, Rational(0));
  if (zero_mult > 0) rep.roots[Rational(0)] = static_cast<int>(zero_mult);

  long total = static_cast<long>(zero_mult);
  if (q.degree() >= 1) {
    // Clear denominators to get an integer model: a candidate root p/q in
    // lowest terms must have p dividing the constant term and q dividing
    // the leading one.
    mpz_class den_lcm = 1;
    for (long i = 0; i <= q.degree(); ++i) {
      mpz_class d = q.coeff(static_cast<std::size_t>(i)).raw().get_den();
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
    }
    const mpq_class scale_q(den_lcm, 1);
    mpz_class a0 = 0, an = 0;
    {
      mpq_class c0 = q.coeff(0).raw() * scale_q;
      mpq_class cn = q.leading().raw() * scale_q;
      a0 = c0.get_num();
      an = cn.get_num();
    }
    std::vector<mpz_class> ps = all_divisors(a0);
    std::vector<mpz_class> qs = all_divisors(an);
    std::set<Rational> tried;
    for (const auto& num : ps) {
      for (const auto& den : qs) {
        for (int sgn : {1, -1}) {
          Rational cand(mpq_class(sgn > 0 ? num : mpz_class(-num), den));
          if (!tried.insert(cand).second) continue;
          if (!q.eval(cand).is_zero()) continue;
          int mult = 0;
          Polynomial w = q;
          while (!w.is_zero() && w.degree() >= 1 && w.eval(cand).is_zero()) {
            w = divide_linear(w, cand);
            ++mult;
          }
          rep.roots[cand] = mult;
          total += mult;
        }
      }
    }
  }
  rep.splits = (total == p.degree());
  return rep;
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  Polynomial x = std::move(a), y = std::move(b);
  while (!y.is_zero()) {
    // Remainder of x by y via long division.
    Polynomial r = x;
    while (!r.is_zero() && r.degree() >= y.degree()) {
      const long shift = r.degree() - y.degree();
      const Rational f = r.leading() / y.leading();
      std::vector<Rational> term(static_cast<std::size_t>(shift) + 1);
      term.back() = f;
      r -= Polynomial(std::move(term)) * y;
    }
    x = y;
    y = r;
  }
  return x.monic();
}

} // namespace liebra
