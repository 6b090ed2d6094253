#include "liebra/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace liebra {

Rational::Rational(long n, long d) {
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
  // mpq_class accepts "p/q" but not surrounding junk; validate the charset
  // first so error messages are ours and "1/0" is caught explicitly.
  std::size_t slash = std::string::npos;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '/') {
      if (slash != std::string::npos)
        throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
      slash = k;
      continue;
    }
    bool sign_ok = (c == '+' || c == '-') && (k == 0 || k == slash + 1);
    if (!sign_ok && (c < '0' || c > '9'))
      throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
  }
  if (slash == 0 || slash == s.size() - 1)
    throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
  std::string norm; // GMP rejects explicit '+' signs
  for (char c : s)
    if (c != '+') norm += c;
  if (norm.empty() || norm == "-" || norm.back() == '/')
    throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
  mpq_class v;
  if (v.set_str(norm, 10) != 0)
    throw std::invalid_argument("Rational::parse: bad rational '" + s + "'");
  if (v.get_den() == 0) throw std::domain_error("Rational::parse: zero denominator");
  v.canonicalize();
  return Rational(std::move(v));
}

long Rational::to_long() const {
  if (!is_integer()) throw std::domain_error("Rational::to_long: not an integer");
  if (!v_.get_num().fits_slong_p()) throw std::domain_error("Rational::to_long: overflow");
  return v_.get_num().get_si();
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational::inverse: division by zero");
  return Rational(mpq_class(1) / v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace liebra
