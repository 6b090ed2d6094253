#include "liebra/subspace.hpp"

#include <stdexcept>

namespace liebra {

Subspace Subspace::zero(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  s.pivots_.resize(ambient);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_[i] = i;
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<std::vector<Rational>>& vecs) {
  for (const auto& v : vecs)
    if (v.size() != ambient) throw std::invalid_argument("Subspace::span: wrong vector length");
  if (vecs.empty()) return zero(ambient);
  return span(Matrix::from_rows(vecs));
}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s;
  s.ambient_ = rows.cols();
  RrefResult r = rref(rows, Exec::serial);
  const std::size_t rk = r.pivots.size();
  Matrix b(rk, s.ambient_);
  for (std::size_t i = 0; i < rk; ++i) b.set_row(i, r.mat.row(i));
  s.basis_ = std::move(b);
  s.pivots_ = std::move(r.pivots);
  return s;
}

std::vector<Rational> Subspace::reduce(std::vector<Rational> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("Subspace::reduce: wrong vector length");
  std::vector<Rational> r = std::move(v);
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (!basis_.at(i, j).is_zero()) r[j] -= c * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const std::vector<Rational>& v) const {
  return is_zero_vector(reduce(v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

std::vector<Rational> Subspace::coords(const std::vector<Rational>& v) const {
  if (!contains(v)) throw std::domain_error("Subspace::coords: vector not in subspace");
  std::vector<Rational> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("Subspace::sum: ambient mismatch");
  Matrix stacked(dim() + other.dim(), ambient_);
  for (std::size_t i = 0; i < dim(); ++i) stacked.set_row(i, basis_.row(i));
  for (std::size_t i = 0; i < other.dim(); ++i) stacked.set_row(dim() + i, other.basis_.row(i));
  return span(stacked);
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient() == b.ambient() && a.basis() == b.basis();
}

Subspace kernel(const Matrix& m, Exec policy) {
  RrefResult r = rref(m, policy);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n);
    v[f] = Rational(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.mat.at(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Matrix restrict_to(const Matrix& m, const Subspace& s) {
  if (m.cols() != s.ambient() || !m.is_square())
    throw std::invalid_argument("restrict_to: shape mismatch");
  const std::size_t d = s.dim();
  Matrix r(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    std::vector<Rational> image = m.apply(s.basis().row(j));
    if (!s.contains(image))
      throw std::domain_error("restrict_to: subspace is not invariant");
    r.set_col(j, s.coords(image));
  }
  return r;
}

} // namespace liebra
