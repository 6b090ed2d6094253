#include "liebra/matrix.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liebra {

int exec_thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool exec_use_parallel(Exec policy, long long work_estimate) {
  switch (policy) {
    case Exec::serial: return false;
    case Exec::parallel:
#ifdef _OPENMP
      return true;
#else
      return false;
#endif
    case Exec::automatic:
#ifdef _OPENMP
      return work_estimate >= 4096 && omp_get_max_threads() > 1;
#else
      (void)work_estimate;
      return false;
#endif
  }
  return false;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_)
      throw std::invalid_argument("Matrix::from_rows: ragged rows");
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Rational> Matrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<long>(i * cols_),
          a_.begin() + static_cast<long>((i + 1) * cols_)};
}

std::vector<Rational> Matrix::col(std::size_t j) const {
  std::vector<Rational> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

void Matrix::set_row(std::size_t i, const std::vector<Rational>& r) {
  if (r.size() != cols_) throw std::invalid_argument("Matrix::set_row: size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = r[j];
}

void Matrix::set_col(std::size_t j, const std::vector<Rational>& c) {
  if (c.size() != rows_) throw std::invalid_argument("Matrix::set_col: size mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = c[i];
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Rational Matrix::trace() const {
  if (!is_square()) throw std::domain_error("Matrix::trace: not square");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

Matrix Matrix::power(std::size_t k) const {
  if (!is_square()) throw std::domain_error("Matrix::power: not square");
  Matrix r = identity(rows_);
  for (std::size_t s = 0; s < k; ++s) r = r * *this;
  return r;
}

Matrix Matrix::unvectorize(const std::vector<Rational>& v, std::size_t n) {
  if (v.size() != n * n) throw std::invalid_argument("Matrix::unvectorize: size mismatch");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) m.a_[i] = v[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in +");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("Matrix: shape mismatch in -");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix: shape mismatch in *");
  Matrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

Matrix operator*(const Rational& s, Matrix m) {
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) *= s;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
  std::vector<Rational> y(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !x[j].is_zero()) y[i] += at(i, j) * x[j];
  return y;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m.at(i, j);
    os << "]" << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// Eliminate column `col` from every row except `pivot_row`, assuming the
// pivot entry is already 1. Row updates are independent, which is what
// makes the parallel path bit-identical to the serial one.
void eliminate_column(Matrix& m, std::size_t pivot_row, std::size_t col, bool parallel) {
  const long long n = static_cast<long long>(m.rows());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (long long r = 0; r < n; ++r) {
    const auto ur = static_cast<std::size_t>(r);
    if (ur == pivot_row) continue;
    const Rational f = m.at(ur, col);
    if (f.is_zero()) continue;
    for (std::size_t j = col; j < m.cols(); ++j) {
      if (!m.at(pivot_row, j).is_zero()) m.at(ur, j) -= f * m.at(pivot_row, j);
    }
  }
#ifndef _OPENMP
  (void)parallel;
#endif
}

RrefResult rref_impl(Matrix m, bool parallel) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m.at(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t j = col; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    const Rational inv = m.at(row, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!m.at(row, j).is_zero()) m.at(row, j) *= inv;
    eliminate_column(m, row, col, parallel);
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

} // namespace

RrefResult rref(const Matrix& m, Exec policy) {
  const long long work = static_cast<long long>(m.rows()) * static_cast<long long>(m.cols());
  return rref_impl(m, exec_use_parallel(policy, work));
}

RrefResult rref_serial(const Matrix& m) { return rref_impl(m, false); }

std::size_t rank(const Matrix& m, Exec policy) { return rref(m, policy).pivots.size(); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw std::domain_error("inverse: not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Rational(1);
  }
  RrefResult r = rref(aug, Exec::serial);
  for (std::size_t i = 0; i < n; ++i)
    if (i >= r.pivots.size() || r.pivots[i] != i)
      throw std::domain_error("inverse: matrix is singular");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.mat.at(i, n + j);
  return inv;
}

std::vector<Rational> zero_vector(std::size_t n) { return std::vector<Rational>(n); }

std::vector<Rational> unit_vector(std::size_t n, std::size_t i) {
  std::vector<Rational> v(n);
  v.at(i) = Rational(1);
  return v;
}

bool is_zero_vector(const std::vector<Rational>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector add: size mismatch");
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sub: size mismatch");
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

std::vector<Rational> scale(const Rational& c, const std::vector<Rational>& v) {
  std::vector<Rational> r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

std::string vector_str(const std::vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

} // namespace liebra
