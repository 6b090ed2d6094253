#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "liebra/exec.hpp"
#include "liebra/rational.hpp"

namespace liebra {

// Dense rational matrix, row-major. Matrices act on coordinate columns:
// the image of basis vector e_j is column j.
class Matrix {
public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Rational> row(std::size_t i) const;
  std::vector<Rational> col(std::size_t j) const;
  void set_row(std::size_t i, const std::vector<Rational>& r);
  void set_col(std::size_t j, const std::vector<Rational>& c);

  bool is_zero() const;
  Rational trace() const;
  Matrix transpose() const;
  Matrix power(std::size_t k) const;

  // Row-major flattening; unvectorize is its inverse for n x n matrices.
  std::vector<Rational> vectorize() const { return a_; }
  static Matrix unvectorize(const std::vector<Rational>& v, std::size_t n);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, Matrix m);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Matrix-vector product (vector as column).
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  std::string str() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Commutator ab - ba.
Matrix commutator(const Matrix& a, const Matrix& b);

struct RrefResult {
  Matrix mat;
  std::vector<std::size_t> pivots; // pivot column of each nonzero row, ascending
};

// Reduced row echelon form with deterministic pivoting (first nonzero row,
// left-to-right columns). The parallel path distributes the elimination of
// the non-pivot rows and is bit-identical to the serial one.
RrefResult rref(const Matrix& m, Exec policy = Exec::automatic);
RrefResult rref_serial(const Matrix& m); // serial reference path

std::size_t rank(const Matrix& m, Exec policy = Exec::automatic);

// Inverse of a square invertible matrix; throws std::domain_error if singular.
Matrix inverse(const Matrix& m);

// Basic vector helpers (coefficient vectors come up everywhere).
std::vector<Rational> zero_vector(std::size_t n);
std::vector<Rational> unit_vector(std::size_t n, std::size_t i);
bool is_zero_vector(const std::vector<Rational>& v);
std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> sub(const std::vector<Rational>& a, const std::vector<Rational>& b);
std::vector<Rational> scale(const Rational& c, const std::vector<Rational>& v);
std::string vector_str(const std::vector<Rational>& v);

} // namespace liebra
