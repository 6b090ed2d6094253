#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "liebra/liealg.hpp"
#include "liebra/matrix.hpp"

namespace liebra {

/*
 * JSON formats.
 *
 * Algebra:
 *   { "dim": n, "basis": ["v0", ...],
 *     "brackets": [ { "i": 0, "j": 1, "value": [[2, "1"], [3, "-1/2"]] }, ... ],
 *     "grading": [[0,1],[2]] }            (grading optional)
 * Only pairs i < j are stored; antisymmetry is implied and duplicate or
 * i >= j entries are rejected.
 *
 * Matrix:
 *   { "size": n, "entries": [["p/q", ...], ...] }          (square)
 *   { "rows": r, "cols": c, "entries": [...] }              (rectangular)
 *
 * All numbers are exact rational strings ("p/q" or "p").
 */

LieAlgebra read_algebra_json(const std::string& text);
LieAlgebra read_algebra_file(const std::string& path);
std::string write_algebra_json(const LieAlgebra& a);

Matrix read_matrix_json(const std::string& text);
Matrix read_matrix_file(const std::string& path);
std::string write_matrix_json(const Matrix& m);

std::string read_text_file(const std::string& path); // throws on IO failure

// Affine expression over named parameters: "1", "-3/2", "alpha",
// "2*alpha", "1+2*alpha-beta". Used by catalog data files; a plain
// rational string is the special case with no parameter terms.
struct AffineExpr {
  Rational constant;
  std::map<std::string, Rational> linear;

  static AffineExpr parse(const std::string& s);
  Rational eval(const std::map<std::string, Rational>& values) const;
  bool is_constant() const { return linear.empty(); }
};

} // namespace liebra
