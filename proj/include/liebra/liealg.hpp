#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liebra/exec.hpp"
#include "liebra/matrix.hpp"
#include "liebra/subspace.hpp"

namespace liebra {

/// Structure-constant presentation of a finite-dimensional Lie algebra over Q.
///
/// The bracket is stored densely: c(i,j) is the coefficient vector of
/// [b_i, b_j] in the basis, with antisymmetry filled in from the i < j
/// entries supplied at construction. Construction validates shapes and
/// antisymmetry but does not check Jacobi; that is jacobi_defect's job,
/// and the operations that build new algebras (quotient, extend) re-verify
/// it on their output.
class LieAlgebra {
public:
  struct BracketEntry {
    std::size_t i, j;             // i < j
    std::vector<Rational> value;  // coefficients of [b_i, b_j]
  };

  LieAlgebra(std::vector<std::string> labels,
             const std::vector<BracketEntry>& brackets,
             std::vector<std::vector<std::size_t>> grading = {});

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  /// Index of a label; throws std::invalid_argument if absent.
  std::size_t index_of(const std::string& label) const;
  bool has_label(const std::string& label) const;

  bool has_grading() const { return !grading_.empty(); }
  const std::vector<std::vector<std::size_t>>& grading() const { return grading_; }

  const std::vector<Rational>& bracket(std::size_t i, std::size_t j) const {
    return c_[i * dim_ + j];
  }
  std::vector<Rational> bracket(const std::vector<Rational>& x,
                                const std::vector<Rational>& y) const;

  /// ad(x) as a matrix acting on coordinate columns: ad(x) e_j = [x, b_j].
  Matrix ad(const std::vector<Rational>& x) const;
  Matrix ad_basis(std::size_t i) const;

  /// Nonzero structure constants as (i, j, value) with i < j, for serialization.
  std::vector<BracketEntry> nonzero_brackets() const;

private:
  std::size_t dim_;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> c_; // c_[i*dim+j]
  std::vector<std::vector<std::size_t>> grading_;
};

struct JacobiDefect {
  std::size_t i, j, k;            // i < j < k
  std::vector<Rational> residual; // [[bi,bj],bk] + [[bj,bk],bi] + [[bk,bi],bj]
};

/// All basis triples violating Jacobi, ordered lexicographically by (i,j,k).
/// The parallel path scans triples concurrently; output order is identical.
std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& a, Exec policy = Exec::automatic);

/// Span of [u, v] over basis pairs of the two subspaces.
Subspace product_space(const LieAlgebra& a, const Subspace& u, const Subspace& v);

/// Lower central series a >= [a,a] >= [a,[a,a]] >= ..., strictly descending,
/// ending with the first stabilized term (0 for nilpotent algebras).
std::vector<Subspace> lower_central_series(const LieAlgebra& a);
/// Derived series with the same stabilization convention.
std::vector<Subspace> derived_series(const LieAlgebra& a);

bool is_nilpotent(const LieAlgebra& a);
bool is_solvable(const LieAlgebra& a);
/// Number of nonzero terms of the lower central series; throws
/// std::domain_error if the algebra is not nilpotent.
std::size_t nilindex(const LieAlgebra& a);

Subspace center(const LieAlgebra& a);
Subspace centralizer(const LieAlgebra& a, const Subspace& s);

/// codim of the derived subalgebra, i.e. the number of generators a
/// nilpotent algebra needs.
std::size_t type_of(const LieAlgebra& a);

bool is_ideal(const LieAlgebra& a, const Subspace& s);

/// True iff s is closed under the bracket and the restricted algebra is
/// nilpotent. A non-closed span yields false.
bool is_nilpotent_subalgebra(const LieAlgebra& a, const Subspace& s);

/// Restriction of the bracket to a subalgebra span; throws if not closed.
LieAlgebra restrict_algebra(const LieAlgebra& a, const Subspace& s,
                            const std::vector<std::string>& labels = {});

/// Quotient by an ideal. The complement is greedy: the standard basis
/// vectors at the non-pivot columns of the ideal's canonical basis survive,
/// labeled q0, q1, .... Jacobi is re-verified on the result.
LieAlgebra quotient(const LieAlgebra& a, const Subspace& ideal);

struct ExtensionBracket {
  std::size_t s, t;               // s < t, indices into the new generators
  // Coefficients of [x_s, x_t]: either dim(a) entries (value lies in a) or
  // dim(a) + #generators entries (value may involve the new generators,
  // e.g. [e, f] = h for a Levi factor).
  std::vector<Rational> value;
};

/// Extension of a by new generators x_s acting through derivations:
/// [x_s, v] = ders[s] v for v in a, [x_s, x_t] = tau(s,t).
/// Validates that each matrix is a derivation and that the result satisfies
/// Jacobi; throws std::domain_error with the defect otherwise.
LieAlgebra extend(const LieAlgebra& a, const std::vector<Matrix>& ders,
                  const std::vector<ExtensionBracket>& tau = {},
                  std::vector<std::string> new_labels = {});

bool is_derivation(const LieAlgebra& a, const Matrix& d);

} // namespace liebra
