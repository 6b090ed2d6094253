#pragma once

#include <cstddef>
#include <vector>

#include "liebra/matrix.hpp"

namespace liebra {

/// Subspace of Q^n held in canonical form: the basis matrix is the RREF of
/// any spanning set with zero rows dropped. Two subspaces are equal iff
/// their basis matrices are entrywise equal, so == is structural.
class Subspace {
public:
  Subspace() : ambient_(0) {}

  static Subspace zero(std::size_t ambient);
  static Subspace full(std::size_t ambient);
  /// Canonicalizes the spanning rows (RREF, zero rows dropped).
  static Subspace span(std::size_t ambient, const std::vector<std::vector<Rational>>& vecs);
  static Subspace span(const Matrix& rows);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  /// Residual of v after eliminating this subspace's pivot coordinates;
  /// zero iff v is a member.
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  /// Coordinates of a member vector in the canonical basis rows. Because the
  /// basis is in RREF, these are just the entries at the pivot columns.
  std::vector<Rational> coords(const std::vector<Rational>& v) const;

  Subspace sum(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Kernel of m as a subspace of Q^cols (null space of the column action).
Subspace kernel(const Matrix& m, Exec policy = Exec::automatic);

/// Restriction of the column action of m to an invariant subspace, expressed
/// in the subspace's canonical basis. Throws std::domain_error if the
/// subspace is not invariant under m.
Matrix restrict_to(const Matrix& m, const Subspace& s);

} // namespace liebra
