#pragma once

#include <cstddef>
#include <vector>

#include "liebra/freenilp.hpp"
#include "liebra/liealg.hpp"

namespace liebra {

/// Space of derivations of an algebra, held as a canonical subspace of the
/// row-major vectorized matrices in Q^(n*n). When built from a graded free
/// nilpotent algebra it also carries the weight-graded pieces: component j
/// consists of the Leibniz extensions of maps sending the degree-1 component
/// into the degree-j component.
class DerivationSpace {
public:
  DerivationSpace() : alg_dim_(0) {}
  DerivationSpace(std::size_t alg_dim, Subspace space,
                  std::vector<Subspace> graded = {})
      : alg_dim_(alg_dim), space_(std::move(space)), graded_(std::move(graded)) {}

  std::size_t alg_dim() const { return alg_dim_; }
  std::size_t dim() const { return space_.dim(); }
  const Subspace& space() const { return space_; }

  bool contains(const Matrix& m) const;
  Matrix basis_matrix(std::size_t i) const;

  bool has_graded() const { return !graded_.empty(); }
  /// Graded piece for weight j (1-based).
  const Subspace& graded(std::size_t j) const;
  std::size_t graded_count() const { return graded_.size(); }

private:
  std::size_t alg_dim_;
  Subspace space_;
  std::vector<Subspace> graded_;
};

/// Full derivation algebra: kernel of the derivation-law system over all
/// basis pairs. Rows of the system are assembled pair-by-pair (concurrently
/// under the parallel policy, in a fixed row layout either way).
DerivationSpace derivation_space(const LieAlgebra& a, Exec policy = Exec::automatic);

/// Span of ad(b_i), as a subspace of vectorized matrices.
Subspace inner_derivations(const LieAlgebra& a);

/// Leibniz extension of a linear map given on the two generators
/// (delta is dim x 2: column g holds the image of generator g).
Matrix extend_from_generators(const FreeNilpotent& g, const Matrix& delta);

/// derivation_space enriched with the weight grading, for free nilpotent
/// algebras. Checks that the graded pieces direct-sum to the whole space.
DerivationSpace graded_components(const FreeNilpotent& g, Exec policy = Exec::automatic);

/// Extension of the identity on the generators: the grading derivation
/// (acts on the degree-s component as multiplication by s).
Matrix grading_derivation(const FreeNilpotent& g);

/// Extensions of the traceless maps on the degree-1 component: e (v1 -> v0),
/// f (v0 -> v1), h = diag(1, -1), in that order.
std::vector<Matrix> sl2_derivations(const FreeNilpotent& g);

/// Direct sum of the graded pieces of weight >= 2 (the nilpotent part).
Subspace nilpotent_radical_part(const DerivationSpace& der);

/// phi^{-1} d phi. Requires phi to be an automorphism of a (checked) and
/// d a derivation (checked); the result is again a derivation.
Matrix conjugate(const LieAlgebra& a, const Matrix& phi, const Matrix& d);

bool is_automorphism(const LieAlgebra& a, const Matrix& phi);

/// Centralizer of the given matrices inside a space of matrices:
/// all X in space with [X, Y] = 0 for every Y. The matrices must lie in
/// the space themselves.
Subspace centralizer_in(const DerivationSpace& space, const std::vector<Matrix>& of);

/// Whether some nonzero combination a*M1 + b*M2 (or a*M1 for a single
/// matrix) is nilpotent. Decided exactly through the trace power sums
/// tr((aA+bB)^k): they are binary forms in (a,b), and a common projective
/// root (gcd of the dehomogenized polynomials, plus the b = 0 point)
/// is equivalent to the existence of a nilpotent pencil element.
/// Only defined for one or two matrices.
bool pencil_has_nilpotent(const std::vector<Matrix>& mats);

} // namespace liebra
