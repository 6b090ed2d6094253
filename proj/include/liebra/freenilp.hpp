#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "liebra/liealg.hpp"

namespace liebra {

/*
 * Free nilpotent Lie algebras on two generators.
 *
 * The basis is a Hall set over v0 < v1, ordered by degree and then by
 * creation order within a degree. A bracketed word [u, w] is a Hall word
 * iff u and w are Hall words with u < w and, when w = [a, b], a <= u.
 * Degrees 1..4 get the conventional labels
 *
 *   v0, v1, w0 = [v0,v1], z0 = [v0,w0], z1 = [v1,w0],
 *   x0 = [v0,z0], x1 = 2[v1,z0], x2 = [v1,z1]
 *
 * (the factor 2 on x1 makes [v0,z1] = [v1,z0] = x1/2, so the degree-4
 * products take their usual symmetric form). Higher degrees are labeled by
 * the Hall word itself, e.g. "[v0,[v0,[v0,[v0,v1]]]]".
 */

/// Bracketed word over the generators, immutable. Ordering between Hall
/// words is positional (basis index), not structural; see FreeNilpotent.
class HallWord {
public:
  static HallWord generator(int i); // i in {0, 1}
  static HallWord bracket(const HallWord& u, const HallWord& w);

  bool is_generator() const { return gen_ >= 0; }
  int generator_index() const { return gen_; }
  const HallWord& left() const { return *left_; }
  const HallWord& right() const { return *right_; }
  std::size_t degree() const { return degree_; }
  std::string str() const;

  friend bool operator==(const HallWord& a, const HallWord& b) { return a.str() == b.str(); }

private:
  HallWord() = default;
  int gen_ = -1;
  std::shared_ptr<const HallWord> left_, right_;
  std::size_t degree_ = 1;
};

/// dim of the degree-s component: (1/s) * sum over d | s of mu(d) 2^(s/d).
std::size_t witt_dimension(std::size_t s);

/// The same sum without the 1/s normalization. Wrong as a dimension count
/// (already at s = 2 it gives 2, the component is 1-dimensional); kept so
/// the audit's negative control can exhibit the discrepancy.
long long witt_dimension_unnormalized(std::size_t s);

class FreeNilpotent {
public:
  const LieAlgebra& alg() const { return alg_; }
  std::size_t degree_cap() const { return t_; }

  /// Graded component of degree s (1-based), as a subspace of the algebra.
  const Subspace& component(std::size_t s) const;
  std::size_t components_count() const { return t_; }

  const std::vector<HallWord>& hall_words() const { return words_; }
  /// Basis index of a Hall word; throws std::invalid_argument if absent.
  std::size_t hall_index(const HallWord& w) const;
  std::size_t degree_of_basis(std::size_t i) const;

  /// b_i = scale * [b_left, b_right] for non-generator basis elements;
  /// drives Leibniz propagation of maps defined on the generators.
  struct Definition { std::size_t left, right; Rational scale; };
  const Definition& definition(std::size_t i) const;

  friend FreeNilpotent build_free_nilpotent(std::size_t t);

private:
  FreeNilpotent(LieAlgebra alg, std::size_t t) : alg_(std::move(alg)), t_(t) {}
  LieAlgebra alg_;
  std::size_t t_;
  std::vector<Subspace> components_;
  std::vector<HallWord> words_;
  std::map<std::string, std::size_t> index_;
  std::vector<Definition> defs_; // defs_[i] meaningful for i >= 2
};

/// Free nilpotent algebra on two generators of class t (1 <= t).
FreeNilpotent build_free_nilpotent(std::size_t t);

/// [w1, w2] as a coefficient vector in the label basis. Degrees must not
/// exceed the cap; the result is 0 when the sum of degrees does.
std::vector<Rational> hall_bracket(const FreeNilpotent& g, const HallWord& w1,
                                   const HallWord& w2);

} // namespace liebra
