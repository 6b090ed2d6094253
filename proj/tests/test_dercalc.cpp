// Derivation calculus. The dimension oracle for the free nilpotent bases is
// universality: a derivation is freely determined by arbitrary images of the
// two generators, so dim Der = 2 * dim. Everything else is checked against
// the defining identities (Leibniz law, weight law, sl2 relations) rather
// than stored numbers.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <stdexcept>
#include <vector>

#include "liebra/dercalc.hpp"
#include "liebra/freenilp.hpp"
#include "liebra/liealg.hpp"
#include "liebra/sl2rep.hpp"

using namespace liebra;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Matrix diag5(std::array<long, 5> d) {
  Matrix m(5, 5);
  for (std::size_t i = 0; i < 5; ++i) m.at(i, i) = q(d[i]);
  return m;
}

// The automorphism group of the class-3 base in its published coordinate
// form: the top-left 2x2 block (a1 a2; a3 a4) acts on the generators, the
// rest is forced by functoriality up to the free tail (a5 ... a10).
Matrix aut3(const std::array<Rational, 10>& v) {
  const Rational &a1 = v[0], &a2 = v[1], &a3 = v[2], &a4 = v[3], &a5 = v[4], &a6 = v[5],
                 &a7 = v[6], &a8 = v[7], &a9 = v[8], &a10 = v[9];
  const Rational eps = a1 * a4 - a2 * a3;
  Matrix m(5, 5);
  m.at(0, 0) = a1;
  m.at(0, 1) = a2;
  m.at(1, 0) = a3;
  m.at(1, 1) = a4;
  m.at(2, 0) = a5;
  m.at(2, 1) = a6;
  m.at(2, 2) = eps;
  m.at(3, 0) = a7;
  m.at(3, 1) = a8;
  m.at(3, 2) = a1 * a6 - a2 * a5;
  m.at(3, 3) = eps * a1;
  m.at(3, 4) = eps * a2;
  m.at(4, 0) = a9;
  m.at(4, 1) = a10;
  m.at(4, 2) = a3 * a6 - a4 * a5;
  m.at(4, 3) = eps * a3;
  m.at(4, 4) = eps * a4;
  return m;
}

Matrix unipotent3(const Rational& v7, const Rational& v8, const Rational& v9,
                  const Rational& v10) {
  return aut3({q(1), q(0), q(0), q(1), q(0), q(0), v7, v8, v9, v10});
}

} // namespace

TEST_CASE("derivations of the free bases are exactly the generator maps") {
  for (std::size_t t = 1; t <= 4; ++t) {
    const FreeNilpotent g = build_free_nilpotent(t);
    const DerivationSpace der = derivation_space(g.alg());
    // universality oracle: one derivation per pair of generator images
    CHECK(der.dim() == 2 * g.alg().dim());
    // and every Leibniz extension of a generator map lands inside
    Matrix delta(g.alg().dim(), 2);
    delta.at(0, 0) = q(3, 2);
    delta.at(1, 1) = q(-1);
    if (g.alg().dim() > 2) delta.at(2, 0) = q(5);
    const Matrix ext = extend_from_generators(g, delta);
    CHECK(is_derivation(g.alg(), ext));
    CHECK(der.contains(ext));
    // basis elements really are derivations
    for (std::size_t i = 0; i < der.dim(); ++i)
      CHECK(is_derivation(g.alg(), der.basis_matrix(i)));
  }
}

TEST_CASE("graded pieces split the derivation algebra by weight") {
  const std::vector<std::vector<std::size_t>> expected = {
      {4}, {4, 2}, {4, 2, 4}, {4, 2, 4, 6}};
  for (std::size_t t = 1; t <= 4; ++t) {
    const FreeNilpotent g = build_free_nilpotent(t);
    const DerivationSpace der = graded_components(g);
    REQUIRE(der.has_graded());
    REQUIRE(der.graded_count() == t);
    std::size_t total = 0;
    for (std::size_t j = 1; j <= t; ++j) {
      CHECK(der.graded(j).dim() == expected[t - 1][j - 1]);
      total += der.graded(j).dim();
    }
    CHECK(total == der.dim());
    CHECK_THROWS_AS(der.graded(t + 1), std::out_of_range);
  }
}

TEST_CASE("the grading derivation satisfies the weight law") {
  for (std::size_t t = 2; t <= 4; ++t) {
    const FreeNilpotent g = build_free_nilpotent(t);
    const DerivationSpace der = graded_components(g);
    const Matrix I = grading_derivation(g);
    // I acts on the degree-s component by s
    for (std::size_t s = 1; s <= t; ++s) {
      const Subspace& comp = g.component(s);
      for (std::size_t r = 0; r < comp.dim(); ++r) {
        const auto x = comp.basis().row(r);
        CHECK(I.apply(x) == scale(q(static_cast<long>(s)), x));
      }
    }
    // [I, d] = (j - 1) d for d of weight j
    for (std::size_t j = 1; j <= t; ++j)
      for (std::size_t r = 0; r < der.graded(j).dim(); ++r) {
        const Matrix d = Matrix::unvectorize(der.graded(j).basis().row(r), g.alg().dim());
        CHECK(commutator(I, d) == q(static_cast<long>(j) - 1) * d);
      }
  }
}

TEST_CASE("the grading derivation of the class-2 and class-3 bases is diagonal") {
  const FreeNilpotent g2 = build_free_nilpotent(2);
  Matrix d2(3, 3);
  d2.at(0, 0) = q(1);
  d2.at(1, 1) = q(1);
  d2.at(2, 2) = q(2);
  CHECK(grading_derivation(g2) == d2);
  const FreeNilpotent g3 = build_free_nilpotent(3);
  CHECK(grading_derivation(g3) == diag5({1, 1, 2, 3, 3}));
}

TEST_CASE("inner derivations: dimension is dim minus center") {
  const std::vector<std::size_t> expected = {0, 2, 3, 5};
  for (std::size_t t = 1; t <= 4; ++t) {
    const FreeNilpotent g = build_free_nilpotent(t);
    const Subspace inner = inner_derivations(g.alg());
    CHECK(inner.dim() == expected[t - 1]);
    CHECK(inner.dim() == g.alg().dim() - center(g.alg()).dim());
    CHECK(derivation_space(g.alg()).space().contains(inner));
  }
}

TEST_CASE("sl2 action on the free bases") {
  for (std::size_t t = 1; t <= 4; ++t) {
    const FreeNilpotent g = build_free_nilpotent(t);
    const auto efh = sl2_derivations(g);
    REQUIRE(efh.size() == 3);
    // the triple satisfies the sl2 relations and consists of derivations
    CHECK(check_sl2_relations(Sl2Triple{efh[0], efh[1], efh[2]}));
    for (const auto& m : efh) CHECK(is_derivation(g.alg(), m));
    // e sends v1 to v0 and kills v0; h is the trace-free diagonal on degree 1
    CHECK(efh[0].apply(unit_vector(g.alg().dim(), 1)) == unit_vector(g.alg().dim(), 0));
    CHECK(is_zero_vector(efh[0].apply(unit_vector(g.alg().dim(), 0))));
    CHECK(efh[2].at(0, 0) == q(1));
    CHECK(efh[2].at(1, 1) == q(-1));
  }
}

TEST_CASE("nilpotent radical part collects the positive weights") {
  const std::vector<std::size_t> expected = {0, 2, 6, 12};
  for (std::size_t t = 1; t <= 4; ++t) {
    const FreeNilpotent g = build_free_nilpotent(t);
    const DerivationSpace der = graded_components(g);
    const Subspace nil = nilpotent_radical_part(der);
    CHECK(nil.dim() == expected[t - 1]);
    // every member is a nilpotent matrix: it raises the grading strictly
    for (std::size_t r = 0; r < nil.dim(); ++r) {
      const Matrix m = Matrix::unvectorize(nil.basis().row(r), g.alg().dim());
      CHECK(m.power(g.alg().dim()).is_zero());
    }
  }
  CHECK_THROWS_AS(nilpotent_radical_part(derivation_space(build_free_nilpotent(2).alg())),
                  std::invalid_argument);
}

TEST_CASE("the published automorphism table gives automorphisms") {
  const FreeNilpotent g3 = build_free_nilpotent(3);
  const LieAlgebra& a = g3.alg();
  CHECK(is_automorphism(a, aut3({q(1), q(2), q(3), q(4), q(5), q(6), q(7), q(8), q(9), q(10)})));
  CHECK(is_automorphism(a, aut3({q(2), q(0), q(0), q(1, 2), q(0), q(0), q(0), q(0), q(0), q(0)})));
  CHECK(is_automorphism(a, Matrix::identity(5)));
  // a degenerate top block (eps = 0) is not invertible, hence no automorphism
  CHECK(!is_automorphism(a, aut3({q(1), q(2), q(2), q(4), q(0), q(0), q(0), q(0), q(0), q(0)})));
  // and an invertible non-morphism is rejected too
  Matrix swap = Matrix::identity(5);
  swap.at(3, 3) = q(0);
  swap.at(4, 4) = q(0);
  swap.at(3, 4) = q(1);
  swap.at(4, 3) = q(1);
  CHECK(!is_automorphism(a, swap));
}

TEST_CASE("conjugate computes phi^-1 d phi and validates its inputs") {
  const FreeNilpotent g3 = build_free_nilpotent(3);
  const LieAlgebra& a = g3.alg();
  const Matrix phi = aut3({q(1), q(0), q(1), q(1), q(0), q(2), q(0), q(0), q(0), q(0)});
  const Matrix d = grading_derivation(g3);
  const Matrix c = conjugate(a, phi, d);
  CHECK(c == inverse(phi) * d * phi);
  CHECK(is_derivation(a, c));
  // conjugating by the identity is the identity operation
  CHECK(conjugate(a, Matrix::identity(5), d) == d);
  Matrix swap = Matrix::identity(5);
  swap.at(3, 3) = q(0);
  swap.at(4, 4) = q(0);
  swap.at(3, 4) = q(1);
  swap.at(4, 3) = q(1);
  CHECK_THROWS_AS(conjugate(a, swap, d), std::domain_error);
  CHECK_THROWS_AS(conjugate(a, phi, Matrix::identity(5)), std::domain_error);
}

TEST_CASE("the frozen witness of the non-semisimple reduction") {
  // The one-parameter family diag(1,1,2,3,3) + E21 + E54 with lower-left tail
  // (1, 0, 0) is cleaned by the unipotent automorphism with slot vector
  // (-1/2, 0, 1/4, 0): an explicit certificate that the reduction works.
  const FreeNilpotent g3 = build_free_nilpotent(3);
  const LieAlgebra& a = g3.alg();
  Matrix target = diag5({1, 1, 2, 3, 3});
  target.at(1, 0) = q(1);
  target.at(4, 3) = q(1);
  Matrix d = target;
  d.at(3, 0) += q(1);  // the tail
  CHECK(is_derivation(a, d));
  const Matrix phi = unipotent3(q(-1, 2), q(0), q(1, 4), q(0));
  CHECK(conjugate(a, phi, d) == target);
  // the slot vector is specific: zeroing it leaves the tail in place
  CHECK(conjugate(a, Matrix::identity(5), d) != target);
}

TEST_CASE("diagonalizable family: one slot of the cleaning vector is free") {
  // base diag(1,0,1,2,1) with tail (2,3,1): cleaned to base + E51 by
  // (-a6, -a7/2, v9, 0) for any v9.
  const FreeNilpotent g3 = build_free_nilpotent(3);
  const LieAlgebra& a = g3.alg();
  Matrix d = diag5({1, 0, 1, 2, 1});
  d.at(3, 0) = q(2);
  d.at(3, 1) = q(3);
  d.at(4, 0) = q(1);
  Matrix stage1 = diag5({1, 0, 1, 2, 1});
  stage1.at(4, 0) = q(1);
  for (long v9 : {0L, 5L, -3L}) {
    const Matrix phi = unipotent3(q(-2), q(-3, 2), q(v9), q(0));
    CHECK(conjugate(a, phi, d) == stage1);
  }
}

TEST_CASE("centralizer of the sl2 part inside the derivation algebra") {
  // caps 1 and 2: spanned by the grading derivation alone; caps 3 and 4
  // pick up ad(w0) as well.
  for (std::size_t t = 1; t <= 4; ++t) {
    const FreeNilpotent g = build_free_nilpotent(t);
    const DerivationSpace der = derivation_space(g.alg());
    const Subspace c = centralizer_in(der, sl2_derivations(g));
    std::vector<std::vector<Rational>> gens = {grading_derivation(g).vectorize()};
    if (t >= 3) gens.push_back(g.alg().ad_basis(2).vectorize());
    CHECK(c == Subspace::span(g.alg().dim() * g.alg().dim(), gens));
  }
  // a matrix outside the space is rejected
  const FreeNilpotent g2 = build_free_nilpotent(2);
  CHECK_THROWS_AS(centralizer_in(derivation_space(g2.alg()), {Matrix::identity(3)}),
                  std::invalid_argument);
}

TEST_CASE("pencil nilpotence decisions") {
  // two diagonal actions with no common kernel direction: the segment
  // between diag(1,1,2,3,3) and diag(1,-1,0,1,-1) carries no nilpotent
  CHECK(!pencil_has_nilpotent({diag5({1, 1, 2, 3, 3}), diag5({1, -1, 0, 1, -1})}));
  // crossing elementary matrices: each endpoint alone is nilpotent
  Matrix e12(2, 2), e21(2, 2);
  e12.at(0, 1) = q(1);
  e21.at(1, 0) = q(1);
  CHECK(pencil_has_nilpotent({e12, e21}));
  // single-matrix cases
  CHECK(pencil_has_nilpotent({e12}));
  CHECK(!pencil_has_nilpotent({Matrix::identity(2)}));
  // aI + bN with N nilpotent: nilpotent exactly on the line a = 0
  Matrix n(3, 3);
  n.at(0, 1) = q(1);
  n.at(1, 2) = q(1);
  CHECK(pencil_has_nilpotent({Matrix::identity(3), n}));
  // shape validation
  CHECK_THROWS_AS(pencil_has_nilpotent({}), std::invalid_argument);
  CHECK_THROWS_AS(pencil_has_nilpotent({e12, Matrix::identity(3)}), std::invalid_argument);
}

TEST_CASE("derivation spaces of non-graded algebras still close under bracket") {
  // Der is a Lie algebra: [d1, d2] is again a derivation
  const FreeNilpotent g3 = build_free_nilpotent(3);
  const DerivationSpace der = derivation_space(g3.alg());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      const Matrix b = commutator(der.basis_matrix(i), der.basis_matrix(j));
      CHECK(der.contains(b));
    }
}
