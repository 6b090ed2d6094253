// Core Lie algebra machinery: construction, bracket bookkeeping, series,
// centers, subalgebras, quotients, extensions. Small algebras with known
// closed-form answers (sl2, Heisenberg, low free nilpotent bases) serve
// as the oracles.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "liebra/freenilp.hpp"
#include "liebra/liealg.hpp"

using namespace liebra;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> vec(std::vector<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// sl2 with the standard basis (e, f, h): [e,f] = h, [h,e] = 2e, [h,f] = -2f.
LieAlgebra make_sl2() {
  return LieAlgebra({"e", "f", "h"},
                    {{0, 1, vec({0, 0, 1})},
                     {0, 2, vec({-2, 0, 0})},
                     {1, 2, vec({0, 2, 0})}});
}

// Heisenberg: [x, y] = z.
LieAlgebra make_heisenberg() {
  return LieAlgebra({"x", "y", "z"}, {{0, 1, vec({0, 0, 1})}});
}

std::vector<std::size_t> dims(const std::vector<Subspace>& s) {
  std::vector<std::size_t> d;
  for (const auto& t : s) d.push_back(t.dim());
  return d;
}

} // namespace

TEST_CASE("construction validates shapes and uniqueness") {
  CHECK_THROWS_AS(LieAlgebra({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{1, 0, vec({0, 0})}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 0, vec({0, 0})}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 1, vec({0})}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {{0, 1, vec({0, 0})}, {0, 1, vec({0, 0})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {}, {{0}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra({"a", "b"}, {}, {{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("bracket storage is antisymmetric") {
  const LieAlgebra h = make_heisenberg();
  CHECK(h.bracket(0, 1) == vec({0, 0, 1}));
  CHECK(h.bracket(1, 0) == vec({0, 0, -1}));
  CHECK(is_zero_vector(h.bracket(0, 0)));
  CHECK(h.index_of("z") == 2);
  CHECK(h.has_label("y"));
  CHECK(!h.has_label("w"));
  CHECK_THROWS_AS(h.index_of("w"), std::invalid_argument);
  // bilinear extension
  CHECK(h.bracket(vec({1, 0, 0}), vec({0, 2, 0})) == vec({0, 0, 2}));
  CHECK(h.bracket(vec({1, 1, 0}), vec({1, 1, 0})) == vec({0, 0, 0}));
}

TEST_CASE("ad matrices act by the bracket") {
  const LieAlgebra s = make_sl2();
  const Matrix ade = s.ad_basis(0);
  // ad(e) f = h, ad(e) h = -2e
  CHECK(ade.apply(vec({0, 1, 0})) == vec({0, 0, 1}));
  CHECK(ade.apply(vec({0, 0, 1})) == vec({-2, 0, 0}));
  CHECK(s.ad(vec({0, 0, 1})).apply(vec({1, 0, 0})) == vec({2, 0, 0}));
}

TEST_CASE("nonzero_brackets round-trips the table") {
  const LieAlgebra s = make_sl2();
  const auto rows = s.nonzero_brackets();
  REQUIRE(rows.size() == 3);
  const LieAlgebra rebuilt(s.labels(), rows);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(rebuilt.bracket(i, j) == s.bracket(i, j));
}

TEST_CASE("jacobi_defect is empty for honest algebras and pinpoints broken ones") {
  CHECK(jacobi_defect(make_sl2()).empty());
  CHECK(jacobi_defect(make_heisenberg()).empty());
  // break Jacobi: [a,b] = c, [a,c] = a is inconsistent
  const LieAlgebra bad({"a", "b", "c"},
                       {{0, 1, vec({0, 0, 1})}, {0, 2, vec({1, 0, 0})}});
  const auto defects = jacobi_defect(bad);
  REQUIRE(defects.size() == 1);
  CHECK(defects[0].i == 0);
  CHECK(defects[0].j == 1);
  CHECK(defects[0].k == 2);
  // J(a,b,c) = [[a,b],c] + [[b,c],a] + [[c,a],b] = [c,c] + 0 + [-a,b] = -c
  CHECK(defects[0].residual == vec({0, 0, -1}));
}

TEST_CASE("series for sl2: perfect, not solvable") {
  const LieAlgebra s = make_sl2();
  // [s, s] = s, so the series stabilizes immediately
  CHECK(dims(lower_central_series(s)) == std::vector<std::size_t>{3});
  CHECK(dims(derived_series(s)) == std::vector<std::size_t>{3});
  CHECK(!is_nilpotent(s));
  CHECK(!is_solvable(s));
  CHECK_THROWS_AS(nilindex(s), std::domain_error);
  CHECK(center(s).dim() == 0);
}

TEST_CASE("series for Heisenberg: nilpotent of class 2") {
  const LieAlgebra h = make_heisenberg();
  CHECK(dims(lower_central_series(h)) == std::vector<std::size_t>{3, 1, 0});
  CHECK(dims(derived_series(h)) == std::vector<std::size_t>{3, 1, 0});
  CHECK(is_nilpotent(h));
  CHECK(is_solvable(h));
  CHECK(nilindex(h) == 2);
  CHECK(type_of(h) == 2);
  CHECK(center(h) == Subspace::span(3, {vec({0, 0, 1})}));
}

TEST_CASE("an abelian algebra has nilindex 1") {
  const LieAlgebra a({"a", "b"}, {});
  CHECK(is_nilpotent(a));
  CHECK(nilindex(a) == 1);
  CHECK(center(a) == Subspace::full(2));
  CHECK(dims(lower_central_series(a)) == std::vector<std::size_t>{2, 0});
}

TEST_CASE("product_space spans brackets of the factors") {
  const LieAlgebra h = make_heisenberg();
  const Subspace full = Subspace::full(3);
  CHECK(product_space(h, full, full) == Subspace::span(3, {vec({0, 0, 1})}));
  const Subspace xline = Subspace::span(3, {vec({1, 0, 0})});
  CHECK(product_space(h, xline, xline).dim() == 0);
}

TEST_CASE("centralizer and center agree on the free nilpotent base of class 3") {
  const FreeNilpotent g3 = build_free_nilpotent(3);
  const LieAlgebra& a = g3.alg();
  CHECK(center(a) == Subspace::span(5, {vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})}));
  CHECK(centralizer(a, Subspace::full(5)) == center(a));
  // the centralizer of the degree-1 span is the top layer: [vi, z] = 0 only
  // for z in span(z0, z1) (w0 brackets back into degree 3)
  const Subspace deg1 = Subspace::span(5, {vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0})});
  CHECK(centralizer(a, deg1) ==
        Subspace::span(5, {vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})}));
}

TEST_CASE("ideals and subalgebra predicates") {
  const FreeNilpotent g3 = build_free_nilpotent(3);
  const LieAlgebra& a = g3.alg();
  const Subspace top = Subspace::span(5, {vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})});
  CHECK(is_ideal(a, top));
  CHECK(is_nilpotent_subalgebra(a, top));
  const Subspace v0line = Subspace::span(5, {vec({1, 0, 0, 0, 0})});
  CHECK(!is_ideal(a, v0line));               // [v0, v1] = w0 leaves the line
  CHECK(is_nilpotent_subalgebra(a, v0line)); // but it is an abelian subalgebra
  const Subspace notclosed = Subspace::span(5, {vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0})});
  CHECK(!is_nilpotent_subalgebra(a, notclosed));
}

TEST_CASE("restrict_algebra keeps the bracket of a closed span") {
  const FreeNilpotent g3 = build_free_nilpotent(3);
  // span(w0, z0, z1) is abelian: everything in degree >= 2 brackets to >= 4 = 0
  const Subspace s = Subspace::span(
      5, {vec({0, 0, 1, 0, 0}), vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})});
  const LieAlgebra r = restrict_algebra(g3.alg(), s, {"w", "za", "zb"});
  CHECK(r.dim() == 3);
  CHECK(r.label(0) == "w");
  CHECK(nilindex(r) == 1);
  const Subspace open2 = Subspace::span(5, {vec({1, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0})});
  CHECK_THROWS_AS(restrict_algebra(g3.alg(), open2), std::domain_error);
  CHECK_THROWS_AS(restrict_algebra(g3.alg(), s, {"one", "two"}), std::invalid_argument);
}

TEST_CASE("quotient of the class-3 base by its top layer is Heisenberg") {
  const FreeNilpotent g3 = build_free_nilpotent(3);
  const Subspace top = Subspace::span(5, {vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})});
  const LieAlgebra qa = quotient(g3.alg(), top);
  CHECK(qa.dim() == 3);
  CHECK(qa.label(0) == "q0");
  CHECK(is_nilpotent(qa));
  CHECK(nilindex(qa) == 2);
  CHECK(type_of(qa) == 2);
  // q0, q1 are the surviving generators; [q0, q1] = the surviving w0
  CHECK(qa.bracket(0, 1) == vec({0, 0, 1}));
  // quotient by a non-ideal is rejected
  const Subspace v0line = Subspace::span(5, {vec({1, 0, 0, 0, 0})});
  CHECK_THROWS_AS(quotient(g3.alg(), v0line), std::domain_error);
}

TEST_CASE("quotient by the center of Heisenberg is the abelian plane") {
  const LieAlgebra h = make_heisenberg();
  const LieAlgebra qa = quotient(h, center(h));
  CHECK(qa.dim() == 2);
  CHECK(nilindex(qa) == 1);
}

TEST_CASE("is_derivation recognizes the grading of Heisenberg") {
  const LieAlgebra h = make_heisenberg();
  const Matrix grad = Matrix::from_rows({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(2)}});
  CHECK(is_derivation(h, grad));
  // the identity is not: D[x,y] = z but [Dx,y] + [x,Dy] = 2z
  CHECK(!is_derivation(h, Matrix::identity(3)));
}

TEST_CASE("extend by a single derivation builds the solvable extension") {
  const LieAlgebra h = make_heisenberg();
  const Matrix grad = Matrix::from_rows({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(2)}});
  const LieAlgebra e = extend(h, {grad}, {}, {"t"});
  CHECK(e.dim() == 4);
  CHECK(e.label(3) == "t");
  CHECK(jacobi_defect(e).empty());
  CHECK(is_solvable(e));
  CHECK(!is_nilpotent(e));
  // [t, x] = x (the generator row of the extension)
  CHECK(e.bracket(3, 0) == vec({1, 0, 0, 0}));
  CHECK(e.bracket(3, 2) == vec({0, 0, 2, 0}));
  // a non-derivation is rejected with the defect named
  CHECK_THROWS_AS(extend(h, {Matrix::identity(3)}), std::domain_error);
}

TEST_CASE("extend with tau brackets builds a Levi product on the plane") {
  // abelian plane (v0, v1) acted on by e: v1 -> v0, f: v0 -> v1, h = diag(1,-1),
  // with [e,f] = h, [e,h] = -2e, [f,h] = 2f among the new generators.
  const LieAlgebra plane({"v0", "v1"}, {});
  Matrix de(2, 2), df(2, 2), dh(2, 2);
  de.at(0, 1) = q(1);
  df.at(1, 0) = q(1);
  dh.at(0, 0) = q(1);
  dh.at(1, 1) = q(-1);
  const std::vector<ExtensionBracket> tau = {
      {0, 1, vec({0, 0, 0, 0, 1})},   // [e, f] = h
      {0, 2, vec({0, 0, -2, 0, 0})},  // [e, h] = -2e
      {1, 2, vec({0, 0, 0, 2, 0})},   // [f, h] = 2f
  };
  const LieAlgebra g = extend(plane, {de, df, dh}, tau, {"e", "f", "h"});
  CHECK(g.dim() == 5);
  CHECK(jacobi_defect(g).empty());
  CHECK(!is_solvable(g));
  // the plane is an abelian ideal; [e, v1] = v0
  CHECK(g.bracket(2, 1) == vec({1, 0, 0, 0, 0}));
  // tau value length and ordering are validated
  CHECK_THROWS_AS(extend(plane, {de, df, dh}, {{1, 0, vec({0, 0, 0, 0, 1})}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(extend(plane, {de, df, dh}, {{0, 1, vec({0, 0, 1})}}),
                  std::invalid_argument);
  // dropping the tau rows leaves [e,f] = 0, which breaks Jacobi on (e, f, v0):
  // J = [[e,f],v0] + [[f,v0],e] + [[v0,e],f] = 0 - [v1,e] - 0 = -v0
  CHECK_THROWS_AS(extend(plane, {de, df, dh}), std::domain_error);
}

TEST_CASE("extension brackets can also be given inside the base algebra") {
  // two commuting toral generators on the class-2 base: the degree grading
  // and the trace-free diagonal; tau = {} means [x, y] = 0.
  const FreeNilpotent g2 = build_free_nilpotent(2);
  Matrix grad(3, 3), tf(3, 3);
  grad.at(0, 0) = q(1);
  grad.at(1, 1) = q(1);
  grad.at(2, 2) = q(2);
  tf.at(0, 0) = q(1);
  tf.at(1, 1) = q(-1);
  const LieAlgebra e = extend(g2.alg(), {grad, tf}, {}, {"x", "y"});
  CHECK(e.dim() == 5);
  CHECK(jacobi_defect(e).empty());
  CHECK(is_solvable(e));
  CHECK(is_zero_vector(e.bracket(3, 4)));
}
