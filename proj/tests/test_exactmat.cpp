// Exact arithmetic layer: rationals, matrices, row reduction, subspaces,
// polynomials. The structural checks (rank-nullity, row-space preservation,
// RREF shape) act as oracles independent of the implementation's choices.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "liebra/matrix.hpp"
#include "liebra/poly.hpp"
#include "liebra/rational.hpp"
#include "liebra/subspace.hpp"

using namespace liebra;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Matrix from_longs(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> r;
  for (const auto& row : rows) {
    std::vector<Rational> v;
    for (long x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return Matrix::from_rows(r);
}

} // namespace

TEST_CASE("rationals reduce to canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(0, 5) == Rational());
  CHECK(Rational(6, 3).is_integer());
  CHECK(Rational(6, 3).to_long() == 2);
  CHECK(Rational(7, 2).str() == "7/2");
  CHECK(Rational(-7, 2).str() == "-7/2");
  CHECK(Rational(5).str() == "5");
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing accepts signs and fractions") {
  CHECK(Rational::parse("3/6") == q(1, 2));
  CHECK(Rational::parse("-5") == q(-5));
  CHECK(Rational::parse("+5") == q(5));
  CHECK(Rational::parse("+3/9") == q(1, 3));
  CHECK(Rational::parse("0") == Rational());
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
}

TEST_CASE("rational field operations") {
  const Rational a = q(2, 3), b = q(-5, 7);
  CHECK(a + b == q(-1, 21));
  CHECK(a - b == q(29, 21));
  CHECK(a * b == q(-10, 21));
  CHECK(a / b == q(-14, 15));
  CHECK(-a == q(-2, 3));
  CHECK(a.inverse() == q(3, 2));
  CHECK(a * a.inverse() == q(1));
  CHECK_THROWS_AS(Rational().inverse(), std::domain_error);
  CHECK_THROWS_AS(a / Rational(), std::domain_error);
  CHECK(q(1, 3) < q(1, 2));
  CHECK(q(-1, 2) < q(-1, 3));
  CHECK(q(1, 2).sign() == 1);
  CHECK(q(-1, 2).sign() == -1);
  CHECK(Rational().sign() == 0);
  CHECK_THROWS_AS(q(1, 2).to_long(), std::domain_error);
}

TEST_CASE("matrix product, transpose, trace, power") {
  const Matrix a = from_longs({{1, 2}, {3, 4}});
  const Matrix b = from_longs({{0, 1}, {1, 0}});
  CHECK(a * b == from_longs({{2, 1}, {4, 3}}));
  CHECK(b * a == from_longs({{3, 4}, {1, 2}}));
  CHECK(a.transpose() == from_longs({{1, 3}, {2, 4}}));
  CHECK(a.trace() == q(5));
  CHECK(a.power(0) == Matrix::identity(2));
  CHECK(a.power(2) == a * a);
  CHECK(a.power(3) == a * a * a);
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(commutator(a, a).is_zero());
  // scalar action and apply
  CHECK(q(2) * a == a + a);
  CHECK(a.apply({q(1), q(0)}) == std::vector<Rational>{q(1), q(3)});
}

TEST_CASE("vectorize round-trips row-major") {
  const Matrix a = from_longs({{1, 2}, {3, 4}});
  const auto v = a.vectorize();
  REQUIRE(v.size() == 4);
  CHECK(v[1] == q(2));
  CHECK(v[2] == q(3));
  CHECK(Matrix::unvectorize(v, 2) == a);
}

TEST_CASE("rref has the echelon shape and preserves the row space") {
  const Matrix m = Matrix::from_rows({
      {q(2), q(4), q(-2), q(6)},
      {q(1), q(2), q(0), q(1)},
      {q(3), q(6), q(-2), q(7)},
  });
  const RrefResult r = rref(m);
  // pivots ascending, pivot entries are 1, pivot columns are elementary
  for (std::size_t k = 0; k + 1 < r.pivots.size(); ++k)
    CHECK(r.pivots[k] < r.pivots[k + 1]);
  for (std::size_t k = 0; k < r.pivots.size(); ++k)
    for (std::size_t i = 0; i < r.mat.rows(); ++i)
      CHECK(r.mat.at(i, r.pivots[k]) == (i == k ? q(1) : q(0)));
  // row spaces agree in both directions
  const Subspace orig = Subspace::span(m);
  const Subspace red = Subspace::span(r.mat);
  CHECK(orig == red);
  // idempotence
  CHECK(rref(r.mat).mat == r.mat);
  CHECK(rank(m) == 2);
  CHECK(rank(m.transpose()) == 2);
}

TEST_CASE("rank-nullity holds for assorted shapes") {
  const std::vector<Matrix> cases = {
      from_longs({{1, 2}, {2, 4}}),
      from_longs({{1, 0, 2}, {0, 1, 3}}),
      from_longs({{0, 0}, {0, 0}, {0, 0}}),
      Matrix::from_rows({{q(1, 2), q(1, 3), q(1, 6)}, {q(3), q(2), q(1)}, {q(7, 2), q(7, 3), q(7, 6)}}),
      Matrix::identity(4),
  };
  for (const auto& m : cases) {
    CHECK(rank(m) + kernel(m).dim() == m.cols());
    // kernel vectors really are annihilated
    const Subspace k = kernel(m);
    for (std::size_t i = 0; i < k.dim(); ++i)
      CHECK(is_zero_vector(m.apply(k.basis().row(i))));
  }
}

TEST_CASE("inverse inverts; singular throws") {
  const Matrix m = Matrix::from_rows({{q(1), q(1, 2)}, {q(0), q(1, 3)}});
  CHECK(m * inverse(m) == Matrix::identity(2));
  CHECK(inverse(m) * m == Matrix::identity(2));
  CHECK_THROWS_AS(inverse(from_longs({{1, 2}, {2, 4}})), std::domain_error);
}

TEST_CASE("subspace canonical form makes equality structural") {
  const Subspace a = Subspace::span(3, {{q(1), q(1), q(0)}, {q(0), q(0), q(1)}});
  const Subspace b = Subspace::span(3, {{q(2), q(2), q(2)}, {q(0), q(0), q(-5)}, {q(1), q(1), q(1)}});
  CHECK(a == b);
  CHECK(a.dim() == 2);
  CHECK(a.ambient() == 3);
  CHECK(a.contains({q(3), q(3), q(7)}));
  CHECK(!a.contains({q(1), q(0), q(0)}));
  CHECK(Subspace::full(3).contains(a));
  CHECK(a.contains(Subspace::zero(3)));
  CHECK(!Subspace::zero(3).contains(a));
}

TEST_CASE("reduce and coords agree with membership") {
  const Subspace s = Subspace::span(3, {{q(1), q(0), q(2)}, {q(0), q(1), q(-1)}});
  const std::vector<Rational> member = {q(2), q(3), q(1)};
  CHECK(s.contains(member));
  CHECK(is_zero_vector(s.reduce(member)));
  const auto c = s.coords(member);
  REQUIRE(c.size() == 2);
  // reconstruct from coordinates
  auto rebuilt = add(scale(c[0], s.basis().row(0)), scale(c[1], s.basis().row(1)));
  CHECK(rebuilt == member);
  CHECK(!is_zero_vector(s.reduce({q(0), q(0), q(1)})));
}

TEST_CASE("subspace sums") {
  const Subspace x = Subspace::span(3, {{q(1), q(0), q(0)}});
  const Subspace y = Subspace::span(3, {{q(0), q(1), q(0)}});
  CHECK(x.sum(y).dim() == 2);
  CHECK(x.sum(x) == x);
  CHECK(x.sum(Subspace::zero(3)) == x);
}

TEST_CASE("restrict_to expresses the action in subspace coordinates") {
  // m scales the plane z = 0 by eigenvalues 2 and 3
  const Matrix m = from_longs({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
  const Subspace plane = Subspace::span(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}});
  const Matrix r = restrict_to(m, plane);
  CHECK(r == from_longs({{2, 0}, {0, 3}}));
  // a non-invariant subspace is rejected
  const Matrix rot = from_longs({{0, -1, 0}, {1, 0, 0}, {0, 0, 1}});
  const Subspace line = Subspace::span(3, {{q(1), q(0), q(0)}});
  CHECK_THROWS_AS(restrict_to(rot, line), std::domain_error);
}

TEST_CASE("polynomial arithmetic and normalization") {
  const Polynomial p({q(1), q(0), q(1)});  // 1 + x^2
  const Polynomial x({q(0), q(1)});
  CHECK(p.degree() == 2);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == -1);
  CHECK(p * x == Polynomial({q(0), q(1), q(0), q(1)}));
  CHECK(p.eval(q(2)) == q(5));
  CHECK(p.eval(q(1, 2)) == q(5, 4));
  const Polynomial twice({q(2), q(0), q(2)});
  CHECK(twice.monic() == p);
  // trailing zero coefficients are dropped on construction
  CHECK(Polynomial({q(1), q(0)}).degree() == 0);
}

TEST_CASE("characteristic polynomial is exact") {
  // companion matrix of x^2 + 1 (does not split over Q)
  const Matrix c = from_longs({{0, -1}, {1, 0}});
  CHECK(char_poly(c) == Polynomial({q(1), q(0), q(1)}));
  CHECK(!rational_roots(char_poly(c)).splits);
  // diagonal with repeats
  const Matrix d = from_longs({{1, 0, 0}, {0, 1, 0}, {0, 0, -2}});
  const RootReport rep = rational_roots(char_poly(d));
  CHECK(rep.splits);
  REQUIRE(rep.roots.size() == 2);
  CHECK(rep.roots.at(q(1)) == 2);
  CHECK(rep.roots.at(q(-2)) == 1);
  // fractional eigenvalue
  const Matrix f = Matrix::from_rows({{q(1, 2)}});
  CHECK(rational_roots(char_poly(f)).roots.at(q(1, 2)) == 1);
  // char poly of a nilpotent matrix is x^n
  const Matrix n = from_longs({{0, 1}, {0, 0}});
  CHECK(char_poly(n) == Polynomial({q(0), q(0), q(1)}));
}

TEST_CASE("divide_linear and poly_gcd") {
  // (x - 1)^2 (x + 2) = x^3 - 3x + 2
  const Polynomial p({q(2), q(-3), q(0), q(1)});
  const Polynomial after = divide_linear(p, q(1));
  CHECK(after == Polynomial({q(-2), q(1), q(1)}));  // (x-1)(x+2)
  CHECK_THROWS_AS(divide_linear(p, q(5)), std::domain_error);
  // gcd picks out the shared root, monic
  const Polynomial a({q(2), q(-3), q(1)});   // (x-1)(x-2)
  const Polynomial b({q(-3), q(4), q(-1)});  // -(x-1)(x-3)
  CHECK(poly_gcd(a, b) == Polynomial({q(-1), q(1)}));
  CHECK(poly_gcd(Polynomial(), Polynomial()).is_zero());
  CHECK(poly_gcd(a, Polynomial()) == a.monic());
}

TEST_CASE("polynomial rendering") {
  CHECK(Polynomial({q(1, 2), q(-2), q(0), q(1)}).str() == "x^3 - 2*x + 1/2");
  CHECK(Polynomial().str() == "0");
}
