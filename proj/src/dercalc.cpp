#include "liebra/dercalc.hpp"

#include <stdexcept>

#include "liebra/poly.hpp"

namespace liebra {

bool DerivationSpace::contains(const Matrix& m) const {
  if (m.rows() != alg_dim_ || m.cols() != alg_dim_) return false;
  return space_.contains(m.vectorize());
}

Matrix DerivationSpace::basis_matrix(std::size_t i) const {
  return Matrix::unvectorize(space_.basis().row(i), alg_dim_);
}

const Subspace& DerivationSpace::graded(std::size_t j) const {
  if (j < 1 || j > graded_.size())
    throw std::out_of_range("DerivationSpace::graded: weight out of range");
  return graded_[j - 1];
}

DerivationSpace derivation_space(const LieAlgebra& a, Exec policy) {
  const std::size_t n = a.dim();
  // Unknowns: x[p*n+q] = D(p,q). For each basis pair (i < j) and each
  // component k, D[b_i,b_j] = [D b_i, b_j] + [b_i, D b_j] reads
  //   sum_q c(i,j)_q x(k,q) - sum_p c(p,j)_k x(p,i) - sum_p c(i,p)_k x(p,j) = 0.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});

  Matrix sys(pairs.size() * n, n * n);
  const long long np = static_cast<long long>(pairs.size());
  const bool par = exec_use_parallel(policy, np * static_cast<long long>(n * n));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (long long idx = 0; idx < np; ++idx) {
    const auto [i, j] = pairs[static_cast<std::size_t>(idx)];
    const std::size_t row0 = static_cast<std::size_t>(idx) * n;
    const auto& cij = a.bracket(i, j);
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t q = 0; q < n; ++q)
        if (!cij[q].is_zero()) sys.at(row0 + k, k * n + q) += cij[q];
      for (std::size_t p = 0; p < n; ++p) {
        if (p != j) {
          const Rational& cpjk = a.bracket(p, j)[k];
          if (!cpjk.is_zero()) sys.at(row0 + k, p * n + i) -= cpjk;
        }
        if (p != i) {
          const Rational& cipk = a.bracket(i, p)[k];
          if (!cipk.is_zero()) sys.at(row0 + k, p * n + j) -= cipk;
        }
      }
    }
  }
#ifndef _OPENMP
  (void)par;
#endif

  // Drop all-zero rows before elimination; for sparse bracket tables most
  // conditions are vacuous.
  std::vector<std::vector<Rational>> live;
  for (std::size_t r = 0; r < sys.rows(); ++r) {
    std::vector<Rational> row = sys.row(r);
    if (!is_zero_vector(row)) live.push_back(std::move(row));
  }
  if (live.empty()) return DerivationSpace(n, Subspace::full(n * n));
  return DerivationSpace(n, kernel(Matrix::from_rows(live), policy));
}

Subspace inner_derivations(const LieAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(a.ad_basis(i).vectorize());
  return Subspace::span(n * n, gens);
}

Matrix extend_from_generators(const FreeNilpotent& g, const Matrix& delta) {
  const std::size_t n = g.alg().dim();
  if (delta.rows() != n || delta.cols() != 2)
    throw std::invalid_argument("extend_from_generators: map must be dim x 2");
  Matrix d(n, n);
  d.set_col(0, delta.col(0));
  d.set_col(1, delta.col(1));
  // Basis words are created after their halves, so columns fill in order.
  for (std::size_t i = 2; i < n; ++i) {
    const auto& def = g.definition(i);
    std::vector<Rational> img =
        add(g.alg().bracket(d.col(def.left), unit_vector(n, def.right)),
            g.alg().bracket(unit_vector(n, def.left), d.col(def.right)));
    d.set_col(i, scale(def.scale, img));
  }
  return d;
}

DerivationSpace graded_components(const FreeNilpotent& g, Exec policy) {
  DerivationSpace full = derivation_space(g.alg(), policy);
  const std::size_t n = g.alg().dim();
  std::vector<Subspace> graded;
  std::size_t total = 0;
  Subspace sum = Subspace::zero(n * n);
  for (std::size_t j = 1; j <= g.degree_cap(); ++j) {
    std::vector<std::vector<Rational>> gens;
    const Subspace& target = g.component(j);
    for (std::size_t r = 0; r < target.dim(); ++r)
      for (std::size_t gen = 0; gen < 2; ++gen) {
        Matrix delta(n, 2);
        delta.set_col(gen, target.basis().row(r));
        gens.push_back(extend_from_generators(g, delta).vectorize());
      }
    Subspace piece = Subspace::span(n * n, gens);
    total += piece.dim();
    sum = sum.sum(piece);
    graded.push_back(std::move(piece));
  }
  if (total != full.dim() || !(sum == full.space()))
    throw std::domain_error("graded_components: weight pieces do not direct-sum to Der");
  return DerivationSpace(n, full.space(), std::move(graded));
}

Matrix grading_derivation(const FreeNilpotent& g) {
  const std::size_t n = g.alg().dim();
  Matrix delta(n, 2);
  delta.at(0, 0) = Rational(1);
  delta.at(1, 1) = Rational(1);
  return extend_from_generators(g, delta);
}

std::vector<Matrix> sl2_derivations(const FreeNilpotent& g) {
  const std::size_t n = g.alg().dim();
  Matrix de(n, 2), df(n, 2), dh(n, 2);
  de.at(0, 1) = Rational(1);  // e: v1 -> v0
  df.at(1, 0) = Rational(1);  // f: v0 -> v1
  dh.at(0, 0) = Rational(1);  // h: v0 -> v0, v1 -> -v1
  dh.at(1, 1) = Rational(-1);
  return {extend_from_generators(g, de), extend_from_generators(g, df),
          extend_from_generators(g, dh)};
}

Subspace nilpotent_radical_part(const DerivationSpace& der) {
  if (!der.has_graded())
    throw std::invalid_argument("nilpotent_radical_part: space carries no grading");
  const std::size_t amb = der.alg_dim() * der.alg_dim();
  Subspace s = Subspace::zero(amb);
  for (std::size_t j = 2; j <= der.graded_count(); ++j) s = s.sum(der.graded(j));
  return s;
}

Matrix conjugate(const LieAlgebra& a, const Matrix& phi, const Matrix& d) {
  if (!is_automorphism(a, phi))
    throw std::domain_error("conjugate: phi is not an automorphism");
  if (!is_derivation(a, d))
    throw std::domain_error("conjugate: d is not a derivation");
  return inverse(phi) * d * phi;
}

bool is_automorphism(const LieAlgebra& a, const Matrix& phi) {
  const std::size_t n = a.dim();
  if (phi.rows() != n || phi.cols() != n) return false;
  if (rank(phi) != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (phi.apply(a.bracket(i, j)) != a.bracket(phi.col(i), phi.col(j))) return false;
  return true;
}

Subspace centralizer_in(const DerivationSpace& space, const std::vector<Matrix>& of) {
  const std::size_t n = space.alg_dim();
  const std::size_t d = space.dim();
  for (const auto& y : of)
    if (!space.contains(y))
      throw std::invalid_argument("centralizer_in: matrix does not lie in the space");
  Matrix sys(of.size() * n * n, d);
  for (std::size_t yi = 0; yi < of.size(); ++yi)
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> com = commutator(space.basis_matrix(i), of[yi]).vectorize();
      for (std::size_t r = 0; r < n * n; ++r) sys.at(yi * n * n + r, i) = com[r];
    }
  Subspace coeff = kernel(sys, Exec::serial);
  std::vector<std::vector<Rational>> gens;
  for (std::size_t r = 0; r < coeff.dim(); ++r) {
    std::vector<Rational> v(n * n);
    for (std::size_t i = 0; i < d; ++i) {
      const Rational& ti = coeff.basis().at(r, i);
      if (ti.is_zero()) continue;
      for (std::size_t k = 0; k < n * n; ++k) v[k] += ti * space.space().basis().at(i, k);
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(n * n, gens);
}

namespace {

bool matrix_nilpotent(const Matrix& a) {
  // In characteristic zero: nilpotent iff tr(a^k) = 0 for k = 1..n.
  Matrix p = a;
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    if (!p.trace().is_zero()) return false;
    if (k < a.rows()) p = p * a;
  }
  return true;
}

Polynomial lagrange_interpolate(const std::vector<Rational>& xs,
                                const std::vector<Rational>& ys) {
  Polynomial sum;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i].is_zero()) continue;
    Polynomial term = Polynomial::constant(ys[i]);
    Rational denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * Polynomial({-xs[j], Rational(1)});
      denom *= xs[i] - xs[j];
    }
    sum += Polynomial::constant(denom.inverse()) * term;
  }
  return sum;
}

} // namespace

bool pencil_has_nilpotent(const std::vector<Matrix>& mats) {
  if (mats.empty() || mats.size() > 2)
    throw std::invalid_argument("pencil_has_nilpotent: takes one or two matrices");
  for (const auto& m : mats)
    if (!m.is_square() || m.rows() != mats[0].rows())
      throw std::invalid_argument("pencil_has_nilpotent: matrices must be square, same size");

  // Reduce to the span: drop zero matrices and a dependent second matrix.
  std::vector<Matrix> span;
  for (const auto& m : mats)
    if (!m.is_zero()) span.push_back(m);
  if (span.size() == 2) {
    const Matrix &a = span[0], &b = span[1];
    Rational lam;
    bool found = false;
    for (std::size_t r = 0; r < a.rows() && !found; ++r)
      for (std::size_t c = 0; c < a.cols() && !found; ++c)
        if (!a.at(r, c).is_zero()) {
          lam = b.at(r, c) / a.at(r, c);
          found = true;
        }
    if (found && lam * a == b) span.pop_back();
  }
  if (span.empty()) return false; // span is {0}: no nonzero element at all
  if (span.size() == 1) return matrix_nilpotent(span[0]);

  const Matrix &a = span[0], &b = span[1];
  const std::size_t n = a.rows();
  // tr((xa + b)^k) is a polynomial of degree <= k <= n in x; recover it from
  // n + 1 sample points. A common root of the nonzero ones (over the
  // algebraic closure) is a nilpotent pencil element off the x = infinity
  // point, which is checked separately as plain nilpotency of a.
  std::vector<std::vector<Rational>> traces(n + 1);
  std::vector<Rational> xs(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    xs[j] = Rational(static_cast<long>(j));
    Matrix m = xs[j] * a + b;
    Matrix p = m;
    for (std::size_t k = 1; k <= n; ++k) {
      traces[j].push_back(p.trace());
      if (k < n) p = p * m;
    }
  }
  std::vector<Polynomial> forms;
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<Rational> ys(n + 1);
    for (std::size_t j = 0; j <= n; ++j) ys[j] = traces[j][k - 1];
    Polynomial q = lagrange_interpolate(xs, ys);
    if (!q.is_zero()) forms.push_back(std::move(q));
  }
  if (forms.empty()) return true; // every xa + b is nilpotent
  Polynomial g = forms[0];
  for (std::size_t i = 1; i < forms.size(); ++i) g = poly_gcd(g, forms[i]);
  if (g.degree() >= 1) return true;
  return matrix_nilpotent(a);
}

} // namespace liebra
