#include "liebra/liealg.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace liebra {

LieAlgebra::LieAlgebra(std::vector<std::string> labels,
                       const std::vector<BracketEntry>& brackets,
                       std::vector<std::vector<std::size_t>> grading)
    : dim_(labels.size()), labels_(std::move(labels)), grading_(std::move(grading)) {
  {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != dim_)
      throw std::invalid_argument("LieAlgebra: duplicate basis labels");
  }
  c_.assign(dim_ * dim_, std::vector<Rational>(dim_));
  std::set<std::pair<std::size_t, std::size_t>> filled;
  for (const auto& e : brackets) {
    if (e.i >= e.j || e.j >= dim_)
      throw std::invalid_argument("LieAlgebra: bracket entries need i < j < dim");
    if (e.value.size() != dim_)
      throw std::invalid_argument("LieAlgebra: bracket value has wrong length");
    if (!filled.insert({e.i, e.j}).second)
      throw std::invalid_argument("LieAlgebra: duplicate bracket entry");
    c_[e.i * dim_ + e.j] = e.value;
    std::vector<Rational> neg(dim_);
    for (std::size_t k = 0; k < dim_; ++k) neg[k] = -e.value[k];
    c_[e.j * dim_ + e.i] = std::move(neg);
  }
  if (!grading_.empty()) {
    std::vector<int> hits(dim_, 0);
    for (const auto& comp : grading_)
      for (std::size_t idx : comp) {
        if (idx >= dim_) throw std::invalid_argument("LieAlgebra: grading index out of range");
        ++hits[idx];
      }
    for (int h : hits)
      if (h != 1) throw std::invalid_argument("LieAlgebra: grading must partition the basis");
  }
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < dim_; ++i)
    if (labels_[i] == label) return i;
  throw std::invalid_argument("LieAlgebra: no basis element labeled '" + label + "'");
}

bool LieAlgebra::has_label(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

std::vector<Rational> LieAlgebra::bracket(const std::vector<Rational>& x,
                                          const std::vector<Rational>& y) const {
  if (x.size() != dim_ || y.size() != dim_)
    throw std::invalid_argument("LieAlgebra::bracket: wrong vector length");
  std::vector<Rational> r(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (y[j].is_zero() || i == j) continue;
      const Rational f = x[i] * y[j];
      const auto& cij = bracket(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!cij[k].is_zero()) r[k] += f * cij[k];
    }
  }
  return r;
}

Matrix LieAlgebra::ad(const std::vector<Rational>& x) const {
  if (x.size() != dim_) throw std::invalid_argument("LieAlgebra::ad: wrong vector length");
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    std::vector<Rational> col(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      if (x[i].is_zero() || i == j) continue;
      const auto& cij = bracket(i, j);
      for (std::size_t k = 0; k < dim_; ++k)
        if (!cij[k].is_zero()) col[k] += x[i] * cij[k];
    }
    m.set_col(j, col);
  }
  return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
  Matrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    if (i != j) m.set_col(j, bracket(i, j));
  return m;
}

std::vector<LieAlgebra::BracketEntry> LieAlgebra::nonzero_brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if (!is_zero_vector(bracket(i, j))) out.push_back({i, j, bracket(i, j)});
  return out;
}

std::vector<JacobiDefect> jacobi_defect(const LieAlgebra& a, Exec policy) {
  const std::size_t n = a.dim();
  std::vector<std::array<std::size_t, 3>> triples;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) triples.push_back({i, j, k});

  std::vector<std::optional<JacobiDefect>> slots(triples.size());
  const bool par = exec_use_parallel(policy, static_cast<long long>(triples.size()) *
                                                 static_cast<long long>(n));
  const long long m = static_cast<long long>(triples.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (par)
#endif
  for (long long t = 0; t < m; ++t) {
    const auto [i, j, k] = triples[static_cast<std::size_t>(t)];
    std::vector<Rational> res(n);
    const auto& cij = a.bracket(i, j);
    const auto& cjk = a.bracket(j, k);
    const auto& cik = a.bracket(i, k);
    for (std::size_t p = 0; p < n; ++p) {
      if (!cij[p].is_zero() && p != k) {
        const auto& cpk = a.bracket(p, k);
        for (std::size_t q = 0; q < n; ++q)
          if (!cpk[q].is_zero()) res[q] += cij[p] * cpk[q];
      }
      if (!cjk[p].is_zero() && p != i) {
        const auto& cpi = a.bracket(p, i);
        for (std::size_t q = 0; q < n; ++q)
          if (!cpi[q].is_zero()) res[q] += cjk[p] * cpi[q];
      }
      if (!cik[p].is_zero() && p != j) {
        const auto& cpj = a.bracket(p, j);
        for (std::size_t q = 0; q < n; ++q)
          if (!cpj[q].is_zero()) res[q] -= cik[p] * cpj[q];
      }
    }
    if (!is_zero_vector(res))
      slots[static_cast<std::size_t>(t)] = JacobiDefect{i, j, k, std::move(res)};
  }
#ifndef _OPENMP
  (void)par;
#endif

  std::vector<JacobiDefect> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  return out;
}

Subspace product_space(const LieAlgebra& a, const Subspace& u, const Subspace& v) {
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j)
      gens.push_back(a.bracket(u.basis().row(i), v.basis().row(j)));
  return Subspace::span(a.dim(), gens);
}

namespace {

std::vector<Subspace> descending_series(const LieAlgebra& a, bool derived) {
  std::vector<Subspace> series{Subspace::full(a.dim())};
  while (true) {
    const Subspace& last = series.back();
    Subspace next = derived ? product_space(a, last, last)
                            : product_space(a, series.front(), last);
    if (next == last) break;
    series.push_back(std::move(next));
  }
  return series;
}

} // namespace

std::vector<Subspace> lower_central_series(const LieAlgebra& a) {
  return descending_series(a, false);
}

std::vector<Subspace> derived_series(const LieAlgebra& a) {
  return descending_series(a, true);
}

bool is_nilpotent(const LieAlgebra& a) {
  return lower_central_series(a).back().dim() == 0;
}

bool is_solvable(const LieAlgebra& a) {
  return derived_series(a).back().dim() == 0;
}

std::size_t nilindex(const LieAlgebra& a) {
  auto series = lower_central_series(a);
  if (series.back().dim() != 0) throw std::domain_error("nilindex: algebra is not nilpotent");
  return series.size() - 1; // number of nonzero terms
}

Subspace center(const LieAlgebra& a) {
  return centralizer(a, Subspace::full(a.dim()));
}

Subspace centralizer(const LieAlgebra& a, const Subspace& s) {
  const std::size_t n = a.dim();
  // x is in the centralizer iff [x, y_r] = 0 for every basis row y_r of s;
  // each (row, component) pair contributes one linear condition on x.
  Matrix sys(s.dim() * n, n);
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const std::vector<Rational> y = s.basis().row(r);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Rational> bry(n); // [b_i, y]
      for (std::size_t j = 0; j < n; ++j) {
        if (y[j].is_zero() || i == j) continue;
        const auto& cij = a.bracket(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (!cij[k].is_zero()) bry[k] += y[j] * cij[k];
      }
      for (std::size_t k = 0; k < n; ++k) sys.at(r * n + k, i) = bry[k];
    }
  }
  return kernel(sys, Exec::serial);
}

std::size_t type_of(const LieAlgebra& a) {
  const Subspace full = Subspace::full(a.dim());
  return a.dim() - product_space(a, full, full).dim();
}

bool is_ideal(const LieAlgebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < s.dim(); ++r)
      if (!s.contains(a.bracket(unit_vector(a.dim(), i), s.basis().row(r)))) return false;
  return true;
}

bool is_nilpotent_subalgebra(const LieAlgebra& a, const Subspace& s) {
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i + 1; j < s.dim(); ++j)
      if (!s.contains(a.bracket(s.basis().row(i), s.basis().row(j)))) return false;
  return is_nilpotent(restrict_algebra(a, s));
}

LieAlgebra restrict_algebra(const LieAlgebra& a, const Subspace& s,
                            const std::vector<std::string>& labels) {
  const std::size_t d = s.dim();
  std::vector<std::string> lab = labels;
  if (lab.empty())
    for (std::size_t i = 0; i < d; ++i) lab.push_back("r" + std::to_string(i));
  if (lab.size() != d)
    throw std::invalid_argument("restrict_algebra: label count mismatch");
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      std::vector<Rational> w = a.bracket(s.basis().row(i), s.basis().row(j));
      if (!s.contains(w))
        throw std::domain_error("restrict_algebra: span is not closed under the bracket");
      std::vector<Rational> v = s.coords(w);
      if (!is_zero_vector(v)) entries.push_back({i, j, std::move(v)});
    }
  return LieAlgebra(std::move(lab), entries);
}

LieAlgebra quotient(const LieAlgebra& a, const Subspace& ideal) {
  if (!is_ideal(a, ideal)) throw std::domain_error("quotient: subspace is not an ideal");
  const std::size_t n = a.dim();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> survivors; // standard basis vectors spanning a complement
  for (std::size_t f = 0; f < n; ++f)
    if (!is_pivot[f]) survivors.push_back(f);
  const std::size_t d = survivors.size();

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("q" + std::to_string(i));

  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t t = s + 1; t < d; ++t) {
      std::vector<Rational> w =
          ideal.reduce(a.bracket(survivors[s], survivors[t]));
      std::vector<Rational> v(d);
      for (std::size_t q = 0; q < d; ++q) v[q] = w[survivors[q]];
      if (!is_zero_vector(v)) entries.push_back({s, t, std::move(v)});
    }
  LieAlgebra q(std::move(labels), entries);
  if (!jacobi_defect(q).empty())
    throw std::domain_error("quotient: result violates Jacobi (not an ideal?)");
  return q;
}

LieAlgebra extend(const LieAlgebra& a, const std::vector<Matrix>& ders,
                  const std::vector<ExtensionBracket>& tau,
                  std::vector<std::string> new_labels) {
  const std::size_t n = a.dim();
  const std::size_t m = ders.size();
  for (std::size_t s = 0; s < m; ++s) {
    if (ders[s].rows() != n || ders[s].cols() != n)
      throw std::invalid_argument("extend: derivation matrix has wrong shape");
    if (!is_derivation(a, ders[s]))
      throw std::domain_error("extend: matrix " + std::to_string(s) +
                              " is not a derivation of the base algebra");
  }
  if (new_labels.empty())
    for (std::size_t s = 0; s < m; ++s) new_labels.push_back("d" + std::to_string(s));
  if (new_labels.size() != m) throw std::invalid_argument("extend: label count mismatch");

  std::vector<std::string> labels = a.labels();
  labels.insert(labels.end(), new_labels.begin(), new_labels.end());

  const std::size_t N = n + m;
  std::vector<LieAlgebra::BracketEntry> entries;
  for (const auto& e : a.nonzero_brackets()) {
    std::vector<Rational> v(N);
    for (std::size_t k = 0; k < n; ++k) v[k] = e.value[k];
    entries.push_back({e.i, e.j, std::move(v)});
  }
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> col = ders[s].col(j);
      if (is_zero_vector(col)) continue;
      // entry is ([b_j, x_s]) = -D_s b_j, stored at (j, n+s) with j < n+s
      std::vector<Rational> v(N);
      for (std::size_t k = 0; k < n; ++k) v[k] = -col[k];
      entries.push_back({j, n + s, std::move(v)});
    }
  for (const auto& e : tau) {
    if (e.s >= e.t || e.t >= m)
      throw std::invalid_argument("extend: tau entries need s < t < #generators");
    std::vector<Rational> v(N);
    if (e.value.size() == n) {
      for (std::size_t k = 0; k < n; ++k) v[k] = e.value[k];
    } else if (e.value.size() == N) {
      v = e.value;
    } else {
      throw std::invalid_argument("extend: tau value has wrong length");
    }
    if (!is_zero_vector(v)) entries.push_back({n + e.s, n + e.t, std::move(v)});
  }

  LieAlgebra ext(std::move(labels), entries);
  auto defects = jacobi_defect(ext);
  if (!defects.empty()) {
    std::ostringstream os;
    os << "extend: result violates Jacobi at (" << ext.label(defects[0].i) << ", "
       << ext.label(defects[0].j) << ", " << ext.label(defects[0].k)
       << "), residual " << vector_str(defects[0].residual);
    throw std::domain_error(os.str());
  }
  return ext;
}

bool is_derivation(const LieAlgebra& a, const Matrix& d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      // D[b_i, b_j] must equal [D b_i, b_j] + [b_i, D b_j].
      std::vector<Rational> lhs = d.apply(a.bracket(i, j));
      std::vector<Rational> rhs =
          add(a.bracket(d.col(i), unit_vector(n, j)), a.bracket(unit_vector(n, i), d.col(j)));
      if (lhs != rhs) return false;
    }
  return true;
}

} // namespace liebra
