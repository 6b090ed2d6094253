#include "liebra/sl2rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "liebra/poly.hpp"

namespace liebra {

Sl2Triple make_sl2_triple(Matrix e, Matrix f, Matrix h) {
  Sl2Triple t{std::move(e), std::move(f), std::move(h)};
  if (!t.e.is_square() || t.e.rows() != t.f.rows() || t.e.rows() != t.h.rows() ||
      !t.f.is_square() || !t.h.is_square())
    throw std::invalid_argument("make_sl2_triple: shapes disagree");
  if (!check_sl2_relations(t))
    throw std::domain_error("make_sl2_triple: [e,f]=h, [h,e]=2e, [h,f]=-2f fails");
  return t;
}

bool check_sl2_relations(const Sl2Triple& t) {
  return commutator(t.e, t.f) == t.h && commutator(t.h, t.e) == Rational(2) * t.e &&
         commutator(t.h, t.f) == Rational(-2) * t.f;
}

std::vector<Rational> weight_multiset(const Matrix& h) {
  RootReport roots = rational_roots(char_poly(h));
  if (!roots.splits)
    throw std::domain_error(
        "weight_multiset: characteristic polynomial does not split over Q");
  std::vector<Rational> w;
  for (auto it = roots.roots.rbegin(); it != roots.roots.rend(); ++it)
    for (int m = 0; m < it->second; ++m) w.push_back(it->first);
  return w;
}

WeightStrip strip_weights(const std::vector<Rational>& weights) {
  std::map<Rational, int> pool;
  for (const auto& w : weights) ++pool[w];
  auto remaining = [&pool]() {
    std::vector<Rational> r;
    for (auto it = pool.rbegin(); it != pool.rend(); ++it)
      for (int m = 0; m < it->second; ++m) r.push_back(it->first);
    return r;
  };

  WeightStrip out;
  out.consistent = false;
  while (!pool.empty()) {
    auto top = std::prev(pool.end());
    const Rational m = top->first;
    if (!m.is_integer() || m.sign() < 0) {
      out.leftover = remaining();
      return out;
    }
    const long mv = m.to_long();
    // Remove the string {m, m-2, ..., -m}; restore it if a member is missing.
    std::vector<Rational> taken;
    bool ok = true;
    for (long w = mv; w >= -mv; w -= 2) {
      auto it = pool.find(Rational(w));
      if (it == pool.end()) {
        ok = false;
        break;
      }
      if (--it->second == 0) pool.erase(it);
      taken.push_back(Rational(w));
    }
    if (!ok) {
      for (const auto& w : taken) ++pool[w];
      out.leftover = remaining();
      return out;
    }
    out.highest.push_back(mv);
  }
  out.consistent = true;
  std::sort(out.highest.rbegin(), out.highest.rend());
  return out;
}

std::string ModuleDecomposition::str() const {
  if (highest_weights.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < highest_weights.size(); ++i)
    os << (i ? " + " : "") << "V(" << highest_weights[i] << ")";
  return os.str();
}

ModuleDecomposition highest_weight_decomposition(const std::vector<Rational>& weights) {
  WeightStrip s = strip_weights(weights);
  if (!s.consistent) {
    std::ostringstream os;
    os << "highest_weight_decomposition: weights do not form a module; leftover "
       << vector_str(s.leftover);
    throw std::domain_error(os.str());
  }
  return ModuleDecomposition{std::move(s.highest)};
}

bool sl2_consistency(const std::vector<Rational>& weights) {
  return strip_weights(weights).consistent;
}

std::vector<long> clebsch_gordan(long m, long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("clebsch_gordan: weights must be >= 0");
  std::vector<long> out;
  for (long w = m + n; w >= (m > n ? m - n : n - m); w -= 2) out.push_back(w);
  return out;
}

namespace {

std::vector<long> submodule_highest_weights(const Sl2Triple& t, const Subspace& s) {
  // restrict_to throws when s is not invariant, which enforces that s is a
  // genuine submodule and not just h-stable.
  restrict_to(t.e, s);
  restrict_to(t.f, s);
  Matrix h = restrict_to(t.h, s);
  return highest_weight_decomposition(weight_multiset(h)).highest_weights;
}

} // namespace

TensorCheck tensor_weight_check(const Sl2Triple& t, const Subspace& u,
                                const Subspace& v, const Subspace& target) {
  TensorCheck out;
  out.u = submodule_highest_weights(t, u);
  out.v = submodule_highest_weights(t, v);
  out.target = submodule_highest_weights(t, target);
  for (long a : out.u)
    for (long b : out.v) {
      std::vector<long> cg = clebsch_gordan(a, b);
      out.product.insert(out.product.end(), cg.begin(), cg.end());
    }
  std::sort(out.product.rbegin(), out.product.rend());
  // Multiset containment of the target in the product.
  std::map<long, int> avail;
  for (long w : out.product) ++avail[w];
  out.contained = true;
  for (long w : out.target)
    if (--avail[w] < 0) {
      out.contained = false;
      break;
    }
  return out;
}

} // namespace liebra
