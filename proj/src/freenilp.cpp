#include "liebra/freenilp.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace liebra {

HallWord HallWord::generator(int i) {
  if (i != 0 && i != 1) throw std::invalid_argument("HallWord::generator: index must be 0 or 1");
  HallWord w;
  w.gen_ = i;
  w.degree_ = 1;
  return w;
}

HallWord HallWord::bracket(const HallWord& u, const HallWord& w) {
  HallWord b;
  b.gen_ = -1;
  b.left_ = std::make_shared<HallWord>(u);
  b.right_ = std::make_shared<HallWord>(w);
  b.degree_ = u.degree_ + w.degree_;
  return b;
}

std::string HallWord::str() const {
  if (is_generator()) return gen_ == 0 ? "v0" : "v1";
  return "[" + left_->str() + "," + right_->str() + "]";
}

namespace {

int moebius(std::size_t n) {
  int mu = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0; // squared prime factor
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

long long witt_sum(std::size_t s) {
  long long sum = 0;
  for (std::size_t d = 1; d <= s; ++d) {
    if (s % d) continue;
    long long pw = 1;
    for (std::size_t k = 0; k < s / d; ++k) pw *= 2;
    sum += moebius(d) * pw;
  }
  return sum;
}

} // namespace

std::size_t witt_dimension(std::size_t s) {
  if (s == 0) throw std::invalid_argument("witt_dimension: degree must be positive");
  return static_cast<std::size_t>(witt_sum(s) / static_cast<long long>(s));
}

long long witt_dimension_unnormalized(std::size_t s) {
  if (s == 0) throw std::invalid_argument("witt_dimension_unnormalized: degree must be positive");
  return witt_sum(s);
}

const Subspace& FreeNilpotent::component(std::size_t s) const {
  if (s < 1 || s > t_) throw std::out_of_range("FreeNilpotent::component: degree out of range");
  return components_[s - 1];
}

std::size_t FreeNilpotent::hall_index(const HallWord& w) const {
  auto it = index_.find(w.str());
  if (it == index_.end())
    throw std::invalid_argument("FreeNilpotent::hall_index: " + w.str() + " is not a basis word");
  return it->second;
}

std::size_t FreeNilpotent::degree_of_basis(std::size_t i) const {
  return words_.at(i).degree();
}

const FreeNilpotent::Definition& FreeNilpotent::definition(std::size_t i) const {
  if (i < 2 || i >= defs_.size())
    throw std::invalid_argument("FreeNilpotent::definition: generators have no definition");
  return defs_[i];
}

namespace {

/// Rewrites [w_u, w_v] (indices into the Hall word list) as a coefficient
/// vector over the Hall basis, using the Jacobi identity to push non-Hall
/// pairs toward the basis: for u < v = [a, b] with a > u,
///   [u, [a, b]] = [[u, a], b] + [a, [u, b]].
class HallExpander {
public:
  HallExpander(const std::vector<HallWord>& words,
               const std::map<std::string, std::size_t>& index, std::size_t t)
      : words_(words), index_(index), t_(t), n_(words.size()) {}

  std::vector<Rational> expand(std::size_t u, std::size_t v) {
    if (words_[u].degree() + words_[v].degree() > t_) return zero_vector(n_);
    if (u == v) return zero_vector(n_);
    if (u > v) {
      std::vector<Rational> r = expand(v, u);
      for (auto& x : r) x = -x;
      return r;
    }
    auto memo_it = memo_.find({u, v});
    if (memo_it != memo_.end()) return memo_it->second;

    std::vector<Rational> result(n_);
    const HallWord& wv = words_[v];
    const std::string pair_str = "[" + words_[u].str() + "," + wv.str() + "]";
    auto hall_it = index_.find(pair_str);
    if (hall_it != index_.end()) {
      result[hall_it->second] = Rational(1);
    } else {
      // v is never a generator here: the only generator pair with u < v is
      // (v0, v1), whose bracket is the Hall word w0.
      const std::size_t a = index_.at(wv.left().str());
      const std::size_t b = index_.at(wv.right().str());
      const std::vector<Rational> ua = expand(u, a);
      for (std::size_t p = 0; p < n_; ++p) {
        if (ua[p].is_zero()) continue;
        const std::vector<Rational> pb = expand(p, b);
        for (std::size_t k = 0; k < n_; ++k)
          if (!pb[k].is_zero()) result[k] += ua[p] * pb[k];
      }
      const std::vector<Rational> ub = expand(u, b);
      for (std::size_t p = 0; p < n_; ++p) {
        if (ub[p].is_zero()) continue;
        const std::vector<Rational> ap = expand(a, p);
        for (std::size_t k = 0; k < n_; ++k)
          if (!ap[k].is_zero()) result[k] += ub[p] * ap[k];
      }
    }
    memo_.emplace(std::make_pair(u, v), result);
    return result;
  }

private:
  const std::vector<HallWord>& words_;
  const std::map<std::string, std::size_t>& index_;
  std::size_t t_;
  std::size_t n_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> memo_;
};

} // namespace

FreeNilpotent build_free_nilpotent(std::size_t t) {
  if (t < 1) throw std::invalid_argument("build_free_nilpotent: class must be at least 1");

  std::vector<HallWord> words{HallWord::generator(0), HallWord::generator(1)};
  std::map<std::string, std::size_t> index{{"v0", 0}, {"v1", 1}};
  for (std::size_t s = 2; s <= t; ++s) {
    const std::size_t existing = words.size();
    for (std::size_t u = 0; u < existing; ++u) {
      for (std::size_t w = u + 1; w < existing; ++w) {
        if (words[u].degree() + words[w].degree() != s) continue;
        bool hall = true;
        if (!words[w].is_generator()) {
          const std::size_t a = index.at(words[w].left().str());
          hall = (a <= u);
        }
        if (!hall) continue;
        HallWord nw = HallWord::bracket(words[u], words[w]);
        index.emplace(nw.str(), words.size());
        words.push_back(std::move(nw));
      }
    }
  }
  const std::size_t n = words.size();

  // Label-basis rescale: b_i = d_i * (Hall word i). Only the slot for
  // [v1, [v0, [v0, v1]]] carries a factor, making [v0, z1] = [v1, z0] = x1/2.
  std::vector<Rational> d(n, Rational(1));
  {
    auto it = index.find("[v1,[v0,[v0,v1]]]");
    if (it != index.end()) d[it->second] = Rational(2);
  }

  static const char* kNamed[] = {"v0", "v1", "w0", "z0", "z1", "x0", "x1", "x2"};
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i)
    labels[i] = i < 8 ? kNamed[i] : words[i].str();

  HallExpander ex(words, index, t);
  std::vector<LieAlgebra::BracketEntry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::vector<Rational> hall = ex.expand(i, j);
      std::vector<Rational> lab(n);
      bool nonzero = false;
      for (std::size_t k = 0; k < n; ++k) {
        if (hall[k].is_zero()) continue;
        lab[k] = d[i] * d[j] / d[k] * hall[k];
        nonzero = true;
      }
      if (nonzero) entries.push_back({i, j, std::move(lab)});
    }
  }

  std::vector<std::vector<std::size_t>> grading(t);
  for (std::size_t i = 0; i < n; ++i) grading[words[i].degree() - 1].push_back(i);

  FreeNilpotent g(LieAlgebra(labels, entries, grading), t);
  g.words_ = std::move(words);
  g.index_ = std::move(index);
  for (std::size_t s = 1; s <= t; ++s) {
    std::vector<std::vector<Rational>> basis;
    for (std::size_t i : grading[s - 1]) basis.push_back(unit_vector(n, i));
    g.components_.push_back(Subspace::span(n, basis));
  }
  g.defs_.resize(n);
  for (std::size_t i = 2; i < n; ++i) {
    const std::size_t l = g.index_.at(g.words_[i].left().str());
    const std::size_t r = g.index_.at(g.words_[i].right().str());
    g.defs_[i] = {l, r, d[i] / (d[l] * d[r])};
  }
  return g;
}

std::vector<Rational> hall_bracket(const FreeNilpotent& g, const HallWord& w1,
                                   const HallWord& w2) {
  if (w1.degree() > g.degree_cap() || w2.degree() > g.degree_cap())
    throw std::invalid_argument("hall_bracket: word degree exceeds the class");
  const std::size_t n = g.alg().dim();
  if (w1.degree() + w2.degree() > g.degree_cap()) return zero_vector(n);
  const std::size_t i = g.hall_index(w1);
  const std::size_t j = g.hall_index(w2);
  // alg brackets are between the rescaled label elements; undo the scales
  // to get the bracket of the raw Hall words.
  Rational di(1), dj(1);
  if (g.alg().label(i) == "x1") di = Rational(2);
  if (g.alg().label(j) == "x1") dj = Rational(2);
  return scale((di * dj).inverse(), g.alg().bracket(i, j));
}

} // namespace liebra
