#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liebra/matrix.hpp"
#include "liebra/subspace.hpp"

namespace liebra {

// Triple of matrices with [e,f] = h, [h,e] = 2e, [h,f] = -2f.
// make_sl2_triple checks the relations and throws on failure.
struct Sl2Triple {
  Matrix e, f, h;
};
Sl2Triple make_sl2_triple(Matrix e, Matrix f, Matrix h);
bool check_sl2_relations(const Sl2Triple& t);

// Eigenvalues of h with multiplicity, sorted descending. Throws
// std::domain_error if the characteristic polynomial does not split over Q.
std::vector<Rational> weight_multiset(const Matrix& h);

// Result of greedily stripping weight strings {m, m-2, ..., -m} from a
// multiset, largest remaining weight first.
struct WeightStrip {
  bool consistent;                 // whole multiset consumed
  std::vector<long> highest;       // highest weights stripped, descending
  std::vector<Rational> leftover;  // what remained when stripping failed
};
WeightStrip strip_weights(const std::vector<Rational>& weights);

// Multiset of highest weights of the irreducible summands. Throws
// std::domain_error (with the leftover in the message) when the multiset
// is not a module weight system.
struct ModuleDecomposition {
  std::vector<long> highest_weights; // descending
  std::string str() const;           // "V(1) + V(1) + V(0)"
};
ModuleDecomposition highest_weight_decomposition(const std::vector<Rational>& weights);

// True iff the multiset is integral and strips completely.
bool sl2_consistency(const std::vector<Rational>& weights);

// Highest weights of V(m) (x) V(n): m+n, m+n-2, ..., |m-n|.
std::vector<long> clebsch_gordan(long m, long n);

struct TensorCheck {
  bool contained;                    // target weights fit inside the product
  std::vector<long> u, v, target;    // highest-weight multisets
  std::vector<long> product;         // Clebsch-Gordan product multiset
};

// Decomposes u, v and target under the triple (all three must be invariant
// under h, e and f) and checks the target against the tensor product of
// u and v, as highest-weight multisets.
TensorCheck tensor_weight_check(const Sl2Triple& t, const Subspace& u,
                                const Subspace& v, const Subspace& target);

} // namespace liebra
