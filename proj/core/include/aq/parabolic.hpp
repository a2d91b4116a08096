#pragma once

// theta-stable parabolic subalgebras containing h + sum_{Delta_k^+} g^alpha,
// up to the equivalence u cap p = u' cap p.  A class is the pair
// (I, F) of subsets of Delta_n^+ with Delta(u cap p_-) = -I and
// Delta(u cap p_+) = F.

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "aq/exactlp.hpp"
#include "aq/poset.hpp"
#include "aq/rootsys.hpp"

namespace aq {

struct ParabolicClass {
  int m = 0;
  IndexSet ideal;   // I, a down-set of Delta_n^+
  IndexSet filter;  // F, an up-set of Delta_n^+
  CVector witness;  // some lambda inducing (I, F)
};

using SignPattern = std::pair<IndexSet, IndexSet>;  // (I, F)

/// The order on Delta_n^+ as a FinitePoset (indices as in noncompact_positive()).
FinitePoset noncompact_poset(const HermitianRootData& data);

/// (I, F) induced by lambda.  Throws std::invalid_argument unless c_j >= 0
/// for every compact simple index j.
ParabolicClass induced_class(const HermitianRootData& data, const CVector& c);
SignPattern induced_pattern(const HermitianRootData& data, const std::vector<int>& c);

/// Sign system whose solutions are exactly the lambdas inducing (I, F).
/// Throws std::invalid_argument unless I is a down-set, F an up-set and
/// I cap F is empty.
LinearSystem realizability_system(const HermitianRootData& data, const IndexSet& ideal,
                                  const IndexSet& filter);

/// All realizable classes, ordered by (|I|, |F|, I, F).
std::vector<ParabolicClass> enumerate_classes(const HermitianRootData& data);

/// Sign patterns of all integer lambdas with c_1 in [-radius, radius] and
/// c_j in [0, radius] for j >= 2 (for m = 2 both coordinates range over
/// [-radius, radius]).  Independent of the linear solver.
std::set<SignPattern> grid_oracle(const HermitianRootData& data, int radius);

bool class_order_less(const ParabolicClass& a, const ParabolicClass& b);

}  // namespace aq
