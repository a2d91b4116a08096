#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "aq/parabolic.hpp"
#include "aq/rootsys.hpp"

namespace aq {

struct ClassCounts {
  long total = 0;        // A
  long discrete = 0;     // D
  long holomorphic = 0;  // D_h

  auto operator<=>(const ClassCounts&) const = default;
};

/// Hodge type (R_+, R_-).
using HodgeType = std::pair<int, int>;

struct ClassReport {
  ParabolicClass cls;
  int r_plus = 0;
  int r_minus = 0;
  bool is_discrete = false;
  bool is_holomorphic_ds = false;
  std::optional<std::vector<int>> blattner;  // discrete classes only
  std::vector<int> lowest_k_type;
};

/// Closed-form (A, D, D_h). Throws std::invalid_argument for m < 1.
ClassCounts counts_closed_form(int m);

bool is_discrete(const HermitianRootData& data, const ParabolicClass& cls);
bool is_holomorphic_ds(const HermitianRootData& data, const ParabolicClass& cls);
HodgeType hodge(const ParabolicClass& cls);

/// {(i, j) : l' <= i + j <= |Delta_n^+|} u {(i, i) : 0 <= i <= |Delta_n^+| / 2}
/// with l' = l for B_l and l - 1 for D_l.
std::set<HodgeType> hodge_type_set_closed_form(int m);

/// The Hodge types that actually occur: the set above without the
/// off-diagonal (i, j) with i, j < l'.  Differs from it once l' >= 3.
std::set<HodgeType> hodge_type_set_realized(int m);

/// sum_{F} beta - sum_{I} beta in simple-root coordinates.  Defined for
/// every class; it is the highest weight of the lowest K-type.
std::vector<int> lowest_k_type(const HermitianRootData& data, const ParabolicClass& cls);

/// Blattner parameter of a discrete class. Throws std::invalid_argument for
/// non-discrete classes.
std::vector<int> blattner(const HermitianRootData& data, const ParabolicClass& cls);

ClassReport make_report(const HermitianRootData& data, const ParabolicClass& cls);

/// Action of the longest element w_k of the compact Weyl group on
/// Delta_n^+: perm[i] is the index of w_k(beta_i).  It reverses the order.
std::vector<std::size_t> compact_longest_permutation(const HermitianRootData& data);

/// (w_k F, w_k I): the class of -w_k lambda.  For m = 2 this is (F, I).
SignPattern dual_pattern(const HermitianRootData& data, const ParabolicClass& cls);

}  // namespace aq
