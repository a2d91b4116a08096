#pragma once
// Self-checks of the classification for one m: closed-form counts, the grid
// oracle, Hodge types, the reference tables and the cohomology invariants.

#include <functional>
#include <string>
#include <vector>

#include "aq/parabolic.hpp"
#include "aq/rootsys.hpp"

namespace aq {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct VerifyReport {
  int m = 0;
  std::vector<CheckResult> checks;

  bool ok() const;
  std::string to_string() const;
};

using Enumerator = std::function<std::vector<ParabolicClass>(const HermitianRootData&)>;

/// AQ_GRID_RADIUS or 3.  Throws std::invalid_argument on a non-positive or
/// unparsable value.
int grid_radius_from_env();

VerifyReport verify_m(int m, int grid_radius, const Enumerator& enumerate = enumerate_classes);

/// verify_m for m = 1..m_max, computed concurrently, returned in order of m.
std::vector<VerifyReport> verify_range(int m_max, int grid_radius, const Enumerator& enumerate = enumerate_classes);

/// Deliberately wrong enumerators for negative-control runs.
/// "filter-down-set": F is required to be a down-set instead of an up-set.
/// Throws std::invalid_argument for an unknown name.
Enumerator faulty_enumerator(const std::string& fault);

}  // namespace aq
