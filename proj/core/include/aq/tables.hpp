#pragma once
// Reference classification of so(2, m): every class with its compact dual,
// centre size |Gamma| and two-variable Poincare polynomial, generated from
// the closed forms for B_l (m odd) and D_l (m even).  Used only as a test
// oracle; the library never reads these to compute anything.

#include <optional>
#include <string>
#include <vector>

#include "aq/cohomology.hpp"
#include "aq/poset.hpp"

namespace aq {

struct TableRow {
  std::string label;  // e.g. "row 2, i=1, F=>a(3)"
  IndexSet ideal;
  IndexSet filter;
  std::string yq_name;
  std::optional<int> gamma_size;  // not given for m = 2
  BigradedPoly poly;
};

/// Rows in no particular order.  Throws std::invalid_argument for m < 1.
std::vector<TableRow> reference_rows(int m);

}  // namespace aq
