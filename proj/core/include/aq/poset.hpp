#pragma once

#include <cstddef>
#include <vector>

namespace aq {

/// Sorted list of element indices.
using IndexSet = std::vector<std::size_t>;

/// Finite poset given by its full order relation.
class FinitePoset {
 public:
  /// leq[a][b] is a <= b. Must be reflexive, antisymmetric and transitive.
  explicit FinitePoset(std::vector<std::vector<bool>> leq);

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }

  bool is_down_set(const IndexSet& s) const;
  bool is_up_set(const IndexSet& s) const;
  IndexSet down_closure(const IndexSet& generators) const;
  IndexSet up_closure(const IndexSet& generators) const;
  IndexSet complement(const IndexSet& s) const;

  /// All order ideals, by extension along a linear extension.  Each ideal is
  /// built once; the search never visits a non-ideal.
  std::vector<IndexSet> down_sets() const;

  /// counts[j] = number of order ideals with exactly j elements.
  std::vector<long> ideal_size_counts() const;

  /// Restriction to the listed elements (in that order).
  FinitePoset restrict_to(const IndexSet& elements) const;

 private:
  std::vector<std::vector<bool>> leq_;
  std::vector<std::size_t> linear_extension_;
};

}  // namespace aq
