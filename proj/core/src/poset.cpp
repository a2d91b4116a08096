#include "aq/poset.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace aq {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const auto n = leq_.size();
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("poset relation must be square");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw std::invalid_argument("poset relation must be reflexive");
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && leq_[a][b] && leq_[b][a]) throw std::invalid_argument("poset relation must be antisymmetric");
  }
  // a linear extension: sort by number of elements below
  linear_extension_.resize(n);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (leq_[b][a]) ++below[a];
  for (std::size_t i = 0; i < n; ++i) linear_extension_[i] = i;
  std::stable_sort(linear_extension_.begin(), linear_extension_.end(),
                   [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
}

bool FinitePoset::is_down_set(const IndexSet& s) const {
  std::vector<bool> in(size(), false);
  for (auto i : s) in.at(i) = true;
  for (auto i : s)
    for (std::size_t j = 0; j < size(); ++j)
      if (leq_[j][i] && !in[j]) return false;
  return true;
}

bool FinitePoset::is_up_set(const IndexSet& s) const {
  std::vector<bool> in(size(), false);
  for (auto i : s) in.at(i) = true;
  for (auto i : s)
    for (std::size_t j = 0; j < size(); ++j)
      if (leq_[i][j] && !in[j]) return false;
  return true;
}

IndexSet FinitePoset::down_closure(const IndexSet& generators) const {
  IndexSet out;
  for (std::size_t j = 0; j < size(); ++j)
    for (auto g : generators)
      if (leq_[j][g]) {
        out.push_back(j);
        break;
      }
  return out;
}

IndexSet FinitePoset::up_closure(const IndexSet& generators) const {
  IndexSet out;
  for (std::size_t j = 0; j < size(); ++j)
    for (auto g : generators)
      if (leq_[g][j]) {
        out.push_back(j);
        break;
      }
  return out;
}

IndexSet FinitePoset::complement(const IndexSet& s) const {
  std::vector<bool> in(size(), false);
  for (auto i : s) in.at(i) = true;
  IndexSet out;
  for (std::size_t j = 0; j < size(); ++j)
    if (!in[j]) out.push_back(j);
  return out;
}

std::vector<IndexSet> FinitePoset::down_sets() const {
  const auto n = size();
  std::vector<IndexSet> result;
  std::vector<bool> in(n, false);
  std::function<void(std::size_t)> extend = [&](std::size_t pos) {
    if (pos == n) {
      IndexSet s;
      for (std::size_t j = 0; j < n; ++j)
        if (in[j]) s.push_back(j);
      result.push_back(std::move(s));
      return;
    }
    const auto e = linear_extension_[pos];
    extend(pos + 1);
    // everything strictly below e precedes it in the linear extension
    bool allowed = true;
    for (std::size_t j = 0; j < n && allowed; ++j)
      if (j != e && leq_[j][e] && !in[j]) allowed = false;
    if (allowed) {
      in[e] = true;
      extend(pos + 1);
      in[e] = false;
    }
  };
  extend(0);
  std::sort(result.begin(), result.end(), [](const IndexSet& a, const IndexSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return result;
}

std::vector<long> FinitePoset::ideal_size_counts() const {
  std::vector<long> counts(size() + 1, 0);
  for (const auto& s : down_sets()) ++counts[s.size()];
  return counts;
}

FinitePoset FinitePoset::restrict_to(const IndexSet& elements) const {
  const auto k = elements.size();
  std::vector<std::vector<bool>> sub(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) sub[a][b] = leq_.at(elements[a]).at(elements[b]);
  return FinitePoset(std::move(sub));
}

}  // namespace aq
