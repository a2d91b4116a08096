#include "aq/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace aq {

FinitePoset noncompact_poset(const HermitianRootData& data) {
  const auto n = data.noncompact_count();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rel[a][b] = data.leq(a, b);
  return FinitePoset(std::move(rel));
}

ParabolicClass induced_class(const HermitianRootData& data, const CVector& c) {
  if (c.size() != static_cast<std::size_t>(data.rank()))
    throw std::invalid_argument("induced_class: c has the wrong length");
  for (auto j : data.compact_simple())
    if (c[j] < 0) throw std::invalid_argument("induced_class: lambda is not dominant for Delta_k^+");
  ParabolicClass out{data.m(), {}, {}, c};
  for (std::size_t i = 0; i < data.noncompact_count(); ++i) {
    const Rational v = pairing(c, data.noncompact(i));
    if (v > 0)
      out.filter.push_back(i);
    else if (v < 0)
      out.ideal.push_back(i);
  }
  return out;
}

SignPattern induced_pattern(const HermitianRootData& data, const std::vector<int>& c) {
  SignPattern out;
  for (std::size_t i = 0; i < data.noncompact_count(); ++i) {
    const auto v = pairing(c, data.noncompact(i));
    if (v > 0)
      out.second.push_back(i);
    else if (v < 0)
      out.first.push_back(i);
  }
  return out;
}

LinearSystem realizability_system(const HermitianRootData& data, const IndexSet& ideal,
                                  const IndexSet& filter) {
  const auto poset = noncompact_poset(data);
  for (auto i : ideal)
    if (i >= poset.size()) throw std::invalid_argument("ideal index out of range");
  for (auto i : filter)
    if (i >= poset.size()) throw std::invalid_argument("filter index out of range");
  if (!poset.is_down_set(ideal)) throw std::invalid_argument("I is not a down-set of Delta_n^+");
  if (!poset.is_up_set(filter)) throw std::invalid_argument("F is not an up-set of Delta_n^+");
  std::vector<int> role(poset.size(), 0);
  for (auto i : ideal) role[i] = -1;
  for (auto i : filter) {
    if (role[i] != 0) throw std::invalid_argument("I and F are not disjoint");
    role[i] = 1;
  }
  LinearSystem sys;
  sys.n_vars = static_cast<std::size_t>(data.rank());
  for (std::size_t i = 0; i < poset.size(); ++i) {
    const auto& row = data.noncompact(i).coeffs;
    if (role[i] > 0)
      sys.strict_pos.push_back(row);
    else if (role[i] < 0)
      sys.strict_neg.push_back(row);
    else
      sys.zero.push_back(row);
  }
  sys.nonneg_vars = data.compact_simple();
  return sys;
}

bool class_order_less(const ParabolicClass& a, const ParabolicClass& b) {
  if (a.ideal.size() != b.ideal.size()) return a.ideal.size() < b.ideal.size();
  if (a.filter.size() != b.filter.size()) return a.filter.size() < b.filter.size();
  if (a.ideal != b.ideal) return a.ideal < b.ideal;
  return a.filter < b.filter;
}

std::vector<ParabolicClass> enumerate_classes(const HermitianRootData& data) {
  const auto poset = noncompact_poset(data);
  const auto ideals = poset.down_sets();
  std::vector<ParabolicClass> out;
  for (const auto& ideal : ideals) {
    for (const auto& kept : ideals) {
      // F = complement of an ideal J; disjoint from I iff I is inside J
      if (!std::includes(kept.begin(), kept.end(), ideal.begin(), ideal.end())) continue;
      auto filter = poset.complement(kept);
      auto sys = realizability_system(data, ideal, filter);
      if (auto w = feasible_witness(sys)) out.push_back({data.m(), ideal, std::move(filter), std::move(*w)});
    }
  }
  std::sort(out.begin(), out.end(), class_order_less);
  return out;
}

std::set<SignPattern> grid_oracle(const HermitianRootData& data, int radius) {
  if (radius < 1) throw std::invalid_argument("grid radius must be >= 1");
  const auto l = static_cast<std::size_t>(data.rank());
  std::vector<int> lo(l, 0), hi(l, radius);
  lo[0] = -radius;
  if (data.compact_simple().empty())
    for (std::size_t j = 0; j < l; ++j) lo[j] = -radius;
  std::set<SignPattern> out;
  std::vector<int> c = lo;
  while (true) {
    out.insert(induced_pattern(data, c));
    std::size_t j = 0;
    while (j < l && c[j] == hi[j]) {
      c[j] = lo[j];
      ++j;
    }
    if (j == l) break;
    ++c[j];
  }
  return out;
}

}  // namespace aq
