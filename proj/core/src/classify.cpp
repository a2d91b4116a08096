#include "aq/classify.hpp"

#include <algorithm>
#include <stdexcept>

namespace aq {

ClassCounts counts_closed_form(int m) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  if (m % 2 == 1) {
    const long l = (m + 1) / 2;
    return {l * (l + 2), 2 * l, 2};
  }
  const long l = (m + 2) / 2;
  return {l * l + 4 * l - 3, 2 * l, m == 2 ? 4 : 2};
}

bool is_discrete(const HermitianRootData& data, const ParabolicClass& cls) {
  return cls.ideal.size() + cls.filter.size() == data.noncompact_count();
}

bool is_holomorphic_ds(const HermitianRootData& data, const ParabolicClass& cls) {
  if (!is_discrete(data, cls)) return false;
  if (data.m() == 2) return true;
  return cls.filter.empty() || cls.filter.size() == data.noncompact_count();
}

HodgeType hodge(const ParabolicClass& cls) {
  return {static_cast<int>(cls.filter.size()), static_cast<int>(cls.ideal.size())};
}

std::set<HodgeType> hodge_type_set_closed_form(int m) {
  const HermitianRootData data(m);
  const int n = static_cast<int>(data.noncompact_count());
  const int floor_sum = data.family() == Family::B ? data.rank() : data.rank() - 1;
  std::set<HodgeType> out;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j)
      if (i + j >= floor_sum) out.insert({i, j});
  for (int i = 0; i <= n / 2; ++i) out.insert({i, i});
  return out;
}

std::set<HodgeType> hodge_type_set_realized(int m) {
  const HermitianRootData data(m);
  const int floor_sum = data.family() == Family::B ? data.rank() : data.rank() - 1;
  auto out = hodge_type_set_closed_form(m);
  std::erase_if(out, [&](const HodgeType& h) {
    return h.first != h.second && h.first < floor_sum && h.second < floor_sum;
  });
  return out;
}

std::vector<int> lowest_k_type(const HermitianRootData& data, const ParabolicClass& cls) {
  std::vector<int> sum(static_cast<std::size_t>(data.rank()), 0);
  for (auto i : cls.filter)
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += data.noncompact(i).coeffs[j];
  for (auto i : cls.ideal)
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] -= data.noncompact(i).coeffs[j];
  return sum;
}

std::vector<int> blattner(const HermitianRootData& data, const ParabolicClass& cls) {
  if (!is_discrete(data, cls))
    throw std::invalid_argument("blattner: the class is not a discrete series class");
  return lowest_k_type(data, cls);
}

ClassReport make_report(const HermitianRootData& data, const ParabolicClass& cls) {
  ClassReport r;
  r.cls = cls;
  std::tie(r.r_plus, r.r_minus) = hodge(cls);
  r.is_discrete = is_discrete(data, cls);
  r.is_holomorphic_ds = is_holomorphic_ds(data, cls);
  if (r.is_discrete) r.blattner = blattner(data, cls);
  r.lowest_k_type = lowest_k_type(data, cls);
  return r;
}

std::vector<std::size_t> compact_longest_permutation(const HermitianRootData& data) {
  // reduced word of w_k: reflect 2 rho_k until it is antidominant
  std::vector<RootCoord> word;
  RootCoord v{std::vector<int>(static_cast<std::size_t>(data.rank()), 0)};
  for (const auto& a : data.compact_positive()) v = v + a;
  auto reflect = [&](const RootCoord& x, const RootCoord& a) {
    RootCoord out = x;
    const int k = data.coroot_pairing(x, a);
    for (std::size_t j = 0; j < out.coeffs.size(); ++j) out.coeffs[j] -= k * a.coeffs[j];
    return out;
  };
  for (bool moved = true; moved;) {
    moved = false;
    for (auto j : data.compact_simple()) {
      const auto a = data.simple_root(j);
      if (data.coroot_pairing(v, a) > 0) {
        v = reflect(v, a);
        word.push_back(a);
        moved = true;
        break;
      }
    }
  }
  std::vector<std::size_t> perm(data.noncompact_count());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    RootCoord b = data.noncompact(i);
    for (const auto& a : word) b = reflect(b, a);
    auto idx = data.noncompact_index(b);
    if (!idx) throw std::logic_error("w_k does not preserve Delta_n^+");
    perm[i] = *idx;
  }
  return perm;
}

SignPattern dual_pattern(const HermitianRootData& data, const ParabolicClass& cls) {
  const auto perm = compact_longest_permutation(data);
  auto image = [&](const IndexSet& s) {
    IndexSet out;
    for (auto i : s) out.push_back(perm[i]);
    std::sort(out.begin(), out.end());
    return out;
  };
  return {image(cls.filter), image(cls.ideal)};
}

}  // namespace aq
