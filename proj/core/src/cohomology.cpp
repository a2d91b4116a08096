#include "aq/cohomology.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aq/exactlp.hpp"

namespace aq {

namespace {

constexpr const char* kTimes = "\xC3\x97";  // U+00D7

std::string monomial(long coeff, const std::vector<std::pair<char, int>>& powers) {
  std::string body;
  for (const auto& [var, e] : powers) {
    if (e == 0) continue;
    if (!body.empty()) body += '*';
    body += var;
    if (e != 1) body += '^' + std::to_string(e);
  }
  if (body.empty()) return std::to_string(coeff);
  if (coeff == 1) return body;
  return std::to_string(coeff) + '*' + body;
}

}  // namespace

void BigradedPoly::add(int p, int q, long coeff) {
  if (p < 0 || q < 0) throw std::invalid_argument("negative exponent in BigradedPoly");
  if (coeff == 0) return;
  auto& c = terms_[{p, q}];
  c += coeff;
  if (c == 0) terms_.erase({p, q});
}

long BigradedPoly::coeff(int p, int q) const {
  auto it = terms_.find({p, q});
  return it == terms_.end() ? 0 : it->second;
}

std::map<int, long> BigradedPoly::collapse() const {
  std::map<int, long> out;
  for (const auto& [e, c] : terms_) out[e.first + e.second] += c;
  return out;
}

std::string BigradedPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += monomial(c, {{'x', e.first}, {'t', e.second}});
  }
  return out;
}

std::string single_variable_string(const std::map<int, long>& poly) {
  std::string out;
  for (const auto& [e, c] : poly) {
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    out += monomial(c, {{'t', e}});
  }
  return out.empty() ? "0" : out;
}

std::string projective_space_name(int k) {
  return "SU(" + std::to_string(k) + ")/S(U(1)" + kTimes + "U(" + std::to_string(k - 1) + "))";
}

std::string odd_quadric_name(int k) {
  return "SO(" + std::to_string(2 * k + 1) + ")/(SO(2)" + kTimes + "SO(" + std::to_string(2 * k - 1) + "))";
}

std::string even_quadric_name(int k) {
  return "SO(" + std::to_string(2 * k) + ")/(SO(2)" + kTimes + "SO(" + std::to_string(2 * k - 2) + "))";
}

std::vector<long> named_space_betti(const std::string& name) {
  if (name == singleton_name()) return {1};
  int n = 0;
  if (std::sscanf(name.c_str(), "SU(%d)", &n) == 1 && name == projective_space_name(n) && n >= 1)
    return std::vector<long>(static_cast<std::size_t>(n), 1);
  if (std::sscanf(name.c_str(), "SO(%d)", &n) == 1) {
    if (n % 2 == 1 && n >= 3 && name == odd_quadric_name((n - 1) / 2))
      return std::vector<long>(static_cast<std::size_t>(n - 1), 1);
    if (n % 2 == 0 && n >= 4 && name == even_quadric_name(n / 2)) {
      const int k = n / 2;
      std::vector<long> b(static_cast<std::size_t>(2 * k - 1), 1);
      b[static_cast<std::size_t>(k - 1)] = 2;
      return b;
    }
  }
  throw std::invalid_argument("unknown compact dual: " + name);
}

IndexSet levi_noncompact_poset(const HermitianRootData& data, const ParabolicClass& cls) {
  std::vector<bool> used(data.noncompact_count(), false);
  for (auto i : cls.ideal) used.at(i) = true;
  for (auto i : cls.filter) used.at(i) = true;
  IndexSet out;
  for (std::size_t i = 0; i < used.size(); ++i)
    if (!used[i]) out.push_back(i);
  return out;
}

YqDescriptor betti_Yq(const HermitianRootData& data, const ParabolicClass& cls) {
  const auto levi = levi_noncompact_poset(data, cls);
  const auto poset = noncompact_poset(data).restrict_to(levi);
  YqDescriptor y;
  y.complex_dim = static_cast<int>(levi.size());
  y.betti = poset.ideal_size_counts();
  y.name = identify_Yq(data, cls);
  if (y.name == singleton_name())
    y.kind = YqKind::Singleton;
  else if (y.name.rfind("SU(", 0) == 0)
    y.kind = YqKind::Projective;
  else
    y.kind = YqKind::Quadric;
  return y;
}

BigradedPoly poincare_two_var(const HermitianRootData& data, const ParabolicClass& cls) {
  const auto levi = levi_noncompact_poset(data, cls);
  const auto betti = noncompact_poset(data).restrict_to(levi).ideal_size_counts();
  const int rp = static_cast<int>(cls.filter.size());
  const int rm = static_cast<int>(cls.ideal.size());
  BigradedPoly p;
  for (std::size_t j = 0; j < betti.size(); ++j) {
    const int s = static_cast<int>(j);
    p.add(rp + s, rm + s, betti[j]);
  }
  return p;
}

PhiQData phi_q_and_gamma(const HermitianRootData& data, const ParabolicClass& cls) {
  PhiQData out;
  std::vector<bool> in_ideal(data.noncompact_count(), false);
  for (auto i : cls.ideal) in_ideal.at(i) = true;

  out.positive_system = data.compact_positive();
  for (std::size_t i = 0; i < data.noncompact_count(); ++i)
    out.positive_system.push_back(in_ideal[i] ? -data.noncompact(i) : data.noncompact(i));

  const std::set<RootCoord> members(out.positive_system.begin(), out.positive_system.end());
  for (const auto& a : out.positive_system) {
    bool decomposable = false;
    for (const auto& b : out.positive_system) {
      if (members.contains(a - b)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.simple.push_back(a);
  }
  std::sort(out.simple.begin(), out.simple.end());

  const auto sys = realizability_system(data, cls.ideal, cls.filter);
  out.witness = minimal_support_witness(sys, data.compact_simple());

  std::vector<RootCoord> levi;
  for (const auto& phi : out.simple) {
    if (pairing(out.witness, phi) > 0)
      out.gamma.push_back(phi);
    else
      levi.push_back(phi);
  }

  std::vector<bool> seen(levi.size(), false);
  for (std::size_t s = 0; s < levi.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> stack{s}, nodes;
    seen[s] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      nodes.push_back(v);
      for (std::size_t w = 0; w < levi.size(); ++w)
        if (!seen[w] && data.inner(levi[v], levi[w]) != 0) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    LeviComponent comp;
    bool double_bond = false, branch = false;
    for (auto v : nodes) {
      comp.roots.push_back(levi[v]);
      comp.noncompact.push_back(data.is_noncompact(levi[v]));
      int degree = 0;
      for (auto w : nodes) {
        if (w == v || data.inner(levi[v], levi[w]) == 0) continue;
        ++degree;
        if (data.coroot_pairing(levi[v], levi[w]) * data.coroot_pairing(levi[w], levi[v]) == 2)
          double_bond = true;
      }
      if (degree >= 3) branch = true;
    }
    comp.type = double_bond ? 'B' : (branch ? 'D' : 'A');
    out.levi_components.push_back(std::move(comp));
  }
  return out;
}

std::string identify_Yq(const HermitianRootData& data, const ParabolicClass& cls) {
  const auto phi = phi_q_and_gamma(data, cls);
  const auto levi = levi_noncompact_poset(data, cls);

  std::vector<const LeviComponent*> hermitian;
  for (const auto& c : phi.levi_components)
    if (std::count(c.noncompact.begin(), c.noncompact.end(), true) > 0) hermitian.push_back(&c);

  auto fail = [&](const std::string& why) -> std::string {
    throw std::logic_error("identify_Yq (m=" + std::to_string(data.m()) + "): " + why);
  };

  if (hermitian.empty()) {
    if (!levi.empty()) fail("noncompact Levi roots but no noncompact Levi simple root");
    return singleton_name();
  }

  auto is_short = [&](const RootCoord& r) { return data.family() == Family::B && data.inner(r, r) == 2; };
  auto degree = [&](const LeviComponent& c, std::size_t v) {
    int d = 0;
    for (std::size_t w = 0; w < c.roots.size(); ++w)
      if (w != v && data.inner(c.roots[v], c.roots[w]) != 0) ++d;
    return d;
  };

  if (hermitian.size() == 2) {
    // A_1 x A_1 with both nodes noncompact: the quadric of dimension 2
    for (const auto* c : hermitian)
      if (c->roots.size() != 1 || is_short(c->roots[0])) fail("unexpected pair of noncompact Levi factors");
    return even_quadric_name(2);
  }
  if (hermitian.size() > 2) fail("more than two noncompact Levi factors");

  const auto& c = *hermitian.front();
  const auto n = c.roots.size();
  if (std::count(c.noncompact.begin(), c.noncompact.end(), true) != 1)
    fail("Levi factor with several noncompact simple roots");
  const auto v = static_cast<std::size_t>(std::find(c.noncompact.begin(), c.noncompact.end(), true) -
                                          c.noncompact.begin());
  const int rank = static_cast<int>(n);

  if (n == 1) return is_short(c.roots[0]) ? odd_quadric_name(1) : projective_space_name(2);

  switch (c.type) {
    case 'B':
      if (degree(c, v) != 1 || is_short(c.roots[v])) fail("B-type Levi factor with interior or short noncompact root");
      return odd_quadric_name(rank);
    case 'D': {
      if (degree(c, v) != 1) fail("D-type Levi factor with interior noncompact root");
      if (rank >= 5) {
        std::size_t nb = n;
        for (std::size_t w = 0; w < n; ++w)
          if (w != v && data.inner(c.roots[v], c.roots[w]) != 0) nb = w;
        if (degree(c, nb) != 2) fail("D-type Levi factor with noncompact spin node");
      }
      return even_quadric_name(rank);
    }
    default:
      if (degree(c, v) == 1) return projective_space_name(rank + 1);
      if (rank == 3) return even_quadric_name(3);
      fail("A-type Levi factor with interior noncompact root");
  }
  return {};
}

}  // namespace aq
