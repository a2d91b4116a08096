#include "aq/verify.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "aq/classify.hpp"
#include "aq/cohomology.hpp"
#include "aq/tables.hpp"

namespace aq {

namespace {

std::string pattern_string(const HermitianRootData& data, const IndexSet& ideal, const IndexSet& filter) {
  auto set = [&](const IndexSet& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? " " : "") + to_string(data.noncompact(s[k]));
    return out + "}";
  };
  return "(I=" + set(ideal) + ", F=" + set(filter) + ")";
}

template <class Fn>
CheckResult run_check(const std::string& name, Fn&& fn) {
  CheckResult r{name, false, {}};
  try {
    r.detail = fn();
    r.ok = r.detail.rfind("FAIL", 0) != 0;
    if (!r.ok) r.detail = r.detail.substr(6);
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  return r;
}

std::string fail(const std::string& why) { return "FAIL: " + why; }

bool palindromic(const std::vector<long>& b) { return std::equal(b.begin(), b.end(), b.rbegin()); }

bool has_incomparable_pair(const FinitePoset& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (!p.leq(a, b) && !p.leq(b, a)) return true;
  return false;
}

}  // namespace

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.ok; });
}

std::string VerifyReport::to_string() const {
  std::ostringstream out;
  for (const auto& c : checks)
    out << "m=" << m << "  " << (c.ok ? "ok  " : "FAIL") << "  " << c.name << ": " << c.detail << '\n';
  return out.str();
}

int grid_radius_from_env() {
  const char* raw = std::getenv("AQ_GRID_RADIUS");
  if (!raw || !*raw) return 3;
  try {
    std::size_t used = 0;
    const int r = std::stoi(raw, &used);
    if (used == std::string(raw).size() && r >= 1) return r;
  } catch (const std::exception&) {
  }
  throw std::invalid_argument(std::string("AQ_GRID_RADIUS must be a positive integer, got '") + raw + "'");
}

VerifyReport verify_m(int m, int grid_radius, const Enumerator& enumerate) {
  VerifyReport rep{m, {}};
  const HermitianRootData data(m);
  const auto poset = noncompact_poset(data);
  const auto n = data.noncompact_count();
  std::vector<ParabolicClass> classes;
  try {
    classes = enumerate(data);
  } catch (const std::exception& e) {
    rep.checks.push_back({"enumerate", false, e.what()});
    return rep;
  }
  const auto expected = counts_closed_form(m);

  std::set<SignPattern> patterns;
  for (const auto& c : classes) patterns.insert({c.ideal, c.filter});

  rep.checks.push_back(run_check("class count", [&] {
    const auto got = static_cast<long>(classes.size());
    if (got != expected.total || patterns.size() != classes.size())
      return fail("A = " + std::to_string(got) + ", expected " + std::to_string(expected.total));
    return "A = " + std::to_string(got);
  }));

  rep.checks.push_back(run_check("grid oracle", [&] {
    const auto grid = grid_oracle(data, grid_radius);
    if (grid != patterns) {
      for (const auto& p : grid)
        if (!patterns.contains(p)) return fail("grid finds unlisted " + pattern_string(data, p.first, p.second));
      for (const auto& p : patterns)
        if (!grid.contains(p)) return fail("grid misses " + pattern_string(data, p.first, p.second));
    }
    return "radius " + std::to_string(grid_radius) + ", " + std::to_string(grid.size()) + " patterns";
  }));

  rep.checks.push_back(run_check("discrete series", [&] {
    long d = 0, dh = 0;
    for (const auto& c : classes) {
      if (!is_discrete(data, c)) continue;
      ++d;
      dh += is_holomorphic_ds(data, c);
      const auto [rp, rm] = hodge(c);
      if (static_cast<std::size_t>(rp + rm) != n) return fail("R+ + R- != |Delta_n^+| for a discrete class");
    }
    if (d != expected.discrete || dh != expected.holomorphic)
      return fail("(D, D_h) = (" + std::to_string(d) + ", " + std::to_string(dh) + "), expected (" +
                  std::to_string(expected.discrete) + ", " + std::to_string(expected.holomorphic) + ")");
    return "(A, D, D_h) = (" + std::to_string(classes.size()) + ", " + std::to_string(d) + ", " +
           std::to_string(dh) + ")";
  }));

  rep.checks.push_back(run_check("hodge types", [&] {
    std::set<HodgeType> got;
    for (const auto& c : classes) got.insert(hodge(c));
    if (got != hodge_type_set_realized(m)) return fail("Hodge type set differs from the realized closed form");
    const auto closed = hodge_type_set_closed_form(m);
    std::string extra;
    for (const auto& h : closed)
      if (!got.contains(h)) extra += " (" + std::to_string(h.first) + "," + std::to_string(h.second) + ")";
    return std::to_string(got.size()) + " types" +
           (extra.empty() ? std::string(", equal to the closed form") : "; the closed form also lists" + extra);
  }));

  rep.checks.push_back(run_check("involution", [&] {
    for (const auto& c : classes) {
      const auto d = dual_pattern(data, c);
      if (!patterns.contains(d)) return fail("no partner for " + pattern_string(data, c.ideal, c.filter));
      if (dual_pattern(data, {m, d.first, d.second, {}}) != SignPattern{c.ideal, c.filter})
        return fail("duality is not an involution at " + pattern_string(data, c.ideal, c.filter));
    }
    return std::string("(I,F) -> (w_k F, w_k I) closed");
  }));

  rep.checks.push_back(run_check("witnesses", [&] {
    for (const auto& c : classes) {
      const auto again = induced_class(data, c.witness);
      if (again.ideal != c.ideal || again.filter != c.filter)
        return fail("witness of " + pattern_string(data, c.ideal, c.filter) + " induces another class");
    }
    return std::string("all re-induce");
  }));

  rep.checks.push_back(run_check("cohomology", [&] {
    for (const auto& c : classes) {
      const auto where = pattern_string(data, c.ideal, c.filter);
      const auto y = betti_Yq(data, c);
      const auto sub = poset.restrict_to(levi_noncompact_poset(data, c));
      long total = 0;
      for (auto b : y.betti) total += b;
      if (!palindromic(y.betti)) return fail("betti not palindromic at " + where);
      if (total != static_cast<long>(sub.down_sets().size())) return fail("betti sum != ideal count at " + where);
      if (named_space_betti(y.name) != y.betti) return fail(y.name + " has other betti numbers at " + where);
      const bool doubled = std::find(y.betti.begin(), y.betti.end(), 2) != y.betti.end();
      if (doubled != has_incomparable_pair(sub)) return fail("middle doubling without antichain at " + where);
      const auto [rp, rm] = hodge(c);
      const auto poly = poincare_two_var(data, c);
      for (const auto& [e, coeff] : poly.terms()) {
        if (e.first - e.second != rp - rm || e.first < rp || e.second < rm || coeff <= 0)
          return fail("bigrading violated at " + where);
      }
      if (is_discrete(data, c) && y.betti != std::vector<long>{1}) return fail("discrete class with nontrivial Y_q");
    }
    return std::string("palindromic, bigraded, named");
  }));

  rep.checks.push_back(run_check("table regression", [&] {
    const auto rows = reference_rows(m);
    std::map<SignPattern, const ParabolicClass*> by_pattern;
    for (const auto& c : classes) by_pattern[{c.ideal, c.filter}] = &c;
    if (rows.size() != classes.size())
      return fail(std::to_string(rows.size()) + " table rows vs " + std::to_string(classes.size()) + " classes");
    std::set<SignPattern> seen;
    for (const auto& row : rows) {
      auto it = by_pattern.find({row.ideal, row.filter});
      if (it == by_pattern.end() || !seen.insert(it->first).second) return fail(row.label + ": no matching class");
      const auto& c = *it->second;
      const auto name = identify_Yq(data, c);
      if (name != row.yq_name) return fail(row.label + ": Y_q " + name + ", table " + row.yq_name);
      const auto poly = poincare_two_var(data, c);
      if (!(poly == row.poly)) return fail(row.label + ": P_q " + poly.to_string() + ", table " + row.poly.to_string());
      if (row.gamma_size) {
        const auto g = static_cast<int>(phi_q_and_gamma(data, c).gamma.size());
        if (g != *row.gamma_size)
          return fail(row.label + ": |Gamma| " + std::to_string(g) + ", table " + std::to_string(*row.gamma_size));
      }
    }
    return std::to_string(rows.size()) + " rows match";
  }));

  return rep;
}

std::vector<VerifyReport> verify_range(int m_max, int grid_radius, const Enumerator& enumerate) {
  if (m_max < 1) throw std::invalid_argument("m_max must be >= 1");
  std::vector<std::future<VerifyReport>> jobs;
  for (int m = 1; m <= m_max; ++m)
    jobs.push_back(std::async(std::launch::async, [=, &enumerate] { return verify_m(m, grid_radius, enumerate); }));
  std::vector<VerifyReport> out;
  for (auto& j : jobs) out.push_back(j.get());
  return out;
}

Enumerator faulty_enumerator(const std::string& fault) {
  if (fault != "filter-down-set") throw std::invalid_argument("unknown fault: " + fault);
  return [](const HermitianRootData& data) {
    const auto poset = noncompact_poset(data);
    const auto sets = poset.down_sets();
    std::vector<ParabolicClass> out;
    for (const auto& ideal : sets) {
      for (const auto& filter : sets) {
        IndexSet both;
        std::set_intersection(ideal.begin(), ideal.end(), filter.begin(), filter.end(), std::back_inserter(both));
        if (!both.empty()) continue;
        LinearSystem sys;
        sys.n_vars = static_cast<std::size_t>(data.rank());
        sys.nonneg_vars = data.compact_simple();
        for (std::size_t i = 0; i < poset.size(); ++i) {
          const auto& row = data.noncompact(i).coeffs;
          if (std::binary_search(filter.begin(), filter.end(), i))
            sys.strict_pos.push_back(row);
          else if (std::binary_search(ideal.begin(), ideal.end(), i))
            sys.strict_neg.push_back(row);
          else
            sys.zero.push_back(row);
        }
        if (auto w = feasible_witness(sys)) out.push_back({data.m(), ideal, filter, std::move(*w)});
      }
    }
    std::sort(out.begin(), out.end(), class_order_less);
    return out;
  };
}

}  // namespace aq
