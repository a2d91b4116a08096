#include "aq/exactlp.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace aq {

namespace {

using Coeffs = std::vector<Rational>;

// a . x > 0 when strict, a . x >= 0 otherwise
struct Inequality {
  Coeffs a;
  bool strict;
};

struct Substitution {
  std::size_t var;
  Coeffs expr;  // x_var = expr . x, expr[var] == 0
};

struct Elimination {
  std::size_t var;
  std::vector<Inequality> bounds;  // rows with a nonzero coefficient on var
};

Coeffs to_rational(const std::vector<int>& row, int sign) {
  Coeffs out;
  out.reserve(row.size());
  for (int v : row) out.emplace_back(sign * v);
  return out;
}

bool all_zero(const Coeffs& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; });
}

// Scales a by 1/|first nonzero| and merges duplicates (strict wins).  Rows
// that are identically zero are dropped when non-strict; a strict zero row
// makes the system infeasible and is reported through the return value.
bool normalize_and_prune(std::vector<Inequality>& rows) {
  std::map<Coeffs, bool> unique;
  for (auto& row : rows) {
    auto first = std::find_if(row.a.begin(), row.a.end(), [](const Rational& v) { return v != 0; });
    if (first == row.a.end()) {
      if (row.strict) return false;
      continue;
    }
    const Rational scale = abs(*first);
    for (auto& v : row.a) v /= scale;
    auto [it, inserted] = unique.emplace(row.a, row.strict);
    if (!inserted) it->second = it->second || row.strict;
  }
  rows.clear();
  for (auto& [a, strict] : unique) rows.push_back({a, strict});
  return true;
}

void substitute(Coeffs& row, const Substitution& s) {
  const Rational f = row[s.var];
  if (f == 0) return;
  row[s.var] = 0;
  for (std::size_t j = 0; j < row.size(); ++j) row[j] += f * s.expr[j];
}

Rational dot(const Coeffs& a, const CVector& x) {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j)
    if (a[j] != 0) s += a[j] * x[j];
  return s;
}

}  // namespace

void validate(const LinearSystem& sys) {
  auto check = [&](const std::vector<std::vector<int>>& rows) {
    for (const auto& r : rows)
      if (r.size() != sys.n_vars)
        throw std::invalid_argument("row length " + std::to_string(r.size()) + " != n_vars " +
                                    std::to_string(sys.n_vars));
  };
  check(sys.strict_pos);
  check(sys.strict_neg);
  check(sys.zero);
  for (auto j : sys.nonneg_vars)
    if (j >= sys.n_vars) throw std::invalid_argument("nonnegative variable index out of range");
}

bool satisfies(const LinearSystem& sys, const CVector& c) {
  validate(sys);
  if (c.size() != sys.n_vars) throw std::invalid_argument("point has the wrong dimension");
  auto value = [&](const std::vector<int>& r) {
    Rational s = 0;
    for (std::size_t j = 0; j < r.size(); ++j) s += c[j] * r[j];
    return s;
  };
  for (const auto& r : sys.strict_pos)
    if (value(r) <= 0) return false;
  for (const auto& r : sys.strict_neg)
    if (value(r) >= 0) return false;
  for (const auto& r : sys.zero)
    if (value(r) != 0) return false;
  for (auto j : sys.nonneg_vars)
    if (c[j] < 0) return false;
  return true;
}

std::optional<CVector> feasible_witness(const LinearSystem& sys) {
  validate(sys);
  const auto n = sys.n_vars;

  std::vector<Inequality> rows;
  for (const auto& r : sys.strict_pos) rows.push_back({to_rational(r, 1), true});
  for (const auto& r : sys.strict_neg) rows.push_back({to_rational(r, -1), true});
  for (auto j : sys.nonneg_vars) {
    Coeffs e(n, Rational(0));
    e[j] = 1;
    rows.push_back({e, false});
  }
  std::vector<Coeffs> equalities;
  for (const auto& r : sys.zero) equalities.push_back(to_rational(r, 1));

  // Gaussian substitution of the equalities.
  std::vector<Substitution> subs;
  std::vector<bool> pivoted(n, false);
  for (std::size_t k = 0; k < equalities.size(); ++k) {
    auto& eq = equalities[k];
    for (const auto& s : subs) substitute(eq, s);
    if (all_zero(eq)) continue;
    std::size_t p = n;
    for (std::size_t j = n; j-- > 0;)
      if (eq[j] != 0) {
        p = j;
        break;
      }
    Substitution s{p, Coeffs(n, Rational(0))};
    for (std::size_t j = 0; j < n; ++j)
      if (j != p) s.expr[j] = -eq[j] / eq[p];
    pivoted[p] = true;
    for (std::size_t r = k + 1; r < equalities.size(); ++r) substitute(equalities[r], s);
    for (auto& row : rows) substitute(row.a, s);
    subs.push_back(std::move(s));
  }
  if (!normalize_and_prune(rows)) return std::nullopt;

  // Fourier-Motzkin, highest index first.
  std::vector<Elimination> eliminated;
  for (std::size_t k = n; k-- > 0;) {
    if (pivoted[k]) continue;
    Elimination step{k, {}};
    std::vector<Inequality> lower, upper, rest;
    for (auto& row : rows) {
      if (row.a[k] > 0)
        lower.push_back(row);
      else if (row.a[k] < 0)
        upper.push_back(row);
      else
        rest.push_back(std::move(row));
    }
    step.bounds.insert(step.bounds.end(), lower.begin(), lower.end());
    step.bounds.insert(step.bounds.end(), upper.begin(), upper.end());
    for (const auto& lo : lower) {
      for (const auto& up : upper) {
        Inequality combined{Coeffs(n, Rational(0)), lo.strict || up.strict};
        const Rational wl = -up.a[k];
        const Rational wu = lo.a[k];
        for (std::size_t j = 0; j < n; ++j) combined.a[j] = wl * lo.a[j] + wu * up.a[j];
        combined.a[k] = 0;
        rest.push_back(std::move(combined));
      }
    }
    rows = std::move(rest);
    eliminated.push_back(std::move(step));
    if (!normalize_and_prune(rows)) return std::nullopt;
  }
  // Every remaining row is identically zero and was pruned above.

  CVector x(n, Rational(0));
  for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
    const auto k = it->var;
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& row : it->bounds) {
      Rational rest = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k && row.a[j] != 0) rest += row.a[j] * x[j];
      const Rational bound = -rest / row.a[k];
      if (row.a[k] > 0) {
        if (!lo || bound > *lo || (bound == *lo && row.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || row.strict) : row.strict;
          lo = bound;
        }
      } else {
        if (!hi || bound < *hi || (bound == *hi && row.strict)) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || row.strict) : row.strict;
          hi = bound;
        }
      }
    }
    if (lo && hi) {
      if (*lo > *hi || (*lo == *hi && (lo_strict || hi_strict)))
        throw std::logic_error("Fourier-Motzkin back-substitution found an empty interval");
      x[k] = (*lo + *hi) / 2;
    } else if (lo) {
      x[k] = *lo + 1;
    } else if (hi) {
      x[k] = *hi - 1;
    } else {
      x[k] = 0;
    }
  }
  for (auto it = subs.rbegin(); it != subs.rend(); ++it) x[it->var] = dot(it->expr, x);

  if (!satisfies(sys, x)) throw std::logic_error("Fourier-Motzkin witness failed re-check");
  return x;
}

CVector minimal_support_witness(const LinearSystem& sys, std::span<const std::size_t> relaxable) {
  if (!feasible_witness(sys)) throw std::logic_error("minimal_support_witness: system is infeasible");
  std::vector<std::size_t> order(relaxable.begin(), relaxable.end());
  std::sort(order.begin(), order.end());
  LinearSystem work = sys;
  for (auto j : order) {
    if (j >= sys.n_vars) throw std::invalid_argument("relaxable index out of range");
    LinearSystem trial = work;
    std::vector<int> e(sys.n_vars, 0);
    e[j] = 1;
    trial.zero.push_back(std::move(e));
    if (feasible_witness(trial)) work = std::move(trial);
  }
  return *feasible_witness(work);
}

}  // namespace aq
