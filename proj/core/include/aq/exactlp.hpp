#pragma once

// Exact feasibility of homogeneous sign systems over the rationals.
//
// The solver is Fourier-Motzkin elimination: equalities are removed first by
// Gaussian substitution, then the remaining variables are eliminated from the
// highest index down.  Back-substitution picks, for each variable, the
// midpoint of its feasible interval, bound + 1 / bound - 1 if the interval is
// one-sided, or 0 if unconstrained, so a given system always yields the same
// witness.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "aq/rational.hpp"

namespace aq {

struct LinearSystem {
  std::size_t n_vars = 0;
  std::vector<std::vector<int>> strict_pos;  // r . c > 0
  std::vector<std::vector<int>> strict_neg;  // r . c < 0
  std::vector<std::vector<int>> zero;        // r . c = 0
  std::vector<std::size_t> nonneg_vars;      // c_j >= 0 (0-based)
};

/// Throws std::invalid_argument if a row has the wrong length or a variable
/// index is out of range.
void validate(const LinearSystem& sys);

/// True iff c satisfies every constraint exactly.  Throws std::invalid_argument
/// on a malformed system or a point of the wrong dimension.
bool satisfies(const LinearSystem& sys, const CVector& c);

/// A witness, or nullopt iff the system is infeasible.
std::optional<CVector> feasible_witness(const LinearSystem& sys);

/// Greedy support minimization: for each relaxable variable in ascending
/// order, add c_j = 0 and keep it if the system stays feasible.  Throws
/// std::logic_error when sys itself is infeasible.
CVector minimal_support_witness(const LinearSystem& sys, std::span<const std::size_t> relaxable);

}  // namespace aq
