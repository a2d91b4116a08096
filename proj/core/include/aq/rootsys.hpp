#pragma once

// Root data of g = so(m+2, C) with the compact/noncompact split coming from
// the Hermitian pair (so(2,m), so(2) + so(m)).
//
// Simple roots are labeled as in the usual Dynkin diagrams with phi_1 the
// unique noncompact simple root: B_l is the chain phi_1 - ... => phi_l, D_l
// forks at phi_{l-2} into phi_{l-1} and phi_l. For m = 2 (D_2) both simple
// roots are noncompact and there are no compact roots.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "aq/rational.hpp"

namespace aq {

enum class Family { B, D };

std::string to_string(Family f);

/// A root written as integer coefficients over the simple roots.
struct RootCoord {
  std::vector<int> coeffs;

  int height() const;
  bool is_zero() const;
  RootCoord operator-() const;
  RootCoord operator+(const RootCoord& other) const;
  RootCoord operator-(const RootCoord& other) const;

  auto operator<=>(const RootCoord&) const = default;
};

std::string to_string(const RootCoord& r);

/// Cover relation beta -> gamma of the noncompact positive poset:
/// gamma = beta + phi_{simple + 1}, phi compact simple.
struct HasseCover {
  std::size_t lower;
  std::size_t upper;
  std::size_t simple;
};

/// Positive roots of B_l (l >= 1) or D_l (l >= 2) by string closure over the
/// Cartan matrix.  Roots are ordered by height, then by descending
/// coefficient vector.
std::vector<RootCoord> positive_roots_from_cartan(Family family, int rank);

/// Gram matrix of the simple roots under an integer multiple of the invariant
/// form.  Long roots have norm 4 and short roots norm 2 in type B; all roots
/// have norm 2 in type D.
std::vector<std::vector<int>> simple_root_gram(Family family, int rank);

/// Immutable root data for one value of m.
class HermitianRootData {
 public:
  /// Throws std::invalid_argument for m < 1.
  explicit HermitianRootData(int m);

  int m() const { return m_; }
  Family family() const { return family_; }
  int rank() const { return rank_; }

  /// cartan()[i][j] = <phi_i, phi_j^vee>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<RootCoord>& positive_roots() const { return pos_roots_; }
  const std::vector<RootCoord>& compact_positive() const { return compact_pos_; }
  /// Delta_n^+ in canonical linear-extension order.
  const std::vector<RootCoord>& noncompact_positive() const { return noncompact_pos_; }
  const std::vector<HasseCover>& hasse() const { return hasse_; }

  /// 0-based indices j of the compact simple roots (empty for m = 2).
  const std::vector<std::size_t>& compact_simple() const { return compact_simple_; }

  std::size_t noncompact_count() const { return noncompact_pos_.size(); }
  const RootCoord& noncompact(std::size_t i) const { return noncompact_pos_.at(i); }
  std::optional<std::size_t> noncompact_index(const RootCoord& r) const;

  bool is_root(const RootCoord& r) const;
  bool is_noncompact(const RootCoord& r) const;
  RootCoord simple_root(std::size_t j) const;

  /// Integer invariant form (scaled as in simple_root_gram).
  int inner(const RootCoord& a, const RootCoord& b) const;
  /// <a, b^vee> = 2 (a, b) / (b, b); b must be a root.
  int coroot_pairing(const RootCoord& a, const RootCoord& b) const;

  /// Coefficientwise order on Delta_n^+ (indices into noncompact_positive()).
  bool leq(std::size_t beta, std::size_t gamma) const;

 private:
  int m_;
  Family family_;
  int rank_;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RootCoord> pos_roots_;
  std::vector<RootCoord> compact_pos_;
  std::vector<RootCoord> noncompact_pos_;
  std::vector<HasseCover> hasse_;
  std::vector<std::size_t> compact_simple_;
};

/// Coefficientwise beta <= gamma.
bool leq(const RootCoord& beta, const RootCoord& gamma);

/// <lambda, beta> = sum_j c_j n_j(beta). Throws std::invalid_argument on a
/// length mismatch.
Rational pairing(const CVector& c, const RootCoord& beta);
long long pairing(const std::vector<int>& c, const RootCoord& beta);

}  // namespace aq
