#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "aq/rootsys.hpp"

using namespace aq;

namespace {

RootCoord rc(std::vector<int> v) { return RootCoord{std::move(v)}; }

// Roots of so(n) in epsilon coordinates, converted to simple-root coordinates
// for the labeling phi_i = e_i - e_{i+1}, phi_l = e_l (B) or e_{l-1} + e_l (D).
std::set<RootCoord> epsilon_positive_roots(Family f, int l) {
  std::vector<std::vector<int>> eps;
  auto unit = [&](int i, int s) {
    std::vector<int> v(static_cast<std::size_t>(l), 0);
    v[static_cast<std::size_t>(i)] = s;
    return v;
  };
  for (int i = 0; i < l; ++i) {
    if (f == Family::B) eps.push_back(unit(i, 1));
    for (int j = i + 1; j < l; ++j)
      for (int s : {-1, 1}) {
        auto v = unit(i, 1);
        v[static_cast<std::size_t>(j)] = s;
        eps.push_back(v);
      }
  }
  std::set<RootCoord> out;
  for (const auto& v : eps) {
    std::vector<int> partial(static_cast<std::size_t>(l));
    int s = 0;
    for (int k = 0; k < l; ++k) partial[static_cast<std::size_t>(k)] = s += v[static_cast<std::size_t>(k)];
    std::vector<int> c = partial;
    if (f == Family::D) {
      c[static_cast<std::size_t>(l - 1)] = partial[static_cast<std::size_t>(l - 1)] / 2;
      c[static_cast<std::size_t>(l - 2)] = partial[static_cast<std::size_t>(l - 2)] - partial[static_cast<std::size_t>(l - 1)] / 2;
    }
    out.insert(rc(c));
  }
  return out;
}

}  // namespace

TEST(RootSys, FamilyAndRank) {
  const HermitianRootData b(3);
  EXPECT_EQ(b.family(), Family::B);
  EXPECT_EQ(b.rank(), 2);
  const HermitianRootData d(2);
  EXPECT_EQ(d.family(), Family::D);
  EXPECT_EQ(d.rank(), 2);
  const HermitianRootData d3(4);
  EXPECT_EQ(d3.family(), Family::D);
  EXPECT_EQ(d3.rank(), 3);
  EXPECT_THROW(HermitianRootData(0), std::invalid_argument);
  EXPECT_THROW(HermitianRootData(-3), std::invalid_argument);
}

TEST(RootSys, NoncompactRootsM3) {
  const HermitianRootData d(3);
  const std::vector<RootCoord> want = {rc({1, 0}), rc({1, 1}), rc({1, 2})};
  EXPECT_EQ(d.noncompact_positive(), want);
}

TEST(RootSys, NoncompactRootsM2) {
  const HermitianRootData d(2);
  const std::vector<RootCoord> want = {rc({1, 0}), rc({0, 1})};
  EXPECT_EQ(d.noncompact_positive(), want);
  EXPECT_TRUE(d.compact_positive().empty());
  EXPECT_TRUE(d.compact_simple().empty());
}

TEST(RootSys, NoncompactRootsM4) {
  const HermitianRootData d(4);
  const std::vector<RootCoord> want = {rc({1, 0, 0}), rc({1, 1, 0}), rc({1, 0, 1}), rc({1, 1, 1})};
  EXPECT_EQ(d.noncompact_positive(), want);
}

TEST(RootSys, PositiveRootCounts) {
  EXPECT_EQ(positive_roots_from_cartan(Family::B, 2).size(), 4u);
  EXPECT_EQ(positive_roots_from_cartan(Family::D, 3).size(), 6u);
  EXPECT_EQ(positive_roots_from_cartan(Family::B, 1), std::vector<RootCoord>{rc({1})});
  for (int l = 1; l <= 13; ++l) EXPECT_EQ(positive_roots_from_cartan(Family::B, l).size(), static_cast<std::size_t>(l * l));
  for (int l = 2; l <= 13; ++l)
    EXPECT_EQ(positive_roots_from_cartan(Family::D, l).size(), static_cast<std::size_t>(l * (l - 1)));
}

TEST(RootSys, MatchesEpsilonModel) {
  for (int l = 1; l <= 10; ++l) {
    const auto got = positive_roots_from_cartan(Family::B, l);
    EXPECT_EQ(std::set<RootCoord>(got.begin(), got.end()), epsilon_positive_roots(Family::B, l)) << "B" << l;
  }
  for (int l = 2; l <= 10; ++l) {
    const auto got = positive_roots_from_cartan(Family::D, l);
    EXPECT_EQ(std::set<RootCoord>(got.begin(), got.end()), epsilon_positive_roots(Family::D, l)) << "D" << l;
  }
}

TEST(RootSys, CartanFromGram) {
  const HermitianRootData b(5);
  const std::vector<std::vector<int>> want = {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  EXPECT_EQ(b.cartan(), want);
  const HermitianRootData d(6);
  EXPECT_EQ(d.cartan()[1][2], -1);
  EXPECT_EQ(d.cartan()[1][3], -1);
  EXPECT_EQ(d.cartan()[2][3], 0);
}

TEST(RootSys, NoncompactCountAndBorelDeSiebenthal) {
  for (int m = 1; m <= 25; ++m) {
    const HermitianRootData d(m);
    const auto l = static_cast<std::size_t>(d.rank());
    EXPECT_EQ(d.noncompact_count(), d.family() == Family::B ? 2 * l - 1 : 2 * l - 2) << m;
    for (const auto& r : d.compact_positive()) EXPECT_EQ(r.coeffs[0], 0);
    if (m != 2)
      for (const auto& r : d.noncompact_positive()) EXPECT_EQ(r.coeffs[0], 1) << m;
  }
}

TEST(RootSys, PairingExamples) {
  EXPECT_EQ(pairing(CVector{0, 0}, rc({1, 2})), 0);
  EXPECT_EQ(pairing(CVector{1, 0}, rc({1, 2})), 1);
  EXPECT_EQ(pairing(CVector{-1, 1, 0}, rc({1, 0, 0})), -1);
  EXPECT_EQ(pairing(std::vector<int>{2, 3}, rc({1, 2})), 8);
  EXPECT_EQ(pairing(CVector{Rational(1, 2), Rational(1, 3)}, rc({1, 2})), Rational(7, 6));
  EXPECT_THROW(pairing(CVector{1}, rc({1, 2})), std::invalid_argument);
  EXPECT_THROW(pairing(std::vector<int>{1, 2, 3}, rc({1, 2})), std::invalid_argument);
}

TEST(RootSys, LeqExamples) {
  EXPECT_TRUE(leq(rc({1, 1}), rc({1, 1})));
  EXPECT_TRUE(leq(rc({1, 0}), rc({1, 2})));
  EXPECT_FALSE(leq(rc({1, 2}), rc({1, 0})));
  const HermitianRootData d(8);
  const auto xi1 = rc({1, 1, 1, 1, 0}), xi2 = rc({1, 1, 1, 0, 1});
  EXPECT_FALSE(leq(xi1, xi2));
  EXPECT_FALSE(leq(xi2, xi1));
  EXPECT_LT(*d.noncompact_index(xi1), *d.noncompact_index(xi2));
}

TEST(RootSys, HasseClosureEqualsOrder) {
  for (int m = 1; m <= 25; ++m) {
    const HermitianRootData d(m);
    const auto n = d.noncompact_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) reach[i][i] = true;
    for (const auto& c : d.hasse()) {
      reach[c.lower][c.upper] = true;
      EXPECT_EQ(d.noncompact(c.upper) - d.noncompact(c.lower), d.simple_root(c.simple));
      EXPECT_TRUE(std::find(d.compact_simple().begin(), d.compact_simple().end(), c.simple) != d.compact_simple().end());
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    int incomparable = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(reach[i][j], d.leq(i, j)) << "m=" << m;
        EXPECT_EQ(d.leq(i, j), leq(d.noncompact(i), d.noncompact(j)));
        if (i < j && !d.leq(i, j) && !d.leq(j, i)) ++incomparable;
      }
    EXPECT_EQ(incomparable, d.family() == Family::D ? 1 : 0) << "m=" << m;
    if (m != 2) EXPECT_GE(d.hasse().size(), n - 1);
  }
}

TEST(RootSys, LinearExtensionOrder) {
  for (int m = 1; m <= 25; ++m) {
    const HermitianRootData d(m);
    for (std::size_t i = 0; i < d.noncompact_count(); ++i)
      for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(d.leq(i, j) && i != j);
  }
}

TEST(RootSys, InnerProductScaling) {
  // B: gram is twice the epsilon form; D: equal to it
  const HermitianRootData b(7);
  EXPECT_EQ(b.inner(b.simple_root(0), b.simple_root(0)), 4);
  EXPECT_EQ(b.inner(b.simple_root(3), b.simple_root(3)), 2);
  EXPECT_EQ(b.coroot_pairing(b.simple_root(2), b.simple_root(3)), -2);
  EXPECT_EQ(b.coroot_pairing(b.simple_root(3), b.simple_root(2)), -1);
  const HermitianRootData d(6);
  for (const auto& r : d.positive_roots()) EXPECT_EQ(d.inner(r, r), 2);
  const HermitianRootData b1(1);
  EXPECT_EQ(b1.inner(b1.simple_root(0), b1.simple_root(0)), 2);
}

TEST(RootSys, Membership) {
  const HermitianRootData d(5);
  EXPECT_TRUE(d.is_root(rc({1, 2, 2})));
  EXPECT_TRUE(d.is_root(rc({-1, -2, -2})));
  EXPECT_FALSE(d.is_root(rc({1, 3, 0})));
  EXPECT_FALSE(d.is_root(rc({0, 0, 0})));
  EXPECT_TRUE(d.is_noncompact(rc({-1, -1, 0})));
  EXPECT_FALSE(d.is_noncompact(rc({0, 1, 1})));
  EXPECT_FALSE(d.noncompact_index(rc({0, 1, 0})).has_value());
  EXPECT_EQ(to_string(rc({1, 1, 0})), "[1,1,0]");
}
