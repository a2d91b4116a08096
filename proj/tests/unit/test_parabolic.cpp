#include <gtest/gtest.h>

#include <random>

#include "aq/parabolic.hpp"

using namespace aq;

namespace {

IndexSet all_of(const HermitianRootData& d) { return noncompact_poset(d).complement({}); }

}  // namespace

TEST(Parabolic, InducedClassExamples) {
  const HermitianRootData b3(5);
  const auto zero = induced_class(b3, CVector{0, 0, 0});
  EXPECT_TRUE(zero.ideal.empty());
  EXPECT_TRUE(zero.filter.empty());

  const auto poset = noncompact_poset(b3);
  for (std::size_t i = 0; i < 3; ++i) {
    CVector c(3, 0);
    c[i] = 1;
    const auto cls = induced_class(b3, c);
    EXPECT_TRUE(cls.ideal.empty());
    // F = {beta >= phi_1 + ... + phi_{i+1}}
    RootCoord gen{std::vector<int>(3, 0)};
    for (std::size_t k = 0; k <= i; ++k) gen.coeffs[k] = 1;
    EXPECT_EQ(cls.filter, poset.up_closure({*b3.noncompact_index(gen)}));
  }

  const HermitianRootData d2(2);
  const auto neg = induced_class(d2, CVector{-1, -1});
  EXPECT_EQ(neg.ideal, (IndexSet{0, 1}));
  EXPECT_TRUE(neg.filter.empty());

  EXPECT_THROW(induced_class(b3, CVector{0, -1, 0}), std::invalid_argument);
  EXPECT_THROW(induced_class(b3, CVector{0, 1}), std::invalid_argument);
}

TEST(Parabolic, RealizabilitySystemShape) {
  const HermitianRootData b3(5);
  const auto s = realizability_system(b3, {}, {});
  EXPECT_EQ(s.zero.size(), 5u);
  EXPECT_EQ(s.nonneg_vars, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(*feasible_witness(s), (CVector{0, 0, 0}));
  EXPECT_THROW(realizability_system(b3, {1}, {}), std::invalid_argument);     // not a down-set
  EXPECT_THROW(realizability_system(b3, {}, {3}), std::invalid_argument);     // not an up-set
  EXPECT_THROW(realizability_system(b3, {0}, all_of(b3)), std::invalid_argument);  // overlap
  EXPECT_THROW(realizability_system(b3, {9}, {}), std::invalid_argument);
}

TEST(Parabolic, KnownUnrealizablePairs) {
  for (int l = 2; l <= 7; ++l) {
    const HermitianRootData d(2 * l - 1);
    const auto poset = noncompact_poset(d);
    // I = {beta <= phi_1 + ... + phi_i}, F empty
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(l); ++i)
      EXPECT_FALSE(feasible_witness(realizability_system(d, poset.down_closure({i}), {}))) << l << " " << i;
    // I empty, F = {beta >= phi_1 + ... + phi_{i-1} + 2 phi_i + ... + 2 phi_l}, 2 <= i <= l
    for (std::size_t k = static_cast<std::size_t>(l); k < d.noncompact_count(); ++k)
      EXPECT_FALSE(feasible_witness(realizability_system(d, {}, poset.up_closure({k})))) << l << " " << k;
  }
}

TEST(Parabolic, EnumerationCounts) {
  const long want[] = {0, 3, 9, 8, 18, 15, 29, 24, 42, 35, 57, 48, 74};
  for (int m = 1; m <= 12; ++m) EXPECT_EQ(static_cast<long>(enumerate_classes(HermitianRootData(m)).size()), want[m]);
}

TEST(Parabolic, M1Classes) {
  const auto cls = enumerate_classes(HermitianRootData(1));
  ASSERT_EQ(cls.size(), 3u);
  EXPECT_EQ(cls[0].ideal, IndexSet{});
  EXPECT_EQ(cls[0].filter, IndexSet{});
  EXPECT_EQ(cls[1].filter, IndexSet{0});
  EXPECT_EQ(cls[2].ideal, IndexSet{0});
}

TEST(Parabolic, CanonicalOrder) {
  for (int m = 1; m <= 9; ++m) {
    const auto cls = enumerate_classes(HermitianRootData(m));
    for (std::size_t i = 1; i < cls.size(); ++i) EXPECT_TRUE(class_order_less(cls[i - 1], cls[i]));
  }
}

TEST(Parabolic, GridOracleExamples) {
  EXPECT_EQ(grid_oracle(HermitianRootData(1), 1).size(), 3u);
  EXPECT_EQ(grid_oracle(HermitianRootData(2), 1).size(), 9u);
  EXPECT_EQ(grid_oracle(HermitianRootData(5), 3).size(), 15u);
  EXPECT_THROW(grid_oracle(HermitianRootData(5), 0), std::invalid_argument);
}

TEST(Parabolic, GridOracleAgreesWithSolver) {
  for (int m = 1; m <= 12; ++m) {
    const HermitianRootData d(m);
    std::set<SignPattern> solver;
    for (const auto& c : enumerate_classes(d)) solver.insert({c.ideal, c.filter});
    EXPECT_EQ(grid_oracle(d, 3), solver) << "m=" << m;
  }
}

TEST(Parabolic, WitnessesReinduce) {
  for (int m = 1; m <= 12; ++m) {
    const HermitianRootData d(m);
    for (const auto& c : enumerate_classes(d)) {
      const auto again = induced_class(d, c.witness);
      EXPECT_EQ(again.ideal, c.ideal);
      EXPECT_EQ(again.filter, c.filter);
    }
  }
}

// Random dominant rational lambda: I is always a down-set, F an up-set, and
// the induced pair is one of the enumerated classes.
TEST(Parabolic, RandomDominantLambda) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
  for (int m = 1; m <= 12; ++m) {
    const HermitianRootData d(m);
    const auto poset = noncompact_poset(d);
    std::set<SignPattern> known;
    for (const auto& c : enumerate_classes(d)) known.insert({c.ideal, c.filter});
    for (int trial = 0; trial < 1000; ++trial) {
      CVector c(static_cast<std::size_t>(d.rank()));
      for (std::size_t j = 0; j < c.size(); ++j) {
        int n = num(rng);
        // sparse coordinates reach the lower-dimensional classes too
        if (rng() % 3 == 0) n = 0;
        c[j] = Rational(n, den(rng));
      }
      for (auto j : d.compact_simple()) c[j] = abs(c[j]);
      const auto cls = induced_class(d, c);
      ASSERT_TRUE(poset.is_down_set(cls.ideal));
      ASSERT_TRUE(poset.is_up_set(cls.filter));
      ASSERT_TRUE(known.contains({cls.ideal, cls.filter}));
    }
  }
}
