#include <gtest/gtest.h>

#include "aq/classify.hpp"
#include "aq/cohomology.hpp"

using namespace aq;

namespace {

ParabolicClass realized(const HermitianRootData& d, IndexSet ideal, IndexSet filter) {
  auto w = feasible_witness(realizability_system(d, ideal, filter));
  if (!w) throw std::logic_error("test pair is not realizable");
  return {d.m(), std::move(ideal), std::move(filter), *w};
}

RootCoord rc(std::vector<int> v) { return RootCoord{std::move(v)}; }

IndexSet all_of(const HermitianRootData& d) { return noncompact_poset(d).complement({}); }

std::vector<long> brute_force_ideal_counts(const FinitePoset& p) {
  const auto n = p.size();
  std::vector<long> counts(n + 1, 0);
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    bool ideal = true;
    for (std::size_t a = 0; a < n && ideal; ++a)
      if (mask >> a & 1)
        for (std::size_t b = 0; b < n; ++b)
          if (p.leq(b, a) && !(mask >> b & 1)) ideal = false;
    if (ideal) ++counts[static_cast<std::size_t>(__builtin_popcountl(mask))];
  }
  return counts;
}

}  // namespace

TEST(BigradedPoly, Arithmetic) {
  BigradedPoly p;
  EXPECT_EQ(p.to_string(), "0");
  p.add(0, 0, 1);
  p.add(1, 1, 2);
  p.add(2, 2, 1);
  EXPECT_EQ(p.to_string(), "1 + 2*x*t + x^2*t^2");
  EXPECT_EQ(p.coeff(1, 1), 2);
  EXPECT_EQ(p.coeff(3, 0), 0);
  EXPECT_EQ(p.collapse(), (std::map<int, long>{{0, 1}, {2, 2}, {4, 1}}));
  EXPECT_EQ(single_variable_string(p.collapse()), "1 + 2*t^2 + t^4");
  p.add(1, 1, -2);
  EXPECT_EQ(p.coeff(1, 1), 0);
  EXPECT_EQ(p.terms().size(), 2u);
  EXPECT_THROW(p.add(-1, 0, 1), std::invalid_argument);
  BigradedPoly q;
  q.add(3, 1, 1);
  q.add(0, 2, 1);
  EXPECT_EQ(q.to_string(), "t^2 + x^3*t");
  EXPECT_EQ(single_variable_string({}), "0");
}

TEST(Cohomology, LeviNoncompactPoset) {
  const HermitianRootData b3(5);
  EXPECT_EQ(levi_noncompact_poset(b3, realized(b3, {}, {})), all_of(b3));
  EXPECT_TRUE(levi_noncompact_poset(b3, realized(b3, {}, all_of(b3))).empty());
  for (int l = 3; l <= 6; ++l) {
    const HermitianRootData d(2 * l - 2);
    const auto cls = realized(d, noncompact_poset(d).down_closure({static_cast<std::size_t>(l - 3)}),
                              noncompact_poset(d).up_closure({static_cast<std::size_t>(l)}));
    const auto n = levi_noncompact_poset(d, cls);
    ASSERT_EQ(n.size(), 2u);
    EXPECT_EQ(d.noncompact(n[0]), d.noncompact(static_cast<std::size_t>(l - 2)));
    EXPECT_EQ(betti_Yq(d, cls).betti, (std::vector<long>{1, 2, 1}));
    EXPECT_EQ(identify_Yq(d, cls), even_quadric_name(2));
  }
}

TEST(Cohomology, BettiExamples) {
  const HermitianRootData b3(5);
  const auto y = betti_Yq(b3, realized(b3, {}, {}));
  EXPECT_EQ(y.betti, (std::vector<long>(6, 1)));
  EXPECT_EQ(y.kind, YqKind::Quadric);
  EXPECT_EQ(y.complex_dim, 5);
  const auto pt = betti_Yq(b3, realized(b3, {0}, {1, 2, 3, 4}));
  EXPECT_EQ(pt.betti, std::vector<long>{1});
  EXPECT_EQ(pt.kind, YqKind::Singleton);
  EXPECT_EQ(betti_Yq(b3, realized(b3, {}, {1, 2, 3, 4})).kind, YqKind::Projective);
}

TEST(Cohomology, PoincareExamples) {
  const HermitianRootData d2(2);
  EXPECT_EQ(poincare_two_var(d2, realized(d2, {}, {})).to_string(), "1 + 2*x*t + x^2*t^2");
  const HermitianRootData b2(3);
  EXPECT_EQ(poincare_two_var(b2, realized(b2, {}, all_of(b2))).to_string(), "x^3");
  const HermitianRootData b3(5);
  EXPECT_EQ(poincare_two_var(b3, realized(b3, {0}, {2, 3, 4})).to_string(), "x^3*t + x^4*t^2");
}

TEST(Cohomology, IdentifyExamples) {
  for (int l = 2; l <= 6; ++l) {
    const HermitianRootData d(2 * l - 1);
    EXPECT_EQ(identify_Yq(d, realized(d, {}, {})), odd_quadric_name(l));
    const auto poset = noncompact_poset(d);
    for (int i = 2; i <= l; ++i)
      EXPECT_EQ(identify_Yq(d, realized(d, {}, poset.up_closure({static_cast<std::size_t>(i - 1)}))),
                projective_space_name(i));
  }
  EXPECT_EQ(identify_Yq(HermitianRootData(4), realized(HermitianRootData(4), {}, {})), "SO(6)/(SO(2)\xC3\x97SO(4))");
  EXPECT_EQ(identify_Yq(HermitianRootData(1), realized(HermitianRootData(1), {}, {})),
            "SO(3)/(SO(2)\xC3\x97SO(1))");
}

TEST(Cohomology, Names) {
  EXPECT_EQ(projective_space_name(3), "SU(3)/S(U(1)\xC3\x97U(2))");
  EXPECT_EQ(odd_quadric_name(2), "SO(5)/(SO(2)\xC3\x97SO(3))");
  EXPECT_EQ(even_quadric_name(3), "SO(6)/(SO(2)\xC3\x97SO(4))");
  EXPECT_EQ(named_space_betti("singleton"), std::vector<long>{1});
  EXPECT_EQ(named_space_betti(projective_space_name(3)), (std::vector<long>{1, 1, 1}));
  EXPECT_EQ(named_space_betti(odd_quadric_name(2)), (std::vector<long>{1, 1, 1, 1}));
  EXPECT_EQ(named_space_betti(even_quadric_name(3)), (std::vector<long>{1, 1, 2, 1, 1}));
  EXPECT_THROW(named_space_betti("SU(3)"), std::invalid_argument);
  EXPECT_THROW(named_space_betti("SO(7)/(SO(2)\xC3\x97SO(4))"), std::invalid_argument);
  EXPECT_THROW(named_space_betti("Sp(2)"), std::invalid_argument);
}

TEST(Cohomology, PhiQTrivialClass) {
  for (int l = 2; l <= 6; ++l) {
    const HermitianRootData d(2 * l - 1);
    const auto phi = phi_q_and_gamma(d, realized(d, {}, {}));
    std::vector<RootCoord> simple;
    for (std::size_t j = 0; j < static_cast<std::size_t>(l); ++j) simple.push_back(d.simple_root(j));
    std::sort(simple.begin(), simple.end());
    EXPECT_EQ(phi.simple, simple);
    EXPECT_TRUE(phi.gamma.empty());
    ASSERT_EQ(phi.levi_components.size(), 1u);
    EXPECT_EQ(phi.levi_components[0].type, 'B');
  }
}

TEST(Cohomology, PhiQGammaExamples) {
  for (int l = 2; l <= 6; ++l) {
    const HermitianRootData d(2 * l - 1);
    const auto poset = noncompact_poset(d);
    for (int i = 2; i <= l; ++i) {
      const auto phi = phi_q_and_gamma(d, realized(d, {}, poset.up_closure({static_cast<std::size_t>(i - 1)})));
      EXPECT_EQ(phi.gamma, std::vector<RootCoord>{d.simple_root(static_cast<std::size_t>(i - 1))});
    }
    for (int i = 1; i <= l - 1; ++i) {
      const auto I = poset.down_closure({static_cast<std::size_t>(i - 1)});
      const auto F = poset.up_closure({static_cast<std::size_t>(i)});
      const auto phi = phi_q_and_gamma(d, realized(d, I, F));
      const RootCoord nu1 = -d.noncompact(static_cast<std::size_t>(i - 1));
      const RootCoord nu2 = d.noncompact(static_cast<std::size_t>(i));
      EXPECT_TRUE(std::find(phi.simple.begin(), phi.simple.end(), nu1) != phi.simple.end());
      EXPECT_TRUE(std::find(phi.simple.begin(), phi.simple.end(), nu2) != phi.simple.end());
      std::vector<RootCoord> want{nu1, nu2};
      std::sort(want.begin(), want.end());
      EXPECT_EQ(phi.gamma, want);
    }
  }
}

TEST(Cohomology, PhiQIsABasis) {
  for (int m = 1; m <= 12; ++m) {
    const HermitianRootData d(m);
    for (const auto& c : enumerate_classes(d)) {
      const auto phi = phi_q_and_gamma(d, c);
      EXPECT_EQ(phi.simple.size(), static_cast<std::size_t>(d.rank()));
      EXPECT_EQ(phi.positive_system.size(), d.positive_roots().size());
      for (const auto& g : phi.gamma) EXPECT_GT(pairing(phi.witness, g), 0);
      std::size_t levi_nodes = 0;
      for (const auto& comp : phi.levi_components) {
        levi_nodes += comp.roots.size();
        for (const auto& r : comp.roots) EXPECT_EQ(pairing(phi.witness, r), 0);
      }
      EXPECT_EQ(levi_nodes + phi.gamma.size(), phi.simple.size());
    }
  }
}

TEST(Cohomology, InvariantsForAllClasses) {
  for (int m = 1; m <= 12; ++m) {
    const HermitianRootData d(m);
    const auto poset = noncompact_poset(d);
    for (const auto& c : enumerate_classes(d)) {
      const auto y = betti_Yq(d, c);
      const auto sub = poset.restrict_to(levi_noncompact_poset(d, c));
      EXPECT_TRUE(std::equal(y.betti.begin(), y.betti.end(), y.betti.rbegin()));
      if (sub.size() <= 15) EXPECT_EQ(y.betti, brute_force_ideal_counts(sub));
      EXPECT_EQ(named_space_betti(y.name), y.betti);
      bool antichain = false;
      for (std::size_t a = 0; a < sub.size(); ++a)
        for (std::size_t b = 0; b < sub.size(); ++b) antichain = antichain || (!sub.leq(a, b) && !sub.leq(b, a));
      EXPECT_EQ(std::count(y.betti.begin(), y.betti.end(), 2) > 0, antichain);
      const auto [rp, rm] = hodge(c);
      const auto p = poincare_two_var(d, c);
      for (const auto& [e, coeff] : p.terms()) {
        EXPECT_EQ(e.first - e.second, rp - rm);
        EXPECT_GE(e.first, rp);
        EXPECT_GE(e.second, rm);
        EXPECT_GT(coeff, 0);
        EXPECT_LE(e.first + e.second, rp + rm + 2 * static_cast<int>(sub.size()));
      }
      if (is_discrete(d, c)) {
        EXPECT_EQ(p.terms().size(), 1u);
        EXPECT_EQ(p.coeff(rp, rm), 1);
      }
    }
  }
}

TEST(Cohomology, IdentifyRejectsNothingUpToM20) {
  for (int m = 13; m <= 20; ++m) {
    const HermitianRootData d(m);
    for (const auto& c : enumerate_classes(d)) EXPECT_NO_THROW(identify_Yq(d, c)) << "m=" << m;
  }
}
