#include "test_common.hpp"

using namespace cdg;
using namespace cdgtest;

namespace {

using Mult = std::map<u64, u64>;

struct Known {
  const char* name;
  PermGroup g;
  Mult cd;
};

// Degree multisets from standard character tables.
std::vector<Known> known() {
  return {{"s3", symmetric_group(3), {{1, 2}, {2, 1}}},
          {"d8", dihedral_group(4), {{1, 4}, {2, 1}}},
          {"q8", extraspecial(2, 1, "Q"), {{1, 4}, {2, 1}}},
          {"a4", alternating_group(4), {{1, 3}, {3, 1}}},
          {"s4", symmetric_group(4), {{1, 2}, {2, 1}, {3, 2}}},
          {"sl23", sl23(), {{1, 3}, {2, 3}, {3, 1}}},
          {"gl23", gl23(), {{1, 2}, {2, 3}, {3, 2}, {4, 1}}},
          {"heis27", extraspecial(3, 1, "exponent_p"), {{1, 9}, {3, 2}}},
          {"es32plus", extraspecial(2, 2, "DD"), {{1, 16}, {4, 1}}},
          {"a5", alternating_group(5), {{1, 1}, {3, 2}, {4, 1}, {5, 1}}},
          {"c15", cyclic_group(15), {{1, 15}}}};
}

}  // namespace

TEST(Characters, KnownDegreeMultisets) {
  for (const auto& k : known()) {
    DegreeMultiset d = degree_oracle(k.g);
    EXPECT_EQ(d.multiplicities(), k.cd) << k.name;
    EXPECT_EQ(d.sum_of_squares(), BigInt(k.g.order())) << k.name;
  }
}

TEST(Characters, CountsAgainstBruteForce) {
  for (const auto& k : known()) {
    CharacterOracle o(k.g);
    EXPECT_EQ(o.character_count(), brute_class_count(k.g)) << k.name;
    EXPECT_EQ(o.degrees().multiplicity(1), brute_abelianization(k.g)) << k.name;
    for (std::size_t i = 0; i < o.character_count(); ++i) EXPECT_EQ(k.g.order() % o.degree(i), 0u) << k.name;
  }
}

TEST(Characters, QuotientsThroughKernels) {
  PermGroup s4 = symmetric_group(4);
  CharacterOracle o(s4);
  PermGroup v4 = fitting_subgroup(s4);
  EXPECT_EQ(o.quotient_degrees(v4).multiplicities(), (Mult{{1, 2}, {2, 1}}));
  EXPECT_EQ(o.quotient_degrees(alternating_group(4)).multiplicities(), (Mult{{1, 2}}));
  std::size_t faithful = 0;
  for (std::size_t i = 0; i < o.character_count(); ++i) faithful += !o.kernel_contains(i, v4);
  EXPECT_EQ(faithful, 2u);  // the two degree-3 characters
}

TEST(Characters, RootOfUnityHasExactOrder) {
  CharacterOracle o(sl23());
  EXPECT_EQ((o.ell() - 1) % o.exponent(), 0u);
  for (u64 k : {2, 3, 4, 6}) {
    u64 z = o.root_of_unity(k);
    EXPECT_EQ(pow_mod(z, k, o.ell()), 1u);
    for (u64 d : divisors(k))
      if (d < k) {
        EXPECT_NE(pow_mod(z, d, o.ell()), 1u);
      }
  }
}

TEST(Characters, RejectsOversizedGroups) {
  EXPECT_THROW(degree_oracle(symmetric_group(8)), ScaleError);
}

TEST(DegreeMultiset, Validation) {
  EXPECT_THROW(DegreeMultiset(6, {{1, 2}, {2, 2}}, Provenance::oracle), std::invalid_argument);
  EXPECT_THROW(DegreeMultiset(4, {{2, 1}}, Provenance::oracle), std::invalid_argument);
  DegreeMultiset d(6, {{1, 2}, {2, 1}}, Provenance::oracle);
  EXPECT_EQ(d.count(), 3u);
  EXPECT_EQ(d.distinct(), (std::vector<u64>{1, 2}));
}

TEST(Ramification, QuaternionCenter) {
  PermGroup q8 = extraspecial(2, 1, "Q");
  auto c = count_non_fully_ramified(q8, center(q8));
  EXPECT_EQ(c.m, 1u);
  EXPECT_EQ(c.n, 2u);
  EXPECT_EQ(c.count, 1u);  // only the trivial character of Z
  EXPECT_FALSE(c.bound_applies());
}

TEST(Ramification, BoundInstanceWithExactCount) {
  // P = D8 x V4, N = Z(P) of order 8, |P/N| = 4. lambda is fully ramified exactly when
  // it is nontrivial on P' = Z(D8), so half of the 8 characters of N are not.
  PermGroup p = direct_product(dihedral_group(4), direct_product(cyclic_group(2), cyclic_group(2)));
  PermGroup z = center(p);
  ASSERT_EQ(z.order(), 8u);
  auto c = count_non_fully_ramified(p, z);
  EXPECT_TRUE(c.bound_applies());
  EXPECT_EQ(c.bound(), 4u);
  EXPECT_EQ(c.count, 4u);
  EXPECT_TRUE(c.bound_met());
  auto agree = compare_ramification_criteria(RamificationSetup(p, z));
  EXPECT_EQ(agree.checked, 8u);
  EXPECT_EQ(agree.disagreements, 0u);
}

TEST(Ramification, FormAndCharacterCriteriaAgree) {
  for (PermGroup p : {extraspecial(2, 2, "DD"), extraspecial(2, 2, "QD"), extraspecial(3, 1, "exponent_p"),
                      extraspecial(3, 1, "exponent_p2")}) {
    for (const auto& inst : ramification_instances(p, "x")) {
      auto a = compare_ramification_criteria(RamificationSetup(inst.p_group, inst.n));
      EXPECT_GT(a.checked, 0u) << inst.label;
      EXPECT_EQ(a.disagreements, 0u) << inst.label;
    }
  }
}

TEST(Ramification, HypothesesEnforced) {
  PermGroup s3 = symmetric_group(3);
  EXPECT_THROW(RamificationSetup(s3, PermGroup::trivial(3)), HypothesisError);
  PermGroup c4 = cyclic_group(4);
  // N must be elementary abelian and central.
  EXPECT_THROW(RamificationSetup(c4, c4), HypothesisError);
}

TEST(Ramification, InstancesExcludeWholeGroup) {
  for (const auto& inst : ramification_instances(cyclic_group(8), "c8"))
    EXPECT_LT(inst.n.order(), inst.p_group.order()) << inst.label;
}
