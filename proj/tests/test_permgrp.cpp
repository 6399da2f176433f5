#include "test_common.hpp"

using namespace cdg;
using namespace cdgtest;

namespace {

std::vector<std::pair<std::string, PermGroup>> small_groups() {
  return {{"c6", cyclic_group(6)},   {"s3", symmetric_group(3)},  {"d8", dihedral_group(4)},
          {"q8", extraspecial(2, 1, "Q")}, {"a4", alternating_group(4)}, {"s4", symmetric_group(4)},
          {"sl23", sl23()},          {"gl23", gl23()},            {"heis27", extraspecial(3, 1, "exponent_p")},
          {"a5", alternating_group(5)}};
}

}  // namespace

TEST(Perm, CompositionIsLeftToRight) {
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{1, 2}});
  // x^(ab) = (x^a)^b: 0 -> 1 -> 2.
  EXPECT_EQ((a * b)(0), 2u);
  EXPECT_EQ((a * b).to_cycle_string(), "(0 2 1)");
  EXPECT_EQ(a.conj(b), Perm::from_cycles(3, {{0, 2}}));
  EXPECT_EQ(b.pow(-1), b.inverse());
  EXPECT_EQ(parse_cycles("(0 2 1)", 3), a * b);
  EXPECT_EQ(parse_cycles("()", 3), Perm(3));
  EXPECT_THROW(parse_cycles("(0 3)", 3), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(0 1 0)", 3), std::invalid_argument);
  EXPECT_THROW(Perm(std::vector<Point>{0, 0}), std::invalid_argument);
}

TEST(PermGroup, OrdersMatchClosure) {
  for (const auto& [name, g] : small_groups()) {
    auto els = closure(g);
    EXPECT_EQ(g.order(), els.size()) << name;
    for (const auto& x : els) ASSERT_TRUE(g.contains(x)) << name;
  }
  EXPECT_EQ(symmetric_group(10).order(), 3628800u);
  EXPECT_EQ(symmetric_group(30).order_big(), BigInt("265252859812191058636308480000000"));
  EXPECT_FALSE(alternating_group(5).contains(Perm::from_cycles(5, {{0, 1}})));
}

TEST(PermGroup, SubgroupStructureAgainstBruteForce) {
  for (const auto& [name, g] : small_groups()) {
    auto els = closure(g);
    // Center: elements commuting with every generator.
    u64 z = 0;
    for (const auto& x : els) {
      bool central = true;
      for (const auto& s : g.generators()) central = central && x * s == s * x;
      z += central;
    }
    EXPECT_EQ(center(g).order(), z) << name;
    EXPECT_EQ(g.order() / derived_subgroup(g).order(), brute_abelianization(g)) << name;
    for (u64 p : trial_primes(g.order())) {
      PermGroup s = sylow_subgroup(g, p);
      EXPECT_EQ(s.order(), p_part(g.order(), p)) << name << " p=" << p;
      EXPECT_TRUE(g.contains_group(s));
      EXPECT_TRUE(is_normal(p_core(g, p), g));
    }
    EXPECT_EQ(conjugacy_classes(g).size(), brute_class_count(g)) << name;
  }
}

TEST(PermGroup, SolvableNilpotentFitting) {
  EXPECT_TRUE(is_solvable(symmetric_group(4)));
  EXPECT_FALSE(is_solvable(alternating_group(5)));
  EXPECT_TRUE(is_nilpotent(extraspecial(2, 2, "DD")));
  EXPECT_FALSE(is_nilpotent(symmetric_group(3)));
  EXPECT_EQ(fitting_subgroup(symmetric_group(4)).order(), 4u);
  EXPECT_EQ(fitting_subgroup(sl23()).order(), 8u);
  EXPECT_EQ(fitting_height(symmetric_group(4)), 3);
  EXPECT_EQ(fitting_height(sl23()), 2);
  EXPECT_EQ(fitting_height(cyclic_group(12)), 1);
  auto lcs = lower_central_series(extraspecial(3, 1, "exponent_p"));
  ASSERT_EQ(lcs.size(), 3u);
  EXPECT_EQ(lcs[1].order(), 3u);
  EXPECT_TRUE(lcs[2].is_trivial());
}

TEST(PermGroup, HallComplement) {
  PermGroup g = symmetric_group(4);
  PermGroup k = p_complement(g, 2, 3);  // a 2'-Hall subgroup: order 3
  EXPECT_EQ(k.order(), 3u);
  PermGroup a = alternating_group(4);
  PermGroup c = p_complement(a, 3, 1);
  EXPECT_EQ(c.order(), 4u);
  EXPECT_TRUE(a.contains_group(c));
}

TEST(PermGroup, SameGroupIgnoresGenerators) {
  PermGroup a(4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 1}})});
  EXPECT_TRUE(same_group(a, symmetric_group(4)));
  EXPECT_FALSE(same_group(alternating_group(4), symmetric_group(4)));
}

TEST(GroupIO, RoundTripAndErrors) {
  PermGroup g = sl23();
  PermGroup back = parse_group(write_group(g));
  EXPECT_TRUE(same_group(g, back));
  EXPECT_TRUE(same_group(read_group_file(data_path("sl23.grp")), g));
  EXPECT_TRUE(read_group_file(data_path("trivial.grp")).is_trivial());
  EXPECT_THROW(parse_group("(0 1)\n"), ParseError);
  EXPECT_THROW(parse_group("degree 3\n(0 5)\n"), ParseError);
  try {
    parse_group("degree 3\n# comment\n(0 1)\n(0 x)\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
  }
}
