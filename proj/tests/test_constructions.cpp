#include "test_common.hpp"

using namespace cdg;
using namespace cdgtest;

TEST(Constructions, NamedObjects) {
  const std::map<std::string, u64> orders = {
      {"trivial", 1}, {"c2", 2},   {"c15", 15},  {"v4", 4},         {"s3", 6},           {"d8", 8},
      {"q8", 8},      {"q8xc2", 16}, {"a4", 12}, {"s4", 24},        {"sl23", 24},        {"gl23", 48},
      {"heis27", 27}, {"m27", 27}, {"heis27_c4", 108}, {"es32plus", 32}, {"es32minus", 32}, {"a4xc5", 60},
      {"s3xc5", 30},  {"a5", 60}};
  for (const auto& id : named_ids()) {
    NamedObject obj = named(id);
    if (id == "lewis") {
      ASSERT_TRUE(std::holds_alternative<CliffordSpec>(obj));
      continue;
    }
    ASSERT_TRUE(std::holds_alternative<PermGroup>(obj)) << id;
    const PermGroup& g = std::get<PermGroup>(obj);
    if (orders.count(id)) {
      EXPECT_EQ(g.order(), orders.at(id)) << id;
    }
    EXPECT_EQ(closure(g).size(), g.order()) << id;
  }
  EXPECT_THROW(named("nope"), std::invalid_argument);
}

TEST(Constructions, ExtraspecialGroups) {
  for (auto [p, m, variant] : std::vector<std::tuple<u64, unsigned, std::string>>{
           {2, 1, "D"}, {2, 1, "Q"}, {2, 2, "DD"}, {2, 2, "QD"}, {3, 1, "exponent_p"}, {3, 1, "exponent_p2"}, {5, 1, "exponent_p"}}) {
    PermGroup g = extraspecial(p, m, variant);
    EXPECT_EQ(g.order(), ipow(p, 2 * m + 1)) << variant;
    EXPECT_EQ(center(g).order(), p) << variant;
    EXPECT_TRUE(same_group(center(g), derived_subgroup(g))) << variant;
    DegreeMultiset d = degree_oracle(g);
    EXPECT_EQ(d.multiplicities(), (std::map<u64, u64>{{1, ipow(p, 2 * m)}, {ipow(p, m), p - 1}})) << variant;
  }
  // Q8 has a unique involution, D8 has five.
  auto involutions = [](const PermGroup& g) {
    u64 c = 0;
    for (const auto& x : closure(g)) c += !x.is_identity() && (x * x).is_identity();
    return c;
  };
  EXPECT_EQ(involutions(extraspecial(2, 1, "Q")), 1u);
  EXPECT_EQ(involutions(extraspecial(2, 1, "D")), 5u);
  EXPECT_THROW(extraspecial(2, 1, "X"), std::exception);
}

TEST(Constructions, AffineAndPairingGroups) {
  SemilinearGroup h = SemilinearGroup::gamma(2, 3);
  PermGroup a = affine_semilinear(h);
  EXPECT_EQ(a.order(), 8u * 21u);
  EXPECT_EQ(fitting_subgroup(a).order(), 8u);
  PermGroup f = frobenius_pairing(h, 1);
  EXPECT_EQ(f.order(), 64u * 21u);
  PermGroup hp = heisenberg_pairing(SemilinearGroup::multiplications(2, 2, 3));
  EXPECT_EQ(hp.order(), 64u * 3u);
  EXPECT_EQ(center(p_core(hp, 2)).order(), 4u);
}

TEST(Constructions, RecipeParsing) {
  auto rs = parse_recipes("# c\n[a]\nkind = named\nid = s3\nexpect.order = 6\n\n[b]\nkind = affine_semilinear\np = 2\nn = 2\n");
  ASSERT_EQ(rs.size(), 2u);
  EXPECT_EQ(rs[0].name, "a");
  EXPECT_EQ(rs[0].expect.at("order"), "6");
  EXPECT_EQ(rs[1].params.at("p"), "2");
  Construction c = build(rs[1]);
  ASSERT_TRUE(c.group && c.clifford);
  EXPECT_EQ(c.group->order(), 4u * 6u);
  EXPECT_TRUE(check_expectations(rs[0], build(rs[0])).empty());
  Recipe wrong = rs[0];
  wrong.expect["order"] = "7";
  EXPECT_EQ(check_expectations(wrong, build(wrong)).size(), 1u);
  EXPECT_THROW(parse_recipes("[a]\n[a]\n"), ParseError);
  EXPECT_THROW(parse_recipes("kind = named\n"), ParseError);
  EXPECT_THROW(build(parse_recipes("[x]\nkind = bogus\n")[0]), ParseError);
}

TEST(Constructions, DefaultCorpusBuildsAndMeetsExpectations) {
  auto rs = read_recipe_file(data_path("corpus_default.txt"));
  EXPECT_GE(rs.size(), 40u);
  std::size_t solvable = 0;
  for (const auto& r : rs) {
    Construction c = build(r);
    EXPECT_TRUE(check_expectations(r, c).empty()) << r.name;
    if (c.group && c.group->order() <= 20000) solvable += is_solvable(*c.group);
  }
  EXPECT_GE(solvable, 25u);
}
