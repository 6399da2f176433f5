#include "test_common.hpp"

using namespace cdg;
using namespace cdgtest;

namespace {

DegreeMultiset unchecked(std::vector<u64> ds) {
  std::map<u64, u64> m{{1, 1}};
  for (u64 d : ds) m[d]++;
  return DegreeMultiset::unchecked(m);
}

// Floyd-Warshall on the definition: p ~ q when pq divides some degree.
std::optional<std::size_t> brute_diameter(const std::vector<u64>& degrees, std::size_t* comps) {
  std::set<u64> vs;
  for (u64 d : degrees)
    for (u64 p : trial_primes(d)) vs.insert(p);
  std::vector<u64> v(vs.begin(), vs.end());
  const std::size_t n = v.size(), inf = 1000;
  std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) dist[i][j] = 0;
      for (u64 d : degrees)
        if (i != j && d % (v[i] * v[j]) == 0) dist[i][j] = 1;
    }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
  std::set<std::size_t> roots;
  std::size_t diam = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = i;
    for (std::size_t j = 0; j < n; ++j)
      if (dist[i][j] < inf) r = std::min(r, j);
    roots.insert(r);
    for (std::size_t j = 0; j < n; ++j) diam = std::max(diam, dist[i][j]);
  }
  *comps = roots.size();
  if (n == 0 || diam >= inf) return std::nullopt;
  return diam;
}

}  // namespace

TEST(PrimeGraph, BuildAndMetricsAgainstFloydWarshall) {
  std::mt19937_64 rng(3);
  const std::vector<u64> smooth = {2, 3, 5, 7, 11, 13, 4, 9, 25, 8, 6, 10, 14, 15, 21, 35};
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<u64> ds;
    const int k = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < k; ++i) {
      u64 d = 1;
      for (int j = 0; j < 3; ++j) d *= rng() % 2 ? smooth[rng() % smooth.size()] : 1;
      ds.push_back(d);
    }
    PrimeGraph g = build_graph(unchecked(ds));
    GraphMetrics m = metrics(g);
    std::size_t comps = 0;
    auto diam = brute_diameter(ds, &comps);
    ASSERT_EQ(m.components.size(), comps);
    ASSERT_EQ(m.diameter, diam);
    for (const auto& [a, b] : g.edges()) {
      bool witnessed = false;
      for (u64 d : ds) witnessed = witnessed || d % (a * b) == 0;
      ASSERT_TRUE(witnessed);
    }
  }
}

TEST(PrimeGraph, PalfyViolationDetected) {
  // Three primes, no two sharing a degree.
  PrimeGraph g = build_graph(unchecked({2, 3, 5}));
  auto v = palfy_violation(g);
  ASSERT_TRUE(v);
  EXPECT_EQ(*v, (std::vector<u64>{2, 3, 5}));
  EXPECT_TRUE(check_palfy(build_graph(unchecked({2, 3, 15}))));
}

TEST(PrimeGraph, DiameterThreeSplit) {
  // The path 2 - 3 - 5 - 7.
  PrimeGraph path = build_graph(unchecked({6, 15, 35}));
  GraphMetrics m = metrics(path);
  ASSERT_EQ(m.diameter, std::optional<std::size_t>(3));
  auto split = pi_split(path, m);
  ASSERT_TRUE(split);
  EXPECT_EQ(split->pi1.size() + split->pi2.size(), 4u);
  EXPECT_EQ(split->pi1, (std::vector<u64>{2, 3}));
  EXPECT_EQ(split->pi2, (std::vector<u64>{5, 7}));
  PrimeGraph longer = build_graph(unchecked({6, 15, 35, 77}));
  EXPECT_FALSE(diameter_bound_holds(longer, metrics(longer)));
}

TEST(PrimeGraph, DotAndJson) {
  PrimeGraph g = build_graph(unchecked({6, 5}));
  std::string dot = to_dot(g, "x");
  EXPECT_NE(dot.find("graph \"x\""), std::string::npos);
  EXPECT_NE(dot.find("2 -- 3"), std::string::npos);
  json j = to_json(g);
  EXPECT_EQ(j["diameter"], "infinite");
  EXPECT_EQ(to_json(PrimeGraph{})["diameter"], nullptr);
  EXPECT_EQ(to_json(build_graph(unchecked({6})))["diameter"], 1);
  EXPECT_THROW(PrimeGraph({2, 3}, {{3, 2}}), std::invalid_argument);
}

TEST(Checkers, SL23Verdict) {
  GroupContext c(sl23(), "sl23");
  ClassificationVerdict v = analyze_group(c);
  EXPECT_FALSE(v.connected);
  EXPECT_EQ(v.components, (std::vector<std::vector<u64>>{{2}, {3}}));
  ASSERT_TRUE(v.theorem_c);
  EXPECT_EQ(v.theorem_c->branch, 1);
  EXPECT_EQ(v.theorem_c->outcome, Outcome::pass);
  EXPECT_EQ(v.outcome(), Outcome::pass);
  ASSERT_TRUE(v.disconnected);
  EXPECT_NE(v.disconnected->outcome, Outcome::fail);
}

TEST(Checkers, LemmaChecksOnSmallGroups) {
  for (PermGroup g : {symmetric_group(4), gl23(), extraspecial(3, 1, "exponent_p"), direct_product(alternating_group(4), cyclic_group(5)),
                      affine_semilinear(SemilinearGroup::gamma(2, 3)), affine_semilinear(SemilinearGroup::gamma(3, 2))}) {
    GroupContext c(g);
    for (const auto& r : {check_palfy_condition(c), check_diameter_bound(c), check_zuccari(c), check_brodkey(c),
                          check_unique_noncentral(c), check_lemma_u(c), check_ito_michler(c), check_linear_count(c)})
      EXPECT_NE(r.outcome, Outcome::fail) << r.name << " on order " << g.order() << ": " << r.reason;
  }
}

TEST(Checkers, NonsolvableGroupsAreNotClassified) {
  GroupContext c(alternating_group(5));
  ClassificationVerdict v = analyze_group(c);
  EXPECT_NE(v.outcome(), Outcome::fail);
  EXPECT_FALSE(v.theorem_c && v.theorem_c->outcome == Outcome::pass);
}

TEST(Checkers, LewisGraphOnly) {
  DegreeMultiset d = clifford_degrees(lewis_spec());
  ClassificationVerdict v = analyze_degrees(d);
  EXPECT_EQ(v.diameter, std::optional<std::size_t>(3));
  ASSERT_TRUE(v.pi1 && v.pi2);
  EXPECT_EQ(*v.pi1, (std::vector<u64>{2, 7, 31, 151}));
  EXPECT_EQ(*v.pi2, (std::vector<u64>{3, 5}));
  ClassificationVerdict s = analyze_spec(lewis_spec(), d);
  ASSERT_TRUE(s.theorem_a);
  EXPECT_EQ(s.theorem_a->outcome, Outcome::pass);
  EXPECT_EQ(s.theorem_a->mode, "spec");
}
