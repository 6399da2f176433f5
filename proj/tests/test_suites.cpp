#include "test_common.hpp"

using namespace cdg;
using namespace cdgtest;

namespace {

// Direct enumeration of (p, n, d): p^n <= bound, d | n, d has two odd prime factors,
// gcd(d, p^n - 1) = 1; order p^(3n) (p^n - 1)/(p^(n/d) - 1) d.
std::optional<BigInt> brute_minimal_order(u64 bound) {
  std::optional<BigInt> best;
  for (u64 p = 2; p <= bound; ++p) {
    if (!is_prime(p)) continue;
    u64 q = p;
    for (unsigned n = 1; q <= bound; ++n, q = q > bound / p ? bound + 1 : q * p) {
      for (unsigned d = 2; d <= n; ++d) {
        if (n % d) continue;
        auto ps = trial_primes(d);
        if (std::count_if(ps.begin(), ps.end(), [](u64 r) { return r % 2 == 1; }) < 2) continue;
        if (std::gcd<u64, u64>(d, q - 1) != 1) continue;
        BigInt Q = q;
        BigInt ord = Q * Q * Q * ((Q - 1) / (big_pow(p, n / d) - 1)) * d;
        if (!best || ord < *best) best = ord;
      }
    }
  }
  return best;
}

}  // namespace

TEST(OrderSearch, AgreesWithEnumeration) {
  for (u64 bound : {u64{1} << 14, (u64{1} << 15) - 1, u64{1} << 15, u64{1} << 16, u64{1} << 18}) {
    auto r = minimal_order_search(bound);
    auto b = brute_minimal_order(bound);
    ASSERT_EQ(r.has_value(), b.has_value()) << bound;
    if (r) {
      EXPECT_EQ(r->order, *b) << bound;
    }
  }
  auto r = minimal_order_search(u64{1} << 20);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->p, 2u);
  EXPECT_EQ(r->n, 15u);
  EXPECT_EQ(r->d, 15u);
  EXPECT_EQ(r->order, lewis_spec().group_order());
  EXPECT_TRUE(admissible_d(2, 15, 15));
  EXPECT_FALSE(admissible_d(2, 15, 5));
  EXPECT_FALSE(admissible_d(2, 30, 15));  // 15 divides 2^30 - 1 = 3^2 . 7 . 11 . 31 . 151 . 331
}

TEST(Suites, ZsigmondyBruteForce) {
  auto s = suite_zsigmondy(12, 12);
  EXPECT_EQ(s.outcome(), Outcome::pass);
  EXPECT_EQ(s.instances, 11u * 12u);
  EXPECT_TRUE(zsigmondy_statement_exception(2, 6));
  EXPECT_TRUE(zsigmondy_statement_exception(7, 2));
  EXPECT_FALSE(zsigmondy_statement_exception(5, 2));
}

TEST(Suites, FixturesPass) {
  EXPECT_EQ(suite_sl23().outcome(), Outcome::pass);
  EXPECT_EQ(suite_lewis().outcome(), Outcome::pass);
  EXPECT_EQ(suite_minimal_order(15, 20).outcome(), Outcome::pass);
  EXPECT_EQ(suite_ppd({8, 16, 32, 27}).outcome(), Outcome::pass);
  EXPECT_EQ(suite_semilinear1({4, 8, 9}, 0).outcome(), Outcome::pass);
  EXPECT_EQ(suite_modules(256).outcome(), Outcome::pass);
  EXPECT_EQ(suite_semilinear0({8, 27}, 2, 6, 5, 1).outcome(), Outcome::pass);
}

TEST(Suites, CorpusSuitesOnSmallCorpus) {
  auto rs = parse_recipes(
      "[sl23]\nkind = named\nid = sl23\n\n[s4]\nkind = named\nid = s4\n\n[aff8]\nkind = affine_semilinear\np = 2\nn = 3\n\n"
      "[d8xv4]\nkind = direct_product\nfactors = d8,v4\n\n[a5]\nkind = named\nid = a5\n");
  std::vector<CorpusEntry> es;
  for (const auto& r : rs) es.push_back(analyze_recipe(r));
  es = sorted_by_name(std::move(es));
  EXPECT_EQ(es.front().recipe.name, "a5");
  for (auto* f : {&suite_palfy, &suite_diameter, &suite_corpus_theorems, &suite_ramification}) {
    SuiteResult s = (*f)("small", es);
    EXPECT_EQ(s.outcome(), Outcome::pass) << s.suite;
  }
  SuiteResult c = suite_clifford("small", es);
  EXPECT_EQ(c.outcome(), Outcome::pass);
  EXPECT_EQ(c.instances, 1u);  // only aff8 carries a structured description
}

TEST(Suites, JsonShape) {
  SuiteResult s = suite_sl23();
  json j = s.to_json();
  for (const char* k : {"suite", "outcome", "params", "instances", "violations", "failures", "summary", "records"})
    EXPECT_TRUE(j.contains(k)) << k;
  EXPECT_EQ(j["outcome"], "pass");
  json h = report_header("verify", 5);
  EXPECT_EQ(h["schema_version"], kSchemaVersion);
  EXPECT_EQ(h["seed"], 5);
  EXPECT_EQ(fnv1a_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a_hex("a"), "af63dc4c8601ec8c");
}

TEST(Pipeline, AnalyzeNamedAndReportsAreDeterministic) {
  AnalysisResult a = analyze_named("sl23");
  AnalysisResult b = analyze_named("sl23");
  EXPECT_EQ(to_json(a, false).dump(), to_json(b, false).dump());
  EXPECT_EQ(a.outcome(), Outcome::pass);
  json j = to_json(a, false);
  EXPECT_EQ(j["graph"]["diameter"], "infinite");
  EXPECT_FALSE(j.contains("timings"));
  AnalysisResult t = analyze_named("trivial");
  EXPECT_EQ(to_json(t, false)["graph"]["diameter"], nullptr);
  AnalysisResult l = analyze_named("lewis");
  EXPECT_EQ(l.kind, "spec");
  EXPECT_EQ(to_json(l, false)["graph"]["diameter"], 3);
}
