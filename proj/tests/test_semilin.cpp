#include "test_common.hpp"

using namespace cdg;
using namespace cdgtest;

namespace {

// Orbits of H on GF(q)^* computed directly with field arithmetic: (t, k) maps x to w^t x^(p^k).
std::multiset<u64> brute_orbit_sizes(const SemilinearGroup& h) {
  GaloisField f(h.p(), h.n());
  std::vector<char> seen(f.order(), 0);
  std::multiset<u64> sizes;
  const auto els = h.elements();
  for (std::uint32_t c = 1; c < f.order(); ++c) {
    if (seen[c]) continue;
    std::set<std::uint32_t> orbit;
    for (const auto& e : els) orbit.insert(f.mul(f.exp(e.t), f.frobenius(FieldElement{c}, e.k)).code);
    for (auto x : orbit) seen[x] = 1;
    sizes.insert(orbit.size());
  }
  return sizes;
}

}  // namespace

TEST(Semilinear, GroupOrders) {
  EXPECT_EQ(SemilinearGroup::gamma(2, 4).order(), 60u);
  EXPECT_EQ(SemilinearGroup::gamma0(3, 2).order(), 8u);
  EXPECT_EQ(SemilinearGroup::gamma(2, 15).order(), 32767u * 15u);
  EXPECT_EQ(SemilinearGroup::galois(2, 6, 2).order(), 3u);
  EXPECT_THROW(SemilinearGroup(2, 4, 4, 1, 0), std::invalid_argument);  // 4 does not divide 15
  EXPECT_THROW(SemilinearGroup(2, 4, 15, 3, 0), std::invalid_argument);
  for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {3, 2}, {2, 4}})
    for (const auto& h : all_semilinear_subgroups(p, n)) {
      EXPECT_EQ(h.elements().size(), h.order()) << h.describe();
      EXPECT_EQ(as_permutation_group(h).order(), h.order()) << h.describe();
    }
}

TEST(Semilinear, OrbitsAgainstFieldArithmetic) {
  for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}})
    for (const auto& h : all_semilinear_subgroups(p, n)) {
      std::multiset<u64> got;
      u64 total = 0;
      for (const auto& o : orbits_on_nonzero(h)) {
        got.insert(o.size);
        total += o.size;
        ASSERT_EQ(o.size * o.stabilizer_order, h.order());
        ASSERT_EQ(dlog_stabilizer(h, 1, o.representative).order(), o.stabilizer_order) << h.describe();
      }
      ASSERT_EQ(total, h.units());
      ASSERT_EQ(got, brute_orbit_sizes(h)) << h.describe();
    }
}

TEST(Semilinear, DegreesMatchOracle) {
  for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}})
    for (const auto& h : all_semilinear_subgroups(p, n))
      EXPECT_EQ(semilinear_degrees(h), degree_oracle(as_permutation_group(h)).multiplicities()) << h.describe();
}

TEST(Semilinear, HallConjugateEquivalenceIsConsistent) {
  std::size_t instances = 0;
  for (u64 q : {8, 16, 27, 32, 64}) {
    auto pp = factorize(q);
    for (const auto& h : all_semilinear_subgroups(pp[0].prime, pp[0].exponent))
      for (u64 s : admissible_primes(h)) {
        auto r = check_semilinear0(h, {s});
        ++instances;
        EXPECT_TRUE(r.consistent()) << h.describe() << " s=" << s;
        EXPECT_EQ(r.a, !r.uncovered.has_value()) << h.describe() << " s=" << s;
      }
  }
  EXPECT_GT(instances, 0u);
  // Gamma(8): each of the 7 conjugates of the Frobenius subgroup fixes one nonzero vector.
  auto r = check_semilinear0(SemilinearGroup::gamma(2, 3), {3});
  EXPECT_TRUE(r.a);
  EXPECT_EQ(r.conjugates, 7u);
  EXPECT_THROW(check_semilinear0(SemilinearGroup::gamma(2, 3), {7}), std::invalid_argument);
}

TEST(Semilinear, PpdCentralizer) {
  for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 5}, {2, 4}, {3, 4}, {5, 3}})
    for (const auto& h : all_semilinear_subgroups(p, n)) {
      auto r = check_ppd_centralizer(h);
      if (r.applicable) {
        EXPECT_TRUE(r.holds) << h.describe();
      }
    }
}

TEST(Semilinear, ModuleLemmasArithmeticAgreesWithMatrices) {
  for (auto [q, m, order] : std::vector<std::tuple<u64, u64, u64>>{{2, 4, 5}, {2, 3, 7}, {3, 2, 8}, {2, 6, 9}, {4, 3, 21}}) {
    if (multiplicative_order(q, order) != m) continue;
    auto r = check_module_lemmas(q, m, order);
    EXPECT_TRUE(r.conclusions_verified) << q << "," << m << "," << order;
    if (r.matrix_checked) {
      EXPECT_TRUE(r.matrix_agrees) << q << "," << m << "," << order;
    }
  }
  auto sweep = sweep_module_lemmas(256);
  EXPECT_GT(sweep.instances, 0u);
  EXPECT_EQ(sweep.violations, 0u);
  EXPECT_EQ(sweep.disagreements, 0u);
}

TEST(GModule, IrreducibilityAndEmbedding) {
  GModule sl = module_from_flat(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}});
  EXPECT_TRUE(sl.is_irreducible());
  EXPECT_EQ(sl.as_permutation_group().order(), 24u);
  EXPECT_FALSE(embeds_in_gamma(sl).embeds);  // |SL(2,3)| = 24 > |Gamma(9)| = 16
  GModule q8 = module_from_flat(3, 2, {{0, 1, 2, 0}, {1, 1, 1, 2}});
  EXPECT_EQ(q8.as_permutation_group().order(), 8u);
  EXPECT_TRUE(embeds_in_gamma(q8).embeds);  // Q8 <= SD16 = Gamma(9)
  GModule s3 = module_from_flat(5, 2, {{0, 1, 1, 0}, {0, 4, 1, 4}});
  EXPECT_EQ(s3.as_permutation_group().order(), 6u);
  EXPECT_TRUE(embeds_in_gamma(s3).embeds);

  GaloisField f16(2, 4);
  auto red = semilinear_module(SemilinearGroup::multiplications(2, 4, 3), f16).irreducibility();
  EXPECT_FALSE(red.irreducible);  // GF(4)^* spans only a GF(4)-line
  EXPECT_TRUE(red.witness.has_value());
  EXPECT_TRUE(semilinear_module(SemilinearGroup::multiplications(2, 4, 5), f16).is_irreducible());
  EXPECT_TRUE(embeds_in_gamma(semilinear_module(SemilinearGroup::gamma(2, 4), f16)).embeds);
}

TEST(GModule, SemilinearSylowConclusion) {
  for (const auto& h : all_semilinear_subgroups(2, 4))
    for (const auto& r : check_semilinear1(semilinear_module(h, GaloisField(2, 4))))
      if (r.hypothesis && !r.exceptional) {
        EXPECT_TRUE(r.holds) << h.describe() << " s=" << r.s;
      }
}
