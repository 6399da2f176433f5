#include "test_common.hpp"

using namespace cdg;
using namespace cdgtest;

namespace {

using Mult = std::map<u64, u64>;

// cd(X0 . C) for untwisted H with X0 = GF(q)^*: the complement C of order c permutes the
// characters of X0 by j -> j p^g, and an orbit of size s gives c/s characters of degree s.
Mult split_metacyclic_degrees(const SemilinearGroup& h) {
  EXPECT_EQ(h.twist(), 0u);
  EXPECT_EQ(h.mult_order(), h.units());
  const u64 q1 = h.units(), step = pow_mod(h.p(), h.galois_step(), q1), c = h.galois_order();
  std::vector<char> seen(q1, 0);
  Mult out;
  for (u64 j = 0; j < q1; ++j) {
    if (seen[j]) continue;
    u64 s = 0;
    for (u64 x = j; !seen[x]; x = mul_mod(x, step, q1)) seen[x] = 1, ++s;
    out[s] += c / s;
  }
  return out;
}

// Clifford degrees recomputed without the orbit and stabilizer routines: orbits on the dual
// of each layer by union-find over Z/(q-1), stabilizers by scanning all of H, and cd(I) by
// the Dixon oracle on I acting on discrete logs.
Mult brute_clifford(const CliffordSpec& spec) {
  const SemilinearGroup& h = spec.h;
  const u64 q1 = h.units(), p = h.p();
  const unsigned n = h.n();
  const auto els = h.elements();
  Mult out = h.order() <= limits::kMaxOracleOrder ? degree_oracle(as_permutation_group(h)).multiplicities()
                                                  : split_metacyclic_degrees(h);
  BigInt below = 1;
  for (const auto& layer : spec.layers) {
    const u64 e = layer.exponent % q1;
    const u64 shift = (q1 - e) % q1;
    auto act = [&](const SemiElem& x, u64 u) { return (mul_mod(shift, x.t, q1) + mul_mod(u, pow_mod(p, x.k, q1), q1)) % q1; };
    std::vector<u64> parent(q1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<u64(u64)> find = [&](u64 x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& g : h.generators())
      for (u64 u = 0; u < q1; ++u) parent[find(u)] = find(act(g, u));
    std::map<u64, u64> orbit_size;  // root -> size
    std::map<u64, u64> least;       // root -> least member
    for (u64 u = 0; u < q1; ++u) {
      u64 r = find(u);
      if (!orbit_size[r]++) least[r] = u;
    }
    for (const auto& [root, size] : orbit_size) {
      const u64 u = least[root];
      std::vector<Perm> gens;
      for (const auto& x : els) {
        if (act(x, u) != u) continue;
        std::vector<Point> img(q1);
        for (u64 v = 0; v < q1; ++v) img[v] = static_cast<Point>((x.t + mul_mod(v, pow_mod(p, x.k, q1), q1)) % q1);
        gens.emplace_back(std::move(img));
      }
      EXPECT_EQ(gens.size() * size, h.order());
      PermGroup stab(q1, {});
      for (const auto& g : gens) stab.add_generator(g);
      EXPECT_EQ(stab.order(), gens.size());
      auto it = layer.orbit_profiles.find(u);
      const ThetaProfile theta = it == layer.orbit_profiles.end() ? layer.theta : it->second;
      EXPECT_EQ(BigInt(theta.count) * theta.degree * theta.degree, below);
      for (const auto& [d, m] : degree_oracle(stab).multiplicities()) out[theta.degree * size * d] += m * theta.count;
    }
    below *= checked_pow(p, n);
  }
  return out;
}

}  // namespace

TEST(Clifford, LewisDegrees) {
  CliffordSpec spec = lewis_spec();
  DegreeMultiset d = clifford_degrees(spec);
  const Mult want{{1, 15},        {3, 10},        {5, 18},          {15, 2182},
                  {32767, 15},    {4194176, 30},  {153387008, 15},  {460161024, 80}};
  EXPECT_EQ(d.multiplicities(), want);
  EXPECT_EQ(spec.group_order(), BigInt("17293294803521372160"));
  EXPECT_EQ(d.sum_of_squares(), big_pow(2, 45) * (big_pow(2, 15) - 1) * 15);
}

TEST(Clifford, LewisDegreesAgainstIndependentOrbitScan) {
  EXPECT_EQ(brute_clifford(lewis_spec()), clifford_degrees(lewis_spec()).multiplicities());
}

TEST(Clifford, SmallSpecsAgainstIndependentOrbitScan) {
  for (const auto& spec : {frobenius_pairing_spec(SemilinearGroup::gamma(2, 3), 1, "f8"),
                           frobenius_pairing_spec(SemilinearGroup::gamma(2, 5), 1, "f32"),
                           CliffordSpec{"aff16", SemilinearGroup::gamma(2, 4), {LayerSpec{}}},
                           CliffordSpec{"aff25", SemilinearGroup::gamma(5, 2), {LayerSpec{}}}})
    EXPECT_EQ(brute_clifford(spec), clifford_degrees(spec).multiplicities()) << spec.name;
}

TEST(Clifford, MatchesOracleOnExplicitGroups) {
  for (const auto& h : {SemilinearGroup::gamma(2, 3), SemilinearGroup::gamma(3, 2), SemilinearGroup::gamma(2, 4),
                        SemilinearGroup::multiplications(2, 4, 5), SemilinearGroup(2, 4, 5, 2, 0)}) {
    CliffordSpec spec{"affine", h, {LayerSpec{}}};
    EXPECT_EQ(clifford_degrees(spec).multiplicities(), degree_oracle(affine_semilinear(h)).multiplicities())
        << h.describe();
  }
  for (unsigned s : {1u, 2u}) {
    SemilinearGroup h = SemilinearGroup::gamma(2, 3);
    EXPECT_EQ(clifford_degrees(frobenius_pairing_spec(h, s, "x")).multiplicities(),
              degree_oracle(frobenius_pairing(h, s)).multiplicities())
        << "s=" << s;
  }
}

TEST(Clifford, RejectsInconsistentProfiles) {
  CliffordSpec spec = lewis_spec();
  spec.layers[1].theta = {u64{1} << 7, 1};  // count * theta(1)^2 != |P : P_2|
  EXPECT_THROW(clifford_degrees(spec), CliffordError);
  CliffordSpec empty{"none", SemilinearGroup::gamma(2, 3), {}};
  EXPECT_THROW(clifford_degrees(empty), CliffordError);
  // GF(4)^* acting on GF(16) is reducible.
  CliffordSpec red{"red", SemilinearGroup::multiplications(2, 4, 3), {LayerSpec{}}};
  EXPECT_THROW(clifford_degrees(red), CliffordError);
}

TEST(Clifford, SpecFileRoundTrip) {
  CliffordSpec spec = lewis_spec();
  CliffordSpec back = parse_clifford_spec(write_clifford_spec(spec));
  EXPECT_EQ(back.h, spec.h);
  ASSERT_EQ(back.layers.size(), 3u);
  EXPECT_EQ(clifford_degrees(back).multiplicities(), clifford_degrees(spec).multiplicities());
  CliffordSpec f = frobenius_pairing_spec(SemilinearGroup::gamma(2, 5), 1, "f32");
  EXPECT_EQ(clifford_degrees(parse_clifford_spec(write_clifford_spec(f))).multiplicities(),
            clifford_degrees(f).multiplicities());
  EXPECT_EQ(read_clifford_file(data_path("lewis.spec")).h, spec.h);
  EXPECT_THROW(parse_clifford_spec("p = 2\nn = 3\n"), ParseError);
  EXPECT_THROW(parse_clifford_spec("p = 2\nn = 3\nbogus = 1\n[layer]\n"), ParseError);
  EXPECT_THROW(parse_clifford_spec("p = 2\nn = 3\n[layer]\nexponent = x\n"), ParseError);
  EXPECT_THROW(parse_clifford_spec("p = 2\nn = 4\nh.mult_order = 4\n[layer]\n"), std::invalid_argument);
}

TEST(Clifford, AffineClassB) {
  auto r = disconnected_class_b_degrees(SemilinearGroup::gamma(2, 3));
  EXPECT_EQ(r.degrees.multiplicities(), (Mult{{1, 3}, {3, 2}, {7, 3}}));
  EXPECT_EQ(r.pi_kf, (std::vector<u64>{7}));
  EXPECT_EQ(r.pi_gk, (std::vector<u64>{3}));
}
