#include "test_common.hpp"

using namespace cdg;
using namespace cdgtest;

namespace {

bool trial_is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST(NumberTheory, PrimalityMatchesTrialDivision) {
  for (u64 n = 0; n < 20000; ++n) ASSERT_EQ(is_prime(n), trial_is_prime(n)) << n;
  EXPECT_TRUE(is_prime(2147483647));
  EXPECT_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  EXPECT_TRUE(is_prime(18446744073709551557ull));
}

TEST(NumberTheory, FactorizationRebuildsN) {
  for (u64 n = 1; n < 5000; ++n) {
    u64 prod = 1;
    for (const auto& [p, e] : factorize(n)) {
      ASSERT_TRUE(trial_is_prime(p));
      for (unsigned i = 0; i < e; ++i) prod *= p;
    }
    ASSERT_EQ(prod, n);
    ASSERT_EQ(prime_divisors(n), trial_primes(n));
  }
  std::vector<u128> f;
  detail::factor_into((u128{1} << 64) + 1, f);
  std::sort(f.begin(), f.end());
  ASSERT_EQ(f.size(), 2u);
  EXPECT_EQ(static_cast<u64>(f[0]), 274177u);
  EXPECT_EQ(static_cast<u64>(f[1]), 67280421310721ull);
}

TEST(NumberTheory, PhiAndOrderAgainstCounting) {
  for (u64 n = 1; n < 300; ++n) {
    u64 phi = 0;
    for (u64 k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
    ASSERT_EQ(euler_phi(n), phi) << n;
    for (u64 a = 1; a < n && n > 1; ++a) {
      if (std::gcd(a, n) != 1) continue;
      u64 k = 1, x = a % n;
      while (x != 1 % n) x = x * a % n, ++k;
      ASSERT_EQ(multiplicative_order(a, n), k) << a << " mod " << n;
    }
  }
  EXPECT_EQ(divisors(60), (std::vector<u64>{1, 2, 3, 4, 5, 6, 10, 12, 15, 20, 30, 60}));
  EXPECT_EQ(p_part(360, 2), 8u);
  EXPECT_TRUE(is_prime_power(343));
  EXPECT_FALSE(is_prime_power(12));
}

TEST(NumberTheory, CyclotomicValuesMultiplyToPowerMinusOne) {
  for (u64 a = 2; a <= 6; ++a)
    for (u64 n = 1; n <= 30; ++n) {
      BigInt prod = 1;
      for (u64 d : divisors(n)) prod *= cyclotomic_value(a, d);
      ASSERT_EQ(prod, big_pow(a, static_cast<unsigned>(n)) - 1) << a << "^" << n;
    }
}

TEST(NumberTheory, PrimitivePrimeDivisors) {
  EXPECT_EQ(primitive_prime_divisors(2, 11), (std::vector<BigInt>{23, 89}));
  EXPECT_EQ(primitive_prime_divisors(2, 15), (std::vector<BigInt>{151}));
  EXPECT_EQ(primitive_prime_divisors(2, 5), (std::vector<BigInt>{31}));
  EXPECT_FALSE(zsigmondy_ppd(2, 6));
  EXPECT_FALSE(zsigmondy_ppd(3, 2));
  EXPECT_FALSE(zsigmondy_ppd(2, 1));
  EXPECT_EQ(*zsigmondy_ppd(2, 4), 5);
  // 2^127 - 1 is a Mersenne prime, so it is its own primitive prime divisor.
  EXPECT_EQ(primitive_prime_divisors(2, 127), (std::vector<BigInt>{big_pow(2, 127) - 1}));
}

TEST(NumberTheory, PrimitivePartAgreesWithGcdStripping) {
  for (u64 a = 2; a <= 12; ++a)
    for (u64 n = 1; n <= 20; ++n) ASSERT_EQ(detail::primitive_part(a, n), brute_primitive_part(a, n)) << a << "," << n;
}

TEST(GaloisField, TablesAreConsistent) {
  for (auto [p, n] : std::vector<std::pair<u64, unsigned>>{{2, 4}, {3, 3}, {5, 2}, {7, 1}, {2, 8}}) {
    GaloisField f(p, n);
    const u64 q = f.order();
    ASSERT_EQ(q, ipow(p, n));
    ASSERT_EQ(f.element_order(f.generator()), q - 1);
    for (u64 k = 0; k < q - 1; ++k) ASSERT_EQ(f.log(f.exp(k)), k);
    std::map<unsigned, u64> by_degree;
    for (std::uint32_t c = 0; c < q; ++c) {
      FieldElement x{c};
      ASSERT_EQ(f.frobenius(x, n), x);
      ASSERT_EQ(f.add(x, f.neg(x)), f.zero());
      if (c) {
        ASSERT_EQ(f.mul(x, f.inv(x)), f.one());
      }
      // Frobenius is a ring homomorphism.
      FieldElement y = f.exp(c % (q - 1) + 3);
      ASSERT_EQ(f.frobenius(f.mul(x, y), 1), f.mul(f.frobenius(x, 1), f.frobenius(y, 1)));
      ASSERT_EQ(f.frobenius(f.add(x, y), 1), f.add(f.frobenius(x, 1), f.frobenius(y, 1)));
      by_degree[f.degree_of(x)]++;
    }
    // The number of elements of exact degree d over GF(p) is sum_{e|d} mu(d/e) p^e.
    for (auto [d, cnt] : by_degree) {
      long long want = 0;
      for (u64 e : divisors(d)) want += moebius(d / e) * static_cast<long long>(ipow(p, static_cast<unsigned>(e)));
      ASSERT_EQ(static_cast<long long>(cnt), want) << "degree " << d;
    }
  }
}

TEST(GaloisField, RejectsReducibleModulus) {
  FieldSpec s = default_field_spec(2, 2);
  s.modulus = {1, 0, 1};  // x^2 + 1 = (x + 1)^2
  EXPECT_THROW(GaloisField bad(s), std::invalid_argument);
}

TEST(LinearAlgebra, RankInverseNullspace) {
  PrimeField f{5};
  Matrix<PrimeField> m(f, 3, 3);
  const u64 a[3][3] = {{1, 2, 3}, {0, 1, 4}, {5, 6, 0}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = a[i][j] % 5;
  ASSERT_EQ(m.rank(), 3u);
  auto inv = m.inverse();
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix<PrimeField>::identity(f, 3));

  Matrix<PrimeField> s(f, 3, 3);
  for (int j = 0; j < 3; ++j) s(0, j) = 1, s(1, j) = 2, s(2, j) = static_cast<u64>(j);
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_FALSE(s.inverse());
  auto ns = s.right_nullspace();
  ASSERT_EQ(ns.rows(), 1u);
  for (int i = 0; i < 3; ++i) {
    u64 dot = 0;
    for (int j = 0; j < 3; ++j) dot = f.add(dot, f.mul(s(i, j), ns(0, j)));
    EXPECT_EQ(dot, 0u);
  }
}

TEST(LinearAlgebra, CayleyHamilton) {
  PrimeField f{7};
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    Matrix<PrimeField> m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = rng() % 7;
    auto cp = m.charpoly();
    ASSERT_EQ(cp.size(), n + 1);
    ASSERT_EQ(cp.back(), 1u);
    Matrix<PrimeField> acc(f, n, n), pw = Matrix<PrimeField>::identity(f, n);
    for (u64 c : cp) {
      acc = acc + pw.scaled(c);
      pw = pw * m;
    }
    ASSERT_TRUE(acc.is_zero());
  }
}

TEST(LinearAlgebra, PolynomialRoots) {
  // (x - 1)(x - 3)(x - 4)(x^2 + 1) over GF(11); x^2 + 1 has no roots since 11 = 3 mod 4.
  polyf::P f = {1};
  for (u64 r : {1, 3, 4}) f = polyf::mul(f, {(11 - r) % 11, 1}, 11);
  f = polyf::mul(f, {1, 0, 1}, 11);
  auto r = polyf::roots(f, 11, 5);
  std::sort(r.begin(), r.end());
  EXPECT_EQ(r, (std::vector<u64>{1, 3, 4}));
}
