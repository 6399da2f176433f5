#pragma once

// Integer arithmetic used throughout: primality, factorization, orders,
// cyclotomic values and primitive prime divisors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cdg {

using BigInt = boost::multiprecision::cpp_int;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Deterministic Miller-Rabin for the full 64-bit range.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    u64 x = pow_mod(a % n, d, n);
    if (a % n == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace detail {

// 128-bit Montgomery arithmetic for odd moduli below 2^127.
class Montgomery128 {
 public:
  explicit Montgomery128(u128 n) : n_(n) {
    u128 inv = n;  // correct to 3 bits for odd n
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
    neg_inv_ = -inv;
    r2_ = compute_r2();
  }

  u128 modulus() const { return n_; }
  u128 to_mont(u128 a) const { return mul(a % n_, r2_); }
  u128 from_mont(u128 a) const { return reduce(0, a); }

  u128 mul(u128 a, u128 b) const {
    u128 hi, lo;
    mul_full(a, b, hi, lo);
    return reduce(hi, lo);
  }
  u128 add(u128 a, u128 b) const {
    u128 s = a + b;
    return s >= n_ ? s - n_ : s;
  }
  u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + n_ - b; }

 private:
  static void mul_full(u128 a, u128 b, u128& hi, u128& lo) {
    const u128 mask = ~static_cast<u64>(0);
    u128 a0 = a & mask, a1 = a >> 64, b0 = b & mask, b1 = b >> 64;
    u128 p00 = a0 * b0, p01 = a0 * b1, p10 = a1 * b0, p11 = a1 * b1;
    u128 mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
    lo = (p00 & mask) | (mid << 64);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  }

  // (hi:lo) * 2^-128 mod n, valid for hi:lo < n * 2^128.
  u128 reduce(u128 hi, u128 lo) const {
    u128 m = lo * neg_inv_;
    u128 mh, ml;
    mul_full(m, n_, mh, ml);
    u128 carry = (lo + ml < lo) ? 1 : 0;
    u128 t = hi + mh + carry;
    return t >= n_ ? t - n_ : t;
  }

  u128 compute_r2() const {
    // 2^256 mod n by repeated doubling of 1.
    u128 r = 1;
    for (int i = 0; i < 256; ++i) {
      r <<= 1;
      if (r >= n_) r -= n_;
    }
    return r;
  }

  u128 n_;
  u128 neg_inv_ = 0;
  u128 r2_ = 0;
};

inline u128 gcd128(u128 a, u128 b) {
  while (b) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline bool is_prime_128(u128 n) {
  if (n < 2) return false;
  if (n >> 64 == 0) return is_prime(static_cast<u64>(n));
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return false;
  }
  Montgomery128 mg(n);
  u128 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  const u128 one = mg.to_mont(1);
  const u128 minus_one = mg.to_mont(n - 1);
  // The first 20 prime bases; no known counterexample below 2^128.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull,
                41ull, 43ull, 47ull, 53ull, 59ull, 61ull, 67ull, 71ull}) {
    u128 x = one, b = mg.to_mont(a);
    for (u128 e = d; e; e >>= 1) {
      if (e & 1) x = mg.mul(x, b);
      b = mg.mul(b, b);
    }
    if (x == one || x == minus_one) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mg.mul(x, x);
      if (x == minus_one) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of odd composite n.
inline u128 pollard_brent(u128 n) {
  Montgomery128 mg(n);
  for (u64 c = 1;; ++c) {
    const u128 cm = mg.to_mont(c);
    u128 y = mg.to_mont(2), x = y, q = mg.to_mont(1), ys = y, g = 1;
    const u64 batch = 128;
    for (u64 r = 1; g == 1; r <<= 1) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = mg.add(mg.mul(y, y), cm);
      for (u64 k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (u64 i = 0; i < std::min(batch, r - k); ++i) {
          y = mg.add(mg.mul(y, y), cm);
          q = mg.mul(q, x > y ? x - y : y - x);
        }
        g = gcd128(mg.from_mont(q), n);
      }
      if (r > (u64{1} << 40)) break;
    }
    if (g == n) {
      do {
        ys = mg.add(mg.mul(ys, ys), cm);
        g = gcd128(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
}

// Elliptic curve method on Montgomery curves (Suyama parametrization) with a
// baby-step/giant-step second stage. Returns a nontrivial factor of odd composite n, or 0.
class Ecm128 {
 public:
  explicit Ecm128(u128 n) : n_(n), mg_(n) {}

  u128 run(u64 sigma, u64 b1, u64 b2) {
    const u128 s = mg_.to_mont(sigma);
    const u128 u = mg_.sub(mg_.mul(s, s), mg_.to_mont(5));
    const u128 v = mg_.mul(mg_.to_mont(4), s);
    const u128 u3 = mg_.mul(mg_.mul(u, u), u);
    const u128 v3 = mg_.mul(mg_.mul(v, v), v);
    const u128 vmu = mg_.sub(v, u);
    a24_ = mg_.mul(mg_.mul(mg_.mul(vmu, vmu), vmu), mg_.add(mg_.mul(mg_.to_mont(3), u), v));
    c24_ = mg_.mul(mg_.mul(mg_.to_mont(16), u3), v);
    Point q{u3, v3};

    sieve(b2);
    for (u64 p = 2; p <= b1; ++p) {
      if (!prime_[p]) continue;
      for (u64 pk = p; pk <= b1; pk *= p) q = ladder(q, p);
    }
    u128 g = gcd128(mg_.from_mont(q.z), n_);
    if (g != 1) return g == n_ ? 0 : g;

    constexpr u64 D = 210;
    std::vector<Point> baby(D / 2);  // baby[j] = [j]q for odd j < D/2
    const Point q2 = dbl(q);
    baby[1] = q;
    if (D / 2 > 3) baby[3] = add(q2, q, q);
    for (u64 j = 5; j < D / 2; j += 2) baby[j] = add(baby[j - 2], q2, baby[j - 4]);
    std::vector<u128> baby_xz(D / 2);
    for (u64 j = 1; j < D / 2; j += 2) baby_xz[j] = mg_.mul(baby[j].x, baby[j].z);

    // Giant steps r = [mD]q, starting just below b1 (callers keep b1 >= 2D).
    const Point qd = ladder(q, D);
    u64 m = std::max<u64>(b1 / D, 2);
    Point r_prev = ladder(q, D * (m - 1));
    Point r = ladder(q, D * m);
    u128 acc = mg_.to_mont(1);
    for (; m * D <= b2 + D; ++m) {
      const u128 rxz = mg_.mul(r.x, r.z);
      for (u64 j = 1; j < D / 2; j += 2) {
        const u64 lo = m * D - j, hi = m * D + j;
        bool hit = (lo > b1 && lo <= b2 && prime_[lo]) || (hi > b1 && hi <= b2 && prime_[hi]);
        if (!hit) continue;
        // (xr - xj)(zr + zj) - xr zr + xj zj = xr zj - xj zr
        u128 t = mg_.mul(mg_.sub(r.x, baby[j].x), mg_.add(r.z, baby[j].z));
        t = mg_.add(mg_.sub(t, rxz), baby_xz[j]);
        acc = mg_.mul(acc, t);
      }
      Point next = add(r, qd, r_prev);
      r_prev = r;
      r = next;
    }
    g = gcd128(mg_.from_mont(acc), n_);
    return (g == 1 || g == n_) ? 0 : g;
  }

 private:
  struct Point {
    u128 x = 0, z = 0;
  };

  Point dbl(const Point& p) const {
    u128 t0 = mg_.sub(p.x, p.z);
    t0 = mg_.mul(t0, t0);
    u128 t1 = mg_.add(p.x, p.z);
    t1 = mg_.mul(t1, t1);
    Point r;
    r.x = mg_.mul(mg_.mul(c24_, t0), t1);
    u128 t2 = mg_.sub(t1, t0);
    r.z = mg_.mul(t2, mg_.add(mg_.mul(c24_, t0), mg_.mul(a24_, t2)));
    return r;
  }

  Point add(const Point& p, const Point& q, const Point& diff) const {
    u128 t0 = mg_.mul(mg_.sub(p.x, p.z), mg_.add(q.x, q.z));
    u128 t1 = mg_.mul(mg_.add(p.x, p.z), mg_.sub(q.x, q.z));
    u128 s = mg_.add(t0, t1), d = mg_.sub(t0, t1);
    return {mg_.mul(diff.z, mg_.mul(s, s)), mg_.mul(diff.x, mg_.mul(d, d))};
  }

  Point ladder(const Point& p, u64 k) const {
    if (k == 1) return p;
    Point r0 = p, r1 = dbl(p);
    for (int bit = 62 - __builtin_clzll(k); bit >= 0; --bit) {
      if ((k >> bit) & 1) {
        r0 = add(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = add(r1, r0, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }

  void sieve(u64 limit) {
    if (prime_.size() > limit) return;
    prime_.assign(limit + 1, 1);
    prime_[0] = prime_[1] = 0;
    for (u64 i = 2; i * i <= limit; ++i)
      if (prime_[i])
        for (u64 j = i * i; j <= limit; j += i) prime_[j] = 0;
  }

  u128 n_;
  Montgomery128 mg_;
  u128 a24_ = 0, c24_ = 0;
  std::vector<char> prime_;
};

inline u128 find_factor(u128 n) {
  if (n >> 64 == 0) return pollard_brent(n);
  Ecm128 ecm(n);
  u64 sigma = 6;
  for (u64 b1 = 500;; b1 = b1 * 2) {
    for (int curve = 0; curve < 16; ++curve) {
      u128 g = ecm.run(sigma++, b1, 50 * b1);
      if (g) return g;
    }
    if (b1 > 2000000) return pollard_brent(n);
  }
}

inline void factor_into(u128 n, std::vector<u128>& out) {
  if (n == 1) return;
  if (is_prime_128(n)) {
    out.push_back(n);
    return;
  }
  if ((n & 1) == 0) {
    out.push_back(2);
    factor_into(n >> 1, out);
    return;
  }
  for (u64 p = 3; p < 1000; p += 2) {
    if (n % p == 0) {
      out.push_back(p);
      factor_into(n / p, out);
      return;
    }
  }
  u128 d = find_factor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

inline Factorization collect(std::vector<u128> primes) {
  std::sort(primes.begin(), primes.end());
  Factorization f;
  for (u128 p : primes) {
    if (!f.empty() && f.back().prime == static_cast<u64>(p))
      ++f.back().exponent;
    else
      f.push_back({static_cast<u64>(p), 1});
  }
  return f;
}

}  // namespace detail

/// Prime factorization, primes strictly increasing. factorize(1) is empty.
inline Factorization factorize(u64 n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<u128> primes;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  for (u64 p = 17; p < 1000 && p * p <= n; p += 2) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  detail::factor_into(n, primes);
  return detail::collect(std::move(primes));
}

inline std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> ds{1};
  for (const auto& [p, e] : factorize(n)) {
    const std::size_t base = ds.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline u64 euler_phi(u64 n) {
  u64 phi = n;
  for (u64 p : prime_divisors(n)) phi = phi / p * (p - 1);
  return phi;
}

inline bool is_prime_power(u64 n) {
  return n > 1 && factorize(n).size() == 1;
}

/// Smallest k >= 1 with a^k = 1 (mod m); requires gcd(a, m) = 1.
inline u64 multiplicative_order(u64 a, u64 m) {
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
  u64 order = euler_phi(m);
  for (const auto& [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e && order % p == 0 && pow_mod(a, order / p, m) == 1; ++i) order /= p;
  }
  return order;
}

/// The p-part of n.
inline u64 p_part(u64 n, u64 p) {
  u64 r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

/// base^exp, throwing on 64-bit overflow.
inline u64 checked_pow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > ~u64{0} / base) throw std::overflow_error("checked_pow: 64-bit overflow");
    r *= base;
  }
  return r;
}

inline BigInt big_pow(u64 base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

inline int moebius(u64 n) {
  int mu = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

/// Value of the n-th cyclotomic polynomial at a.
inline BigInt cyclotomic_value(u64 a, u64 n) {
  BigInt num = 1, den = 1;
  for (u64 d : divisors(n)) {
    int mu = moebius(n / d);
    BigInt term = big_pow(a, static_cast<unsigned>(d)) - 1;
    if (mu == 1)
      num *= term;
    else if (mu == -1)
      den *= term;
  }
  return num / den;
}

namespace detail {

// Part of Phi_n(a) whose prime factors are exactly the primitive prime divisors of (a, n).
inline BigInt primitive_part(u64 a, u64 n) {
  if (a < 2 || n < 1) throw std::invalid_argument("primitive prime divisor: need a >= 2, n >= 1");
  BigInt r = cyclotomic_value(a, n);
  if (n > 1) {
    for (u64 q : prime_divisors(n)) {
      while (r % q == 0) r /= q;
    }
  }
  return r;
}

}  // namespace detail

/// Whether (a, n) has a primitive prime divisor. Exact for all inputs.
inline bool has_primitive_prime_divisor(u64 a, u64 n) {
  return detail::primitive_part(a, n) > 1;
}

namespace detail {

inline u128 to_u128(const BigInt& r) {
  u128 out = 0;
  for (int bit = static_cast<int>(boost::multiprecision::msb(r)); bit >= 0; --bit)
    out = (out << 1) | (boost::multiprecision::bit_test(r, static_cast<unsigned>(bit)) ? 1 : 0);
  return out;
}

inline BigInt from_u128(u128 v) {
  BigInt b = static_cast<u64>(v >> 64);
  b <<= 64;
  b += static_cast<u64>(v);
  return b;
}

}  // namespace detail

/// All primitive prime divisors of (a, n), increasing. Throws std::overflow_error when the
/// part of a^n - 1 left after trial division exceeds 127 bits.
inline std::vector<BigInt> primitive_prime_divisors(u64 a, u64 n) {
  BigInt r = detail::primitive_part(a, n);
  std::vector<BigInt> out;
  // Every primitive prime divisor t satisfies t = 1 (mod n).
  u64 t = n + 1;
  for (; t < (u64{1} << 20) && r > 1 && boost::multiprecision::msb(r) >= 127; t += n) {
    if (r % t == 0 && is_prime(t)) {
      out.emplace_back(t);
      while (r % t == 0) r /= t;
    }
  }
  if (r > 1) {
    if (boost::multiprecision::msb(r) >= 127)
      throw std::overflow_error("primitive_prime_divisors: cofactor of " + std::to_string(a) + "^" +
                                std::to_string(n) + " - 1 exceeds 127 bits");
    std::vector<u128> primes;
    detail::factor_into(detail::to_u128(r), primes);
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (u128 p : primes) out.push_back(detail::from_u128(p));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Smallest primitive prime divisor of (a, n), or nullopt in the Zsigmondy exceptions
/// (and for (2, 1), where a - 1 = 1).
inline std::optional<BigInt> zsigmondy_ppd(u64 a, u64 n) {
  if (!has_primitive_prime_divisor(a, n)) return std::nullopt;
  return primitive_prime_divisors(a, n).front();
}

/// Smallest prime ell = 1 (mod m) with ell > lower.
inline u64 next_prime_congruent_one(u64 m, u64 lower) {
  u64 k = lower / m + 1;
  while (!is_prime(k * m + 1)) ++k;
  return k * m + 1;
}

inline u64 isqrt_ceil(u64 n) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

}  // namespace cdg
