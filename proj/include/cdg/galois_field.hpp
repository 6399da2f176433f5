#pragma once

// GF(p^n) with a deterministic modulus, Zech-style log tables and Frobenius.

#include <cmath>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "limits.hpp"
#include "numtheory.hpp"

namespace cdg {

namespace poly {

using Coeffs = std::vector<u64>;  // low-to-high, over GF(p)

inline void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Coeffs& f, u64 p) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  const std::size_t n = f.size() - 1;  // f monic
  for (std::size_t i = prod.size(); i-- > n;) {
    u64 c = prod[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) prod[i - n + j] = (prod[i - n + j] + (p - c) * f[j]) % p;
  }
  trim(prod);
  return prod;
}

inline Coeffs pow_mod(Coeffs base, u64 e, const Coeffs& f, u64 p) {
  Coeffs r{1};
  while (e) {
    if (e & 1) r = mul_mod(r, base, f, p);
    base = mul_mod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

inline Coeffs sub(Coeffs a, const Coeffs& b, u64 p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Coeffs rem(Coeffs a, const Coeffs& b, u64 p) {
  trim(a);
  const u64 lead_inv = cdg::pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    u64 c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + (p - c) * b[j]) % p;
    trim(a);
  }
  return a;
}

inline Coeffs gcd(Coeffs a, Coeffs b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Rabin's irreducibility test for a monic polynomial of degree n over GF(p).
inline bool is_irreducible(const Coeffs& f, u64 p) {
  const u64 n = f.size() - 1;
  if (n == 0) return false;
  if (n == 1) return true;
  const Coeffs x{0, 1};
  auto x_pow_pk = [&](u64 k) {
    Coeffs r = x;
    for (u64 i = 0; i < k; ++i) r = pow_mod(r, p, f, p);
    return r;
  };
  if (sub(x_pow_pk(n), x, p) != Coeffs{}) return false;
  for (u64 q : prime_divisors(n)) {
    Coeffs g = gcd(f, sub(x_pow_pk(n / q), x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace poly

/// Description of GF(p^n): the prime, the degree and a monic irreducible modulus.
struct FieldSpec {
  u64 p = 2;
  unsigned n = 1;
  poly::Coeffs modulus;  // low-to-high, size n + 1, monic

  u64 order() const { return ipow(p, n); }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// The monic irreducible of degree n whose lower coefficients, read as a base-p number
/// (constant term least significant), are smallest.
inline FieldSpec default_field_spec(u64 p, unsigned n) {
  if (!is_prime(p)) throw std::invalid_argument("field: p = " + std::to_string(p) + " is not prime");
  if (n == 0) throw std::invalid_argument("field: degree must be positive");
  const u64 count = checked_pow(p, n);
  for (u64 code = 0; code < count; ++code) {
    poly::Coeffs f(n + 1, 0);
    u64 c = code;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = c % p;
      c /= p;
    }
    f[n] = 1;
    if (poly::is_irreducible(f, p)) return FieldSpec{p, n, f};
  }
  throw std::logic_error("no irreducible polynomial found");
}

struct FieldElement {
  std::uint32_t code = 0;  // base-p digits are the polynomial coefficients
  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// x -> x^(p^power).
struct GaloisAuto {
  unsigned power = 0;
  friend bool operator==(const GaloisAuto&, const GaloisAuto&) = default;
};

class GaloisField {
 public:
  using Elem = FieldElement;

  GaloisField(u64 p, unsigned n) : GaloisField(default_field_spec(p, n)) {}

  explicit GaloisField(FieldSpec spec) : spec_(std::move(spec)) {
    if (spec_.modulus.size() != spec_.n + 1 || spec_.modulus.back() != 1)
      throw std::invalid_argument("field: modulus must be monic of degree n");
    if (!poly::is_irreducible(spec_.modulus, spec_.p))
      throw std::invalid_argument("field: modulus is not irreducible");
    q_ = checked_pow(spec_.p, spec_.n);
    require_within("max_field_order", limits::kMaxFieldOrder, q_);
    build_tables();
  }

  const FieldSpec& spec() const { return spec_; }
  u64 p() const { return spec_.p; }
  unsigned n() const { return spec_.n; }
  u64 order() const { return q_; }
  u64 unit_count() const { return q_ - 1; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  /// The primitive element used for discrete logs.
  Elem generator() const { return {exp_[1]}; }
  Elem from_prime_field(u64 c) const { return {static_cast<std::uint32_t>(c % spec_.p)}; }

  std::vector<u64> digits(Elem a) const {
    std::vector<u64> d(spec_.n);
    u64 c = a.code;
    for (unsigned i = 0; i < spec_.n; ++i) {
      d[i] = c % spec_.p;
      c /= spec_.p;
    }
    return d;
  }
  Elem from_digits(const std::vector<u64>& d) const {
    u64 c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * spec_.p + d[i] % spec_.p;
    return {static_cast<std::uint32_t>(c)};
  }

  Elem add(Elem a, Elem b) const {
    if (spec_.p == 2) return {a.code ^ b.code};
    std::uint32_t r = 0, scale = 1, x = a.code, y = b.code;
    for (unsigned i = 0; i < spec_.n; ++i) {
      r += static_cast<std::uint32_t>(((x % spec_.p) + (y % spec_.p)) % spec_.p) * scale;
      x /= static_cast<std::uint32_t>(spec_.p);
      y /= static_cast<std::uint32_t>(spec_.p);
      scale *= static_cast<std::uint32_t>(spec_.p);
    }
    return {r};
  }
  Elem neg(Elem a) const {
    if (spec_.p == 2) return a;
    std::uint32_t r = 0, scale = 1, x = a.code;
    for (unsigned i = 0; i < spec_.n; ++i) {
      r += static_cast<std::uint32_t>((spec_.p - x % spec_.p) % spec_.p) * scale;
      x /= static_cast<std::uint32_t>(spec_.p);
      scale *= static_cast<std::uint32_t>(spec_.p);
    }
    return {r};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.code == 0 || b.code == 0) return zero();
    u64 s = static_cast<u64>(log_[a.code]) + log_[b.code];
    if (s >= q_ - 1) s -= q_ - 1;
    return {exp_[s]};
  }
  Elem inv(Elem a) const {
    if (a.code == 0) throw std::domain_error("field: inverse of zero");
    u64 l = log_[a.code];
    return {exp_[l == 0 ? 0 : q_ - 1 - l]};
  }
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, BigInt e) const {
    if (a.code == 0) return e == 0 ? one() : zero();
    BigInt m = e % (q_ - 1);
    if (m < 0) m += q_ - 1;
    u64 l = static_cast<u64>(static_cast<u128>(log_[a.code]) * static_cast<u64>(m) % (q_ - 1));
    return {exp_[l]};
  }
  Elem pow(Elem a, long long e) const { return pow(a, BigInt(e)); }

  /// Discrete log to base generator(); a must be nonzero.
  u64 log(Elem a) const {
    if (a.code == 0) throw std::domain_error("field: log of zero");
    return log_[a.code];
  }
  Elem exp(u64 k) const { return {exp_[k % (q_ - 1)]}; }

  Elem frobenius(Elem a, unsigned k) const {
    if (a.code == 0) return a;
    u64 pk = pow_mod(spec_.p, k % spec_.n, q_ - 1);
    return {exp_[mul_mod(log_[a.code], pk, q_ - 1)]};
  }
  Elem apply(GaloisAuto s, Elem a) const { return frobenius(a, s.power); }

  /// Multiplicative order of a nonzero element.
  u64 element_order(Elem a) const {
    u64 l = log(a);
    return (q_ - 1) / std::gcd(l, q_ - 1);
  }

  /// Degree over GF(p) of the smallest subfield containing a.
  unsigned degree_of(Elem a) const {
    for (unsigned d = 1; d <= spec_.n; ++d) {
      if (spec_.n % d == 0 && frobenius(a, d) == a) return d;
    }
    return spec_.n;
  }

 private:
  void build_tables() {
    const auto& f = spec_.modulus;
    const u64 p = spec_.p;
    const unsigned n = spec_.n;
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
      exp_[0] = 1;
      return;
    }
    // Smallest code (in base-p order) that is a primitive element; low-degree candidates
    // come first, which keeps the table fill cheap.
    std::vector<u64> ord_primes = prime_divisors(q_ - 1);
    for (u64 code = (n == 1 ? 2 : p); code < q_; ++code) {
      poly::Coeffs g = digits_of(code);
      poly::trim(g);
      bool primitive = true;
      for (u64 r : ord_primes) {
        if (poly::pow_mod(g, (q_ - 1) / r, f, p) == poly::Coeffs{1}) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        fill_tables(f, p, n, g);
        return;
      }
    }
    throw std::logic_error("field: no primitive element found");
  }

  poly::Coeffs digits_of(u64 code) const {
    poly::Coeffs d(spec_.n, 0);
    for (unsigned i = 0; i < spec_.n; ++i) {
      d[i] = code % spec_.p;
      code /= spec_.p;
    }
    return d;
  }

  void fill_tables(const poly::Coeffs& f, u64 p, unsigned n, const poly::Coeffs& g) {
    std::vector<u64> cur(n, 0), next(n + g.size(), 0);
    cur[0] = 1;
    for (u64 k = 0; k < q_ - 1; ++k) {
      u64 code = 0;
      for (std::size_t i = n; i-- > 0;) code = code * p + cur[i];
      exp_[k] = static_cast<std::uint32_t>(code);
      log_[code] = static_cast<std::uint32_t>(k);
      std::fill(next.begin(), next.end(), 0);
      for (unsigned i = 0; i < n; ++i) {
        if (cur[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) next[i + j] = (next[i + j] + cur[i] * g[j]) % p;
      }
      for (std::size_t i = next.size(); i-- > n;) {
        u64 c = next[i];
        if (c == 0) continue;
        for (unsigned j = 0; j <= n; ++j) next[i - n + j] = (next[i - n + j] + (p - c) * f[j]) % p;
      }
      for (unsigned i = 0; i < n; ++i) cur[i] = next[i];
    }
  }

  FieldSpec spec_;
  u64 q_ = 0;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

using FieldPtr = std::shared_ptr<const GaloisField>;

inline FieldPtr make_field(u64 p, unsigned n) { return std::make_shared<const GaloisField>(p, n); }

/// {x^(p^k) : 0 <= k < n}; its size divides n.
inline std::set<FieldElement> frobenius_orbit(const GaloisField& field, FieldElement x) {
  if (x.code == 0) throw std::invalid_argument("frobenius_orbit: zero element");
  std::set<FieldElement> orbit;
  for (unsigned k = 0; k < field.n(); ++k) orbit.insert(field.frobenius(x, k));
  return orbit;
}

}  // namespace cdg
