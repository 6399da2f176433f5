#pragma once

// Subgroups of the semilinear group Γ(p^n) = {x -> a x^(p^k)}, stored structurally.
//
// Elements are pairs (t, k) meaning x -> w^t x^(p^k) for the fixed primitive
// element w of GF(p^n). A subgroup H is determined by
//   m  = |X0|, X0 = H ∩ Γ0 (the multiplications by the m-th roots of unity),
//   g  = the Galois step (the image of H in Gal is generated by x -> x^(p^g)),
//   t0 = multiplier of a chosen element (t0, g), reduced modulo (p^n - 1)/m,
// subject to the closure condition that (t0, g)^(n/g) lies in X0.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "galois_field.hpp"
#include "limits.hpp"
#include "numtheory.hpp"

namespace cdg {

struct SemiElem {
  u64 t = 0;       // multiplier exponent (discrete log base w)
  unsigned k = 0;  // Frobenius power
  friend auto operator<=>(const SemiElem&, const SemiElem&) = default;
};

class SemilinearGroup {
 public:
  /// Validates divisibility and closure.
  SemilinearGroup(u64 p, unsigned n, u64 mult_order, unsigned galois_step, u64 twist)
      : p_(p), n_(n), m_(mult_order), g_(galois_step) {
    if (!is_prime(p)) throw std::invalid_argument("semilinear: p is not prime");
    if (n == 0) throw std::invalid_argument("semilinear: n must be positive");
    q_ = checked_pow(p, n);
    require_within("max_field_order", limits::kMaxFieldOrder, q_);
    if (m_ == 0 || (q_ - 1) % m_ != 0) throw std::invalid_argument("semilinear: |X0| must divide p^n - 1");
    if (g_ == 0 || n_ % g_ != 0) throw std::invalid_argument("semilinear: Galois step must divide n");
    step_ = (q_ - 1) / m_;
    t0_ = twist % step_;
    if (g_ == n_) t0_ = 0;
    if (norm_power(n_ / g_) % step_ != 0)
      throw std::invalid_argument("semilinear: (t0, g)^(n/g) does not lie in X0; not a subgroup");
  }

  static SemilinearGroup gamma(u64 p, unsigned n) {
    u64 q = checked_pow(p, n);
    return SemilinearGroup(p, n, q - 1, 1, 0);
  }
  static SemilinearGroup gamma0(u64 p, unsigned n) {
    u64 q = checked_pow(p, n);
    return SemilinearGroup(p, n, q - 1, n, 0);
  }
  /// Γ0-part of order m only (a cyclic group of field multiplications).
  static SemilinearGroup multiplications(u64 p, unsigned n, u64 m) { return SemilinearGroup(p, n, m, n, 0); }
  /// The Galois group of order n / step, generated by x -> x^(p^step).
  static SemilinearGroup galois(u64 p, unsigned n, unsigned step = 1) { return SemilinearGroup(p, n, 1, step, 0); }

  /// The subgroup generated by arbitrary elements, by closure.
  static SemilinearGroup generated(u64 p, unsigned n, const std::vector<SemiElem>& gens) {
    const u64 q = checked_pow(p, n);
    require_within("max_field_order", limits::kMaxFieldOrder, q);
    SemilinearGroup ambient = gamma(p, n);
    require_within("max_semilinear_closure", limits::kMaxSemilinearClosure, (q - 1) * n);
    std::vector<char> seen((q - 1) * n, 0);
    std::vector<SemiElem> queue{SemiElem{0, 0}};
    seen[0] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& s : gens) {
        SemiElem e = ambient.compose(queue[head], {s.t % (q - 1), s.k % n});
        std::size_t key = e.k * (q - 1) + e.t;
        if (!seen[key]) {
          seen[key] = 1;
          queue.push_back(e);
        }
      }
    }
    u64 m = 0;
    unsigned g = n;
    for (const auto& e : queue) {
      if (e.k == 0) ++m;
      if (e.k != 0) g = std::gcd(g, e.k);
    }
    u64 t0 = 0;
    for (const auto& e : queue) {
      if (e.k == g % n) {
        t0 = e.t;
        break;
      }
    }
    return SemilinearGroup(p, n, m, g, g == n ? 0 : t0);
  }

  u64 p() const { return p_; }
  unsigned n() const { return n_; }
  u64 field_order() const { return q_; }
  u64 units() const { return q_ - 1; }
  u64 mult_order() const { return m_; }
  unsigned galois_step() const { return g_; }
  u64 twist() const { return t0_; }
  u64 galois_order() const { return n_ / g_; }
  u64 order() const { return m_ * (n_ / g_); }
  FieldSpec field_spec() const { return default_field_spec(p_, n_); }

  SemiElem x0_generator() const { return {step_ % (q_ - 1), 0}; }
  SemiElem top_generator() const { return {t0_, g_ % n_}; }
  std::vector<SemiElem> generators() const {
    std::vector<SemiElem> gens;
    if (m_ > 1) gens.push_back(x0_generator());
    if (g_ != n_) gens.push_back(top_generator());
    return gens;
  }

  /// Apply a then b.
  SemiElem compose(const SemiElem& a, const SemiElem& b) const {
    u64 pk = pow_mod(p_, b.k, q_ - 1 == 0 ? 1 : q_ - 1);
    u64 t = q_ == 2 ? 0 : (b.t + mul_mod(a.t, pk, q_ - 1)) % (q_ - 1);
    return {t, (a.k + b.k) % n_};
  }
  SemiElem inverse(const SemiElem& a) const {
    // (t, k)^-1 = (-t p^(n-k), n-k)
    unsigned k = (n_ - a.k) % n_;
    if (q_ == 2) return {0, k};
    u64 t = mul_mod((q_ - 1 - a.t % (q_ - 1)) % (q_ - 1), pow_mod(p_, k, q_ - 1), q_ - 1);
    return {t, k};
  }
  SemiElem power(SemiElem a, u64 e) const {
    SemiElem r{0, 0};
    while (e) {
      if (e & 1) r = compose(r, a);
      a = compose(a, a);
      e >>= 1;
    }
    return r;
  }
  /// b^-1 a b
  SemiElem conj(const SemiElem& a, const SemiElem& b) const { return compose(compose(inverse(b), a), b); }

  u64 element_order(const SemiElem& a) const {
    u64 o = 1;
    SemiElem x = a;
    while (!(x.t == 0 && x.k == 0)) {
      x = compose(x, a);
      ++o;
    }
    return o;
  }

  bool contains(const SemiElem& e) const {
    if (e.k % g_ != 0) return false;
    u64 j = e.k / g_;
    u64 tj = q_ == 2 ? 0 : norm_power(j);
    if (q_ == 2) return true;
    return (e.t + (q_ - 1) - tj) % (q_ - 1) % step_ == 0;
  }

  /// All elements, ordered by (k, t).
  std::vector<SemiElem> elements() const {
    require_within("max_semilinear_closure", limits::kMaxSemilinearClosure, order());
    std::vector<SemiElem> out;
    out.reserve(order());
    for (u64 j = 0; j < n_ / g_; ++j) {
      u64 tj = q_ == 2 ? 0 : norm_power(j);
      for (u64 i = 0; i < m_; ++i) {
        u64 t = q_ == 2 ? 0 : (tj + i * step_) % (q_ - 1);
        out.push_back({t, static_cast<unsigned>(j * g_)});
      }
    }
    std::sort(out.begin(), out.end(), [](const SemiElem& a, const SemiElem& b) {
      return a.k != b.k ? a.k < b.k : a.t < b.t;
    });
    return out;
  }

  /// Image of the nonzero element w^u under e, as a discrete log.
  u64 act_dlog(const SemiElem& e, u64 u) const {
    if (q_ == 2) return 0;
    return (e.t + mul_mod(u, pow_mod(p_, e.k, q_ - 1), q_ - 1)) % (q_ - 1);
  }

  /// Pairs (multiplier exponent, Galois power) generating H modulo X0.
  std::vector<std::pair<u64, GaloisAuto>> galois_part() const {
    if (g_ == n_) return {};
    return {{t0_, GaloisAuto{g_}}};
  }

  std::string describe() const {
    return "H <= Gamma(" + std::to_string(p_) + "^" + std::to_string(n_) + "), |X0| = " + std::to_string(m_) +
           ", Galois step " + std::to_string(g_) + ", twist " + std::to_string(t0_) + ", order " +
           std::to_string(order());
  }

  friend bool operator==(const SemilinearGroup& a, const SemilinearGroup& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.m_ == b.m_ && a.g_ == b.g_ && a.t0_ == b.t0_;
  }

 private:
  // Multiplier of (t0, g)^j: t0 (1 + p^g + ... + p^((j-1)g)).
  u64 norm_power(u64 j) const {
    if (q_ == 2) return 0;
    u64 s = 0, pg = pow_mod(p_, g_, q_ - 1), cur = 1;
    for (u64 i = 0; i < j; ++i) {
      s = (s + cur) % (q_ - 1);
      cur = mul_mod(cur, pg, q_ - 1);
    }
    return mul_mod(t0_, s, q_ - 1);
  }

  u64 p_;
  unsigned n_;
  u64 q_ = 0;
  u64 m_;
  unsigned g_;
  u64 step_ = 1;
  u64 t0_ = 0;
};

struct OrbitInfo {
  u64 size = 0;
  u64 stabilizer_order = 0;
  u64 representative = 0;  // discrete log of the least element (by dlog) of the orbit
};

/// Orbits of H on an H-set of nonzero field elements given by discrete logs, where
/// h = (t, k) acts by u -> shift * t + u p^k. shift = 1 is the natural action;
/// shift = -e (mod p^n - 1) is the dual of a layer with multiplier exponent e.
inline std::vector<OrbitInfo> orbits_on_dlogs(const SemilinearGroup& h, u64 shift) {
  const u64 q1 = h.units();
  if (q1 == 1) return {OrbitInfo{1, h.order(), 0}};
  std::vector<std::uint32_t> orbit_id(q1, UINT32_MAX);
  std::vector<OrbitInfo> out;
  const auto gens = h.generators();
  std::vector<u64> pk;
  for (const auto& s : gens) pk.push_back(pow_mod(h.p(), s.k, q1));
  std::vector<u64> queue;
  for (u64 start = 0; start < q1; ++start) {
    if (orbit_id[start] != UINT32_MAX) continue;
    const auto id = static_cast<std::uint32_t>(out.size());
    queue.clear();
    queue.push_back(start);
    orbit_id[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      u64 u = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        u64 v = (mul_mod(shift % q1, gens[i].t, q1) + mul_mod(u, pk[i], q1)) % q1;
        if (orbit_id[v] == UINT32_MAX) {
          orbit_id[v] = id;
          queue.push_back(v);
        }
      }
    }
    out.push_back({queue.size(), h.order() / queue.size(), start});
  }
  return out;
}

inline std::vector<OrbitInfo> orbits_on_nonzero(const SemilinearGroup& h) { return orbits_on_dlogs(h, 1); }

/// Stabilizer of the dlog u under the shifted action, as a semilinear subgroup.
inline SemilinearGroup dlog_stabilizer(const SemilinearGroup& h, u64 shift, u64 u) {
  const u64 q1 = h.units();
  std::vector<SemiElem> stab;
  for (const auto& e : h.elements()) {
    u64 v = q1 == 1 ? 0 : (mul_mod(shift % q1, e.t, q1) + mul_mod(u, pow_mod(h.p(), e.k, q1), q1)) % q1;
    if (v == u) stab.push_back(e);
  }
  u64 m = 0;
  unsigned g = h.n();
  for (const auto& e : stab) {
    if (e.k == 0) ++m;
    else g = std::gcd(g, e.k);
  }
  u64 t0 = 0;
  for (const auto& e : stab)
    if (e.k == g % h.n()) {
      t0 = e.t;
      break;
    }
  return SemilinearGroup(h.p(), h.n(), m, g, g == h.n() ? 0 : t0);
}

/// Character degrees of a semilinear group H = K.C (K = X0 cyclic, H/K cyclic):
/// each orbit of size s of the conjugation action on the characters of K
/// contributes c/s characters of degree s, where c = |H/K|.
inline std::map<u64, u64> semilinear_degrees(const SemilinearGroup& h) {
  const u64 kappa = h.mult_order();
  const u64 c = h.galois_order();
  std::map<u64, u64> out;
  if (kappa == 1) {
    out[1] = c;
    return out;
  }
  // The top generator conjugates w^t to w^(t p^g) on X0, hence j -> j p^g on the dual.
  const u64 mult = pow_mod(h.p(), h.galois_step(), kappa);
  std::vector<char> seen(kappa, 0);
  for (u64 j = 0; j < kappa; ++j) {
    if (seen[j]) continue;
    u64 s = 0;
    for (u64 x = j; !seen[x]; x = mul_mod(x, mult, kappa)) {
      seen[x] = 1;
      ++s;
    }
    out[s] += c / s;
  }
  return out;
}

}  // namespace cdg
