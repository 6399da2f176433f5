#pragma once

// Checkers for the semilinear and module lemmas, plus their parameter sweeps.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "galois_field.hpp"
#include "gmodule.hpp"
#include "group_algos.hpp"
#include "linalg.hpp"
#include "numtheory.hpp"
#include "semilinear.hpp"

namespace cdg {

/// H acting on the q - 1 nonzero field elements; point u stands for w^u.
inline PermGroup as_permutation_group(const SemilinearGroup& h) {
  const u64 q1 = h.units();
  require_within("max_degree", kMaxDegree, q1);
  std::vector<Perm> gens;
  for (const auto& s : h.generators()) {
    std::vector<Point> img(q1);
    for (u64 u = 0; u < q1; ++u) img[u] = static_cast<Point>(h.act_dlog(s, u));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(static_cast<std::size_t>(q1), gens);
}

/// Multiplicative inverse of a modulo m (gcd(a, m) = 1).
inline u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  long long t = 0, nt = 1, r = static_cast<long long>(m), nr = static_cast<long long>(a % m);
  while (nr) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (r != 1) throw std::domain_error("inverse_mod: not invertible");
  return static_cast<u64>(t < 0 ? t + static_cast<long long>(m) : t);
}

// ---- Hall subgroups and conjugates ---------------------------------------------------

struct Semilinear0Report {
  bool a = false, b = false, c = false;
  u64 k = 1;
  u64 hall_order = 1;
  u64 conjugates = 1;
  std::optional<u64> uncovered;  // dlog of a vector fixed by no conjugate of D
  bool consistent() const { return a == b && b == c; }
};

inline Semilinear0Report check_semilinear0(const SemilinearGroup& h, const std::vector<u64>& delta) {
  const u64 q1 = h.units();
  for (u64 s : delta) {
    if (!is_prime(s)) throw std::invalid_argument("semilinear0: " + std::to_string(s) + " is not prime");
    if (h.order() % s != 0) throw std::invalid_argument("semilinear0: prime " + std::to_string(s) + " does not divide |H|");
    if (h.mult_order() % s == 0)
      throw std::invalid_argument("semilinear0: prime " + std::to_string(s) + " divides |X0|");
  }
  Semilinear0Report rep;
  u64 hall = 1;
  for (u64 s : delta) hall *= p_part(h.galois_order(), s);
  rep.hall_order = hall;
  rep.k = (q1) / (checked_pow(h.p(), static_cast<unsigned>(h.n() / hall)) - 1);

  SemiElem d{0, 0};
  if (hall > 1) {
    SemiElem top = h.top_generator();
    u64 o = h.element_order(top);
    d = h.power(top, o / hall);
  }
  std::set<u64> keys;
  std::vector<SemiElem> conj;
  if (hall == 1) {
    conj.push_back(d);
  } else {
    for (const auto& x : h.elements()) {
      SemiElem y = h.conj(d, x);
      if (keys.insert(y.t).second) conj.push_back(y);
    }
  }
  rep.conjugates = conj.size();

  std::vector<char> covered(q1, hall == 1 ? 1 : 0);
  if (hall > 1) {
    for (const auto& y : conj) {
      // u (p^k - 1) = -t (mod q - 1)
      u64 a = (pow_mod(h.p(), y.k, q1) + q1 - 1) % q1;
      u64 rhs = (q1 - y.t % q1) % q1;
      u64 g = std::gcd(a, q1);
      if (rhs % g != 0) continue;
      u64 mod = q1 / g;
      u64 u0 = mod == 1 ? 0 : mul_mod(rhs / g % mod, inverse_mod(a / g % mod, mod), mod);
      for (u64 u = u0; u < q1; u += mod) covered[u] = 1;
    }
  }
  rep.a = true;
  for (u64 u = 0; u < q1; ++u)
    if (!covered[u]) {
      rep.a = false;
      rep.uncovered = u;
      break;
    }
  rep.b = rep.conjugates == rep.k;
  rep.c = h.mult_order() % rep.k == 0 && std::gcd(hall, q1) == 1;
  return rep;
}

/// Every subgroup of Γ(p^n), via its canonical parameters.
inline std::vector<SemilinearGroup> all_semilinear_subgroups(u64 p, unsigned n) {
  const u64 q1 = checked_pow(p, n) - 1;
  std::vector<SemilinearGroup> out;
  for (u64 m : divisors(q1))
    for (u64 g64 : divisors(n)) {
      const unsigned g = static_cast<unsigned>(g64);
      const u64 step = q1 / m;
      const u64 tmax = g == n ? 1 : step;
      for (u64 t0 = 0; t0 < tmax; ++t0) {
        try {
          out.emplace_back(p, n, m, g, t0);
        } catch (const std::invalid_argument&) {
        }
      }
    }
  return out;
}

/// Primes of |H| not dividing |X0|.
inline std::vector<u64> admissible_primes(const SemilinearGroup& h) {
  std::vector<u64> out;
  for (u64 s : prime_divisors(h.order()))
    if (h.mult_order() % s != 0) out.push_back(s);
  return out;
}

struct SweepSummary {
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;  // first few, human readable
  void fail(std::string s) {
    ++violations;
    if (failures.size() < 10) failures.push_back(std::move(s));
  }
};

inline void semilinear0_instance(const SemilinearGroup& h, const std::vector<u64>& delta, SweepSummary& sum) {
  auto r = check_semilinear0(h, delta);
  ++sum.instances;
  if (!r.consistent()) {
    std::string ds;
    for (u64 s : delta) ds += std::to_string(s) + " ";
    sum.fail(h.describe() + " delta {" + ds + "}: a=" + std::to_string(r.a) + " b=" + std::to_string(r.b) +
             " c=" + std::to_string(r.c));
  }
}

inline SweepSummary sweep_semilinear0_exhaustive(const std::vector<u64>& field_orders) {
  SweepSummary sum;
  for (u64 q : field_orders) {
    auto pp = factorize(q);
    if (pp.size() != 1) throw std::invalid_argument("sweep: " + std::to_string(q) + " is not a prime power");
    const u64 p = pp[0].prime;
    const unsigned n = static_cast<unsigned>(pp[0].exponent);
    for (const auto& h : all_semilinear_subgroups(p, n)) {
      auto primes = admissible_primes(h);
      for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
        std::vector<u64> delta;
        for (std::size_t i = 0; i < primes.size(); ++i)
          if (mask >> i & 1) delta.push_back(primes[i]);
        semilinear0_instance(h, delta, sum);
      }
    }
  }
  return sum;
}

/// Random subgroups of Γ(p^n) with every admissible delta.
inline SweepSummary sweep_semilinear0_sampled(u64 p, unsigned n, std::size_t samples, std::uint64_t seed) {
  SweepSummary sum;
  const u64 q1 = checked_pow(p, n) - 1;
  auto ms = divisors(q1);
  auto gs = divisors(n);
  std::mt19937_64 rng(seed);
  std::size_t made = 0;
  while (made < samples) {
    u64 m = ms[rng() % ms.size()];
    unsigned g = static_cast<unsigned>(gs[rng() % gs.size()]);
    u64 t0 = rng() % (q1 / m);
    std::optional<SemilinearGroup> h;
    try {
      h.emplace(p, n, m, g, t0);
    } catch (const std::invalid_argument&) {
      continue;
    }
    ++made;
    auto primes = admissible_primes(*h);
    for (std::size_t mask = 0; mask < (std::size_t{1} << primes.size()); ++mask) {
      std::vector<u64> delta;
      for (std::size_t i = 0; i < primes.size(); ++i)
        if (mask >> i & 1) delta.push_back(primes[i]);
      semilinear0_instance(*h, delta, sum);
    }
  }
  return sum;
}

// ---- Zsigmondy centralizer -------------------------------------------------------------

struct PpdReport {
  bool applicable = false;
  std::string reason;
  u64 t = 0;
  u64 centralizer_order = 0;
  u64 x0_order = 0;
  std::optional<u64> fitting_order;  // computed through the permutation action when in range
  bool centralizer_is_x0 = false;
  bool holds = false;
};

inline PpdReport check_ppd_centralizer(const SemilinearGroup& h) {
  PpdReport rep;
  auto big_t = zsigmondy_ppd(h.p(), h.n());
  std::optional<u64> t;
  if (big_t) t = static_cast<u64>(*big_t);  // divides p^n - 1 < 2^20
  if (!t) {
    rep.reason = "no primitive prime divisor of " + std::to_string(h.p()) + "^" + std::to_string(h.n()) + " - 1";
    return rep;
  }
  rep.t = *t;
  if (h.order() % *t != 0) {
    rep.reason = "primitive prime divisor " + std::to_string(*t) + " does not divide |H|";
    return rep;
  }
  rep.applicable = true;
  const SemiElem gen{h.units() / *t, 0};
  u64 cent = 0;
  bool all_in_x0 = true;
  for (const auto& e : h.elements()) {
    if (h.compose(e, gen) == h.compose(gen, e)) {
      ++cent;
      if (e.k != 0) all_in_x0 = false;
    }
  }
  rep.centralizer_order = cent;
  rep.x0_order = h.mult_order();
  rep.centralizer_is_x0 = all_in_x0 && cent == h.mult_order();
  rep.holds = rep.centralizer_is_x0;
  if (h.units() <= kMaxDegree && h.order() <= limits::kMaxStructureOrder &&
      h.order() * h.units() <= limits::kMaxEnumeratedCells) {
    PermGroup g = as_permutation_group(h);
    PermGroup f = fitting_subgroup(g);
    rep.fitting_order = f.order();
    std::vector<Point> img(h.units());
    for (u64 u = 0; u < h.units(); ++u) img[u] = static_cast<Point>(h.act_dlog(h.x0_generator(), u));
    bool contains_x0 = f.contains(Perm(std::move(img)));
    rep.holds = rep.holds && f.order() == h.mult_order() && contains_x0;
  }
  return rep;
}

// ---- module lemmas ---------------------------------------------------------------------

struct ModuleLemmaReport {
  u64 q = 0, m = 0, order = 0;
  std::vector<u64> rs;  // every r satisfying the divisibility hypothesis
  bool tensor_constituent = false;
  bool wedge_constituent = false;
  bool self_contragredient = false;
  std::optional<std::pair<u64, u64>> tensor_witness;
  std::optional<std::pair<u64, u64>> wedge_witness;
  std::optional<u64> dual_witness;
  bool conclusions_verified = true;
  bool matrix_checked = false;
  bool matrix_agrees = true;
};

/// Faithful irreducible cyclic action of order N in dimension m over GF(q): m must be
/// the multiplicative order of q modulo N.
inline ModuleLemmaReport module_lemmas_arithmetic(u64 q, u64 m, u64 order) {
  auto pp = factorize(q);
  if (pp.size() != 1) throw std::invalid_argument("module lemmas: q = " + std::to_string(q) + " is not a prime power");
  if (order < 2) throw std::invalid_argument("module lemmas: the group must be nontrivial");
  if (std::gcd(q, order) != 1) throw std::invalid_argument("module lemmas: gcd(q, |G|) != 1");
  if (multiplicative_order(q % order, order) != m)
    throw std::invalid_argument("module lemmas: m is not the order of q modulo |G|");
  ModuleLemmaReport rep;
  rep.q = q;
  rep.m = m;
  rep.order = order;
  std::vector<u64> pw(m);
  for (u64 i = 0; i < m; ++i) pw[i] = pow_mod(q, i, order);
  for (u64 a = 0; a < m; ++a)
    for (u64 b = a; b < m; ++b)
      if ((pw[a] + pw[b]) % order == 1 % order) {
        if (!rep.tensor_witness) rep.tensor_witness = std::make_pair(a, b);
        if (a != b && !rep.wedge_witness) rep.wedge_witness = std::make_pair(a, b);
      }
  for (u64 k = 0; k < m; ++k)
    if ((pw[k] + 1) % order == 0) {
      rep.dual_witness = k;
      break;
    }
  rep.tensor_constituent = rep.tensor_witness.has_value();
  rep.wedge_constituent = rep.wedge_witness.has_value();
  rep.self_contragredient = rep.dual_witness.has_value();
  for (u64 r = 1; r < m; ++r) {
    if (m % r != 0) continue;
    BigInt num = big_pow(q, static_cast<unsigned>(m)) - 1, den = big_pow(q, static_cast<unsigned>(r)) - 1;
    if (num % den != 0) continue;
    BigInt quo = num / den;
    if (BigInt(order) % quo == 0) rep.rs.push_back(r);
  }
  for (u64 r : rep.rs) {
    if (rep.wedge_constituent && !(q == 2 && m / r == 2)) rep.conclusions_verified = false;
    if (rep.self_contragredient && !(order == ipow(q, static_cast<unsigned>(r)) + 1 && m / r == 2))
      rep.conclusions_verified = false;
  }
  return rep;
}

namespace detail {
using MatrixE = Matrix<ExtensionField>;

// Exterior square of c in the basis e_i ^ e_j, i < j, for the row convention.
inline MatrixE wedge_square(const MatrixE& c) {
  const std::size_t m = c.rows();
  ExtensionField f = c.field();
  std::vector<std::pair<std::size_t, std::size_t>> idx;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) idx.emplace_back(i, j);
  MatrixE w(f, idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t s = 0; s < idx.size(); ++s) {
      auto [i, j] = idx[r];
      auto [k, l] = idx[s];
      w(r, s) = f.sub(f.mul(c(i, k), c(j, l)), f.mul(c(i, l), c(j, k)));
    }
  return w;
}
}  // namespace detail

/// Cross-checks the arithmetic answers by matrices over GF(q) inside GF(q^m): the
/// generator acts by the companion matrix C of the minimal polynomial f of an element
/// of order N, and M is a constituent of a module S (semisimple, N prime to p) iff f
/// evaluated at the action on S is singular.
inline void module_lemmas_matrix(ModuleLemmaReport& rep) {
  const u64 q = rep.q, m = rep.m, order = rep.order;
  auto pp = factorize(q);
  const u64 p = pp[0].prime;
  const unsigned e = static_cast<unsigned>(pp[0].exponent);
  const u64 qm = checked_pow(q, static_cast<unsigned>(m));
  require_within("max_module_matrix_field", limits::kMaxModuleMatrixField, qm);
  GaloisField big(p, static_cast<unsigned>(e * m));
  ExtensionField f{&big};
  FieldElement eps = big.exp((qm - 1) / order);
  // f(x) = prod_{i<m} (x - eps^(q^i)), low-to-high.
  std::vector<u64> poly{1};
  for (u64 i = 0; i < m; ++i) {
    u64 root = big.frobenius(eps, static_cast<unsigned>(e * i)).code;
    std::vector<u64> next(poly.size() + 1, 0);
    for (std::size_t j = 0; j < poly.size(); ++j) {
      next[j + 1] = f.add(next[j + 1], poly[j]);
      next[j] = f.sub(next[j], f.mul(root, poly[j]));
    }
    poly = std::move(next);
  }
  detail::MatrixE c(f, m, m);
  // Row-vector companion: e_i -> e_{i+1}, e_{m-1} -> -sum f_j e_j.
  for (std::size_t i = 0; i + 1 < m; ++i) c(i, i + 1) = 1;
  for (std::size_t j = 0; j < m; ++j) c(m - 1, j) = f.neg(poly[j]);
  auto singular = [&](const detail::MatrixE& s) { return !evaluate_poly(poly, s).invertible(); };
  bool tensor = singular(kronecker(c, c));
  bool wedge = m >= 2 && singular(detail::wedge_square(c));
  bool dual = singular(c.inverse()->transpose());
  rep.matrix_checked = true;
  rep.matrix_agrees =
      tensor == rep.tensor_constituent && wedge == rep.wedge_constituent && dual == rep.self_contragredient;
}

inline ModuleLemmaReport check_module_lemmas(u64 q, u64 m, u64 order) {
  auto rep = module_lemmas_arithmetic(q, m, order);
  if (checked_pow(q, static_cast<unsigned>(m)) <= limits::kMaxModuleMatrixField) module_lemmas_matrix(rep);
  return rep;
}

struct ModuleSweepSummary : SweepSummary {
  std::size_t wedge_positive = 0;
  std::size_t dual_positive = 0;
  std::size_t matrix_runs = 0;
  std::size_t disagreements = 0;
};

/// Every prime power q, m >= 2 with q^m <= bound, and every N | q^m - 1 of order m mod N
/// admitting some r as in the divisibility hypothesis.
inline ModuleSweepSummary sweep_module_lemmas(u64 bound) {
  ModuleSweepSummary sum;
  for (u64 q = 2; q * q <= bound; ++q) {
    if (factorize(q).size() != 1) continue;
    for (u64 m = 2; checked_pow(q, static_cast<unsigned>(m)) <= bound; ++m) {
      const u64 qm = checked_pow(q, static_cast<unsigned>(m));
      for (u64 n : divisors(qm - 1)) {
        if (n < 2 || multiplicative_order(q % n, n) != m) continue;
        auto rep = module_lemmas_arithmetic(q, m, n);
        if (rep.rs.empty()) continue;
        ++sum.instances;
        if (qm <= limits::kMaxModuleMatrixField) {
          module_lemmas_matrix(rep);
          ++sum.matrix_runs;
          if (!rep.matrix_agrees) {
            ++sum.disagreements;
            sum.fail("q=" + std::to_string(q) + " m=" + std::to_string(m) + " N=" + std::to_string(n) +
                     ": arithmetic and matrix paths disagree");
          }
        }
        if (rep.wedge_constituent) ++sum.wedge_positive;
        if (rep.self_contragredient) ++sum.dual_positive;
        if (!rep.conclusions_verified)
          sum.fail("q=" + std::to_string(q) + " m=" + std::to_string(m) + " N=" + std::to_string(n) +
                   ": conclusion fails");
      }
    }
  }
  return sum;
}

// ---- Sylow-in-centralizer lemma -------------------------------------------------------

struct Semilinear1Report {
  u64 s = 0;
  bool hypothesis = false;
  bool exceptional = false;  // |A| = 9 and s = 3
  bool irreducible = false;
  bool embeds = false;
  u64 x0_order = 0;
  bool s_divides_x0 = false;
  bool holds = true;
};

/// For each prime s of the image order: if every C_H(v), v != 0, contains a Sylow
/// s-subgroup of H as a normal subgroup and (|A|, s) != (9, 3), then H embeds in Γ(A)
/// and s does not divide |H ∩ Γ0(A)|.
inline std::vector<Semilinear1Report> check_semilinear1(const GModule& a, std::uint64_t seed = 0) {
  auto elems = a.image_elements();
  const u64 order = elems.size();
  std::vector<u64> elem_order(order);
  const PrimeField f = a.field();
  MatrixP id = MatrixP::identity(f, a.dim());
  for (std::size_t i = 0; i < order; ++i) {
    MatrixP x = elems[i];
    u64 o = 1;
    while (!(GModule::flat(x) == GModule::flat(id))) {
      x = x * elems[i];
      ++o;
    }
    elem_order[i] = o;
  }
  // Stabilizers of orbit representatives (stabilizers along an orbit are conjugate).
  const u64 total = a.vector_count();
  require_within("max_module_vectors", limits::kMaxModuleVectors, total);
  std::vector<char> seen(total, 0);
  std::vector<std::vector<std::size_t>> stabilizers;
  for (u64 c = 1; c < total; ++c) {
    if (seen[c]) continue;
    Vec v = a.decode(c);
    std::vector<std::size_t> stab;
    for (std::size_t i = 0; i < order; ++i) {
      u64 w = a.encode(elems[i].apply_row(v));
      seen[w] = 1;
      if (w == c) stab.push_back(i);
    }
    stabilizers.push_back(std::move(stab));
  }
  auto irr = a.irreducibility(seed);
  std::optional<GammaEmbedding> emb;
  std::vector<Semilinear1Report> out;
  for (u64 s : prime_divisors(order)) {
    Semilinear1Report r;
    r.s = s;
    const u64 sylow = p_part(order, s);
    r.hypothesis = true;
    for (const auto& stab : stabilizers) {
      u64 selems = 0;
      for (auto i : stab)
        if (p_part(elem_order[i], s) == elem_order[i]) ++selems;
      if (p_part(stab.size(), s) != sylow || selems != sylow) {
        r.hypothesis = false;
        break;
      }
    }
    r.exceptional = total == 9 && s == 3;
    r.irreducible = irr.irreducible;
    if (r.hypothesis && !r.exceptional) {
      if (!irr.irreducible) {
        r.holds = false;
      } else {
        if (!emb) emb = embeds_in_gamma(a, seed);
        r.embeds = emb->embeds;
        if (r.embeds) {
          auto x0 = field_multiplications(elems, *emb->cyclic_generator);
          r.x0_order = x0.size();
          r.s_divides_x0 = r.x0_order % s == 0;
        }
        r.holds = r.embeds && !r.s_divides_x0;
      }
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace cdg
