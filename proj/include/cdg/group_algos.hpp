#pragma once

// Subgroup machinery for small groups: closures, series, centralizers, Sylow
// subgroups, cores, Fitting series, conjugacy classes, p-complements.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "limits.hpp"
#include "numtheory.hpp"
#include "perm_group.hpp"

namespace cdg {

inline PermGroup generated(std::size_t degree, const std::vector<Perm>& gens) {
  PermGroup h = PermGroup::trivial(degree);
  for (const auto& g : gens) h.add_generator(g);
  return h;
}

inline PermGroup join(const PermGroup& a, const PermGroup& b) {
  PermGroup h = a;
  for (const auto& g : b.generators()) h.add_generator(g);
  return h;
}

/// Smallest subgroup of G containing `gens` and normalized by G.
inline PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& gens) {
  PermGroup n = generated(g.degree(), gens);
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<Perm> current = n.generators();
    for (const auto& x : current) {
      for (const auto& s : g.generators()) {
        Perm y = x.conj(s);
        if (!n.contains(y)) {
          n.add_generator(y);
          changed = true;
        }
      }
    }
  }
  return n;
}

/// [A, B] for subgroups normalizing each other.
inline PermGroup commutator_subgroup(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> comms;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      Perm c = commutator(x, y);
      if (!c.is_identity()) comms.push_back(c);
    }
  return normal_closure(join(a, b), comms);
}

inline PermGroup derived_subgroup(const PermGroup& g) { return commutator_subgroup(g, g); }

inline bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i]) return false;
  return true;
}

inline bool normalizes(const Perm& x, const PermGroup& h) {
  for (const auto& s : h.generators())
    if (!h.contains(s.conj(x))) return false;
  return true;
}

inline bool is_normal(const PermGroup& n, const PermGroup& g) {
  if (!g.contains_group(n)) return false;
  for (const auto& x : g.generators())
    if (!normalizes(x, n)) return false;
  return true;
}

inline std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> s{g};
  for (;;) {
    PermGroup d = derived_subgroup(s.back());
    if (d.order_big() == s.back().order_big()) break;
    s.push_back(std::move(d));
    if (s.back().is_trivial()) break;
  }
  return s;
}

inline bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

inline std::optional<u64> p_group_prime(const PermGroup& g) {
  u64 o = g.order();
  if (o == 1) return std::nullopt;
  auto ps = prime_divisors(o);
  if (ps.size() != 1) return std::nullopt;
  return ps[0];
}

inline bool is_p_group(const PermGroup& g, u64 p) {
  u64 o = g.order();
  return p_part(o, p) == o;
}

/// gamma_1 = G, gamma_{i+1} = [gamma_i, G], up to the first repeated term.
inline std::vector<PermGroup> lower_central_chain(const PermGroup& g) {
  std::vector<PermGroup> s{g};
  for (;;) {
    PermGroup next = commutator_subgroup(s.back(), g);
    if (next.order_big() == s.back().order_big()) break;
    s.push_back(std::move(next));
    if (s.back().is_trivial()) break;
  }
  return s;
}

inline bool is_nilpotent(const PermGroup& g) { return lower_central_chain(g).back().is_trivial(); }

/// Lower central series of a p-group, ending with the trivial group.
inline std::vector<PermGroup> lower_central_series(const PermGroup& p) {
  if (!p.is_trivial() && !p_group_prime(p))
    throw std::invalid_argument("lower_central_series: input is not a p-group");
  auto s = lower_central_chain(p);
  if (!s.back().is_trivial()) throw std::logic_error("lower_central_series: p-group not nilpotent");
  return s;
}

/// The subgroup generated by the elements of `table` satisfying `pred`.
template <class Pred>
PermGroup subgroup_of_elements(std::size_t degree, const std::vector<Perm>& elements, Pred pred) {
  PermGroup h = PermGroup::trivial(degree);
  for (const auto& x : elements)
    if (!h.contains(x) && pred(x)) h.add_generator(x);
  return h;
}

inline std::vector<Perm> elements_of(const PermGroup& g) { return ElementTable(g).elements(); }

inline PermGroup centralizer(const PermGroup& g, const std::vector<Perm>& s) {
  return subgroup_of_elements(g.degree(), elements_of(g), [&](const Perm& x) {
    for (const auto& y : s)
      if (x * y != y * x) return false;
    return true;
  });
}

inline PermGroup centralizer(const PermGroup& g, const PermGroup& h) { return centralizer(g, h.generators()); }

inline PermGroup center(const PermGroup& g) { return centralizer(g, g.generators()); }

inline PermGroup intersection(const PermGroup& a, const PermGroup& b) {
  const PermGroup& small = a.order_big() <= b.order_big() ? a : b;
  const PermGroup& other = &small == &a ? b : a;
  return subgroup_of_elements(a.degree(), elements_of(small), [&](const Perm& x) { return other.contains(x); });
}

/// H^x = x^-1 H x
inline PermGroup conjugate(const PermGroup& h, const Perm& x) {
  std::vector<Perm> gens;
  for (const auto& s : h.generators()) gens.push_back(s.conj(x));
  return generated(h.degree(), gens);
}

/// Largest normal subgroup of G inside H.
inline PermGroup core(const PermGroup& g, const PermGroup& h) {
  PermGroup k = h;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& x : g.generators()) {
      if (normalizes(x, k)) continue;
      k = intersection(k, conjugate(k, x));
      changed = true;
    }
  }
  return k;
}

/// Smallest k >= 1 with g^k in N.
inline u64 order_modulo(const Perm& g, const PermGroup& n) {
  Perm x = g;
  for (u64 k = 1;; ++k) {
    if (n.contains(x)) return k;
    x *= g;
  }
}

/// A Sylow p-subgroup, grown greedily from p-elements in element order.
inline PermGroup sylow_subgroup(const PermGroup& g, u64 p) {
  const u64 order = g.order();
  require_within("max_structure_order", limits::kMaxStructureOrder, order);
  const u64 target = p_part(order, p);
  PermGroup s = PermGroup::trivial(g.degree());
  if (target == 1) return s;
  std::vector<Perm> candidates;
  for (const auto& x : elements_of(g)) {
    u64 o = x.order();
    if (o > 1 && p_part(o, p) == o) candidates.push_back(x);
  }
  while (s.order() < target) {
    bool grown = false;
    for (const auto& x : candidates) {
      if (s.contains(x)) continue;
      if (!s.contains(x.pow(static_cast<long long>(p)))) continue;
      if (!normalizes(x, s)) continue;
      s.add_generator(x);
      grown = true;
      break;
    }
    if (!grown) throw std::logic_error("sylow_subgroup: no extension found");
  }
  return s;
}

inline PermGroup p_core(const PermGroup& g, u64 p) { return core(g, sylow_subgroup(g, p)); }

inline PermGroup fitting_subgroup(const PermGroup& g) {
  require_within("max_structure_order", limits::kMaxStructureOrder, g.order());
  PermGroup f = PermGroup::trivial(g.degree());
  if (g.order() == 1) return f;
  for (u64 p : prime_divisors(g.order())) f = join(f, p_core(g, p));
  return f;
}

/// Preimage of F(G/N) for N normal in G, computed as the join of Core_G(S_p N).
inline PermGroup fitting_preimage(const PermGroup& g, const PermGroup& n) {
  PermGroup f = n;
  const u64 index = g.order() / n.order();
  if (index == 1) return f;
  for (u64 p : prime_divisors(index)) f = join(f, core(g, join(sylow_subgroup(g, p), n)));
  return f;
}

/// 1 = F_0 < F_1 < ... < F_h = G; requires G solvable.
inline std::vector<PermGroup> fitting_series(const PermGroup& g) {
  if (!is_solvable(g)) throw std::invalid_argument("fitting_series: group is not solvable");
  std::vector<PermGroup> s{PermGroup::trivial(g.degree())};
  while (s.back().order_big() != g.order_big()) s.push_back(fitting_preimage(g, s.back()));
  return s;
}

inline int fitting_height(const PermGroup& g) { return static_cast<int>(fitting_series(g).size()) - 1; }

/// Z_0 = 1, Z_{i+1}/Z_i = Z(G/Z_i), until stable.
inline std::vector<PermGroup> upper_central_series(const PermGroup& g) {
  std::vector<PermGroup> s{PermGroup::trivial(g.degree())};
  const auto elems = elements_of(g);
  for (;;) {
    const PermGroup& z = s.back();
    PermGroup next = subgroup_of_elements(g.degree(), elems, [&](const Perm& x) {
      for (const auto& y : g.generators())
        if (!z.contains(commutator(x, y))) return false;
      return true;
    });
    next = join(next, z);
    if (next.order_big() == z.order_big()) break;
    s.push_back(std::move(next));
  }
  return s;
}

/// Every Sylow subgroup of G/N is cyclic.
inline bool is_sylow_cyclic_quotient(const PermGroup& g, const PermGroup& n) {
  if (!is_normal(n, g)) throw std::invalid_argument("is_sylow_cyclic_quotient: N is not normal in G");
  const u64 index = g.order() / n.order();
  if (index == 1) return true;
  for (u64 p : prime_divisors(index)) {
    PermGroup s = sylow_subgroup(g, p);
    const u64 target = s.order() / intersection(s, n).order();
    bool found = false;
    for (const auto& x : elements_of(s)) {
      if (order_modulo(x, n) == target) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

struct ConjugacyClass {
  Perm representative;  // least element of the class
  u64 size = 0;
  std::vector<std::uint32_t> members;  // indices into the element table
};

/// Conjugacy classes ordered by their least element.
inline std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g, const ElementTable& table) {
  require_within("max_class_order", limits::kMaxClassOrder, table.size());
  std::vector<int> cls(table.size(), -1);
  std::vector<ConjugacyClass> out;
  const auto gens = g.nontrivial_generators();
  std::vector<Perm> inv;
  for (const auto& s : gens) inv.push_back(s.inverse());
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int c = static_cast<int>(out.size());
    if (out.size() >= limits::kMaxClassCount)
      throw ScaleError("max_class_count", limits::kMaxClassCount, out.size() + 1);
    ConjugacyClass k;
    k.representative = table[i];
    cls[i] = c;
    k.members.push_back(static_cast<std::uint32_t>(i));
    for (std::size_t head = 0; head < k.members.size(); ++head) {
      const Perm& x = table[k.members[head]];
      for (std::size_t j = 0; j < gens.size(); ++j) {
        std::uint32_t y = table.index_of(inv[j] * x * gens[j]);
        if (cls[y] < 0) {
          cls[y] = c;
          k.members.push_back(y);
        }
      }
    }
    k.size = k.members.size();
    std::sort(k.members.begin(), k.members.end());
    out.push_back(std::move(k));
  }
  return out;
}

inline std::vector<ConjugacyClass> conjugacy_classes(const PermGroup& g) {
  return conjugacy_classes(g, ElementTable(g));
}

/// A Hall p'-subgroup of a solvable group, by seeded random growth.
inline PermGroup p_complement(const PermGroup& g, u64 p, std::uint64_t seed = 0) {
  const u64 order = g.order();
  const u64 target = order / p_part(order, p);
  PermGroup h = PermGroup::trivial(g.degree());
  if (target == 1) return h;
  std::mt19937_64 rng(seed);
  u64 stalled = 0;
  for (u64 trial = 0; trial < limits::kHallTrialBudget; ++trial) {
    Perm x = g.random_element(rng);
    u64 o = x.order();
    if (o % p == 0) x = x.pow(static_cast<long long>(p_part(o, p)));
    if (h.contains(x)) {
      if (++stalled > 200) {
        h = PermGroup::trivial(g.degree());
        stalled = 0;
      }
      continue;
    }
    PermGroup trial_group = h;
    trial_group.add_generator(x);
    if (trial_group.order() % p == 0) {
      if (++stalled > 200) {
        h = PermGroup::trivial(g.degree());
        stalled = 0;
      }
      continue;
    }
    h = std::move(trial_group);
    stalled = 0;
    if (h.order() == target) return h;
  }
  throw ScaleError("hall_trial_budget", limits::kHallTrialBudget, limits::kHallTrialBudget + 1);
}

/// An element-wise basis of an elementary abelian p-group together with coordinates.
class ElementaryAbelian {
 public:
  ElementaryAbelian(const PermGroup& n, u64 p) : p_(p) {
    if (!is_abelian(n)) throw std::invalid_argument("subgroup is not abelian");
    for (const auto& g : n.generators())
      if (!g.pow(static_cast<long long>(p)).is_identity())
        throw std::invalid_argument("subgroup is not elementary abelian");
    PermGroup span = PermGroup::trivial(n.degree());
    for (const auto& g : n.generators()) {
      if (span.contains(g)) continue;
      basis_.push_back(g);
      span.add_generator(g);
    }
    // Enumerate all coordinate vectors.
    const std::size_t m = basis_.size();
    const u64 count = ipow(p, static_cast<unsigned>(m));
    std::vector<u64> c(m, 0);
    for (u64 code = 0; code < count; ++code) {
      u64 t = code;
      Perm x(n.degree());
      for (std::size_t i = 0; i < m; ++i) {
        c[i] = t % p;
        t /= p;
        x *= basis_[i].pow(static_cast<long long>(c[i]));
      }
      coords_.emplace(x, c);
    }
  }

  u64 p() const { return p_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Perm>& basis() const { return basis_; }
  const std::vector<u64>& coordinates(const Perm& x) const {
    auto it = coords_.find(x);
    if (it == coords_.end()) throw std::invalid_argument("element outside the elementary abelian group");
    return it->second;
  }
  bool contains(const Perm& x) const { return coords_.count(x) != 0; }

 private:
  u64 p_;
  std::vector<Perm> basis_;
  std::map<Perm, std::vector<u64>> coords_;
};

}  // namespace cdg
