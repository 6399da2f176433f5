#pragma once

// Structural checkers over Δ(G): the disconnected classification, the structure of
// disconnected and of diameter-three graphs (theorem_c, theorem_a), and the corpus lemmas
// (Zuccari, brodkey, unique non-central O_p, Δ(G) = Δ(G/Z), Ito-Michler). Every check is
// three-valued; claims that need structure which is not available are reported as
// unchecked, never passed.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clifford.hpp"
#include "dixon.hpp"
#include "gmodule.hpp"
#include "group_algos.hpp"
#include "prime_graph.hpp"
#include "ramification.hpp"
#include "semilinear.hpp"

namespace cdg {

enum class Outcome { pass, fail, not_applicable, unchecked };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::not_applicable: return "not-applicable";
    case Outcome::unchecked: return "unchecked";
  }
  return "unchecked";
}

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::not_applicable;
  std::string reason;
};

inline CheckResult verdict(std::string name, bool ok, std::string reason = {}) {
  return {std::move(name), ok ? Outcome::pass : Outcome::fail, std::move(reason)};
}

/// fail if any check failed, pass if any passed, otherwise not-applicable.
inline Outcome combine(const std::vector<CheckResult>& checks) {
  bool any_pass = false;
  for (const auto& c : checks) {
    if (c.outcome == Outcome::fail) return Outcome::fail;
    any_pass = any_pass || c.outcome == Outcome::pass;
  }
  return any_pass ? Outcome::pass : Outcome::not_applicable;
}

inline std::string primes_string(const std::vector<u64>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

inline std::vector<u64> sorted_union(std::vector<u64> a, const std::vector<u64>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// A/B cyclic, for B <= A normal.
inline bool is_cyclic_quotient(const PermGroup& a, const PermGroup& b) {
  const u64 index = a.order() / b.order();
  if (index == 1) return true;
  for (const auto& x : elements_of(a))
    if (order_modulo(x, b) == index) return true;
  return false;
}

/// Lazily computed structure of one explicit group.
class GroupContext {
 public:
  explicit GroupContext(PermGroup g, std::string name = {}) : g_(std::move(g)), name_(std::move(name)) {}

  const PermGroup& group() const { return g_; }
  const std::string& name() const { return name_; }

  bool solvable() {
    if (!solvable_) solvable_ = is_solvable(g_);
    return *solvable_;
  }

  const CharacterOracle& oracle() {
    if (!oracle_) oracle_.emplace(g_);
    return *oracle_;
  }
  const DegreeMultiset& degrees() {
    if (!degrees_) degrees_.emplace(oracle().degrees());
    return *degrees_;
  }
  const PrimeGraph& graph() {
    if (!graph_) graph_ = build_graph(degrees());
    return *graph_;
  }
  const GraphMetrics& graph_metrics() {
    if (!metrics_) metrics_ = metrics(graph());
    return *metrics_;
  }
  const PermGroup& fitting() {
    if (!fitting_) fitting_ = fitting_subgroup(g_);
    return *fitting_;
  }
  const PermGroup& fitting2() {
    if (!fitting2_) fitting2_ = fitting_preimage(g_, fitting());
    return *fitting2_;
  }
  const PermGroup& center_group() {
    if (!center_) center_ = center(g_);
    return *center_;
  }
  const PermGroup& core(u64 p) {
    auto it = cores_.find(p);
    if (it == cores_.end()) it = cores_.emplace(p, p_core(g_, p)).first;
    return it->second;
  }
  std::vector<u64> primes() const { return prime_divisors(g_.order()); }

  /// Primes r with O_r(G) not contained in Z(G).
  std::vector<u64> noncentral_core_primes() {
    std::vector<u64> out;
    for (u64 r : primes())
      if (!center_group().contains_group(core(r))) out.push_back(r);
    return out;
  }

  DegreeMultiset quotient_degrees(const PermGroup& n) { return oracle().quotient_degrees(n); }

 private:
  PermGroup g_;
  std::string name_;
  std::optional<bool> solvable_;
  std::optional<CharacterOracle> oracle_;
  std::optional<DegreeMultiset> degrees_;
  std::optional<PrimeGraph> graph_;
  std::optional<GraphMetrics> metrics_;
  std::optional<PermGroup> fitting_, fitting2_, center_;
  std::map<u64, PermGroup> cores_;
};

// ---- corpus lemmas -----------------------------------------------------------------------

inline CheckResult check_palfy_condition(GroupContext& c) {
  if (!c.solvable()) return {"palfy", Outcome::not_applicable, "group is not solvable"};
  auto bad = palfy_violation(c.graph());
  return verdict("palfy", !bad, bad ? "independent triple " + primes_string(*bad) : "");
}

inline CheckResult check_diameter_bound(GroupContext& c) {
  if (!c.solvable()) return {"diameter_bound", Outcome::not_applicable, "group is not solvable"};
  const auto& m = c.graph_metrics();
  std::string detail = m.connected() ? (m.diameter ? "diameter " + std::to_string(*m.diameter) : "empty graph")
                                     : std::to_string(m.components.size()) + " components";
  return verdict("diameter_bound", diameter_bound_holds(c.graph(), m), detail);
}

/// Zuccari: F(G) abelian and Δ(G) connected give diameter at most 2.
inline CheckResult check_zuccari(GroupContext& c) {
  if (!c.solvable()) return {"zuccari", Outcome::not_applicable, "group is not solvable"};
  const auto& m = c.graph_metrics();
  if (!is_abelian(c.fitting())) return {"zuccari", Outcome::not_applicable, "F(G) is not abelian"};
  if (!m.connected() || !m.diameter) return {"zuccari", Outcome::not_applicable, "graph not connected or empty"};
  return verdict("zuccari", *m.diameter <= 2, "diameter " + std::to_string(*m.diameter));
}

/// Brodkey: some chi has pi(K/F) inside pi(chi(1)).
inline CheckResult check_brodkey(GroupContext& c) {
  if (!c.solvable()) return {"brodkey", Outcome::not_applicable, "group is not solvable"};
  auto need = prime_divisors(c.fitting2().order() / c.fitting().order());
  for (u64 d : c.degrees().distinct()) {
    bool ok = true;
    for (u64 r : need) ok = ok && d % r == 0;
    if (ok) return verdict("brodkey", true, "pi(K/F) = " + primes_string(need) + " divides degree " + std::to_string(d));
  }
  return verdict("brodkey", false, "no degree divisible by all of " + primes_string(need));
}

/// A disconnected graph has exactly one prime with non-central O_p.
inline CheckResult check_unique_noncentral(GroupContext& c) {
  if (!c.solvable()) return {"unique_noncentral_core", Outcome::not_applicable, "group is not solvable"};
  if (c.graph_metrics().components.size() != 2)
    return {"unique_noncentral_core", Outcome::not_applicable, "graph is not disconnected"};
  auto ps = c.noncentral_core_primes();
  return verdict("unique_noncentral_core", ps.size() == 1, "non-central cores at " + primes_string(ps));
}

/// Δ(G) = Δ(G/Z(G)). The hypotheses are certified when F = M x Z(G) with M a Hall subgroup of F
/// for pi(F/Z(G)) coprime to |Z(G)|, F abelian and gcd(|F|, |G:F|) = 1, so that every
/// character of F extends to its inertia group by coprimality.
inline CheckResult check_lemma_u(GroupContext& c) {
  const std::string name = "delta_equals_delta_mod_center";
  if (!c.solvable()) return {name, Outcome::not_applicable, "group is not solvable"};
  const PermGroup& f = c.fitting();
  const PermGroup& z = c.center_group();
  if (z.order() == 1) return {name, Outcome::not_applicable, "Z(G) is trivial"};
  if (!f.contains_group(z)) return {name, Outcome::not_applicable, "Z(G) is not inside F(G)"};
  const u64 fz = f.order() / z.order();
  if (std::gcd(fz, z.order()) != 1) return {name, Outcome::not_applicable, "F/Z(G) and Z(G) not coprime; no direct complement identified"};
  if (!is_abelian(f)) return {name, Outcome::not_applicable, "F(G) is not abelian; extension hypothesis not certified"};
  if (std::gcd(f.order(), c.group().order() / f.order()) != 1)
    return {name, Outcome::not_applicable, "gcd(|F|, |G:F|) > 1; extension hypothesis not certified"};
  auto dz = c.quotient_degrees(z);
  bool same = build_graph(dz) == c.graph();
  return verdict(name, same, "|Z(G)| = " + std::to_string(z.order()));
}

/// Ito-Michler both ways: r divides no degree iff the Sylow r-subgroup is normal and abelian.
inline CheckResult check_ito_michler(GroupContext& c) {
  std::vector<u64> bad;
  for (u64 r : c.primes()) {
    bool divides = false;
    for (u64 d : c.degrees().distinct()) divides = divides || d % r == 0;
    PermGroup s = sylow_subgroup(c.group(), r);
    bool normal_abelian = is_normal(s, c.group()) && is_abelian(s);
    if (divides == normal_abelian) bad.push_back(r);
  }
  return verdict("ito_michler", bad.empty(), bad.empty() ? "" : "inconsistent at " + primes_string(bad));
}

/// Number of linear characters equals |G:G'|.
inline CheckResult check_linear_count(GroupContext& c) {
  const u64 linear = c.degrees().multiplicity(1);
  const u64 index = c.group().order() / derived_subgroup(c.group()).order();
  return verdict("linear_count", linear == index,
                 std::to_string(linear) + " linear characters, |G:G'| = " + std::to_string(index));
}

// ---- disconnected classification -----------------------------------------------------------

struct DisconnectedReport {
  Outcome outcome = Outcome::not_applicable;
  std::string reason;
  std::optional<u64> p;   // the unique prime with non-central O_p
  char type = 0;          // 'a', 'b', 'c', or 0 when no case hypothesis holds
  std::vector<std::vector<u64>> predicted, actual;
  std::vector<CheckResult> checks;
};

namespace detail {
inline bool same_partition(std::vector<std::vector<u64>> a, std::vector<std::vector<u64>> b) {
  for (auto& x : a) std::sort(x.begin(), x.end());
  for (auto& x : b) std::sort(x.begin(), x.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

/// Every form attached to a character nontrivial on P' is nondegenerate: all non-linear
/// characters of P are fully ramified with respect to P/N.
inline CheckResult nonlinear_fully_ramified(const PermGroup& p, const PermGroup& n) {
  try {
    RamificationSetup s(p, n);
    for (u64 i = 0; i < s.dual_size(); ++i) {
      auto f = s.form(s.lambda(i));
      if (!f.is_zero() && !f.nondegenerate())
        return verdict("nonlinear_fully_ramified", false, "lambda index " + std::to_string(i) + " is degenerate");
    }
    return verdict("nonlinear_fully_ramified", true, "");
  } catch (const HypothesisError& e) {
    return {"nonlinear_fully_ramified", Outcome::unchecked, e.what()};
  }
}
}  // namespace detail

/// Disconnected classification, with the unique non-central O_p. The case is chosen by its hypothesis: (a) metanilpotent,
/// (b) F abelian and |ρ(G)| > 2, (c) F non-abelian with no isolated r having O_r
/// non-abelian. Its conclusions are then tested.
inline DisconnectedReport classify_disconnected(GroupContext& c) {
  DisconnectedReport r;
  if (!c.solvable()) {
    r.reason = "group is not solvable";
    return r;
  }
  const auto& m = c.graph_metrics();
  if (m.components.size() != 2) {
    r.reason = "graph does not have exactly two components";
    return r;
  }
  r.actual = m.components;
  const PermGroup& g = c.group();
  auto nc = c.noncentral_core_primes();
  r.checks.push_back(verdict("unique_noncentral_core", nc.size() == 1, "non-central cores at " + primes_string(nc)));
  if (nc.size() == 1) r.p = nc[0];

  const PermGroup& f = c.fitting();
  const PermGroup& k = c.fitting2();
  const bool metanilpotent = k.order() == g.order();
  const bool f_abelian = is_abelian(f);
  bool isolated_nonabelian = false;
  for (u64 q : c.primes())
    if (!is_abelian(c.core(q)) && c.graph().has_vertex(q) && c.graph().neighbors(q).empty()) isolated_nonabelian = true;

  auto pi = [](u64 num, u64 den) { return prime_divisors(num / den); };
  if (metanilpotent) {
    r.type = 'a';
    if (!r.p) {
      r.checks.push_back({"type_a_structure", Outcome::unchecked, "no unique prime p"});
    } else {
      const u64 p = *r.p;
      PermGroup pg = c.core(p);
      const bool sylow = pg.order() == p_part(g.order(), p);
      r.checks.push_back(verdict("normal_sylow_p", sylow && !is_abelian(pg), "O_p has order " + std::to_string(pg.order())));
      if (sylow) {
        PermGroup h = p_complement(g, p);
        r.checks.push_back(verdict("abelian_complement", is_abelian(h), "|H| = " + std::to_string(h.order())));
        PermGroup cph = intersection(pg, centralizer(g, h));
        r.checks.push_back(verdict("derived_in_centralizer", cph.contains_group(derived_subgroup(pg)), ""));
        r.checks.push_back(detail::nonlinear_fully_ramified(pg, cph));
      }
      r.predicted = {{p}, pi(g.order(), f.order())};
    }
  } else if (f_abelian && c.graph().vertices().size() > 2) {
    r.type = 'b';
    if (r.p) {
      const PermGroup& mcore = c.core(*r.p);
      const PermGroup& z = c.center_group();
      bool elem = is_abelian(mcore);
      for (const auto& x : mcore.generators()) elem = elem && x.pow(static_cast<long long>(*r.p)).is_identity();
      r.checks.push_back(verdict("elementary_abelian_m", elem, "|M| = " + std::to_string(mcore.order())));
      r.checks.push_back(verdict("f_is_m_times_center",
                                 intersection(mcore, z).order() == 1 && mcore.order() * z.order() == f.order(), ""));
    }
    r.checks.push_back(verdict("k_over_f_cyclic", is_cyclic_quotient(k, f), ""));
    r.checks.push_back(verdict("g_over_k_cyclic", is_cyclic_quotient(g, k), ""));
    r.predicted = {pi(k.order(), f.order()), pi(g.order(), k.order())};
  } else if (!f_abelian && !isolated_nonabelian) {
    r.type = 'c';
    if (r.p) {
      const u64 p = *r.p;
      PermGroup pg = c.core(p);
      r.checks.push_back(verdict("normal_sylow_p", pg.order() == p_part(g.order(), p) && !is_abelian(pg), ""));
      PermGroup u = PermGroup::trivial(g.degree());
      for (u64 q : c.primes())
        if (q != p) u = join(u, c.core(q));
      r.checks.push_back(verdict("f_is_p_times_central", c.center_group().contains_group(u) && pg.order() * u.order() == f.order(), ""));
      r.predicted = {sorted_union({p}, pi(k.order(), f.order())), pi(g.order(), k.order())};
    }
    r.checks.push_back(verdict("k_over_f_cyclic", is_cyclic_quotient(k, f), ""));
    r.checks.push_back(verdict("g_over_k_cyclic", is_cyclic_quotient(g, k), ""));
  } else {
    r.reason = "outside the hypotheses of cases (a), (b), (c)";
  }
  if (!r.predicted.empty())
    r.checks.push_back(verdict("components_match", detail::same_partition(r.predicted, r.actual), ""));
  r.outcome = combine(r.checks);
  return r;
}

// ---- disconnected graphs, branches (i) and (ii) -------------------------------------------------------------------------------

struct TheoremCReport {
  Outcome outcome = Outcome::not_applicable;
  std::string reason;
  std::optional<u64> p;
  int branch = 0;  // 1: p isolated, 2: the chief factor branch
  std::vector<CheckResult> checks;
};

namespace detail {
/// The factors M_1 = [P,G]/P' and gamma_i/gamma_(i+1): equal orders p^n and irreducible
/// G-modules whose images embed in Γ(p^n).
inline std::vector<CheckResult> chief_factor_checks(const PermGroup& g, const PermGroup& pg, u64 p, unsigned min_n,
                                                    bool need_two_odd) {
  std::vector<CheckResult> out;
  auto lcs = lower_central_series(pg);
  std::vector<std::pair<PermGroup, PermGroup>> factors;
  factors.emplace_back(commutator_subgroup(pg, g), lcs.size() > 1 ? lcs[1] : PermGroup::trivial(g.degree()));
  for (std::size_t i = 1; i + 1 < lcs.size(); ++i) factors.emplace_back(lcs[i], lcs[i + 1]);
  std::optional<u64> common;
  bool equal = true;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const auto& [a, b] = factors[i];
    const std::string tag = "M" + std::to_string(i + 1);
    try {
      Section s(a, b, p);
      GModule mod = s.module(g);
      auto irr = mod.irreducibility();
      out.push_back(verdict(tag + "_chief_factor", irr.irreducible, "order " + std::to_string(p) + "^" + std::to_string(s.dimension())));
      if (!common) common = s.dimension();
      equal = equal && *common == s.dimension();
      if (irr.irreducible) {
        auto emb = embeds_in_gamma(mod);
        out.push_back(verdict(tag + "_embeds_in_gamma", emb.embeds, emb.reason));
      }
    } catch (const std::invalid_argument& e) {
      out.push_back(verdict(tag + "_chief_factor", false, e.what()));
    } catch (const ScaleError& e) {
      out.push_back({tag + "_chief_factor", Outcome::unchecked, e.what()});
    }
  }
  out.push_back(verdict("equal_orders", equal, common ? "n = " + std::to_string(*common) : ""));
  if (common) {
    out.push_back(verdict("n_at_least_" + std::to_string(min_n), *common >= min_n, "n = " + std::to_string(*common)));
    if (need_two_odd) {
      std::size_t odd = 0;
      for (u64 r : prime_divisors(*common)) odd += r % 2;
      out.push_back(verdict("n_two_odd_primes", odd >= 2, "n = " + std::to_string(*common)));
    }
  }
  return out;
}
}  // namespace detail

inline TheoremCReport check_theorem_C(GroupContext& c) {
  TheoremCReport r;
  if (!c.solvable()) {
    r.reason = "group is not solvable";
    return r;
  }
  if (c.graph_metrics().components.size() != 2) {
    r.reason = "graph is not disconnected";
    return r;
  }
  if (is_abelian(c.fitting())) {
    r.reason = "F(G) is abelian";
    return r;
  }
  auto nc = c.noncentral_core_primes();
  r.checks.push_back(verdict("unique_noncentral_core", nc.size() == 1, "non-central cores at " + primes_string(nc)));
  if (nc.size() != 1) {
    r.outcome = Outcome::fail;
    return r;
  }
  const u64 p = nc[0];
  r.p = p;
  const auto& gr = c.graph();
  if (gr.has_vertex(p) && gr.neighbors(p).empty()) {
    r.branch = 1;
    r.checks.push_back(verdict("p_isolated", true, std::to_string(p) + " is an isolated vertex"));
  } else {
    r.branch = 2;
    const PermGroup& pg = c.core(p);
    auto dq = c.quotient_degrees(derived_subgroup(pg));
    r.checks.push_back(verdict("quotient_by_derived_disconnected", metrics(build_graph(dq)).components.size() == 2, ""));
    for (auto& x : detail::chief_factor_checks(c.group(), pg, p, 3, false)) r.checks.push_back(std::move(x));
  }
  r.outcome = combine(r.checks);
  return r;
}

// ---- diameter three ------------------------------------------------------------------------

struct TheoremAReport {
  Outcome outcome = Outcome::not_applicable;
  std::string reason;
  std::string mode;  // "group", "spec" or "graph-only"
  std::optional<PiSplit> split;
  std::vector<CheckResult> checks;
};

/// Diameter three on the graph: pi1, pi2 complete and disjoint with union ρ, |pi1| >= 2^|pi2|,
/// 2 not in pi2, |pi2| >= 2, and d(p, v) <= 2 for all v when p is known.
inline std::vector<CheckResult> diameter_three_graph_checks(const PrimeGraph& g, const GraphMetrics& m,
                                                            std::optional<u64> p, std::optional<PiSplit>& split) {
  std::vector<CheckResult> out;
  split = pi_split(g, m, p);
  if (!split) return out;
  const auto& s = *split;
  out.push_back(verdict("palfy", check_palfy(g), ""));
  out.push_back(verdict("pi1_complete", induces_complete(g, s.pi1), primes_string(s.pi1)));
  out.push_back(verdict("pi2_complete", induces_complete(g, s.pi2), primes_string(s.pi2)));
  const bool big = s.pi1.size() >= (std::size_t{1} << std::min<std::size_t>(s.pi2.size(), 63));
  out.push_back(verdict("pi1_at_least_2_pow_pi2", big,
                        std::to_string(s.pi1.size()) + " >= 2^" + std::to_string(s.pi2.size())));
  out.push_back(verdict("two_not_in_pi2", !std::binary_search(s.pi2.begin(), s.pi2.end(), u64{2}), ""));
  out.push_back(verdict("pi2_has_two_primes", s.pi2.size() >= 2, ""));
  if (p) {
    if (!g.has_vertex(*p)) {
      out.push_back(verdict("p_is_vertex", false, std::to_string(*p) + " is not a vertex"));
    } else {
      bool close = true;
      for (u64 v : g.vertices()) {
        auto d = distance(g, m, *p, v);
        close = close && d && *d <= 2;
      }
      out.push_back(verdict("distance_from_p_at_most_2", close, "p = " + std::to_string(*p)));
      out.push_back(verdict("p_in_pi1_not_endpoint",
                            std::binary_search(s.pi1.begin(), s.pi1.end(), *p) && s.endpoint != *p, ""));
    }
  } else {
    out.push_back({"distance_from_p_at_most_2", Outcome::unchecked, "no group provided; graph-only mode"});
  }
  return out;
}

/// H non-nilpotent with cyclic Sylow subgroups, for H <= Γ(p^n).
inline std::vector<CheckResult> semilinear_h_checks(const SemilinearGroup& h) {
  std::vector<CheckResult> out;
  std::vector<SemiElem> gens = h.generators();
  auto part = [&](const SemiElem& x, u64 r, bool keep) {
    const u64 o = h.element_order(x);
    const u64 rp = p_part(o, r);
    return keep ? h.power(x, o / rp) : h.power(x, rp);
  };
  bool nilpotent = true;
  for (u64 r : prime_divisors(h.order()))
    for (const auto& a : gens)
      for (const auto& b : gens) {
        SemiElem x = part(a, r, true), y = part(b, r, false);
        nilpotent = nilpotent && h.compose(x, y) == h.compose(y, x);
      }
  out.push_back(verdict("h_not_nilpotent", !nilpotent, h.describe()));
  bool cyclic = true;
  bool checked = true;
  for (u64 r : prime_divisors(h.order())) {
    if (h.mult_order() % r != 0 || h.galois_order() % r != 0) continue;
    const u64 target = p_part(h.order(), r);
    if (target > limits::kMaxSemilinearClosure) {
      checked = false;
      continue;
    }
    std::vector<SemiElem> sg;
    for (const auto& a : gens) sg.push_back(part(a, r, true));
    SemilinearGroup s = SemilinearGroup::generated(h.p(), h.n(), sg);
    bool has = false;
    for (const auto& e : s.elements()) has = has || s.element_order(e) == s.order();
    cyclic = cyclic && has;
  }
  if (checked) out.push_back(verdict("h_sylows_cyclic", cyclic, ""));
  else out.push_back({"h_sylows_cyclic", Outcome::unchecked, "Sylow subgroup too large to enumerate"});
  return out;
}

/// Graph-level diameter-three checks for a structured specification.
inline TheoremAReport check_theorem_A_spec(const CliffordSpec& spec, const PrimeGraph& g) {
  TheoremAReport r;
  r.mode = "spec";
  GraphMetrics m = metrics(g);
  if (!m.diameter || *m.diameter != 3) {
    r.reason = "graph is not connected of diameter 3";
    return r;
  }
  r.checks = diameter_three_graph_checks(g, m, spec.p(), r.split);
  for (auto& x : semilinear_h_checks(spec.h)) r.checks.push_back(std::move(x));
  std::size_t odd = 0;
  for (u64 q : prime_divisors(spec.n())) odd += q % 2;
  r.checks.push_back(verdict("n_two_odd_primes", odd >= 2, "n = " + std::to_string(spec.n())));
  for (const char* name : {"normal_sylow_p", "fitting_decomposition", "quotient_by_gamma3_disconnected",
                           "chief_factors", "fitting_height_3"})
    r.checks.push_back({name, Outcome::unchecked, "needs an explicit group"});
  r.outcome = combine(r.checks);
  return r;
}

/// Graph-only mode: no structural claims can be tested.
inline TheoremAReport check_theorem_A_graph(const PrimeGraph& g) {
  TheoremAReport r;
  r.mode = "graph-only";
  GraphMetrics m = metrics(g);
  if (!m.diameter || *m.diameter != 3) {
    r.reason = "graph is not connected of diameter 3";
    return r;
  }
  r.checks = diameter_three_graph_checks(g, m, std::nullopt, r.split);
  r.reason = "no group provided; graph-only mode";
  r.outcome = combine(r.checks);
  return r;
}

inline TheoremAReport check_theorem_A(GroupContext& c) {
  TheoremAReport r;
  r.mode = "group";
  if (!c.solvable()) {
    r.reason = "group is not solvable";
    return r;
  }
  const auto& m = c.graph_metrics();
  if (!m.diameter || *m.diameter != 3) {
    r.reason = "graph is not connected of diameter 3";
    return r;
  }
  const PermGroup& g = c.group();
  std::optional<u64> p;
  for (u64 q : c.primes()) {
    const PermGroup& s = c.core(q);
    if (s.order() == p_part(g.order(), q) && !is_abelian(s)) p = q;
  }
  r.checks = diameter_three_graph_checks(c.graph(), m, p, r.split);
  r.checks.push_back(verdict("normal_sylow_p", p.has_value(), ""));
  if (p) {
    const PermGroup& pg = c.core(*p);
    PermGroup h = p_complement(g, *p);
    PermGroup a = intersection(h, centralizer(g, pg));
    r.checks.push_back(verdict("a_central", c.center_group().contains_group(a), ""));
    r.checks.push_back(verdict("fitting_is_p_times_a", pg.order() * a.order() == c.fitting().order(), ""));
    // H/A is isomorphic to G/F.
    r.checks.push_back(verdict("g_over_f_sylow_cyclic", is_sylow_cyclic_quotient(g, c.fitting()), ""));
    r.checks.push_back(verdict("g_over_f_not_nilpotent", c.fitting2().order() != g.order(), ""));
    auto lcs = lower_central_series(pg);
    PermGroup g3 = lcs.size() > 2 ? lcs[2] : PermGroup::trivial(g.degree());
    r.checks.push_back(verdict("quotient_by_gamma3_disconnected",
                               metrics(build_graph(c.quotient_degrees(g3))).components.size() == 2, ""));
    for (auto& x : detail::chief_factor_checks(g, pg, *p, 1, true)) r.checks.push_back(std::move(x));
    r.checks.push_back(verdict("fitting_height_3", fitting_height(g) == 3, ""));
    if (r.split)
      r.checks.push_back(verdict("pi2_is_pi_g_over_f2",
                                 prime_divisors(g.order() / c.fitting2().order()) == r.split->pi2, ""));
  }
  r.outcome = combine(r.checks);
  return r;
}

// ---- the full verdict ---------------------------------------------------------------------

struct ClassificationVerdict {
  bool connected = true;
  std::optional<std::size_t> diameter;
  bool palfy_ok = true;
  std::vector<std::vector<u64>> components;
  std::optional<char> disconnected_type;
  std::optional<DisconnectedReport> disconnected;
  std::optional<TheoremAReport> theorem_a;
  std::optional<TheoremCReport> theorem_c;
  std::optional<std::vector<u64>> pi1, pi2;
  std::vector<CheckResult> lemma_checks;

  Outcome outcome() const {
    std::vector<CheckResult> all = lemma_checks;
    if (disconnected) all.push_back({"classification", disconnected->outcome, ""});
    if (theorem_a) all.push_back({"theorem_a", theorem_a->outcome, ""});
    if (theorem_c) all.push_back({"theorem_c", theorem_c->outcome, ""});
    return combine(all);
  }
};

inline ClassificationVerdict analyze_group(GroupContext& c) {
  ClassificationVerdict v;
  const auto& m = c.graph_metrics();
  v.connected = m.connected();
  v.diameter = m.diameter;
  v.palfy_ok = check_palfy(c.graph());
  v.components = m.components;
  if (!c.solvable()) {
    v.lemma_checks.push_back(check_linear_count(c));
    v.lemma_checks.push_back(check_ito_michler(c));
    return v;
  }
  for (auto f : {check_palfy_condition, check_diameter_bound, check_zuccari, check_brodkey, check_unique_noncentral,
                 check_lemma_u, check_ito_michler, check_linear_count})
    v.lemma_checks.push_back(f(c));
  if (m.components.size() == 2) {
    v.disconnected = classify_disconnected(c);
    if (v.disconnected->type) v.disconnected_type = v.disconnected->type;
    v.theorem_c = check_theorem_C(c);
  }
  if (m.diameter && *m.diameter == 3) {
    v.theorem_a = check_theorem_A(c);
    if (v.theorem_a->split) {
      v.pi1 = v.theorem_a->split->pi1;
      v.pi2 = v.theorem_a->split->pi2;
    }
  }
  return v;
}

inline ClassificationVerdict analyze_spec(const CliffordSpec& spec, const DegreeMultiset& cd) {
  ClassificationVerdict v;
  PrimeGraph g = build_graph(cd);
  GraphMetrics m = metrics(g);
  v.connected = m.connected();
  v.diameter = m.diameter;
  v.palfy_ok = check_palfy(g);
  v.components = m.components;
  v.lemma_checks.push_back(verdict("palfy", v.palfy_ok, ""));
  v.lemma_checks.push_back(verdict("diameter_bound", diameter_bound_holds(g, m), ""));
  if (m.diameter && *m.diameter == 3) {
    v.theorem_a = check_theorem_A_spec(spec, g);
    if (v.theorem_a->split) {
      v.pi1 = v.theorem_a->split->pi1;
      v.pi2 = v.theorem_a->split->pi2;
    }
  }
  return v;
}

inline ClassificationVerdict analyze_degrees(const DegreeMultiset& cd) {
  ClassificationVerdict v;
  PrimeGraph g = build_graph(cd);
  GraphMetrics m = metrics(g);
  v.connected = m.connected();
  v.diameter = m.diameter;
  v.palfy_ok = check_palfy(g);
  v.components = m.components;
  v.lemma_checks.push_back({"palfy", v.palfy_ok ? Outcome::pass : Outcome::unchecked,
                            v.palfy_ok ? "" : "independent triple; no group provided, solvability unknown"});
  if (m.diameter && *m.diameter == 3) {
    v.theorem_a = check_theorem_A_graph(g);
    if (v.theorem_a->split) {
      v.pi1 = v.theorem_a->split->pi1;
      v.pi2 = v.theorem_a->split->pi2;
    }
  }
  return v;
}

}  // namespace cdg
