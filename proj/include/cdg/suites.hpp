#pragma once

// Verifier suites. Each suite runs a checker over its documented sweep and returns a
// SuiteResult with one lemma record per instance ({lemma, params, holds, witness}).
// Corpus suites read precomputed CorpusEntry values so the corpus is analyzed once.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "checkers.hpp"
#include "clifford.hpp"
#include "constructions.hpp"
#include "order_search.hpp"
#include "ramification.hpp"
#include "report.hpp"
#include "semilin_checks.hpp"

namespace cdg {

struct SuiteResult {
  std::string suite;
  json params = json::object();
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::vector<std::string> failures;
  json records = json::array();
  json summary = json::object();

  void record(const std::string& lemma, json p, bool holds, json witness = json::object()) {
    ++instances;
    records.push_back({{"lemma", lemma}, {"params", std::move(p)}, {"holds", holds}, {"witness", std::move(witness)}});
  }
  void fail(std::string msg) {
    ++violations;
    if (failures.size() < 20) failures.push_back(std::move(msg));
  }
  Outcome outcome() const {
    if (violations) return Outcome::fail;
    return instances ? Outcome::pass : Outcome::not_applicable;
  }
  json to_json() const {
    return {{"suite", suite},     {"outcome", cdg::to_string(outcome())}, {"params", params},
            {"instances", instances}, {"violations", violations},           {"failures", failures},
            {"summary", summary}, {"records", records}};
  }
};

// ---- Zsigmondy -------------------------------------------------------------------------

/// Part of a^n - 1 prime to every a^j - 1, j < n, by repeated gcds. Its prime divisors
/// are exactly the primitive prime divisors.
inline BigInt brute_primitive_part(u64 a, u64 n) {
  BigInt r = big_pow(a, static_cast<unsigned>(n)) - 1;
  for (u64 j = 1; j < n && r > 1; ++j) {
    BigInt g = boost::multiprecision::gcd(r, BigInt(big_pow(a, static_cast<unsigned>(j)) - 1));
    while (g > 1) {
      r /= g;
      g = boost::multiprecision::gcd(r, g);
    }
  }
  return r;
}

inline bool zsigmondy_statement_exception(u64 a, u64 n) {
  return (a == 2 && n == 6) || (n == 2 && ((a + 1) & a) == 0);
}

inline SuiteResult suite_zsigmondy(u64 a_max, u64 n_max) {
  SuiteResult s;
  s.suite = "zsigmondy";
  s.params = {{"a_max", a_max}, {"n_max", n_max}};
  json exceptions = json::array();
  std::size_t minimality_complete = 0;
  for (u64 a = 2; a <= a_max; ++a)
    for (u64 n = 1; n <= n_max; ++n) {
      auto t = zsigmondy_ppd(a, n);
      BigInt rest = brute_primitive_part(a, n);
      json p = {{"a", a}, {"n", n}};
      if (!t) {
        exceptions.push_back({a, n});
        const bool degenerate = a == 2 && n == 1;  // a - 1 = 1 has no prime divisor at all
        const bool ok = rest == 1 && (zsigmondy_statement_exception(a, n) || degenerate);
        s.record("zsigmondy", p, ok, {{"brute_primitive_part", big_string(rest)}, {"degenerate", degenerate}});
        if (!ok) s.fail("(" + std::to_string(a) + "," + std::to_string(n) + "): no ppd reported");
        continue;
      }
      const BigInt& tv = *t;
      bool ok = rest > 1 && rest % tv == 0 && tv > n && tv % n == 1 % n && !zsigmondy_statement_exception(a, n);
      for (u64 j = 1; j < n && ok; ++j) ok = boost::multiprecision::powm(BigInt(a), BigInt(j), tv) != 1;
      // Minimality: the least prime of the gcd-reduced part, by full factorization.
      bool complete = false;
      if (ok && boost::multiprecision::msb(rest) < 127) {
        std::vector<u128> primes;
        detail::factor_into(detail::to_u128(rest), primes);
        ok = detail::from_u128(*std::min_element(primes.begin(), primes.end())) == tv;
        complete = true;
      }
      minimality_complete += complete;
      s.record("zsigmondy", p, ok, {{"t", big_string(tv)}, {"minimality_certified", complete}});
      if (!ok) s.fail("(" + std::to_string(a) + "," + std::to_string(n) + "): t = " + big_string(tv) + " rejected");
    }
  // The statement: exceptions are (2,6) and (a,2) with a+1 a power of 2.
  json expected = json::array();
  for (u64 a = 2; a <= a_max; ++a)
    for (u64 n = 1; n <= n_max; ++n)
      if (zsigmondy_statement_exception(a, n) || (a == 2 && n == 1)) expected.push_back({a, n});
  s.summary = {{"exceptions", exceptions},
               {"expected", expected},
               {"matches_statement", exceptions == expected},
               {"minimality_certified", minimality_complete}};
  if (exceptions != expected) s.fail("exception set differs from the statement");
  return s;
}

// ---- corpus ---------------------------------------------------------------------------

struct RamificationOutcome {
  std::string label;
  u64 p = 0;
  u64 p_order = 0;
  std::size_t m = 0, n = 0;
  u64 count = 0;
  bool bound_applies = false;
  u64 bound = 0;
  bool bound_met = true;
  bool oracle_checked = false;
  u64 oracle_compared = 0;
  u64 disagreements = 0;
  std::vector<u64> disagreeing;
};

struct CorpusEntry {
  Recipe recipe;
  std::string error;
  std::vector<std::string> expectation_failures;
  bool has_group = false;
  BigInt order = 0;
  std::size_t degree = 0;
  bool solvable = true;
  std::optional<DegreeMultiset> degrees;
  std::optional<PrimeGraph> graph;
  std::optional<ClassificationVerdict> verdict;
  bool structured = false;
  std::optional<DegreeMultiset> clifford;
  std::string clifford_error;
  std::vector<RamificationOutcome> ramification;
};

inline constexpr u64 kRamificationOracleOrder = 2000;

inline std::vector<RamificationOutcome> ramification_outcomes(const PermGroup& g, const std::string& name) {
  std::vector<RamificationOutcome> out;
  for (auto& in : ramification_instances(g, name)) {
    RamificationSetup setup(in.p_group, in.n);
    auto cnt = count_non_fully_ramified(setup);
    RamificationOutcome o;
    o.label = in.label;
    o.p = setup.p();
    o.p_order = in.p_group.order();
    o.m = cnt.m;
    o.n = cnt.n;
    o.count = cnt.count;
    o.bound_applies = cnt.bound_applies();
    o.bound = cnt.bound();
    o.bound_met = cnt.bound_met();
    if (o.p_order <= kRamificationOracleOrder) {
      auto agree = compare_ramification_criteria(setup);
      o.oracle_checked = true;
      o.oracle_compared = agree.checked;
      o.disagreements = agree.disagreements;
      o.disagreeing = agree.disagreeing_lambdas;
    }
    out.push_back(std::move(o));
  }
  return out;
}

/// Builds one recipe and runs every corpus-level computation on it.
inline CorpusEntry analyze_recipe(const Recipe& r) {
  CorpusEntry e;
  e.recipe = r;
  try {
    Construction c = build(r);
    e.expectation_failures = check_expectations(r, c);
    e.structured = c.clifford.has_value();
    if (c.group) {
      e.has_group = true;
      e.order = c.group->order();
      e.degree = c.group->degree();
      GroupContext ctx(*c.group, r.name);
      e.solvable = ctx.solvable();
      e.degrees = ctx.degrees();
      e.graph = ctx.graph();
      e.verdict = analyze_group(ctx);
      if (e.solvable) e.ramification = ramification_outcomes(*c.group, r.name);
    }
    if (c.clifford) {
      try {
        e.clifford = clifford_degrees(*c.clifford);
      } catch (const std::exception& ex) {
        e.clifford_error = ex.what();
      }
      if (!c.group && e.clifford) {
        e.order = e.clifford->group_order();
        e.degrees = e.clifford;
        e.graph = build_graph(*e.clifford);
        e.verdict = analyze_spec(*c.clifford, *e.clifford);
      }
    }
  } catch (const std::exception& ex) {
    e.error = ex.what();
  }
  return e;
}

inline std::vector<CorpusEntry> sorted_by_name(std::vector<CorpusEntry> v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.recipe.name < b.recipe.name; });
  return v;
}

inline json corpus_params(const std::string& corpus, const std::vector<CorpusEntry>& entries) {
  std::size_t solvable = 0;
  BigInt lo = 0, hi = 0;
  for (const auto& e : entries) {
    if (!e.has_group || !e.solvable || !e.error.empty()) continue;
    if (solvable == 0 || e.order < lo) lo = e.order;
    if (e.order > hi) hi = e.order;
    ++solvable;
  }
  return {{"corpus", corpus},
          {"recipes", entries.size()},
          {"solvable_groups", solvable},
          {"min_order", big_string(lo)},
          {"max_order", big_string(hi)}};
}

namespace detail {
inline bool corpus_entry_usable(SuiteResult& s, const CorpusEntry& e) {
  if (!e.error.empty()) {
    s.fail(e.recipe.name + ": " + e.error);
    return false;
  }
  for (const auto& x : e.expectation_failures) s.fail(e.recipe.name + ": expectation " + x);
  return e.degrees.has_value();
}
}  // namespace detail

inline SuiteResult suite_palfy(const std::string& corpus, const std::vector<CorpusEntry>& entries) {
  SuiteResult s;
  s.suite = "palfy";
  s.params = corpus_params(corpus, entries);
  for (const auto& e : entries) {
    if (!detail::corpus_entry_usable(s, e) || !e.solvable) continue;
    auto bad = palfy_violation(*e.graph);
    json w = bad ? json{{"independent_triple", *bad}} : json::object();
    s.record("palfy", {{"group", e.recipe.name}, {"order", big_string(e.order)}}, !bad, w);
    if (bad) s.fail(e.recipe.name + ": independent triple " + primes_string(*bad));
  }
  return s;
}

inline SuiteResult suite_diameter(const std::string& corpus, const std::vector<CorpusEntry>& entries) {
  SuiteResult s;
  s.suite = "diameter";
  s.params = corpus_params(corpus, entries);
  for (const auto& e : entries) {
    if (!detail::corpus_entry_usable(s, e) || !e.solvable) continue;
    GraphMetrics m = metrics(*e.graph);
    const bool ok = diameter_bound_holds(*e.graph, m);
    s.record("diameter_bound", {{"group", e.recipe.name}},
             ok, {{"components", m.components}, {"diameter", diameter_json(m)}});
    if (!ok) s.fail(e.recipe.name + ": diameter bound violated");
  }
  return s;
}

/// The corpus lemma checks (abelian Fitting diameter, Fitting quotient primes, unique
/// non-central core, graph modulo the center) and the classification verdicts.
inline SuiteResult suite_corpus_theorems(const std::string& corpus, const std::vector<CorpusEntry>& entries) {
  SuiteResult s;
  s.suite = "corpus-theorems";
  s.params = corpus_params(corpus, entries);
  std::map<std::string, std::map<std::string, std::size_t>> tally;
  json type_c_ii = json::array();
  for (const auto& e : entries) {
    if (!detail::corpus_entry_usable(s, e) || !e.solvable || !e.verdict || !e.has_group) continue;
    const auto& v = *e.verdict;
    std::vector<CheckResult> all = v.lemma_checks;
    if (v.disconnected) all.push_back({"classification", v.disconnected->outcome, v.disconnected->reason});
    if (v.theorem_c) all.push_back({"theorem_c", v.theorem_c->outcome, v.theorem_c->reason});
    if (v.theorem_a) all.push_back({"theorem_a", v.theorem_a->outcome, v.theorem_a->reason});
    if (v.theorem_c && v.theorem_c->branch == 2) type_c_ii.push_back(e.recipe.name);
    for (const auto& c : all) {
      ++tally[c.name][to_string(c.outcome)];
      if (c.outcome == Outcome::not_applicable) continue;
      s.record(c.name, {{"group", e.recipe.name}}, c.outcome != Outcome::fail,
               {{"outcome", to_string(c.outcome)}, {"reason", c.reason}});
      if (c.outcome == Outcome::fail) s.fail(e.recipe.name + ": " + c.name + " " + c.reason);
    }
  }
  json t = json::object();
  for (const auto& [name, m] : tally) t[name] = m;
  s.summary = {{"outcomes", t}, {"theorem_c_branch_ii", type_c_ii}};
  return s;
}

inline SuiteResult suite_ramification(const std::string& corpus, const std::vector<CorpusEntry>& entries) {
  SuiteResult s;
  s.suite = "ramification";
  s.params = corpus_params(corpus, entries);
  s.params["oracle_order_bound"] = kRamificationOracleOrder;
  std::size_t bound_instances = 0, oracle_instances = 0, compared = 0;
  for (const auto& e : entries) {
    if (!detail::corpus_entry_usable(s, e)) continue;
    for (const auto& o : e.ramification) {
      json p = {{"instance", o.label}, {"p", o.p}, {"P_order", o.p_order}, {"m", o.m}, {"n", o.n}};
      if (o.bound_applies) {
        ++bound_instances;
        s.record("non_fully_ramified_bound", p, o.bound_met, {{"count", o.count}, {"bound", o.bound}});
        if (!o.bound_met)
          s.fail(o.label + ": " + std::to_string(o.count) + " < " + std::to_string(o.bound) + " non-fully-ramified");
      }
      if (o.oracle_checked) {
        ++oracle_instances;
        compared += o.oracle_compared;
        s.record("form_vs_characters", p, o.disagreements == 0,
                 {{"compared", o.oracle_compared}, {"disagreeing_lambda_indices", o.disagreeing}});
        if (o.disagreements) s.fail(o.label + ": form and character criteria disagree");
      }
    }
  }
  s.summary = {{"bound_instances", bound_instances},
               {"oracle_instances", oracle_instances},
               {"characters_compared", compared}};
  return s;
}

inline SuiteResult suite_clifford(const std::string& corpus, const std::vector<CorpusEntry>& entries,
                                  u64 order_bound = limits::kMaxOracleOrder) {
  SuiteResult s;
  s.suite = "clifford";
  s.params = corpus_params(corpus, entries);
  s.params["order_bound"] = order_bound;
  for (const auto& e : entries) {
    if (!detail::corpus_entry_usable(s, e) || !e.structured || !e.has_group) continue;
    if (e.order > order_bound) continue;
    json p = {{"group", e.recipe.name}, {"order", big_string(e.order)}};
    if (!e.clifford) {
      s.record("clifford_equals_oracle", p, false, {{"error", e.clifford_error}});
      s.fail(e.recipe.name + ": clifford failed: " + e.clifford_error);
      continue;
    }
    const bool same = same_degrees(*e.clifford, *e.degrees);
    s.record("clifford_equals_oracle", p, same,
             {{"clifford", e.clifford->to_string()}, {"oracle", e.degrees->to_string()}});
    if (!same) s.fail(e.recipe.name + ": clifford " + e.clifford->to_string() + " vs oracle " + e.degrees->to_string());
  }
  return s;
}

// ---- fixtures ---------------------------------------------------------------------------

inline SuiteResult suite_sl23() {
  SuiteResult s;
  s.suite = "sl23";
  PermGroup g = sl23();
  GroupContext ctx(g, "sl23");
  const auto& cd = ctx.degrees();
  const std::map<u64, u64> want{{1, 3}, {2, 3}, {3, 1}};
  s.record("degrees", {{"group", "sl23"}}, cd.multiplicities() == want && cd.sum_of_squares() == 24,
           {{"degrees", cd.to_string()}});
  const auto& m = ctx.graph_metrics();
  const std::vector<std::vector<u64>> comps{{2}, {3}};
  s.record("components", {{"group", "sl23"}}, m.components == comps, {{"components", m.components}});
  auto v = analyze_group(ctx);
  const bool branch_i = v.theorem_c && v.theorem_c->branch == 1 && v.theorem_c->outcome == Outcome::pass;
  s.record("theorem_c_branch_i", {{"group", "sl23"}}, branch_i,
           v.theorem_c ? to_json(*v.theorem_c) : json::object());
  if (!(cd.multiplicities() == want)) s.fail("sl23: degrees " + cd.to_string());
  if (m.components != comps) s.fail("sl23: components differ");
  if (!branch_i) s.fail("sl23: branch (i) not confirmed");
  s.summary = {{"verdict", to_json(v)}};
  return s;
}

inline SuiteResult suite_lewis() {
  SuiteResult s;
  s.suite = "lewis";
  CliffordSpec spec = lewis_spec();
  CliffordReport rep;
  DegreeMultiset cd = clifford_degrees(spec, &rep);
  PrimeGraph g = build_graph(cd);
  GraphMetrics m = metrics(g);
  auto v = analyze_spec(spec, cd);
  const BigInt want_order = big_pow(2, 45) * (big_pow(2, 15) - 1) * 15;
  auto check = [&](const std::string& name, bool ok, json w) {
    s.record(name, {{"spec", "lewis"}}, ok, std::move(w));
    if (!ok) s.fail("lewis: " + name);
  };
  check("vertices", g.vertices() == std::vector<u64>{2, 3, 5, 7, 31, 151}, {{"vertices", g.vertices()}});
  check("diameter_3", m.diameter && *m.diameter == 3, {{"diameter", opt_json(m.diameter)}});
  bool close = g.has_vertex(2);
  for (u64 w : g.vertices()) {
    if (!close) break;
    auto d = distance(g, m, 2, w);
    close = d && *d <= 2;
  }
  check("distance_from_2", close, json::object());
  const bool split = v.pi1 && v.pi2 && *v.pi1 == std::vector<u64>{2, 7, 31, 151} && *v.pi2 == std::vector<u64>{3, 5};
  check("pi_split", split, {{"pi1", opt_json(v.pi1)}, {"pi2", opt_json(v.pi2)}});
  check("pi1_at_least_2_pow_pi2", v.pi1 && v.pi2 && v.pi1->size() >= (std::size_t{1} << v.pi2->size()), json::object());
  check("sum_of_squares", cd.sum_of_squares() == want_order && spec.group_order() == want_order,
        {{"sum_of_squares", big_string(cd.sum_of_squares())}, {"expected", big_string(want_order)}});
  check("theorem_a_graph_checks", v.theorem_a && v.theorem_a->outcome == Outcome::pass,
        v.theorem_a ? to_json(*v.theorem_a) : json::object());
  s.summary = {{"degrees", to_json(cd)}, {"graph", to_json(g)}, {"clifford", to_json(rep)}};
  return s;
}

inline SuiteResult suite_minimal_order(unsigned lo_exp, unsigned hi_exp) {
  SuiteResult s;
  s.suite = "minimal-order";
  s.params = {{"min_bound", "2^" + std::to_string(lo_exp)}, {"max_bound", "2^" + std::to_string(hi_exp)}};
  const BigInt want = big_pow(2, 45) * (big_pow(2, 15) - 1) * 15;
  std::vector<u64> bounds;
  for (unsigned k = lo_exp; k <= hi_exp && k < 64; ++k) {
    bounds.push_back(u64{1} << k);
    if (k < hi_exp) bounds.push_back((u64{1} << k) + (u64{1} << k) / 2);  // between powers of two
  }
  for (u64 b : bounds) {
    auto r = minimal_order_search(b);
    const bool ok = r && r->p == 2 && r->n == 15 && r->d == 15 && r->order == want;
    json w = r ? json{{"p", r->p}, {"n", r->n}, {"d", r->d}, {"order", big_string(r->order)}} : json(nullptr);
    s.record("minimal_order", {{"bound", b}}, ok, w);
    if (!ok) s.fail("bound " + std::to_string(b) + ": unexpected result");
  }
  // Below 2^15 there is no admissible field at all.
  if (lo_exp > 1) {
    auto r = minimal_order_search((u64{1} << lo_exp) - 1);
    s.summary["below_range"] = r ? json(big_string(r->order)) : json(nullptr);
  }
  s.summary["expected_order"] = big_string(want);
  return s;
}

// ---- semilinear lemmas ------------------------------------------------------------------

inline SuiteResult suite_semilinear0(const std::vector<u64>& exhaustive, u64 sampled_p, unsigned sampled_n,
                                     std::size_t samples, std::uint64_t seed) {
  SuiteResult s;
  s.suite = "semilinear0";
  s.params = {{"exhaustive_fields", exhaustive}, {"sampled_field", std::to_string(sampled_p) + "^" + std::to_string(sampled_n)},
              {"samples", samples}, {"seed", seed}};
  auto ex = sweep_semilinear0_exhaustive(exhaustive);
  s.record("semilinear0_exhaustive", {{"fields", exhaustive}}, ex.violations == 0, {{"instances", ex.instances}, {"failures", ex.failures}});
  for (auto& f : ex.failures) s.fail(f);
  auto sm = sweep_semilinear0_sampled(sampled_p, sampled_n, samples, seed);
  s.record("semilinear0_sampled", {{"p", sampled_p}, {"n", sampled_n}, {"seed", seed}}, sm.violations == 0,
           {{"instances", sm.instances}, {"failures", sm.failures}});
  for (auto& f : sm.failures) s.fail(f);
  s.violations = ex.violations + sm.violations;
  s.summary = {{"exhaustive_instances", ex.instances}, {"sampled_instances", sm.instances}};
  return s;
}

inline SuiteResult suite_modules(u64 qm_max) {
  SuiteResult s;
  s.suite = "modules";
  s.params = {{"qm_max", qm_max}};
  auto sum = sweep_module_lemmas(qm_max);
  s.record("module_lemmas", {{"qm_max", qm_max}}, sum.violations == 0,
           {{"instances", sum.instances}, {"failures", sum.failures}});
  for (auto& f : sum.failures) s.fail(f);
  s.violations = sum.violations;
  s.summary = {{"instances", sum.instances},
               {"matrix_runs", sum.matrix_runs},
               {"disagreements", sum.disagreements},
               {"wedge_positive", sum.wedge_positive},
               {"self_contragredient_positive", sum.dual_positive}};
  return s;
}

/// Every subgroup of Γ(p^n) for the listed fields; not-applicable where no ppd divides |H|.
inline SuiteResult suite_ppd(const std::vector<u64>& fields) {
  SuiteResult s;
  s.suite = "ppd";
  s.params = {{"fields", fields}};
  std::size_t skipped = 0;
  for (u64 q : fields) {
    auto pp = factorize(q);
    if (pp.size() != 1) throw std::invalid_argument("ppd suite: " + std::to_string(q) + " is not a prime power");
    for (const auto& h : all_semilinear_subgroups(pp[0].prime, pp[0].exponent)) {
      auto r = check_ppd_centralizer(h);
      if (!r.applicable) {
        ++skipped;
        continue;
      }
      json w = {{"t", r.t}, {"centralizer_order", r.centralizer_order}, {"x0_order", r.x0_order},
                {"fitting_order", opt_json(r.fitting_order)}};
      s.record("ppd_centralizer", {{"H", h.describe()}}, r.holds, w);
      if (!r.holds) s.fail(h.describe() + ": centralizer of T0 is not H ∩ Γ0 = F(H)");
    }
  }
  s.summary = {{"not_applicable", skipped}};
  return s;
}

inline GModule module_from_flat(u64 p, std::size_t dim, const std::vector<std::vector<u64>>& mats) {
  PrimeField f{p};
  std::vector<MatrixP> gens;
  for (const auto& flat : mats) {
    MatrixP m(f, dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = flat[i * dim + j] % p;
    gens.push_back(std::move(m));
  }
  return GModule(p, dim, std::move(gens));
}

/// Generated instances: every subgroup of Γ(q) acting on GF(q) for small q, twisted
/// multiplier actions, and a few linear groups that are not semilinear.
inline SuiteResult suite_semilinear1(const std::vector<u64>& fields, std::uint64_t seed) {
  SuiteResult s;
  s.suite = "semilinear1";
  s.params = {{"fields", fields}, {"seed", seed}};
  std::vector<std::pair<std::string, GModule>> mods;
  for (u64 q : fields) {
    auto pp = factorize(q);
    GaloisField f(pp[0].prime, pp[0].exponent);
    for (const auto& h : all_semilinear_subgroups(pp[0].prime, pp[0].exponent)) {
      mods.emplace_back(h.describe(), semilinear_module(h, f));
      if (h.units() > 2) mods.emplace_back(h.describe() + " e=" + std::to_string(h.units() - 1), semilinear_module(h, f, h.units() - 1));
    }
  }
  mods.emplace_back("SL(2,3) natural", module_from_flat(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}}));
  mods.emplace_back("GL(2,3) natural", module_from_flat(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 0, 0, 1}}));
  mods.emplace_back("Q8 in GL(2,3)", module_from_flat(3, 2, {{0, 1, 2, 0}, {1, 1, 1, 2}}));
  mods.emplace_back("S3 over GF(5)", module_from_flat(5, 2, {{0, 1, 1, 0}, {0, 4, 1, 4}}));
  mods.emplace_back("Q8 in GL(2,5)", module_from_flat(5, 2, {{0, 1, 4, 0}, {2, 0, 0, 3}}));
  std::size_t hypothesis = 0, exceptional = 0;
  json exceptional_names = json::array();
  for (const auto& [name, m] : mods) {
    for (const auto& r : check_semilinear1(m, seed)) {
      if (!r.hypothesis) continue;
      ++hypothesis;
      if (r.exceptional) {
        ++exceptional;
        exceptional_names.push_back(name + " s=" + std::to_string(r.s) + (r.embeds ? "" : " (does not embed)"));
        continue;
      }
      s.record("sylow_in_centralizers", {{"module", name}, {"s", r.s}}, r.holds,
               {{"irreducible", r.irreducible}, {"embeds", r.embeds}, {"x0_order", r.x0_order}});
      if (!r.holds) s.fail(name + " s=" + std::to_string(r.s) + ": conclusion fails");
    }
  }
  s.summary = {{"modules", mods.size()}, {"hypothesis_instances", hypothesis},
               {"exceptional_instances", exceptional}, {"exceptional", exceptional_names}};
  return s;
}

inline std::vector<std::string> suite_names() {
  return {"zsigmondy", "palfy",        "diameter", "sl23",          "ramification", "semilinear0",
          "modules",   "clifford",     "lewis",    "minimal-order", "corpus-theorems", "ppd",
          "semilinear1"};
}

inline bool is_corpus_suite(const std::string& s) {
  return s == "palfy" || s == "diameter" || s == "ramification" || s == "clifford" || s == "corpus-theorems";
}

}  // namespace cdg
