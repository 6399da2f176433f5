#pragma once

// The analyze pipeline: degrees (oracle for explicit groups, Clifford for specifications),
// the graph, its metrics and the applicable checkers, packaged as a JSON result.

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "checkers.hpp"
#include "clifford.hpp"
#include "constructions.hpp"
#include "report.hpp"

namespace cdg {

struct AnalysisResult {
  std::string name;
  std::string kind;  // "group" or "spec"
  BigInt order = 0;
  std::optional<std::size_t> degree;  // permutation degree
  std::optional<DegreeMultiset> degrees;
  std::optional<PrimeGraph> graph;
  std::optional<ClassificationVerdict> verdict;
  std::optional<CliffordReport> clifford;
  std::optional<DegreeMultiset> clifford_degrees;  // structured groups: the second path
  std::vector<std::string> expectation_failures;
  std::string error;
  json timings = json::object();

  Outcome outcome() const {
    if (!error.empty() || !expectation_failures.empty()) return Outcome::fail;
    if (clifford_degrees && degrees && !same_degrees(*clifford_degrees, *degrees)) return Outcome::fail;
    return verdict ? verdict->outcome() : Outcome::not_applicable;
  }
};

namespace detail {
class Stopwatch {
 public:
  double lap_ms() {
    auto now = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
    return ms;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};
}  // namespace detail

inline AnalysisResult analyze_explicit(const std::string& name, const PermGroup& g,
                                       const std::optional<CliffordSpec>& structure = std::nullopt) {
  AnalysisResult r;
  r.name = name;
  r.kind = "group";
  r.order = g.order();
  r.degree = g.degree();
  detail::Stopwatch sw;
  try {
    GroupContext ctx(g, name);
    r.degrees = ctx.degrees();
    r.timings["degrees_ms"] = sw.lap_ms();
    r.graph = ctx.graph();
    r.verdict = analyze_group(ctx);
    r.timings["checks_ms"] = sw.lap_ms();
    if (structure) {
      CliffordReport rep;
      r.clifford_degrees = clifford_degrees(*structure, &rep);
      r.clifford = rep;
      r.timings["clifford_ms"] = sw.lap_ms();
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

inline AnalysisResult analyze_structured(const CliffordSpec& spec) {
  AnalysisResult r;
  r.name = spec.name;
  r.kind = "spec";
  r.order = spec.group_order();
  detail::Stopwatch sw;
  try {
    CliffordReport rep;
    r.degrees = clifford_degrees(spec, &rep);
    r.clifford = rep;
    r.timings["clifford_ms"] = sw.lap_ms();
    r.graph = build_graph(*r.degrees);
    r.verdict = analyze_spec(spec, *r.degrees);
    r.timings["checks_ms"] = sw.lap_ms();
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

inline AnalysisResult analyze_named(const std::string& id) {
  NamedObject obj = named(id);
  if (auto* g = std::get_if<PermGroup>(&obj)) return analyze_explicit(id, *g);
  return analyze_structured(std::get<CliffordSpec>(obj));
}

inline AnalysisResult analyze_recipe_input(const Recipe& recipe) {
  AnalysisResult r;
  detail::Stopwatch sw;
  Construction c;
  try {
    c = build(recipe);
  } catch (const std::exception& e) {
    r.name = recipe.name;
    r.kind = "group";
    r.error = e.what();
    return r;
  }
  const double build_ms = sw.lap_ms();
  if (c.group) r = analyze_explicit(recipe.name, *c.group, c.clifford);
  else if (c.clifford) r = analyze_structured(*c.clifford);
  r.name = recipe.name;
  r.expectation_failures = check_expectations(recipe, c);
  r.timings["construct_ms"] = build_ms;
  return r;
}

inline json to_json(const AnalysisResult& r, bool timings) {
  json j;
  j["name"] = r.name;
  j["kind"] = r.kind;
  j["outcome"] = to_string(r.outcome());
  j["order"] = big_string(r.order);
  j["permutation_degree"] = opt_json(r.degree);
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.expectation_failures.empty()) j["expectation_failures"] = r.expectation_failures;
  j["degrees"] = r.degrees ? to_json(*r.degrees) : json(nullptr);
  j["graph"] = r.graph ? to_json(*r.graph) : json(nullptr);
  j["verdict"] = r.verdict ? to_json(*r.verdict) : json(nullptr);
  if (r.clifford) j["clifford"] = to_json(*r.clifford);
  if (r.clifford_degrees) {
    j["clifford_degrees"] = to_json(*r.clifford_degrees);
    j["clifford_matches_oracle"] = r.degrees && same_degrees(*r.clifford_degrees, *r.degrees);
  }
  if (timings) j["timings"] = r.timings;
  return j;
}

}  // namespace cdg
