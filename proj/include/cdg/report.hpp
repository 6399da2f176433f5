#pragma once

// JSON encodings of the analysis types. Big integers (group orders, sums of squares) are
// written as decimal strings; everything else fits a JSON number.

#include <cstdint>
#include <string>

#include "json.hpp"

#include "checkers.hpp"
#include "clifford.hpp"
#include "degree_multiset.hpp"
#include "prime_graph.hpp"

namespace cdg {

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

/// FNV-1a, 64 bit, as 16 hex digits.
inline std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = hex[h & 15];
  return s;
}

inline std::string big_string(const BigInt& x) { return x.str(); }

inline json to_json(const DegreeMultiset& d) {
  json mult = json::array();
  for (const auto& [deg, count] : d.multiplicities()) mult.push_back({deg, count});
  return {{"provenance", to_string(d.provenance())},
          {"group_order", big_string(d.group_order())},
          {"character_count", d.count()},
          {"multiplicities", mult},
          {"distinct", d.distinct()},
          {"sum_of_squares", big_string(d.sum_of_squares())}};
}

/// Integer when connected, "infinite" when disconnected, null for the empty graph.
inline json diameter_json(std::size_t components, const std::optional<std::size_t>& diameter) {
  if (components > 1) return "infinite";
  return diameter ? json(*diameter) : json(nullptr);
}

inline json diameter_json(const GraphMetrics& m) { return diameter_json(m.components.size(), m.diameter); }

inline json to_json(const PrimeGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  GraphMetrics m = metrics(g);
  return {{"vertices", g.vertices()}, {"edges", edges}, {"components", m.components}, {"diameter", diameter_json(m)}};
}

inline json to_json(const CheckResult& c) {
  json j = {{"name", c.name}, {"outcome", to_string(c.outcome)}};
  if (!c.reason.empty()) j["reason"] = c.reason;
  return j;
}

inline json to_json(const std::vector<CheckResult>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(to_json(c));
  return a;
}

template <class T>
json opt_json(const std::optional<T>& x) {
  return x ? json(*x) : json(nullptr);
}

inline json to_json(const DisconnectedReport& r) {
  return {{"outcome", to_string(r.outcome)},
          {"type", r.type ? json(std::string(1, r.type)) : json(nullptr)},
          {"p", opt_json(r.p)},
          {"predicted_components", r.predicted},
          {"components", r.actual},
          {"reason", r.reason},
          {"checks", to_json(r.checks)}};
}

inline json to_json(const TheoremCReport& r) {
  json branch = r.branch == 1 ? json("i") : r.branch == 2 ? json("ii") : json(nullptr);
  return {{"outcome", to_string(r.outcome)}, {"p", opt_json(r.p)}, {"branch", branch},
          {"reason", r.reason},              {"checks", to_json(r.checks)}};
}

inline json to_json(const TheoremAReport& r) {
  json j = {{"outcome", to_string(r.outcome)}, {"mode", r.mode}, {"reason", r.reason}};
  if (r.split) j["split"] = {{"pi1", r.split->pi1}, {"pi2", r.split->pi2}, {"endpoint", r.split->endpoint}};
  else j["split"] = nullptr;
  j["checks"] = to_json(r.checks);
  return j;
}

inline json to_json(const ClassificationVerdict& v) {
  json j;
  j["outcome"] = to_string(v.outcome());
  j["connected"] = v.connected;
  j["diameter"] = diameter_json(v.components.size(), v.diameter);
  j["components"] = v.components;
  j["palfy"] = v.palfy_ok;
  j["disconnected_type"] = v.disconnected_type ? json(std::string(1, *v.disconnected_type)) : json(nullptr);
  j["pi1"] = opt_json(v.pi1);
  j["pi2"] = opt_json(v.pi2);
  j["classification"] = v.disconnected ? to_json(*v.disconnected) : json(nullptr);
  j["theorem_a"] = v.theorem_a ? to_json(*v.theorem_a) : json(nullptr);
  j["theorem_c"] = v.theorem_c ? to_json(*v.theorem_c) : json(nullptr);
  j["lemma_checks"] = to_json(v.lemma_checks);
  return j;
}

inline json to_json(const CliffordReport& r) {
  json top = json::array();
  for (const auto& [d, c] : r.top_degrees) top.push_back({d, c});
  json layers = json::array();
  for (const auto& l : r.layers) {
    json orbits = json::array();
    for (const auto& o : l.orbits) {
      json stab = json::array();
      for (const auto& [d, c] : o.stabilizer_degrees) stab.push_back({d, c});
      orbits.push_back({{"representative", o.representative},
                        {"size", o.size},
                        {"stabilizer_order", o.stabilizer_order},
                        {"theta_degree", o.theta.degree},
                        {"theta_count", o.theta.count},
                        {"stabilizer_degrees", stab}});
    }
    layers.push_back({{"effective_exponent", l.effective_exponent},
                      {"irreducible", l.irreducible},
                      {"irreducibility_certified", l.irreducibility_certified},
                      {"orbit_total", l.orbit_total},
                      {"orbits", orbits}});
  }
  return {{"top_degrees", top}, {"layers", layers}};
}

/// The common header of every report.
inline json report_header(const std::string& command, std::uint64_t seed) {
  return {{"schema_version", kSchemaVersion}, {"tool_version", kToolVersion}, {"command", command}, {"seed", seed}};
}

}  // namespace cdg
