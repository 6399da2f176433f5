#pragma once

// The prime graph Δ(G) of a degree set, with BFS metrics and Palfy's condition.

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "degree_multiset.hpp"
#include "numtheory.hpp"

namespace cdg {

class PrimeGraph {
 public:
  PrimeGraph() = default;
  PrimeGraph(std::vector<u64> vertices, std::set<std::pair<u64, u64>> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(vertices_.begin(), vertices_.end());
    vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
    for (const auto& [a, b] : edges_) {
      if (a >= b) throw std::invalid_argument("prime graph: edges must be ordered pairs (a < b)");
      if (!has_vertex(a) || !has_vertex(b)) throw std::invalid_argument("prime graph: edge endpoint is not a vertex");
    }
  }

  const std::vector<u64>& vertices() const { return vertices_; }
  const std::set<std::pair<u64, u64>>& edges() const { return edges_; }
  bool has_vertex(u64 v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }
  bool adjacent(u64 a, u64 b) const { return a != b && edges_.count({std::min(a, b), std::max(a, b)}); }
  std::size_t index(u64 v) const {
    return static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
  }

  std::vector<u64> neighbors(u64 v) const {
    std::vector<u64> out;
    for (u64 w : vertices_)
      if (adjacent(v, w)) out.push_back(w);
    return out;
  }

  friend bool operator==(const PrimeGraph&, const PrimeGraph&) = default;

 private:
  std::vector<u64> vertices_;
  std::set<std::pair<u64, u64>> edges_;
};

/// p is a vertex iff p divides a degree; pq an edge iff pq divides a degree.
inline PrimeGraph build_graph(const DegreeMultiset& cd) {
  std::set<u64> verts;
  std::set<std::pair<u64, u64>> edges;
  for (u64 d : cd.distinct()) {
    auto ps = prime_divisors(d);
    verts.insert(ps.begin(), ps.end());
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = i + 1; j < ps.size(); ++j) edges.insert({ps[i], ps[j]});
  }
  return PrimeGraph(std::vector<u64>(verts.begin(), verts.end()), edges);
}

struct GraphMetrics {
  std::vector<std::vector<u64>> components;   // sorted, ordered by least vertex
  std::optional<std::size_t> diameter;         // nullopt = infinite (or no vertices)
  std::vector<std::vector<std::optional<std::size_t>>> distances;  // indexed like vertices()
  bool connected() const { return components.size() <= 1; }
};

inline GraphMetrics metrics(const PrimeGraph& g) {
  GraphMetrics m;
  const auto& vs = g.vertices();
  const std::size_t n = vs.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [a, b] : g.edges()) {
    adj[g.index(a)].push_back(g.index(b));
    adj[g.index(b)].push_back(g.index(a));
  }
  m.distances.assign(n, std::vector<std::optional<std::size_t>>(n));
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> queue{s};
    m.distances[s][s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (std::size_t w : adj[queue[h]])
        if (!m.distances[s][w]) {
          m.distances[s][w] = *m.distances[s][queue[h]] + 1;
          queue.push_back(w);
        }
  }
  std::vector<bool> seen(n, false);
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<u64> comp;
    for (std::size_t t = 0; t < n; ++t)
      if (m.distances[s][t]) {
        seen[t] = true;
        comp.push_back(vs[t]);
      }
    m.components.push_back(std::move(comp));
  }
  if (n > 0 && m.components.size() == 1) {
    std::size_t d = 0;
    for (const auto& row : m.distances)
      for (const auto& x : row) d = std::max(d, *x);
    m.diameter = d;
  }
  return m;
}

inline std::optional<std::size_t> distance(const PrimeGraph& g, const GraphMetrics& m, u64 a, u64 b) {
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw std::invalid_argument("distance: not a vertex");
  return m.distances[g.index(a)][g.index(b)];
}

/// Any three distinct vertices contain an adjacent pair. Returns a violating triple if any.
inline std::optional<std::vector<u64>> palfy_violation(const PrimeGraph& g) {
  const auto& v = g.vertices();
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (g.adjacent(v[i], v[j])) continue;
      for (std::size_t k = j + 1; k < v.size(); ++k)
        if (!g.adjacent(v[i], v[k]) && !g.adjacent(v[j], v[k])) return std::vector<u64>{v[i], v[j], v[k]};
    }
  return std::nullopt;
}

inline bool check_palfy(const PrimeGraph& g) { return !palfy_violation(g); }

inline bool induces_complete(const PrimeGraph& g, const std::vector<u64>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.adjacent(vs[i], vs[j])) return false;
  return true;
}

/// The bound for solvable groups: connected of diameter <= 3, or two complete components.
inline bool diameter_bound_holds(const PrimeGraph& g, const GraphMetrics& m) {
  if (m.components.size() <= 1) return !m.diameter || *m.diameter <= 3;
  if (m.components.size() != 2) return false;
  return induces_complete(g, m.components[0]) && induces_complete(g, m.components[1]);
}

struct PiSplit {
  std::vector<u64> pi1, pi2;
  u64 endpoint = 0;  // diametral endpoint r with pi1 = {r} ∪ N(r)
};

/// For diameter 3: pi1 = {r} ∪ N(r) for an endpoint r of a diametral pair, pi2 the rest.
/// With a preferred vertex (the prime p) the endpoint whose closed neighbourhood contains
/// it is used; otherwise the endpoint giving the larger pi1, ties to the least prime.
inline std::optional<PiSplit> pi_split(const PrimeGraph& g, const GraphMetrics& m, std::optional<u64> prefer = {}) {
  if (!m.diameter || *m.diameter != 3) return std::nullopt;
  const auto& vs = g.vertices();
  std::optional<PiSplit> best;
  for (std::size_t a = 0; a < vs.size(); ++a) {
    bool endpoint = false;
    for (std::size_t b = 0; b < vs.size(); ++b) endpoint = endpoint || m.distances[a][b] == 3;
    if (!endpoint) continue;
    PiSplit s;
    s.endpoint = vs[a];
    for (std::size_t b = 0; b < vs.size(); ++b) (m.distances[a][b] && *m.distances[a][b] <= 1 ? s.pi1 : s.pi2).push_back(vs[b]);
    const bool has_pref = prefer && std::binary_search(s.pi1.begin(), s.pi1.end(), *prefer);
    if (!best) {
      best = s;
      continue;
    }
    const bool best_pref = prefer && std::binary_search(best->pi1.begin(), best->pi1.end(), *prefer);
    if (has_pref != best_pref) {
      if (has_pref) best = s;
    } else if (s.pi1.size() > best->pi1.size()) {
      best = s;
    }
  }
  return best;
}

/// DOT with vertices labelled by primes and one fill colour per component.
inline std::string to_dot(const PrimeGraph& g, const std::string& name = "delta") {
  static const char* palette[] = {"lightblue", "lightpink", "palegreen", "khaki", "plum", "lightsalmon"};
  GraphMetrics m = metrics(g);
  std::ostringstream o;
  o << "graph \"" << name << "\" {\n  node [shape=circle, style=filled];\n";
  for (std::size_t c = 0; c < m.components.size(); ++c)
    for (u64 v : m.components[c])
      o << "  " << v << " [label=\"" << v << "\", fillcolor=" << palette[c % 6] << "];\n";
  for (const auto& [a, b] : g.edges()) o << "  " << a << " -- " << b << ";\n";
  o << "}\n";
  return o.str();
}

}  // namespace cdg
