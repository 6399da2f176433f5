#pragma once

// Shared includes and brute-force reference computations used as independent oracles.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "cdg/pipeline.hpp"
#include "cdg/suites.hpp"

#ifndef CDG_DATA_DIR
#define CDG_DATA_DIR "data"
#endif

namespace cdgtest {

using namespace cdg;

/// All elements by closure under right multiplication by generators.
inline std::vector<Perm> closure(const PermGroup& g) {
  std::unordered_set<Perm, PermHash> seen{g.identity()};
  std::vector<Perm> out{g.identity()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& s : g.generators()) {
      Perm y = out[i] * s;
      if (seen.insert(y).second) out.push_back(y);
    }
  return out;
}

/// Number of conjugacy classes, by direct conjugation of every pair.
inline std::size_t brute_class_count(const PermGroup& g) {
  auto els = closure(g);
  std::unordered_set<Perm, PermHash> done;
  std::size_t classes = 0;
  for (const auto& x : els) {
    if (done.count(x)) continue;
    ++classes;
    for (const auto& y : els) done.insert(x.conj(y));
  }
  return classes;
}

/// |G : G'| by enumerating the derived subgroup's closure from all commutators.
inline u64 brute_abelianization(const PermGroup& g) {
  auto els = closure(g);
  std::vector<Perm> comms;
  std::unordered_set<Perm, PermHash> seen;
  for (const auto& x : els)
    for (const auto& y : els) {
      Perm c = commutator(x, y);
      if (seen.insert(c).second) comms.push_back(c);
    }
  PermGroup d(g.degree(), comms);
  return static_cast<u64>(els.size()) / static_cast<u64>(closure(d).size());
}

inline std::vector<u64> trial_primes(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::string data_path(const std::string& f) { return std::string(CDG_DATA_DIR) + "/" + f; }

}  // namespace cdgtest
