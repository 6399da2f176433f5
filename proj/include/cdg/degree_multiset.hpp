#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "numtheory.hpp"

namespace cdg {

enum class Provenance { oracle, clifford, manual };

inline std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::oracle: return "oracle";
    case Provenance::clifford: return "clifford";
    case Provenance::manual: return "manual";
  }
  return "manual";
}

inline Provenance provenance_from_string(const std::string& s) {
  if (s == "oracle") return Provenance::oracle;
  if (s == "clifford") return Provenance::clifford;
  if (s == "manual") return Provenance::manual;
  throw std::invalid_argument("unknown provenance '" + s + "'");
}

/// Irreducible character degrees with multiplicities. Construction enforces
/// sum of d^2 = |G| and the presence of the trivial degree.
class DegreeMultiset {
 public:
  DegreeMultiset(BigInt group_order, std::map<u64, u64> multiplicities, Provenance provenance)
      : order_(std::move(group_order)), mult_(std::move(multiplicities)), prov_(provenance) {
    for (auto it = mult_.begin(); it != mult_.end();) {
      if (it->first == 0) throw std::invalid_argument("degree multiset: zero degree");
      it = it->second == 0 ? mult_.erase(it) : std::next(it);
    }
    if (!mult_.count(1)) throw std::invalid_argument("degree multiset: degree 1 missing");
    BigInt s = sum_of_squares();
    if (s != order_)
      throw std::invalid_argument("degree multiset: sum of squares " + s.str() + " != group order " + order_.str());
  }

  /// A multiset whose squares need not sum to anything; for graph-only inputs.
  static DegreeMultiset unchecked(std::map<u64, u64> multiplicities) {
    DegreeMultiset d;
    d.mult_ = std::move(multiplicities);
    d.prov_ = Provenance::manual;
    d.order_ = d.sum_of_squares();
    return d;
  }

  const BigInt& group_order() const { return order_; }
  const std::map<u64, u64>& multiplicities() const { return mult_; }
  Provenance provenance() const { return prov_; }

  std::vector<u64> distinct() const {
    std::vector<u64> d;
    for (const auto& [k, v] : mult_) d.push_back(k);
    return d;
  }

  u64 count() const {
    u64 c = 0;
    for (const auto& [k, v] : mult_) c += v;
    return c;
  }

  u64 multiplicity(u64 d) const {
    auto it = mult_.find(d);
    return it == mult_.end() ? 0 : it->second;
  }

  BigInt sum_of_squares() const {
    BigInt s = 0;
    for (const auto& [d, m] : mult_) s += BigInt(d) * d * m;
    return s;
  }

  /// Same degrees with the same multiplicities (provenance ignored).
  friend bool same_degrees(const DegreeMultiset& a, const DegreeMultiset& b) {
    return a.order_ == b.order_ && a.mult_ == b.mult_;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (const auto& [d, m] : mult_) {
      if (!first) s += ", ";
      first = false;
      s += std::to_string(d);
      if (m > 1) s += " x" + std::to_string(m);
    }
    return s + "}";
  }

 private:
  DegreeMultiset() = default;
  BigInt order_ = 1;
  std::map<u64, u64> mult_;
  Provenance prov_ = Provenance::manual;
};

}  // namespace cdg
