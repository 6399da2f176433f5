#pragma once

// Permutation groups backed by a stabilizer chain (Knuth's form of Schreier-Sims).

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "limits.hpp"
#include "numtheory.hpp"
#include "perm.hpp"

namespace cdg {

class StabChain {
 public:
  struct Level {
    Point base = 0;
    std::vector<Perm> gens;     // strong generators fixing the earlier base points
    std::vector<int> pos;       // point -> index into orbit, or -1
    std::vector<Point> orbit;
    std::vector<Perm> trans;    // base^trans[i] = orbit[i]
  };

  StabChain() = default;
  explicit StabChain(std::size_t degree) : degree_(degree) {}

  std::size_t degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }

  std::vector<Point> base() const {
    std::vector<Point> b;
    for (const auto& l : levels_) b.push_back(l.base);
    return b;
  }

  void add_generator(const Perm& g) {
    if (g.degree() != degree_) throw std::invalid_argument("chain: generator degree mismatch");
    if (!contains(g)) add_at(0, g);
  }

  /// Residue of g after sifting through levels >= from; identity iff member.
  Perm sift(Perm g, std::size_t from = 0, std::size_t* failed_at = nullptr) const {
    for (std::size_t k = from; k < levels_.size(); ++k) {
      const Level& l = levels_[k];
      int i = l.pos[g(l.base)];
      if (i < 0) {
        if (failed_at) *failed_at = k;
        return g;
      }
      g *= l.trans[static_cast<std::size_t>(i)].inverse();
    }
    if (failed_at) *failed_at = levels_.size();
    return g;
  }

  bool contains(const Perm& g) const {
    if (g.degree() != degree_) return false;
    return sift(g).is_identity();
  }

  BigInt order_big() const {
    BigInt o = 1;
    for (const auto& l : levels_) o *= l.orbit.size();
    return o;
  }

  std::uint64_t order() const {
    BigInt o = order_big();
    if (o > BigInt(std::numeric_limits<std::uint64_t>::max()))
      throw std::overflow_error("group order exceeds 64 bits");
    return static_cast<std::uint64_t>(o);
  }

  /// Uniformly random element as a product of transversal elements.
  template <class Rng>
  Perm random_element(Rng& rng) const {
    Perm g(degree_);
    for (std::size_t k = levels_.size(); k-- > 0;) {
      const Level& l = levels_[k];
      std::uniform_int_distribution<std::size_t> d(0, l.trans.size() - 1);
      g *= l.trans[d(rng)];
    }
    return g;
  }

 private:
  void new_level(const Perm& g) {
    Level l;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (g(static_cast<Point>(i)) != i) {
        l.base = static_cast<Point>(i);
        break;
      }
    }
    l.pos.assign(degree_, -1);
    l.pos[l.base] = 0;
    l.orbit.push_back(l.base);
    l.trans.push_back(Perm(degree_));
    levels_.push_back(std::move(l));
  }

  void add_at(std::size_t k, const Perm& g) {
    if (k == levels_.size()) new_level(g);
    levels_[k].gens.push_back(g);
    const std::size_t known = levels_[k].trans.size();
    for (std::size_t i = 0; i < known; ++i) {
      Perm t = levels_[k].trans[i] * g;
      extend(k, t);
    }
  }

  void extend(std::size_t k, const Perm& g) {
    const Point j = g(levels_[k].base);
    const int i = levels_[k].pos[j];
    if (i < 0) {
      Level& l = levels_[k];
      l.pos[j] = static_cast<int>(l.orbit.size());
      l.orbit.push_back(j);
      l.trans.push_back(g);
      const std::vector<Perm> gens = l.gens;
      for (const Perm& s : gens) extend(k, g * s);
      return;
    }
    Perm h = g * levels_[k].trans[static_cast<std::size_t>(i)].inverse();
    if (h.is_identity()) return;
    if (!sift(h, k + 1).is_identity()) add_at(k + 1, h);
  }

  std::size_t degree_ = 0;
  std::vector<Level> levels_;
};

class PermGroup {
 public:
  PermGroup() : PermGroup(0, {}) {}
  PermGroup(std::size_t degree, std::vector<Perm> gens) : degree_(degree), gens_(std::move(gens)), chain_(degree) {
    for (const Perm& g : gens_) {
      if (g.degree() != degree_) throw std::invalid_argument("group: generator degree mismatch");
      chain_.add_generator(g);
    }
  }

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  /// Adds a generator; used while building a group, before it is shared.
  void add_generator(const Perm& g) {
    if (g.degree() != degree_) throw std::invalid_argument("group: generator degree mismatch");
    if (chain_.contains(g)) return;
    gens_.push_back(g);
    chain_.add_generator(g);
  }

  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const StabChain& chain() const { return chain_; }
  std::uint64_t order() const { return chain_.order(); }
  BigInt order_big() const { return chain_.order_big(); }
  bool contains(const Perm& g) const { return chain_.contains(g); }
  bool is_trivial() const { return chain_.levels().empty(); }
  Perm identity() const { return Perm(degree_); }

  /// Nontrivial generators only, identity filtered out.
  std::vector<Perm> nontrivial_generators() const {
    std::vector<Perm> out;
    for (const auto& g : gens_)
      if (!g.is_identity()) out.push_back(g);
    return out;
  }

  bool contains_group(const PermGroup& h) const {
    for (const auto& g : h.generators())
      if (!contains(g)) return false;
    return true;
  }

  friend bool same_group(const PermGroup& a, const PermGroup& b) {
    return a.order_big() == b.order_big() && a.contains_group(b);
  }

  template <class Rng>
  Perm random_element(Rng& rng) const {
    return chain_.random_element(rng);
  }

 private:
  std::size_t degree_;
  std::vector<Perm> gens_;
  StabChain chain_;
};

/// All elements of a group with O(1) index lookup by base images.
class ElementTable {
 public:
  explicit ElementTable(const PermGroup& g) : base_(g.chain().base()) {
    const std::uint64_t order = g.order();
    require_within("max_enumerated_order", limits::kMaxEnumeratedOrder, order);
    require_within("max_enumerated_cells", limits::kMaxEnumeratedCells, order * std::max<std::size_t>(g.degree(), 1));
    elems_.reserve(order);
    index_.reserve(order * 2);
    const auto& levels = g.chain().levels();
    // g = u_{k-1} ... u_1 u_0 with u_i from level i.
    std::vector<Perm> partial(levels.size() + 1);
    partial[levels.size()] = Perm(g.degree());
    auto rec = [&](auto&& self, std::size_t k) -> void {
      if (k == 0) {
        add(partial[0]);
        return;
      }
      for (const Perm& u : levels[k - 1].trans) {
        partial[k - 1] = partial[k] * u;
        self(self, k - 1);
      }
    };
    rec(rec, levels.size());
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(key(elems_[i]), static_cast<std::uint32_t>(i));
  }

  std::size_t size() const { return elems_.size(); }
  const Perm& operator[](std::size_t i) const { return elems_[i]; }
  const std::vector<Perm>& elements() const { return elems_; }

  /// Index of g, which must be an element of the group.
  std::uint32_t index_of(const Perm& g) const {
    auto it = index_.find(key(g));
    if (it == index_.end()) throw std::invalid_argument("element not in table");
    return it->second;
  }
  std::uint32_t index_of_product(const Perm& a, const Perm& b) const {
    std::string k(base_.size() * 2, '\0');
    for (std::size_t i = 0; i < base_.size(); ++i) {
      Point v = b(a(base_[i]));
      k[2 * i] = static_cast<char>(v & 0xff);
      k[2 * i + 1] = static_cast<char>(v >> 8);
    }
    return index_.at(k);
  }

 private:
  void add(const Perm& g) {
    elems_.push_back(g);
  }
  std::string key(const Perm& g) const {
    std::string k(base_.size() * 2, '\0');
    for (std::size_t i = 0; i < base_.size(); ++i) {
      Point v = g(base_[i]);
      k[2 * i] = static_cast<char>(v & 0xff);
      k[2 * i + 1] = static_cast<char>(v >> 8);
    }
    return k;
  }

  std::vector<Point> base_;
  std::vector<Perm> elems_;
  std::unordered_map<std::string, std::uint32_t> index_;
};

}  // namespace cdg
