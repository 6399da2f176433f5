#pragma once

// Permutations on {0, ..., n-1}. Products read left to right: x^(gh) = (x^g)^h.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cdg {

using Point = std::uint16_t;
inline constexpr std::size_t kMaxDegree = 65535;

class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree) : img_(degree) {
    if (degree > kMaxDegree) throw std::length_error("perm: degree exceeds 65535");
    std::iota(img_.begin(), img_.end(), Point{0});
  }
  explicit Perm(std::vector<Point> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (Point p : img_) {
      if (p >= img_.size() || seen[p]) throw std::invalid_argument("perm: images are not a bijection");
      seen[p] = 1;
    }
  }

  static Perm identity(std::size_t degree) { return Perm(degree); }

  /// Build from cycles; points outside every cycle are fixed.
  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
    Perm g(degree);
    std::vector<char> used(degree, 0);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= degree) throw std::invalid_argument("perm: cycle point out of range");
        if (used[c[i]]) throw std::invalid_argument("perm: point repeated in cycles");
        used[c[i]] = 1;
        g.img_[c[i]] = c[(i + 1) % c.size()];
      }
    }
    return g;
  }

  std::size_t degree() const { return img_.size(); }
  Point operator()(Point x) const { return img_[x]; }
  Point image(Point x) const { return img_[x]; }
  const std::vector<Point>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  Perm operator*(const Perm& h) const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[i] = h.img_[img_[i]];
    return r;
  }
  Perm& operator*=(const Perm& h) {
    for (auto& x : img_) x = h.img_[x];
    return *this;
  }

  Perm inverse() const {
    Perm r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = static_cast<Point>(i);
    return r;
  }

  Perm pow(long long e) const {
    Perm base = e < 0 ? inverse() : *this;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    Perm r(degree());
    while (k) {
      if (k & 1) r *= base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  /// g^-1 * this * g
  Perm conj(const Perm& g) const { return g.inverse() * *this * g; }

  std::uint64_t order() const {
    std::uint64_t o = 1;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::uint64_t len = 0;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        ++len;
      }
      o = std::lcm(o, len);
    }
    return o;
  }

  std::vector<std::vector<Point>> cycles() const {
    std::vector<std::vector<Point>> out;
    std::vector<char> seen(img_.size(), 0);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i] || img_[i] == i) continue;
      std::vector<Point> c;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        c.push_back(static_cast<Point>(j));
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  /// Disjoint cycle notation, "()" for the identity.
  std::string to_cycle_string() const {
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::string s;
    for (const auto& c : cs) {
      s += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(c[i]);
      }
      s += ')';
    }
    return s;
  }

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm& a, const Perm& b) { return a.img_ <=> b.img_; }

 private:
  std::vector<Point> img_;
};

inline Perm commutator(const Perm& x, const Perm& y) { return x.inverse() * y.inverse() * x * y; }

struct PermHash {
  std::size_t operator()(const Perm& g) const {
    std::uint64_t h = 1469598103934665603ull;
    for (Point p : g.images()) {
      h ^= p;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Parse "(0 1 2)(3 4)" or "()". Commas are accepted as separators inside cycles.
inline Perm parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t' || text[i] == '\r')) ++i;
  };
  skip_ws();
  if (i == text.size()) throw std::invalid_argument("empty permutation");
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' at column " + std::to_string(i + 1));
    ++i;
    std::vector<Point> c;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] < '0' || text[i] > '9')
        throw std::invalid_argument("unexpected character '" + std::string(1, text[i]) + "' at column " +
                                    std::to_string(i + 1));
      unsigned long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + static_cast<unsigned long>(text[i] - '0');
        if (v >= degree) throw std::invalid_argument("point " + std::to_string(v) + " out of range");
        ++i;
      }
      c.push_back(static_cast<Point>(v));
    }
    if (c.size() > 1) cycles.push_back(std::move(c));
    skip_ws();
  }
  return Perm::from_cycles(degree, cycles);
}

}  // namespace cdg
