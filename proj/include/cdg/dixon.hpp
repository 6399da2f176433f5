#pragma once

// Degree oracle: central characters from class-algebra eigenvectors modulo a
// splitting prime ell = 1 (mod exp G), in the style of Dixon and Schneider.
// For each irreducible chi the vector omega_chi(C) = |C| chi(g_C) / chi(1) is a
// common eigenvector of the class multiplication matrices; chi(1)^2 follows from
// the first orthogonality relation.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "degree_multiset.hpp"
#include "group_algos.hpp"
#include "limits.hpp"
#include "linalg.hpp"

namespace cdg {

class CharacterOracle {
 public:
  explicit CharacterOracle(const PermGroup& g) : group_(g), table_(check_and_enumerate(g)) {
    classes_ = conjugacy_classes(g, table_);
    require_within("max_oracle_classes", limits::kMaxOracleClasses, classes_.size());
    const std::size_t r = classes_.size();
    class_of_.assign(table_.size(), 0);
    for (std::size_t c = 0; c < r; ++c)
      for (auto idx : classes_[c].members) class_of_[idx] = static_cast<std::uint32_t>(c);

    exponent_ = 1;
    for (const auto& c : classes_) exponent_ = std::lcm(exponent_, c.representative.order());
    const u64 order = table_.size();
    const u64 lower = std::max<u64>(2 * isqrt_ceil(order), 101);
    ell_ = next_prime_congruent_one(exponent_, lower);
    if (ell_ > limits::kMaxDixonPrime) throw ScaleError("max_dixon_prime", limits::kMaxDixonPrime, ell_);
    field_ = PrimeField{ell_};

    inverse_class_.resize(r);
    for (std::size_t c = 0; c < r; ++c)
      inverse_class_[c] = class_of_[table_.index_of(classes_[c].representative.inverse())];

    build_class_matrices();
    split();
    compute_degrees();
  }

  const PermGroup& group() const { return group_; }
  const ElementTable& elements() const { return table_; }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  std::size_t class_of(const Perm& g) const { return class_of_[table_.index_of(g)]; }
  u64 ell() const { return ell_; }
  u64 exponent() const { return exponent_; }
  std::size_t character_count() const { return omega_.size(); }
  /// omega_chi(C) mod ell for character i and class c.
  u64 omega(std::size_t i, std::size_t c) const { return omega_[i][c]; }
  u64 degree(std::size_t i) const { return degree_[i]; }

  DegreeMultiset degrees() const {
    std::map<u64, u64> m;
    for (u64 d : degree_) ++m[d];
    return DegreeMultiset(BigInt(table_.size()), m, Provenance::oracle);
  }

  /// Whether the normal subgroup n lies in the kernel of character i.
  bool kernel_contains(std::size_t i, const PermGroup& n) const {
    u64 s = 0;
    for (std::size_t c = 0; c < classes_.size(); ++c)
      if (n.contains(classes_[c].representative)) s = (s + omega_[i][c]) % ell_;
    return s == n.order() % ell_;
  }

  /// Degrees of G/N, read off as the characters with N in their kernel.
  DegreeMultiset quotient_degrees(const PermGroup& n) const {
    if (!is_normal(n, group_)) throw std::invalid_argument("quotient_degrees: subgroup is not normal");
    std::map<u64, u64> m;
    for (std::size_t i = 0; i < omega_.size(); ++i)
      if (kernel_contains(i, n)) ++m[degree_[i]];
    return DegreeMultiset(BigInt(table_.size() / n.order()), m, Provenance::oracle);
  }

  /// A primitive k-th root of unity in GF(ell); k must divide exp(G).
  u64 root_of_unity(u64 k) const {
    if (exponent_ % k != 0) throw std::invalid_argument("root_of_unity: order does not divide exp(G)");
    u64 g = primitive_root();
    return pow_mod(g, (ell_ - 1) / k, ell_);
  }

 private:
  static ElementTable check_and_enumerate(const PermGroup& g) {
    require_within("max_oracle_order", limits::kMaxOracleOrder, g.order());
    return ElementTable(g);
  }

  u64 primitive_root() const {
    auto ps = prime_divisors(ell_ - 1);
    for (u64 a = 2;; ++a) {
      bool ok = true;
      for (u64 q : ps)
        if (pow_mod(a, (ell_ - 1) / q, ell_) == 1) {
          ok = false;
          break;
        }
      if (ok) return a;
    }
  }

  void build_class_matrices() {
    const std::size_t r = classes_.size();
    // a[j][k][l] = #{x in C_j : x^-1 z_l in C_k}
    std::vector<u64> a(r * r * r, 0);
    std::vector<Perm> inv(table_.size());
    for (std::size_t x = 0; x < table_.size(); ++x) inv[x] = table_[x].inverse();
    for (std::size_t l = 0; l < r; ++l) {
      const Perm& z = classes_[l].representative;
      for (std::size_t x = 0; x < table_.size(); ++x) {
        std::size_t j = class_of_[x];
        std::size_t k = class_of_[table_.index_of_product(inv[x], z)];
        ++a[(j * r + k) * r + l];
      }
    }
    mats_.clear();
    for (std::size_t j = 0; j < r; ++j) {
      // Row-vector form: omega * T_j = w_j * omega with T_j[l][k] = a_jkl.
      MatrixP t(field_, r, r);
      for (std::size_t k = 0; k < r; ++k)
        for (std::size_t l = 0; l < r; ++l) t(l, k) = a[(j * r + k) * r + l] % ell_;
      mats_.push_back(std::move(t));
    }
  }

  void split() {
    const std::size_t r = classes_.size();
    std::vector<MatrixP> spaces{MatrixP::identity(field_, r)};
    std::vector<MatrixP> done;
    for (std::size_t j = 1; j < r && !spaces.empty(); ++j) {
      std::vector<MatrixP> next;
      for (auto& b : spaces) {
        if (b.rows() == 1) {
          done.push_back(b);
          continue;
        }
        for (auto& piece : split_space(b, mats_[j])) next.push_back(std::move(piece));
      }
      spaces = std::move(next);
    }
    for (auto& b : spaces) done.push_back(std::move(b));
    for (const auto& b : done) {
      if (b.rows() != 1) throw std::logic_error("class algebra did not split into one-dimensional spaces");
      std::vector<u64> w = b.row(0);
      if (w[0] == 0) throw std::logic_error("central character vanishes on the identity class");
      u64 inv = field_.inv(w[0]);
      for (auto& x : w) x = field_.mul(x, inv);
      omega_.push_back(std::move(w));
    }
    if (omega_.size() != r) throw std::logic_error("character count differs from class count");
  }

  // Eigenspaces of v -> v T restricted to the invariant row space of b (in rref).
  std::vector<MatrixP> split_space(const MatrixP& b, const MatrixP& t) const {
    const std::size_t d = b.rows();
    MatrixP bt = b * t;
    std::vector<std::size_t> piv;
    for (std::size_t i = 0; i < d; ++i) {
      std::size_t c = 0;
      while (b(i, c) == 0) ++c;
      piv.push_back(c);
    }
    MatrixP rm(field_, d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k) rm(i, k) = bt(i, piv[k]);
    auto cp = rm.charpoly();
    auto eig = polyf::roots(cp, ell_);
    std::vector<MatrixP> out;
    std::size_t total = 0;
    for (u64 lambda : eig) {
      MatrixP shifted = rm;
      for (std::size_t i = 0; i < d; ++i) shifted(i, i) = field_.sub(shifted(i, i), lambda);
      MatrixP null = shifted.left_nullspace();
      MatrixP space = row_space(null * b);
      total += space.rows();
      out.push_back(std::move(space));
    }
    if (total != d) throw std::logic_error("class matrix not diagonalizable modulo ell");
    return out;
  }

  void compute_degrees() {
    const std::size_t r = classes_.size();
    const u64 order = table_.size();
    for (const auto& w : omega_) {
      u64 s = 0;
      for (std::size_t l = 0; l < r; ++l) {
        u64 term = field_.mul(field_.mul(w[l], w[inverse_class_[l]]), field_.inv(classes_[l].size % ell_));
        s = field_.add(s, term);
      }
      const u64 target = field_.mul(order % ell_, field_.inv(s));
      u64 found = 0;
      for (u64 d : divisors(order)) {
        if (d * d > order) break;
        if (d * d % ell_ == target) {
          found = d;
          break;
        }
      }
      if (!found) throw std::logic_error("no character degree matches the orthogonality relation");
      degree_.push_back(found);
    }
    BigInt s = 0;
    for (u64 d : degree_) s += BigInt(d) * d;
    if (s != order) throw std::logic_error("degree oracle: sum of squares mismatch");
  }

  PermGroup group_;
  ElementTable table_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::uint32_t> class_of_;
  std::vector<std::size_t> inverse_class_;
  u64 exponent_ = 1;
  u64 ell_ = 0;
  PrimeField field_{};
  std::vector<MatrixP> mats_;
  std::vector<std::vector<u64>> omega_;
  std::vector<u64> degree_;
};

inline DegreeMultiset degree_oracle(const PermGroup& g) { return CharacterOracle(g).degrees(); }

}  // namespace cdg
