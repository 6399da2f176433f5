#pragma once

// Finite-dimensional GF(p)-modules given by generator matrices. Vectors are rows and
// a generator M acts by v -> v M.

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "galois_field.hpp"
#include "limits.hpp"
#include "linalg.hpp"
#include "perm_group.hpp"
#include "semilinear.hpp"

namespace cdg {

using Vec = std::vector<u64>;

struct IrreducibilityReport {
  bool irreducible = false;
  bool certified = false;        // exhaustive scan done (or a submodule was exhibited)
  std::optional<MatrixP> witness;  // a proper nonzero submodule, when reducible
};

class GModule {
 public:
  GModule(u64 p, std::size_t dim, std::vector<MatrixP> gens) : p_(p), dim_(dim), gens_(std::move(gens)) {
    if (!is_prime(p)) throw std::invalid_argument("module: p is not prime");
    if (dim == 0) throw std::invalid_argument("module: dimension must be positive");
    require_within("max_module_dim", limits::kMaxModuleDim, dim);
    for (const auto& g : gens_) {
      if (g.rows() != dim || g.cols() != dim) throw std::invalid_argument("module: generator has wrong shape");
      if (!g.invertible()) throw std::invalid_argument("module: generator is singular");
    }
  }

  u64 p() const { return p_; }
  std::size_t dim() const { return dim_; }
  PrimeField field() const { return PrimeField{p_}; }
  const std::vector<MatrixP>& generators() const { return gens_; }

  /// Smallest submodule containing the given vectors, as an rref basis.
  MatrixP spin(const std::vector<Vec>& seeds) const {
    PrimeField f{p_};
    std::vector<Vec> basis;            // echelon rows
    std::vector<std::size_t> pivots;   // pivot column of each row
    std::vector<Vec> queue;
    auto reduce = [&](Vec v) {
      for (std::size_t i = 0; i < basis.size(); ++i) {
        u64 c = v[pivots[i]];
        if (c == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) v[j] = f.sub(v[j], f.mul(c, basis[i][j]));
      }
      return v;
    };
    auto insert = [&](const Vec& v0) {
      Vec v = reduce(v0);
      std::size_t c = 0;
      while (c < dim_ && v[c] == 0) ++c;
      if (c == dim_) return;
      u64 inv = f.inv(v[c]);
      for (auto& x : v) x = f.mul(x, inv);
      // Keep rows fully reduced against the new pivot.
      for (auto& row : basis) {
        u64 k = row[c];
        if (k == 0) continue;
        for (std::size_t j = 0; j < dim_; ++j) row[j] = f.sub(row[j], f.mul(k, v[j]));
      }
      basis.push_back(v);
      pivots.push_back(c);
      queue.push_back(v);
    };
    for (const auto& s : seeds) insert(s);
    for (std::size_t head = 0; head < queue.size() && basis.size() < dim_; ++head)
      for (const auto& g : gens_) insert(g.apply_row(queue[head]));
    MatrixP out(f, basis.size(), dim_);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < dim_; ++j) out(i, j) = basis[i][j];
    return row_space(out);
  }

  u64 vector_count() const { return checked_pow(p_, static_cast<unsigned>(dim_)); }

  u64 encode(const Vec& v) const {
    u64 c = 0;
    for (std::size_t i = dim_; i-- > 0;) c = c * p_ + v[i];
    return c;
  }
  Vec decode(u64 c) const {
    Vec v(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      v[i] = c % p_;
      c /= p_;
    }
    return v;
  }

  /// Random spinning (20 seeded trials) and, when p^dim is small enough, an exhaustive
  /// certification: every generator orbit on nonzero vectors is spun from one point.
  IrreducibilityReport irreducibility(std::uint64_t seed = 0) const {
    IrreducibilityReport rep;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<u64> digit(0, p_ - 1);
    for (int trial = 0; trial < 20; ++trial) {
      Vec v(dim_);
      for (auto& x : v) x = digit(rng);
      if (std::all_of(v.begin(), v.end(), [](u64 x) { return x == 0; })) continue;
      // Nullspace of a random algebra element tends to meet small submodules.
      MatrixP a = random_algebra_element(rng);
      MatrixP ns = a.left_nullspace();
      std::vector<Vec> seeds{ns.rows() ? ns.row(0) : v};
      MatrixP s = spin(seeds);
      if (s.rows() > 0 && s.rows() < dim_) {
        rep.witness = s;
        rep.certified = true;
        return rep;
      }
    }
    if (vector_count() > limits::kMaxModuleVectors) {
      rep.irreducible = true;
      return rep;
    }
    rep.certified = true;
    const u64 total = vector_count();
    std::vector<char> seen(total, 0);
    seen[0] = 1;
    std::vector<u64> queue;
    for (u64 c = 1; c < total; ++c) {
      if (seen[c]) continue;
      MatrixP s = spin({decode(c)});
      if (s.rows() < dim_) {
        rep.witness = s;
        return rep;
      }
      // Every vector in the orbit of c also spins to the whole module.
      queue.assign(1, c);
      seen[c] = 1;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        Vec v = decode(queue[head]);
        for (const auto& g : gens_) {
          u64 w = encode(g.apply_row(v));
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
    rep.irreducible = true;
    return rep;
  }

  bool is_irreducible(std::uint64_t seed = 0) const { return irreducibility(seed).irreducible; }

  /// All elements of the matrix group generated by the action.
  std::vector<MatrixP> image_elements(u64 limit = limits::kMaxMatrixGroup) const {
    PrimeField f{p_};
    std::map<std::vector<u64>, std::size_t> index;
    std::vector<MatrixP> elems{MatrixP::identity(f, dim_)};
    index[flat(elems[0])] = 0;
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (const auto& g : gens_) {
        MatrixP x = elems[head] * g;
        auto key = flat(x);
        if (index.count(key)) continue;
        index[key] = elems.size();
        elems.push_back(std::move(x));
        if (elems.size() > limit) throw ScaleError("max_matrix_group", limit, elems.size());
      }
    }
    return elems;
  }

  /// Permutation action on the nonzero vectors (points are vector codes minus one).
  PermGroup as_permutation_group() const {
    const u64 total = vector_count();
    require_within("max_degree", kMaxDegree, total - 1);
    std::vector<Perm> perms;
    for (const auto& g : gens_) {
      std::vector<Point> img(total - 1);
      for (u64 c = 1; c < total; ++c) img[c - 1] = static_cast<Point>(encode(g.apply_row(decode(c))) - 1);
      perms.emplace_back(std::move(img));
    }
    return PermGroup(static_cast<std::size_t>(total - 1), perms);
  }

  /// Module homomorphisms X with M_i X = X N_i for all generators (both modules must
  /// use the same generator list). Returns a basis of the solution space.
  std::vector<MatrixP> homomorphisms_to(const GModule& other) const {
    if (other.p_ != p_ || other.gens_.size() != gens_.size())
      throw std::invalid_argument("homomorphisms_to: incompatible modules");
    PrimeField f{p_};
    const std::size_t d1 = dim_, d2 = other.dim_, unknowns = d1 * d2;
    MatrixP sys(f, gens_.size() * d1 * d2, unknowns);
    std::size_t row = 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      const auto& a = gens_[g];
      const auto& b = other.gens_[g];
      for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j, ++row) {
          // (A X)_ij - (X B)_ij = sum_k A_ik X_kj - sum_k X_ik B_kj
          for (std::size_t k = 0; k < d1; ++k) sys(row, k * d2 + j) = f.add(sys(row, k * d2 + j), a(i, k));
          for (std::size_t k = 0; k < d2; ++k) sys(row, i * d2 + k) = f.sub(sys(row, i * d2 + k), b(k, j));
        }
    }
    MatrixP ns = sys.right_nullspace();
    std::vector<MatrixP> out;
    for (std::size_t r = 0; r < ns.rows(); ++r) {
      MatrixP x(f, d1, d2);
      for (std::size_t i = 0; i < d1; ++i)
        for (std::size_t j = 0; j < d2; ++j) x(i, j) = ns(r, i * d2 + j);
      out.push_back(std::move(x));
    }
    return out;
  }

  /// For irreducible modules: isomorphic iff a nonzero homomorphism exists (Schur).
  bool isomorphic_to(const GModule& other) const {
    if (other.dim_ != dim_) return false;
    for (const auto& x : homomorphisms_to(other))
      if (x.invertible()) return true;
    return false;
  }

  static std::vector<u64> flat(const MatrixP& m) {
    std::vector<u64> v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    return v;
  }

 private:
  template <class Rng>
  MatrixP random_algebra_element(Rng& rng) const {
    PrimeField f{p_};
    std::uniform_int_distribution<u64> digit(0, p_ - 1);
    MatrixP acc(f, dim_, dim_);
    MatrixP word = MatrixP::identity(f, dim_);
    std::uniform_int_distribution<std::size_t> pick(0, gens_.empty() ? 0 : gens_.size() - 1);
    for (int i = 0; i < 4; ++i) {
      acc = acc + word.scaled(digit(rng));
      if (!gens_.empty()) word = word * gens_[pick(rng)];
    }
    acc = acc + word.scaled(digit(rng));
    // Shift by a scalar so the element is likely singular.
    auto cp = acc.charpoly();
    auto r = polyf::roots(cp, p_, rng());
    if (!r.empty())
      for (std::size_t i = 0; i < dim_; ++i) acc(i, i) = f.sub(acc(i, i), r.front());
    return acc;
  }

  u64 p_;
  std::size_t dim_;
  std::vector<MatrixP> gens_;
};

/// Matrix of x -> c * x^(p^k) on GF(p^n), in the basis 1, w, ..., w^(n-1) of polynomial digits.
inline MatrixP semilinear_matrix(const GaloisField& f, FieldElement c, unsigned k) {
  PrimeField pf{f.p()};
  const unsigned n = f.n();
  MatrixP m(pf, n, n);
  u64 basis_code = 1;
  for (unsigned i = 0; i < n; ++i, basis_code *= f.p()) {
    FieldElement img = f.mul(c, f.frobenius(FieldElement{static_cast<std::uint32_t>(basis_code)}, k));
    auto d = f.digits(img);
    for (unsigned j = 0; j < n; ++j) m(i, j) = d[j];
  }
  return m;
}

/// The GF(p)H-module GF(p^n) on which (t, k) acts by x -> w^(e t) x^(p^k).
inline GModule semilinear_module(const SemilinearGroup& h, const GaloisField& f, u64 e = 1) {
  if (f.p() != h.p() || f.n() != h.n()) throw std::invalid_argument("semilinear_module: field mismatch");
  std::vector<MatrixP> gens;
  for (const auto& s : h.generators())
    gens.push_back(semilinear_matrix(f, f.exp(mul_mod(e % h.units(), s.t, h.units())), s.k));
  if (gens.empty()) gens.push_back(MatrixP::identity(PrimeField{f.p()}, f.n()));
  return GModule(h.p(), h.n(), std::move(gens));
}

struct GammaEmbedding {
  bool embeds = false;
  std::optional<MatrixP> cyclic_generator;  // x generating an irreducible cyclic normal subgroup
  u64 field_order = 0;                      // |E| = |GF(p)[x]|
  u64 image_order = 0;
  std::size_t candidates_checked = 0;
  std::string reason;
};

namespace detail {
inline bool in_span_of_powers(const MatrixP& y, const std::vector<MatrixP>& powers) {
  PrimeField f = y.field();
  const std::size_t d = y.rows();
  MatrixP sys(f, powers.size() + 1, d * d);
  for (std::size_t r = 0; r < powers.size(); ++r) {
    auto v = GModule::flat(powers[r]);
    for (std::size_t j = 0; j < v.size(); ++j) sys(r, j) = v[j];
  }
  auto v = GModule::flat(y);
  for (std::size_t j = 0; j < v.size(); ++j) sys(powers.size(), j) = v[j];
  return sys.rank() == powers.size();
}
}  // namespace detail

/// Tries to realize the image of the action inside Γ(p^dim): looks for an element x
/// whose characteristic polynomial is irreducible of degree dim (so E = GF(p)[x] is a
/// field of order p^dim and V is one-dimensional over E) such that <x> is normal and
/// every generator normalizes E. A sufficient criterion; failure lists how many
/// candidates were tried.
inline GammaEmbedding embeds_in_gamma(const GModule& m, std::uint64_t seed = 0) {
  GammaEmbedding out;
  auto irr = m.irreducibility(seed);
  if (!irr.irreducible) throw std::invalid_argument("embeds_in_gamma: module is reducible");
  const std::size_t d = m.dim();
  const PrimeField f = m.field();
  auto elems = m.image_elements();
  out.image_order = elems.size();
  std::vector<MatrixP> inv_gens;
  for (const auto& g : m.generators()) inv_gens.push_back(*g.inverse());
  for (const auto& x : elems) {
    auto cp = x.charpoly();
    if (!poly::is_irreducible(poly::Coeffs(cp.begin(), cp.end()), m.p())) continue;
    ++out.candidates_checked;
    std::vector<MatrixP> powers{MatrixP::identity(f, d)};
    for (std::size_t i = 1; i < d; ++i) powers.push_back(powers.back() * x);
    // x^g in E means g normalizes E; E^* is cyclic, so x^g (of the same order as x)
    // then generates <x> again.
    bool ok = true;
    for (std::size_t i = 0; i < inv_gens.size() && ok; ++i) {
      MatrixP y = inv_gens[i] * x * m.generators()[i];
      ok = detail::in_span_of_powers(y, powers);
    }
    if (!ok) continue;
    out.embeds = true;
    out.cyclic_generator = x;
    out.field_order = m.vector_count();
    out.reason = "irreducible cyclic subgroup with field closure normalized by all generators";
    return out;
  }
  out.reason = "no element with irreducible characteristic polynomial spans a field normalized by the group";
  return out;
}

/// Elements of the matrix group lying in E^* = GF(p)[x]^*.
inline std::vector<MatrixP> field_multiplications(const std::vector<MatrixP>& elems, const MatrixP& x) {
  const std::size_t d = x.rows();
  std::vector<MatrixP> powers{MatrixP::identity(x.field(), d)};
  for (std::size_t i = 1; i < d; ++i) powers.push_back(powers.back() * x);
  std::vector<MatrixP> out;
  for (const auto& y : elems)
    if (detail::in_span_of_powers(y, powers)) out.push_back(y);
  return out;
}

}  // namespace cdg
