#pragma once

// Ramification of central characters in p-groups. For Φ(P) <= N <= Z(P) with N
// elementary abelian, lambda in N^ defines the alternating form
// <aN, bN>_lambda = lambda([a, b]) on P/N, and lambda is fully ramified in P iff the
// form is nondegenerate (Z_lambda = N). The character-side test reads the same fact
// off the degree oracle through central characters.

#include <optional>
#include <string>
#include <vector>

#include "dixon.hpp"
#include "group_algos.hpp"
#include "gmodule.hpp"
#include "linalg.hpp"

namespace cdg {

class HypothesisError : public std::invalid_argument {
 public:
  explicit HypothesisError(std::vector<std::string> violations)
      : std::invalid_argument(join_messages(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join_messages(const std::vector<std::string>& v) {
    std::string s = "hypothesis violated:";
    for (const auto& x : v) s += " " + x + ";";
    return s;
  }
  std::vector<std::string> violations_;
};

/// A/B for normal subgroups B <= A with A/B elementary abelian, as a GF(p)-space.
class Section {
 public:
  Section(const PermGroup& a, const PermGroup& b, u64 p) : a_(a), b_(b), p_(p) {
    if (!a.contains_group(b)) throw std::invalid_argument("section: B is not contained in A");
    PermGroup span = b;
    for (const auto& g : a.generators()) {
      if (span.contains(g)) continue;
      basis_.push_back(g);
      span.add_generator(g);
    }
    const u64 index = a.order() / b.order();
    if (ipow(p, static_cast<unsigned>(basis_.size())) != index)
      throw std::invalid_argument("section: A/B is not elementary abelian");
    require_within("max_module_vectors", limits::kMaxModuleVectors, index);
    reps_.reserve(index);
    for (u64 code = 0; code < index; ++code) {
      u64 t = code;
      Perm x(a.degree());
      for (const auto& bv : basis_) {
        x *= bv.pow(static_cast<long long>(t % p));
        t /= p;
      }
      reps_.push_back(std::move(x));
    }
  }

  u64 p() const { return p_; }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Perm>& basis() const { return basis_; }

  /// Coordinates of aB in the chosen basis.
  std::vector<u64> coordinates(const Perm& x) const {
    for (u64 code = 0; code < reps_.size(); ++code) {
      if (b_.contains(reps_[code].inverse() * x)) {
        std::vector<u64> c(basis_.size());
        u64 t = code;
        for (auto& v : c) {
          v = t % p_;
          t /= p_;
        }
        return c;
      }
    }
    throw std::invalid_argument("section: element outside A");
  }

  /// The conjugation action of the generators of g, as a module.
  GModule module(const PermGroup& g) const {
    PrimeField f{p_};
    std::vector<MatrixP> mats;
    for (const auto& x : g.generators()) {
      MatrixP m(f, dimension(), dimension());
      for (std::size_t i = 0; i < dimension(); ++i) {
        auto c = coordinates(basis_[i].conj(x));
        for (std::size_t j = 0; j < dimension(); ++j) m(i, j) = c[j];
      }
      mats.push_back(std::move(m));
    }
    if (mats.empty()) mats.push_back(MatrixP::identity(f, dimension()));
    return GModule(p_, dimension(), mats);
  }

 private:
  PermGroup a_, b_;
  u64 p_;
  std::vector<Perm> basis_;
  std::vector<Perm> reps_;
};

struct AlternatingForm {
  u64 p = 2;
  std::size_t dimension = 0;
  std::vector<std::vector<u64>> matrix;

  std::size_t rank() const {
    PrimeField f{p};
    MatrixP m(f, dimension, dimension);
    for (std::size_t i = 0; i < dimension; ++i)
      for (std::size_t j = 0; j < dimension; ++j) m(i, j) = matrix[i][j];
    return m.rank();
  }
  bool nondegenerate() const { return rank() == dimension; }
  bool is_zero() const {
    for (const auto& r : matrix)
      for (u64 v : r)
        if (v) return false;
    return true;
  }
};

struct RamificationRecord {
  u64 lambda_index = 0;
  u64 z_lambda_order = 0;
  bool fully_ramified = false;
  std::size_t form_rank = 0;
};

/// Validated (P, N) pair with fixed bases of P/N and N. lambda in N^ is a coordinate
/// vector: lambda(n) = eps^(lambda . coords(n)); its index is the base-p number of the vector.
class RamificationSetup {
 public:
  RamificationSetup(const PermGroup& p_group, const PermGroup& n) : pg_(p_group), n_(n) {
    std::vector<std::string> bad;
    auto pr = p_group_prime(p_group);
    if (!pr) {
      bad.push_back("P is not a nontrivial p-group");
      throw HypothesisError(bad);
    }
    p_ = *pr;
    if (!p_group.contains_group(n)) bad.push_back("N is not a subgroup of P");
    bool central = true;
    for (const auto& z : n.generators())
      for (const auto& x : p_group.generators()) central = central && commutator(z, x).is_identity();
    if (!central) bad.push_back("N is not central in P");
    if (!is_abelian(n)) bad.push_back("N is not abelian");
    for (const auto& z : n.generators())
      if (!z.pow(static_cast<long long>(p_)).is_identity()) {
        bad.push_back("N is not elementary abelian");
        break;
      }
    if (!n.contains_group(derived_subgroup(p_group))) bad.push_back("P' is not contained in N (Phi(P) <= N fails)");
    for (const auto& x : p_group.generators())
      if (!n.contains(x.pow(static_cast<long long>(p_)))) {
        bad.push_back("P^p is not contained in N (Phi(P) <= N fails)");
        break;
      }
    if (!bad.empty()) throw HypothesisError(bad);
    nbasis_.emplace(n, p_);
    quotient_.emplace(p_group, n, p_);
  }

  u64 p() const { return p_; }
  std::size_t n_dim() const { return quotient_->dimension(); }  // |P/N| = p^n
  std::size_t m_dim() const { return nbasis_->dimension(); }    // |N| = p^m
  u64 dual_size() const { return ipow(p_, static_cast<unsigned>(m_dim())); }
  const PermGroup& p_group() const { return pg_; }
  const PermGroup& n() const { return n_; }
  const ElementaryAbelian& n_basis() const { return *nbasis_; }
  const std::vector<Perm>& quotient_basis() const { return quotient_->basis(); }

  std::vector<u64> lambda(u64 index) const {
    std::vector<u64> v(m_dim());
    for (auto& c : v) {
      c = index % p_;
      index /= p_;
    }
    return v;
  }

  u64 evaluate(const std::vector<u64>& lam, const Perm& z) const {
    const auto& c = nbasis_->coordinates(z);
    u64 s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s = (s + lam[i] * c[i]) % p_;
    return s;
  }

  /// eps^<aN, bN> = lambda([a, b]); bilinear and alternating since P' <= N <= Z(P).
  AlternatingForm form(const std::vector<u64>& lam) const {
    if (lam.size() != m_dim()) throw std::invalid_argument("commutator_form: lambda has wrong length");
    const auto& xb = quotient_basis();
    AlternatingForm f{p_, xb.size(), std::vector<std::vector<u64>>(xb.size(), std::vector<u64>(xb.size(), 0))};
    for (std::size_t i = 0; i < xb.size(); ++i)
      for (std::size_t j = 0; j < xb.size(); ++j)
        if (i != j) f.matrix[i][j] = evaluate(lam, commutator(xb[i], xb[j]));
    return f;
  }

  RamificationRecord record(u64 index) const {
    RamificationRecord r;
    r.lambda_index = index;
    r.form_rank = form(lambda(index)).rank();
    r.fully_ramified = r.form_rank == n_dim();
    r.z_lambda_order = n_.order() * ipow(p_, static_cast<unsigned>(n_dim() - r.form_rank));
    return r;
  }

 private:
  PermGroup pg_, n_;
  u64 p_ = 0;
  std::optional<ElementaryAbelian> nbasis_;
  std::optional<Section> quotient_;
};

/// Φ(P) = P'P^p for a p-group P.
inline PermGroup p_group_frattini(const PermGroup& pg, u64 p) {
  PermGroup f = derived_subgroup(pg);
  for (const auto& x : pg.generators()) {
    Perm y = x.pow(static_cast<long long>(p));
    if (!f.contains(y)) f.add_generator(y);
  }
  return f;
}

struct RamificationInstance {
  std::string label;
  PermGroup p_group, n;
};

/// (O_r(G), N) for each prime r and N in {Φ(P), Z(P)} with N < P satisfying the
/// hypotheses. N = P is excluded: then P/N is trivial and every lambda is fully ramified.
inline std::vector<RamificationInstance> ramification_instances(const PermGroup& g, const std::string& name) {
  std::vector<RamificationInstance> out;
  for (u64 r : prime_divisors(g.order())) {
    PermGroup pg = p_core(g, r);
    if (pg.is_trivial()) continue;
    std::vector<std::pair<std::string, PermGroup>> cands{{"frattini", p_group_frattini(pg, r)}, {"center", center(pg)}};
    for (auto& [tag, n] : cands) {
      if (n.order() == pg.order()) continue;
      if (tag == "center" && n.order() == cands[0].second.order()) continue;  // same subgroup as Φ(P)
      try {
        RamificationSetup check(pg, n);
      } catch (const HypothesisError&) {
        continue;
      }
      out.push_back({name + ":O_" + std::to_string(r) + ":" + tag, pg, n});
    }
  }
  return out;
}

inline AlternatingForm commutator_form(const PermGroup& p_group, const PermGroup& n, const std::vector<u64>& lambda) {
  return RamificationSetup(p_group, n).form(lambda);
}

struct NonFullyRamifiedCount {
  u64 p = 0;
  std::size_t m = 0;  // |N| = p^m
  std::size_t n = 0;  // |P/N| = p^n
  u64 count = 0;
  std::vector<RamificationRecord> records;
  bool bound_applies() const { return 2 * m > n; }
  u64 bound() const { return bound_applies() ? ipow(p, static_cast<unsigned>(m - n / 2)) : 0; }
  bool bound_met() const { return !bound_applies() || count >= bound(); }
};

inline NonFullyRamifiedCount count_non_fully_ramified(const RamificationSetup& s) {
  NonFullyRamifiedCount out;
  out.p = s.p();
  out.m = s.m_dim();
  out.n = s.n_dim();
  for (u64 i = 0; i < s.dual_size(); ++i) {
    out.records.push_back(s.record(i));
    if (!out.records.back().fully_ramified) ++out.count;
  }
  return out;
}

inline NonFullyRamifiedCount count_non_fully_ramified(const PermGroup& p_group, const PermGroup& n) {
  return count_non_fully_ramified(RamificationSetup(p_group, n));
}

/// Irr(P | lambda) through central characters: chi lies over lambda iff
/// omega_chi(z) = chi(z)/chi(1) equals the image of lambda(z) for z in a basis of N. The
/// p-th roots of unity are identified with the powers of a fixed primitive p-th root
/// mod ell, a bijection on N^ that preserves full ramification.
inline bool fully_ramified_via_characters(const RamificationSetup& s, const CharacterOracle& oracle,
                                          const std::vector<u64>& lam) {
  require_within("max_character_check_order", limits::kMaxCharacterCheckOrder, s.p_group().order());
  const auto& nb = s.n_basis().basis();
  const u64 ell = oracle.ell();
  const u64 zeta = nb.empty() ? 1 : oracle.root_of_unity(s.p());
  std::vector<std::size_t> classes;
  for (const auto& z : nb) classes.push_back(oracle.class_of(z));
  std::size_t over = 0;
  u64 deg = 0;
  for (std::size_t i = 0; i < oracle.character_count(); ++i) {
    bool ok = true;
    for (std::size_t j = 0; j < nb.size() && ok; ++j) ok = oracle.omega(i, classes[j]) == pow_mod(zeta, lam[j], ell);
    if (ok) {
      ++over;
      deg = oracle.degree(i);
    }
  }
  const u64 index = s.p_group().order() / s.n().order();
  return over == 1 && deg * deg == index;
}

inline bool fully_ramified_via_characters(const PermGroup& p_group, const PermGroup& n, const std::vector<u64>& lam) {
  RamificationSetup s(p_group, n);
  CharacterOracle oracle(p_group);
  return fully_ramified_via_characters(s, oracle, lam);
}

struct RamificationAgreement {
  u64 checked = 0;
  u64 disagreements = 0;
  std::vector<u64> disagreeing_lambdas;
};

/// Form criterion against the character criterion on every lambda in N^.
inline RamificationAgreement compare_ramification_criteria(const RamificationSetup& s) {
  CharacterOracle oracle(s.p_group());
  RamificationAgreement out;
  for (u64 i = 0; i < s.dual_size(); ++i) {
    bool by_form = s.record(i).fully_ramified;
    bool by_chars = fully_ramified_via_characters(s, oracle, s.lambda(i));
    ++out.checked;
    if (by_form != by_chars) {
      ++out.disagreements;
      out.disagreeing_lambdas.push_back(i);
    }
  }
  return out;
}

}  // namespace cdg
