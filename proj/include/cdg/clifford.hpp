#pragma once

// Character degrees of G = P.H by Clifford theory, where H <= Γ(p^n) acts on each
// layer M_i = P_i / P_(i+1) (P_0 = P) as the twisted field action x -> a^e x^(p^k).
//
// For a nontrivial character lambda of the layer with stabilizer I = I_H(lambda), each
// of the `count` characters theta over lambda (degree theta(1)) contributes the degrees
// theta(1) |H:I| d, d in cd(I), with the multiplicities of cd(I) (Clifford plus
// Gallagher). Characters with P in the kernel give cd(H). The profile (theta(1), count)
// is declared, and count * theta(1)^2 = |P : P_i| is enforced together with the
// sum of squares identity of the result.

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "degree_multiset.hpp"
#include "gmodule.hpp"
#include "group_io.hpp"
#include "semilin_checks.hpp"
#include "semilinear.hpp"

namespace cdg {

struct ThetaProfile {
  u64 degree = 1;  // theta(1), a power of p
  u64 count = 1;   // characters of P/P_(i+1) over each lambda
  friend bool operator==(const ThetaProfile&, const ThetaProfile&) = default;
};

struct LayerSpec {
  u64 exponent = 1;   // multiplier exponent e
  unsigned twist = 0; // Frobenius twist: the multiplier becomes a^(e p^twist)
  ThetaProfile theta;
  std::map<u64, ThetaProfile> orbit_profiles;  // by orbit representative (least dlog), overrides theta
};

struct CliffordSpec {
  std::string name;
  SemilinearGroup h;
  std::vector<LayerSpec> layers;

  u64 p() const { return h.p(); }
  unsigned n() const { return h.n(); }
  BigInt p_order() const { return big_pow(h.p(), h.n() * static_cast<unsigned>(layers.size())); }
  BigInt group_order() const { return p_order() * h.order(); }
};

struct OrbitContribution {
  u64 representative = 0;
  u64 size = 0;
  u64 stabilizer_order = 0;
  ThetaProfile theta;
  std::map<u64, u64> stabilizer_degrees;
};

struct LayerReport {
  u64 effective_exponent = 0;
  bool irreducible = false;
  bool irreducibility_certified = false;
  std::vector<OrbitContribution> orbits;
  u64 orbit_total = 0;  // must equal p^n - 1
};

struct CliffordReport {
  std::map<u64, u64> top_degrees;  // cd(H)
  std::vector<LayerReport> layers;
};

class CliffordError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline u64 effective_exponent(const CliffordSpec& spec, const LayerSpec& layer) {
  const u64 q1 = spec.h.units();
  if (q1 == 1) return 0;
  return mul_mod(layer.exponent % q1, pow_mod(spec.p(), layer.twist, q1), q1);
}

inline DegreeMultiset clifford_degrees(const CliffordSpec& spec, CliffordReport* report = nullptr) {
  const SemilinearGroup& h = spec.h;
  if (spec.layers.empty()) throw CliffordError("clifford: at least one layer is required");
  CliffordReport rep;
  std::map<u64, u64> degrees = semilinear_degrees(h);
  rep.top_degrees = degrees;
  const u64 q = h.field_order(), q1 = h.units();
  GaloisField field(h.p(), h.n());
  BigInt below = 1;  // |P : P_i|
  auto add = [&](BigInt d, u64 mult) {
    if (d > BigInt(std::numeric_limits<u64>::max())) throw CliffordError("clifford: degree exceeds 64 bits");
    degrees[static_cast<u64>(d)] += mult;
  };
  for (std::size_t li = 0; li < spec.layers.size(); ++li) {
    const LayerSpec& layer = spec.layers[li];
    LayerReport lr;
    lr.effective_exponent = effective_exponent(spec, layer);
    auto irr = semilinear_module(h, field, lr.effective_exponent).irreducibility();
    lr.irreducible = irr.irreducible;
    lr.irreducibility_certified = irr.certified;
    if (!irr.irreducible) throw CliffordError("clifford: layer " + std::to_string(li + 1) + " is reducible");
    const u64 shift = (q1 - lr.effective_exponent % q1) % q1;
    for (const auto& orb : orbits_on_dlogs(h, shift)) {
      OrbitContribution oc;
      oc.representative = orb.representative;
      oc.size = orb.size;
      oc.stabilizer_order = orb.stabilizer_order;
      auto it = layer.orbit_profiles.find(orb.representative);
      oc.theta = it == layer.orbit_profiles.end() ? layer.theta : it->second;
      if (BigInt(oc.theta.count) * oc.theta.degree * oc.theta.degree != below)
        throw CliffordError("clifford: layer " + std::to_string(li + 1) + " profile violates count * theta(1)^2 = " +
                            below.str());
      if (oc.theta.degree != 1 && p_part(oc.theta.degree, h.p()) != oc.theta.degree)
        throw CliffordError("clifford: theta(1) must be a power of p");
      SemilinearGroup stab = dlog_stabilizer(h, shift, orb.representative);
      // Each theta over lambda must be I-invariant and extend to its inertia group.
      if (oc.theta.count > 1)
        for (u64 r : prime_divisors(stab.order()))
          if (r <= oc.theta.count)
            throw CliffordError("clifford: cannot certify that the " + std::to_string(oc.theta.count) +
                                " characters over lambda are I-invariant (prime " + std::to_string(r) + ")");
      if (li > 0 && stab.order() % h.p() == 0)
        throw CliffordError("clifford: stabilizer order divisible by p; extension of theta is not certified");
      oc.stabilizer_degrees = semilinear_degrees(stab);
      for (const auto& [d, mult] : oc.stabilizer_degrees)
        add(BigInt(oc.theta.degree) * orb.size * d, mult * oc.theta.count);
      lr.orbit_total += orb.size;
      lr.orbits.push_back(std::move(oc));
    }
    if (lr.orbit_total != q1) throw CliffordError("clifford: orbit sizes do not sum to p^n - 1");
    rep.layers.push_back(std::move(lr));
    below *= q;
  }
  if (report) *report = rep;
  try {
    return DegreeMultiset(spec.group_order(), degrees, Provenance::clifford);
  } catch (const std::invalid_argument& e) {
    throw CliffordError(std::string("clifford: ") + e.what());
  }
}

// ---- spec files -----------------------------------------------------------------------
//
//   name = lewis
//   p = 2
//   n = 15
//   h.mult_order = 32767      (default p^n - 1)
//   h.galois_step = 1         (default 1)
//   h.twist = 0               (default 0)
//   [layer]
//   exponent = 1
//   twist = 0
//   theta_degree = 1
//   theta_count = 1
//   orbit.<dlog> = <theta_degree>,<theta_count>

inline CliffordSpec parse_clifford_spec(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::map<std::string, std::string> top;
  std::vector<std::map<std::string, std::string>> layers;
  std::vector<std::size_t> layer_lines;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    if (s == "[layer]") {
      layers.emplace_back();
      layer_lines.push_back(lineno);
      continue;
    }
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    std::string k = strip_comment(s.substr(0, eq)), v = strip_comment(s.substr(eq + 1));
    auto& target = layers.empty() ? top : layers.back();
    if (target.count(k)) throw ParseError(lineno, "duplicate key '" + k + "'");
    target[k] = v;
  }
  auto num = [](const std::map<std::string, std::string>& m, const std::string& k, std::optional<u64> dflt,
                std::size_t ln) -> u64 {
    auto it = m.find(k);
    if (it == m.end()) {
      if (!dflt) throw ParseError(ln, "missing key '" + k + "'");
      return *dflt;
    }
    try {
      std::size_t pos = 0;
      u64 v = std::stoull(it->second, &pos);
      if (pos != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ParseError(ln, "key '" + k + "' is not a nonnegative integer");
    }
  };
  const u64 p = num(top, "p", std::nullopt, 1);
  const unsigned n = static_cast<unsigned>(num(top, "n", std::nullopt, 1));
  const u64 q1 = checked_pow(p, n) - 1;
  SemilinearGroup h(p, n, num(top, "h.mult_order", q1, 1), static_cast<unsigned>(num(top, "h.galois_step", 1, 1)),
                    num(top, "h.twist", 0, 1));
  CliffordSpec spec{top.count("name") ? top.at("name") : std::string("unnamed"), h, {}};
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& m = layers[i];
    std::size_t ln = layer_lines[i];
    LayerSpec l;
    l.exponent = num(m, "exponent", 1, ln);
    l.twist = static_cast<unsigned>(num(m, "twist", 0, ln));
    l.theta.degree = num(m, "theta_degree", 1, ln);
    l.theta.count = num(m, "theta_count", 1, ln);
    for (const auto& [k, v] : m) {
      if (k.rfind("orbit.", 0) == 0) {
        auto comma = v.find(',');
        if (comma == std::string::npos) throw ParseError(ln, "orbit profile must be 'degree,count'");
        try {
          l.orbit_profiles[std::stoull(k.substr(6))] = {std::stoull(v.substr(0, comma)), std::stoull(v.substr(comma + 1))};
        } catch (const std::exception&) {
          throw ParseError(ln, "bad orbit profile '" + k + "'");
        }
      } else if (k != "exponent" && k != "twist" && k != "theta_degree" && k != "theta_count") {
        throw ParseError(ln, "unknown layer key '" + k + "'");
      }
    }
    spec.layers.push_back(std::move(l));
  }
  for (const auto& [k, v] : top)
    if (k != "name" && k != "p" && k != "n" && k != "h.mult_order" && k != "h.galois_step" && k != "h.twist")
      throw ParseError(1, "unknown key '" + k + "'");
  if (spec.layers.empty()) throw ParseError(lineno, "no [layer] section");
  return spec;
}

inline std::string write_clifford_spec(const CliffordSpec& s) {
  std::ostringstream o;
  o << "name = " << s.name << "\np = " << s.p() << "\nn = " << s.n() << "\nh.mult_order = " << s.h.mult_order()
    << "\nh.galois_step = " << s.h.galois_step() << "\nh.twist = " << s.h.twist() << "\n";
  for (const auto& l : s.layers) {
    o << "[layer]\nexponent = " << l.exponent << "\ntwist = " << l.twist << "\ntheta_degree = " << l.theta.degree
      << "\ntheta_count = " << l.theta.count << "\n";
    for (const auto& [rep, t] : l.orbit_profiles) o << "orbit." << rep << " = " << t.degree << "," << t.count << "\n";
  }
  return o.str();
}

inline CliffordSpec read_clifford_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_clifford_spec(ss.str());
}

// ---- affine specialization -------------------------------------------------------------

struct ClassBReport {
  DegreeMultiset degrees;
  std::vector<u64> pi_kf;  // π(F(H)), the predicted π(K/F)
  std::vector<u64> pi_gk;  // π(H / F(H)), the predicted π(G/K)
};

/// V ⋊ H for H <= Γ(V) acting faithfully: one layer with theta(1) = 1.
inline ClassBReport disconnected_class_b_degrees(const SemilinearGroup& h) {
  CliffordSpec spec{"affine", h, {LayerSpec{}}};
  ClassBReport out{clifford_degrees(spec), {}, {}};
  PermGroup g = as_permutation_group(h);
  PermGroup f = fitting_subgroup(g);
  out.pi_kf = prime_divisors(f.order());
  out.pi_gk = prime_divisors(g.order() / f.order());
  return out;
}

}  // namespace cdg
