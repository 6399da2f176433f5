#pragma once

// Deterministic constructions of the test groups and the recipe/manifest format.
//
// Groups of the form P ⋊ H are realized on the points of P: (a, h) acts by
// x -> (x a)^h. This is faithful whenever H acts faithfully on P, and p-groups are
// realized through their right regular representation (H = 1).

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "clifford.hpp"
#include "galois_field.hpp"
#include "gmodule.hpp"
#include "group_algos.hpp"
#include "group_io.hpp"
#include "semilinear.hpp"

namespace cdg {

/// A finite group on the codes 0..size-1 (0 is the identity).
struct GroupModel {
  u64 size = 1;
  std::function<u64(u64, u64)> mul;
  std::vector<u64> generators;
};

using Automorphism = std::function<u64(u64)>;

class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// P ⋊ <autos> acting on P. Each automorphism is checked on all x and all generators g:
/// a(x g) = a(x) a(g).
inline PermGroup holomorph(const GroupModel& model, const std::vector<Automorphism>& autos) {
  require_within("max_degree", kMaxDegree, model.size);
  const u64 n = model.size;
  std::vector<Perm> gens;
  for (u64 a : model.generators) {
    std::vector<Point> img(n);
    for (u64 x = 0; x < n; ++x) img[x] = static_cast<Point>(model.mul(x, a));
    gens.emplace_back(std::move(img));
  }
  for (const auto& h : autos) {
    std::vector<Point> img(n);
    for (u64 x = 0; x < n; ++x) img[x] = static_cast<Point>(h(x));
    Perm perm(std::move(img));
    for (u64 x = 0; x < n; ++x)
      for (u64 g : model.generators)
        if (h(model.mul(x, g)) != model.mul(h(x), h(g)))
          throw ConstructionError("construction: map is not an automorphism (equivariance check failed)");
    gens.push_back(std::move(perm));
  }
  return PermGroup(static_cast<std::size_t>(n), gens);
}

inline PermGroup regular(const GroupModel& model) { return holomorph(model, {}); }

// ---- small families --------------------------------------------------------------------

inline PermGroup cyclic_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic: n must be positive");
  std::vector<Point> img(n);
  for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(img)});
}

inline PermGroup symmetric_group(std::size_t n) {
  if (n == 0) throw std::invalid_argument("symmetric: n must be positive");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return PermGroup(n, {Perm(cyc), Perm::from_cycles(n, {{0, 1}})});
}

inline PermGroup alternating_group(std::size_t n) {
  if (n < 3) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  std::vector<Perm> gens;
  for (std::size_t i = 2; i < n; ++i) gens.push_back(Perm::from_cycles(n, {{0, 1, static_cast<Point>(i)}}));
  return PermGroup(n, gens);
}

inline PermGroup dihedral_group(std::size_t n) {  // order 2n, on n points
  if (n < 3) throw std::invalid_argument("dihedral: n >= 3");
  std::vector<Point> rot(n), ref(n);
  for (std::size_t i = 0; i < n; ++i) {
    rot[i] = static_cast<Point>((i + 1) % n);
    ref[i] = static_cast<Point>((n - i) % n);
  }
  return PermGroup(n, {Perm(rot), Perm(ref)});
}

/// Disjoint union of the two actions.
inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  const std::size_t n = a.degree() + b.degree();
  std::vector<Perm> gens;
  for (const auto& g : a.generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = i < a.degree() ? g(static_cast<Point>(i)) : static_cast<Point>(i);
    gens.emplace_back(std::move(img));
  }
  for (const auto& g : b.generators()) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i)
      img[i] = i < a.degree() ? static_cast<Point>(i)
                              : static_cast<Point>(a.degree() + g(static_cast<Point>(i - a.degree())));
    gens.emplace_back(std::move(img));
  }
  return PermGroup(n, gens);
}

/// Matrix group over GF(p) acting on the nonzero vectors.
inline PermGroup matrix_group(u64 p, std::size_t dim, const std::vector<std::vector<u64>>& mats) {
  PrimeField f{p};
  std::vector<MatrixP> gens;
  for (const auto& flat : mats) {
    if (flat.size() != dim * dim) throw std::invalid_argument("matrix_group: wrong entry count");
    MatrixP m(f, dim, dim);
    for (std::size_t i = 0; i < dim * dim; ++i) m(i / dim, i % dim) = flat[i] % p;
    gens.push_back(std::move(m));
  }
  return GModule(p, dim, gens).as_permutation_group();
}

inline PermGroup sl23() { return matrix_group(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}}); }
inline PermGroup gl23() { return matrix_group(3, 2, {{1, 1, 0, 1}, {1, 0, 1, 1}, {2, 0, 0, 1}}); }

// ---- extraspecial groups ----------------------------------------------------------------

/// Elements (v, z), v in GF(p)^(2m), z in GF(p), coded as digits of v then z.
/// Variants: odd p: "exponent_p" (symplectic cocycle) or "exponent_p2" (plus a carry
/// cocycle on the first coordinate); p = 2: a word over {D, Q} of length m naming the
/// central factors (a single letter is padded with D).
inline GroupModel extraspecial_model(u64 p, unsigned m, const std::string& variant) {
  if (!is_prime(p) || m == 0) throw std::invalid_argument("extraspecial: need prime p and m >= 1");
  const unsigned dim = 2 * m;
  const u64 size = checked_pow(p, dim + 1);
  require_within("max_enumerated_order", limits::kMaxEnumeratedOrder, size);
  std::vector<char> quat(m, 0);
  bool carry = false;
  if (p == 2) {
    std::string w = variant.empty() ? "D" : variant;
    if (w.size() == 1) w += std::string(m - 1, 'D');
    if (w.size() != m) throw std::invalid_argument("extraspecial: variant must name " + std::to_string(m) + " factors");
    for (unsigned i = 0; i < m; ++i) {
      if (w[i] != 'D' && w[i] != 'Q') throw std::invalid_argument("extraspecial: factors are D or Q");
      quat[i] = w[i] == 'Q';
    }
  } else if (variant == "exponent_p2") {
    carry = true;
  } else if (!variant.empty() && variant != "exponent_p") {
    throw std::invalid_argument("extraspecial: variant must be exponent_p or exponent_p2");
  }
  const u64 half = (p + 1) / 2;
  auto digits = [p, dim](u64 c) {
    std::vector<u64> d(dim + 1);
    for (unsigned i = 0; i <= dim; ++i) {
      d[i] = c % p;
      c /= p;
    }
    return d;
  };
  GroupModel g;
  g.size = size;
  g.mul = [=](u64 x, u64 y) {
    auto a = digits(x), b = digits(y);
    u64 z = a[dim] + b[dim];
    for (unsigned i = 0; i < m; ++i) {
      if (p == 2) {
        z += a[i] * b[m + i];
        if (quat[i]) z += a[i] * b[i] + a[m + i] * b[m + i];
      } else {
        // (v1 w2 - v2 w1) / 2
        z += half * ((a[i] * b[m + i] + (p - 1) * a[m + i] * b[i]) % p);
      }
    }
    if (carry && a[0] + b[0] >= p) z += 1;
    std::vector<u64> r(dim + 1);
    for (unsigned i = 0; i < dim; ++i) r[i] = (a[i] + b[i]) % p;
    r[dim] = z % p;
    u64 c = 0;
    for (unsigned i = dim + 1; i-- > 0;) c = c * p + r[i];
    return c;
  };
  for (unsigned i = 0; i < dim; ++i) g.generators.push_back(ipow(p, i));
  return g;
}

inline PermGroup extraspecial(u64 p, unsigned m, const std::string& variant) {
  return regular(extraspecial_model(p, m, variant));
}

/// 3^(1+2) of exponent 3 extended by the fixed-point-free element [[0,-1],[1,0]] of SL(2,3).
inline PermGroup heisenberg27_c4() {
  GroupModel p = extraspecial_model(3, 1, "exponent_p");
  Automorphism a = [](u64 c) {
    u64 v1 = c % 3, v2 = c / 3 % 3, z = c / 9;
    // row vector (v1, v2) times [[0,2],[1,0]]
    u64 w1 = v2, w2 = (2 * v1) % 3;
    return w1 + 3 * w2 + 9 * z;
  };
  return holomorph(p, {a});
}

// ---- field-based groups -----------------------------------------------------------------

inline PermGroup affine_semilinear(const SemilinearGroup& h) {
  const u64 q = h.field_order();
  require_within("max_affine_field", limits::kMaxAffineField, q);
  GaloisField f(h.p(), h.n());
  GroupModel v;
  v.size = q;
  v.mul = [&f](u64 a, u64 b) { return static_cast<u64>(f.add({static_cast<std::uint32_t>(a)}, {static_cast<std::uint32_t>(b)}).code); };
  for (unsigned i = 0; i < h.n(); ++i) v.generators.push_back(ipow(h.p(), i));
  std::vector<Automorphism> autos;
  for (const auto& s : h.generators()) {
    FieldElement c = f.exp(s.t);
    unsigned k = s.k;
    autos.push_back([&f, c, k](u64 x) {
      return static_cast<u64>(f.mul(c, f.frobenius({static_cast<std::uint32_t>(x)}, k)).code);
    });
  }
  return holomorph(v, autos);
}

/// P = V x V x F with (a1,a2,z)(b1,b2,w) = (a1+b1, a2+b2, z+w+a1 b2), so that
/// [(a1,a2),(b1,b2)] = a1 b2 - a2 b1; c in H acts by (c a1, c a2, c^2 z), Frobenius
/// coordinatewise.
inline PermGroup heisenberg_pairing(const SemilinearGroup& h) {
  const u64 q = h.field_order();
  const u64 size = checked_pow(q, 3);
  require_within("max_pairing_group", limits::kMaxPairingGroup, size);
  GaloisField f(h.p(), h.n());
  auto fe = [](u64 x) { return FieldElement{static_cast<std::uint32_t>(x)}; };
  GroupModel pm;
  pm.size = size;
  pm.mul = [&f, q, fe](u64 x, u64 y) {
    u64 a1 = x % q, a2 = x / q % q, z = x / (q * q);
    u64 b1 = y % q, b2 = y / q % q, w = y / (q * q);
    u64 c1 = f.add(fe(a1), fe(b1)).code, c2 = f.add(fe(a2), fe(b2)).code;
    u64 c3 = f.add(f.add(fe(z), fe(w)), f.mul(fe(a1), fe(b2))).code;
    return c1 + q * c2 + q * q * c3;
  };
  for (unsigned i = 0; i < h.n(); ++i) {
    pm.generators.push_back(ipow(h.p(), i));
    pm.generators.push_back(q * ipow(h.p(), i));
  }
  std::vector<Automorphism> autos;
  for (const auto& s : h.generators()) {
    FieldElement c = f.exp(s.t), c2 = f.mul(c, c);
    unsigned k = s.k;
    autos.push_back([&f, q, c, c2, k, fe](u64 x) {
      u64 a1 = x % q, a2 = x / q % q, z = x / (q * q);
      u64 r1 = f.mul(c, f.frobenius(fe(a1), k)).code;
      u64 r2 = f.mul(c, f.frobenius(fe(a2), k)).code;
      u64 r3 = f.mul(c2, f.frobenius(fe(z), k)).code;
      return r1 + q * r2 + q * q * r3;
    });
  }
  return holomorph(pm, autos);
}

/// P = F x F with (x,z)(y,w) = (x+y, z+w+x^(p^s) y); a in H acts by
/// (a x^(p^k), a^(1+p^s) z^(p^k)). Two layers with multiplier exponents 1 and 1 + p^s.
inline PermGroup frobenius_pairing(const SemilinearGroup& h, unsigned s) {
  const u64 q = h.field_order();
  require_within("max_pairing_group", limits::kMaxPairingGroup, q * q);
  GaloisField f(h.p(), h.n());
  auto fe = [](u64 x) { return FieldElement{static_cast<std::uint32_t>(x)}; };
  GroupModel pm;
  pm.size = q * q;
  pm.mul = [&f, q, s, fe](u64 a, u64 b) {
    u64 x = a % q, z = a / q, y = b % q, w = b / q;
    u64 c1 = f.add(fe(x), fe(y)).code;
    u64 c2 = f.add(f.add(fe(z), fe(w)), f.mul(f.frobenius(fe(x), s), fe(y))).code;
    return c1 + q * c2;
  };
  for (unsigned i = 0; i < h.n(); ++i) {
    pm.generators.push_back(ipow(h.p(), i));
    pm.generators.push_back(q * ipow(h.p(), i));
  }
  const u64 e2 = 1 + ipow(h.p(), s);
  std::vector<Automorphism> autos;
  for (const auto& g : h.generators()) {
    FieldElement c = f.exp(g.t), c2 = f.pow(c, static_cast<long long>(e2));
    unsigned k = g.k;
    autos.push_back([&f, q, c, c2, k, fe](u64 a) {
      u64 x = a % q, z = a / q;
      return static_cast<u64>(f.mul(c, f.frobenius(fe(x), k)).code) +
             q * static_cast<u64>(f.mul(c2, f.frobenius(fe(z), k)).code);
    });
  }
  return holomorph(pm, autos);
}

/// Tr: GF(p^n) -> GF(p).
inline u64 field_trace(const GaloisField& f, FieldElement x) {
  FieldElement s = f.zero();
  for (unsigned i = 0; i < f.n(); ++i) s = f.add(s, f.frobenius(x, i));
  return s.code;
}

/// Rank over GF(p) of (x, y) -> Tr(b (x^(p^s) y - y^(p^s) x)).
inline std::size_t pairing_form_rank(const GaloisField& f, FieldElement b, unsigned s) {
  PrimeField pf{f.p()};
  MatrixP m(pf, f.n(), f.n());
  for (unsigned i = 0; i < f.n(); ++i)
    for (unsigned j = 0; j < f.n(); ++j) {
      FieldElement x{static_cast<std::uint32_t>(ipow(f.p(), i))}, y{static_cast<std::uint32_t>(ipow(f.p(), j))};
      FieldElement v = f.sub(f.mul(f.frobenius(x, s), y), f.mul(f.frobenius(y, s), x));
      m(i, j) = field_trace(f, f.mul(b, v));
    }
  return m.rank();
}

/// The Clifford data of frobenius_pairing: theta profiles per orbit of the second layer
/// come from the radical of the commutator form attached to lambda_b.
inline CliffordSpec frobenius_pairing_spec(const SemilinearGroup& h, unsigned s, const std::string& name) {
  GaloisField f(h.p(), h.n());
  LayerSpec top;
  LayerSpec second;
  second.exponent = 1 + ipow(h.p(), s);
  const u64 q1 = h.units();
  const u64 shift = (q1 - second.exponent % q1) % q1;
  for (const auto& orb : orbits_on_dlogs(h, shift)) {
    std::size_t r = pairing_form_rank(f, f.exp(orb.representative), s);
    second.orbit_profiles[orb.representative] = {ipow(h.p(), static_cast<unsigned>(r / 2)),
                                                 ipow(h.p(), static_cast<unsigned>(h.n() - r))};
  }
  second.theta = second.orbit_profiles.begin()->second;
  return CliffordSpec{name, h, {top, second}};
}

// ---- the Lewis data ----------------------------------------------------------------------

/// Γ(2^15) acting on three layers of order 2^15 with multiplier exponents 1, 3, 7;
/// characters over the second layer come in pairs of degree 2^7 and those over the third
/// are fully ramified of degree 2^15.
inline CliffordSpec lewis_spec() {
  SemilinearGroup h = SemilinearGroup::gamma(2, 15);
  LayerSpec l1, l2, l3;
  l1.exponent = 1;
  l2.exponent = 3;
  l2.theta = {u64{1} << 7, 2};
  l3.exponent = 7;
  l3.theta = {u64{1} << 15, 1};
  return CliffordSpec{"lewis", h, {l1, l2, l3}};
}

// ---- recipes -----------------------------------------------------------------------------

struct Recipe {
  std::string name;
  std::string kind;
  std::map<std::string, std::string> params;
  std::map<std::string, std::string> expect;  // order, center, class, solvable
  std::size_t line = 0;
};

struct Construction {
  std::string name;
  std::optional<PermGroup> group;
  std::optional<CliffordSpec> clifford;  // structured description, when available
  std::string description;
};

using NamedObject = std::variant<PermGroup, CliffordSpec>;

inline std::vector<std::string> named_ids() {
  return {"trivial", "c2",    "c3",      "c4",        "c5",       "c6",        "c15",  "v4",
          "s3",      "d8",    "q8",      "q8xc2",     "a4",       "s4",        "sl23", "gl23",
          "heis27",  "m27",   "heis27_c4", "es32plus", "es32minus", "a4xc5",   "s3xc5", "a5",
          "lewis"};
}

inline NamedObject named(const std::string& id) {
  if (id == "trivial") return PermGroup::trivial(1);
  if (id == "c2") return cyclic_group(2);
  if (id == "c3") return cyclic_group(3);
  if (id == "c4") return cyclic_group(4);
  if (id == "c5") return cyclic_group(5);
  if (id == "c6") return cyclic_group(6);
  if (id == "c15") return cyclic_group(15);
  if (id == "v4") return direct_product(cyclic_group(2), cyclic_group(2));
  if (id == "s3") return symmetric_group(3);
  if (id == "d8") return dihedral_group(4);
  if (id == "q8") return extraspecial(2, 1, "Q");
  if (id == "q8xc2") return direct_product(extraspecial(2, 1, "Q"), cyclic_group(2));
  if (id == "a4") return alternating_group(4);
  if (id == "s4") return symmetric_group(4);
  if (id == "sl23") return sl23();
  if (id == "gl23") return gl23();
  if (id == "heis27") return extraspecial(3, 1, "exponent_p");
  if (id == "m27") return extraspecial(3, 1, "exponent_p2");
  if (id == "heis27_c4") return heisenberg27_c4();
  if (id == "es32plus") return extraspecial(2, 2, "DD");
  if (id == "es32minus") return extraspecial(2, 2, "QD");
  if (id == "a4xc5") return direct_product(alternating_group(4), cyclic_group(5));
  if (id == "s3xc5") return direct_product(symmetric_group(3), cyclic_group(5));
  if (id == "a5") return alternating_group(5);
  if (id == "lewis") return lewis_spec();
  throw std::invalid_argument("unknown named example '" + id + "'");
}

namespace detail {
inline u64 param_u64(const Recipe& r, const std::string& key, std::optional<u64> dflt = std::nullopt) {
  auto it = r.params.find(key);
  if (it == r.params.end()) {
    if (dflt) return *dflt;
    throw ParseError(r.line, "recipe '" + r.name + "': missing parameter '" + key + "'");
  }
  try {
    std::size_t pos = 0;
    u64 v = std::stoull(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument("trailing");
    return v;
  } catch (const std::exception&) {
    throw ParseError(r.line, "recipe '" + r.name + "': parameter '" + key + "' is not an integer");
  }
}

inline std::string param_str(const Recipe& r, const std::string& key, const std::string& dflt = "") {
  auto it = r.params.find(key);
  return it == r.params.end() ? dflt : it->second;
}

inline SemilinearGroup recipe_semilinear(const Recipe& r) {
  const u64 p = param_u64(r, "p");
  const unsigned n = static_cast<unsigned>(param_u64(r, "n"));
  const u64 q1 = checked_pow(p, n) - 1;
  try {
    return SemilinearGroup(p, n, param_u64(r, "h.mult_order", q1), static_cast<unsigned>(param_u64(r, "h.galois_step", 1)),
                           param_u64(r, "h.twist", 0));
  } catch (const std::invalid_argument& e) {
    throw ParseError(r.line, "recipe '" + r.name + "': " + e.what());
  }
}
}  // namespace detail

inline Construction build(const Recipe& r) {
  Construction c;
  c.name = r.name;
  if (r.kind == "named") {
    auto obj = named(detail::param_str(r, "id"));
    if (std::holds_alternative<PermGroup>(obj)) c.group = std::get<PermGroup>(obj);
    else c.clifford = std::get<CliffordSpec>(obj);
    c.description = "named " + detail::param_str(r, "id");
  } else if (r.kind == "extraspecial" || r.kind == "central_product") {
    const u64 p = r.kind == "central_product" ? 2 : detail::param_u64(r, "p");
    std::string variant = detail::param_str(r, r.kind == "central_product" ? "factors" : "variant");
    unsigned m = r.kind == "central_product" ? static_cast<unsigned>(variant.size())
                                             : static_cast<unsigned>(detail::param_u64(r, "m"));
    c.group = extraspecial(p, m, variant);
    c.description = "extraspecial " + std::to_string(p) + "^(1+" + std::to_string(2 * m) + ") " + variant;
  } else if (r.kind == "affine_semilinear") {
    SemilinearGroup h = detail::recipe_semilinear(r);
    c.group = affine_semilinear(h);
    c.clifford = CliffordSpec{r.name, h, {LayerSpec{}}};
    c.description = "GF(" + std::to_string(h.field_order()) + ") x| " + h.describe();
  } else if (r.kind == "heisenberg_pairing") {
    SemilinearGroup h = detail::recipe_semilinear(r);
    c.group = heisenberg_pairing(h);
    c.description = "Heisenberg pairing over GF(" + std::to_string(h.field_order()) + ") x| " + h.describe();
  } else if (r.kind == "frobenius_pairing") {
    SemilinearGroup h = detail::recipe_semilinear(r);
    unsigned s = static_cast<unsigned>(detail::param_u64(r, "s", 1));
    c.group = frobenius_pairing(h, s);
    c.clifford = frobenius_pairing_spec(h, s, r.name);
    c.description = "Frobenius pairing (s = " + std::to_string(s) + ") over GF(" + std::to_string(h.field_order()) +
                    ") x| " + h.describe();
  } else if (r.kind == "direct_product") {
    std::string fs = detail::param_str(r, "factors");
    std::stringstream ss(fs);
    std::string id;
    std::optional<PermGroup> acc;
    while (std::getline(ss, id, ',')) {
      id = strip_comment(id);
      auto obj = named(id);
      if (!std::holds_alternative<PermGroup>(obj)) throw ParseError(r.line, "direct_product factor must be a group");
      acc = acc ? direct_product(*acc, std::get<PermGroup>(obj)) : std::get<PermGroup>(obj);
    }
    if (!acc) throw ParseError(r.line, "direct_product needs factors");
    c.group = *acc;
    c.description = "direct product " + fs;
  } else {
    throw ParseError(r.line, "unknown recipe kind '" + r.kind + "'");
  }
  return c;
}

/// Checks the expected-invariant block; returns the failures.
inline std::vector<std::string> check_expectations(const Recipe& r, const Construction& c) {
  std::vector<std::string> bad;
  auto want = [&](const std::string& k) -> std::optional<std::string> {
    auto it = r.expect.find(k);
    if (it == r.expect.end()) return std::nullopt;
    return it->second;
  };
  if (!c.group) {
    if (auto o = want("order"); o && c.clifford && c.clifford->group_order().str() != *o)
      bad.push_back("order " + c.clifford->group_order().str() + " != " + *o);
    return bad;
  }
  const PermGroup& g = *c.group;
  if (auto o = want("order"); o && g.order_big().str() != *o) bad.push_back("order " + g.order_big().str() + " != " + *o);
  if (auto o = want("center"); o && std::to_string(center(g).order()) != *o)
    bad.push_back("center " + std::to_string(center(g).order()) + " != " + *o);
  if (auto o = want("class")) {
    auto chain = lower_central_chain(g);
    std::string cls = chain.back().is_trivial() ? std::to_string(chain.size() - 1) : "none";
    if (g.is_trivial()) cls = "0";
    if (cls != *o) bad.push_back("class " + cls + " != " + *o);
  }
  if (auto o = want("solvable"); o && (is_solvable(g) ? "true" : "false") != *o) bad.push_back("solvable != " + *o);
  return bad;
}

/// Manifest/recipe format: sections "[name]" followed by "key = value" lines; keys
/// "expect.X" go to the expectation block.
inline std::vector<Recipe> parse_recipes(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  std::vector<Recipe> out;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']' || s.size() < 3) throw ParseError(lineno, "malformed section header");
      Recipe r;
      r.name = s.substr(1, s.size() - 2);
      r.line = lineno;
      for (const auto& o : out)
        if (o.name == r.name) throw ParseError(lineno, "duplicate recipe '" + r.name + "'");
      out.push_back(std::move(r));
      continue;
    }
    if (out.empty()) throw ParseError(lineno, "key outside of a [recipe] section");
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    std::string k = strip_comment(s.substr(0, eq)), v = strip_comment(s.substr(eq + 1));
    if (k.empty()) throw ParseError(lineno, "empty key");
    Recipe& r = out.back();
    if (k == "kind") r.kind = v;
    else if (k.rfind("expect.", 0) == 0) r.expect[k.substr(7)] = v;
    else r.params[k] = v;
  }
  for (const auto& r : out)
    if (r.kind.empty()) throw ParseError(r.line, "recipe '" + r.name + "' has no kind");
  return out;
}

inline std::vector<Recipe> read_recipe_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_recipes(ss.str());
}

}  // namespace cdg
