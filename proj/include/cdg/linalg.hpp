#pragma once

// Dense matrices over GF(p) (p < 2^31) and over table fields GF(p^n).

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "galois_field.hpp"
#include "numtheory.hpp"

namespace cdg {

/// GF(p) arithmetic for p < 2^31; elements are residues.
struct PrimeField {
  u64 p = 2;
  using Elem = u64;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return (a + b) % p; }
  Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
  Elem neg(Elem a) const { return (p - a) % p; }
  Elem mul(Elem a, Elem b) const { return a * b % p; }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("GF(p): inverse of zero");
    return pow_mod(a, p - 2, p);
  }
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<Elem>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  u64 size() const { return p; }
  Elem element(u64 i) const { return i; }
};

/// Adapter for GF(p^n) through its tables.
struct ExtensionField {
  const GaloisField* f = nullptr;
  using Elem = u64;
  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem add(Elem a, Elem b) const { return f->add(fe(a), fe(b)).code; }
  Elem sub(Elem a, Elem b) const { return f->sub(fe(a), fe(b)).code; }
  Elem neg(Elem a) const { return f->neg(fe(a)).code; }
  Elem mul(Elem a, Elem b) const { return f->mul(fe(a), fe(b)).code; }
  Elem inv(Elem a) const { return f->inv(fe(a)).code; }
  Elem from_int(long long v) const {
    long long p = static_cast<long long>(f->p());
    long long r = v % p;
    return static_cast<Elem>(r < 0 ? r + p : r);
  }
  u64 size() const { return f->order(); }
  Elem element(u64 i) const { return i; }

 private:
  static FieldElement fe(Elem a) { return {static_cast<std::uint32_t>(a)}; }
};

template <class F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix() = default;
  Matrix(F field, std::size_t rows, std::size_t cols) : f_(field), r_(rows), c_(cols), a_(rows * cols, 0) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const { return f_; }
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }
  std::vector<Elem> row(std::size_t i) const { return {a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)}; }

  Matrix operator*(const Matrix& b) const {
    if (c_ != b.r_) throw std::invalid_argument("matrix: shape mismatch");
    Matrix m(f_, r_, b.c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t k = 0; k < c_; ++k) {
        Elem x = (*this)(i, k);
        if (x == 0) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) = f_.add(m(i, j), f_.mul(x, b(k, j)));
      }
    return m;
  }
  Matrix operator+(const Matrix& b) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.add(a_[i], b.a_[i]);
    return m;
  }
  Matrix operator-(const Matrix& b) const {
    Matrix m = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = f_.sub(a_[i], b.a_[i]);
    return m;
  }
  Matrix scaled(Elem s) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = f_.mul(x, s);
    return m;
  }
  Matrix transpose() const {
    Matrix m(f_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }
  friend bool operator<(const Matrix& a, const Matrix& b) { return a.a_ < b.a_; }

  bool is_zero() const {
    for (auto x : a_)
      if (x) return false;
    return true;
  }

  /// Row-vector times matrix.
  std::vector<Elem> apply_row(const std::vector<Elem>& v) const {
    std::vector<Elem> out(c_, 0);
    for (std::size_t i = 0; i < r_; ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < c_; ++j) out[j] = f_.add(out[j], f_.mul(v[i], (*this)(i, j)));
    }
    return out;
  }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> piv;
    std::size_t r = 0;
    for (std::size_t c = 0; c < c_ && r < r_; ++c) {
      std::size_t s = r;
      while (s < r_ && (*this)(s, c) == 0) ++s;
      if (s == r_) continue;
      if (s != r)
        for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(s, j), (*this)(r, j));
      Elem inv = f_.inv((*this)(r, c));
      for (std::size_t j = 0; j < c_; ++j) (*this)(r, j) = f_.mul((*this)(r, j), inv);
      for (std::size_t i = 0; i < r_; ++i) {
        if (i == r) continue;
        Elem x = (*this)(i, c);
        if (x == 0) continue;
        for (std::size_t j = c; j < c_; ++j) (*this)(i, j) = f_.sub((*this)(i, j), f_.mul(x, (*this)(r, j)));
      }
      piv.push_back(c);
      ++r;
    }
    return piv;
  }

  std::size_t rank() const {
    Matrix m = *this;
    return m.rref().size();
  }

  /// Basis (as rows) of {v : v * M = 0}.
  Matrix left_nullspace() const { return transpose().right_nullspace(); }

  /// Basis (as rows) of {x : M x = 0}.
  Matrix right_nullspace() const {
    Matrix m = *this;
    auto piv = m.rref();
    std::vector<char> is_piv(c_, 0);
    for (auto p : piv) is_piv[p] = 1;
    Matrix out(f_, c_ - piv.size(), c_);
    std::size_t k = 0;
    for (std::size_t free = 0; free < c_; ++free) {
      if (is_piv[free]) continue;
      out(k, free) = f_.one();
      for (std::size_t i = 0; i < piv.size(); ++i) out(k, piv[i]) = f_.neg(m(i, free));
      ++k;
    }
    return out;
  }

  std::optional<Matrix> inverse() const {
    if (r_ != c_) return std::nullopt;
    Matrix aug(f_, r_, 2 * r_);
    for (std::size_t i = 0; i < r_; ++i) {
      for (std::size_t j = 0; j < r_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, r_ + i) = f_.one();
    }
    auto piv = aug.rref();
    if (piv.size() < r_ || piv[r_ - 1] != r_ - 1) return std::nullopt;
    Matrix inv(f_, r_, r_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < r_; ++j) inv(i, j) = aug(i, r_ + j);
    return inv;
  }

  bool invertible() const { return r_ == c_ && rank() == r_; }

  /// Characteristic polynomial det(xI - M), low-to-high, via Hessenberg reduction.
  std::vector<Elem> charpoly() const {
    if (r_ != c_) throw std::invalid_argument("charpoly: matrix not square");
    const std::size_t n = r_;
    Matrix h = *this;
    for (std::size_t m = 1; m + 1 <= n; ++m) {
      std::size_t i = m;
      while (i < n && h(i, m - 1) == 0) ++i;
      if (i == n) continue;
      if (i != m) {
        for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
        for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
      }
      Elem inv = f_.inv(h(m, m - 1));
      for (std::size_t k = m + 1; k < n; ++k) {
        Elem u = f_.mul(h(k, m - 1), inv);
        if (u == 0) continue;
        for (std::size_t j = 0; j < n; ++j) h(k, j) = f_.sub(h(k, j), f_.mul(u, h(m, j)));
        for (std::size_t j = 0; j < n; ++j) h(j, m) = f_.add(h(j, m), f_.mul(u, h(j, k)));
      }
    }
    // p_k = charpoly of leading k x k block.
    std::vector<std::vector<Elem>> p(n + 1);
    p[0] = {f_.one()};
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<Elem> next(k + 1, 0);
      // (x - h[k-1][k-1]) * p_{k-1}
      for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
        next[d + 1] = f_.add(next[d + 1], p[k - 1][d]);
        next[d] = f_.sub(next[d], f_.mul(h(k - 1, k - 1), p[k - 1][d]));
      }
      Elem prod = f_.one();
      for (std::size_t i = 1; i < k; ++i) {
        prod = f_.mul(prod, h(k - i, k - i - 1));
        Elem coef = f_.mul(prod, h(k - i - 1, k - 1));
        for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) next[d] = f_.sub(next[d], f_.mul(coef, p[k - i - 1][d]));
      }
      p[k] = std::move(next);
    }
    return p[n];
  }

 private:
  F f_{};
  std::size_t r_ = 0, c_ = 0;
  std::vector<Elem> a_;
};

using MatrixP = Matrix<PrimeField>;

/// Row space basis (rref rows) of the given rows.
template <class F>
Matrix<F> row_space(const Matrix<F>& m) {
  Matrix<F> r = m;
  auto piv = r.rref();
  Matrix<F> out(m.field(), piv.size(), m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = r(i, j);
  return out;
}

template <class F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
  const F& f = a.field();
  Matrix<F> m(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) m(i * b.rows() + k, j * b.cols() + l) = f.mul(a(i, j), b(k, l));
  return m;
}

/// f(M) for a polynomial f (low-to-high coefficients) by Horner's rule.
template <class F>
Matrix<F> evaluate_poly(const std::vector<typename F::Elem>& coeffs, const Matrix<F>& m) {
  const F& f = m.field();
  Matrix<F> r(f, m.rows(), m.cols());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    r = r * m;
    for (std::size_t d = 0; d < m.rows(); ++d) r(d, d) = f.add(r(d, d), coeffs[i]);
  }
  return r;
}

namespace polyf {

// Polynomials over GF(p), p < 2^31, low-to-high.
using P = std::vector<u64>;

inline void trim(P& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline P mul(const P& a, const P& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  P r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

inline P divmod(P a, const P& b, u64 p, P* quotient = nullptr) {
  trim(a);
  P q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const u64 inv = pow_mod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    u64 c = a.back() * inv % p;
    std::size_t s = a.size() - b.size();
    q[s] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[s + j] = (a[s + j] + (p - c) * b[j] % p) % p;
    trim(a);
  }
  if (quotient) {
    trim(q);
    *quotient = q;
  }
  return a;
}

inline P gcd(P a, P b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    P r = divmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    u64 inv = pow_mod(a.back(), p - 2, p);
    for (auto& x : a) x = x * inv % p;
  }
  return a;
}

inline P powmod(P base, u64 e, const P& m, u64 p) {
  P r{1};
  base = divmod(base, m, p);
  while (e) {
    if (e & 1) r = divmod(mul(r, base, p), m, p);
    base = divmod(mul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

/// Distinct roots in GF(p) of f (Cantor-Zassenhaus equal-degree splitting, seeded).
inline std::vector<u64> roots(P f, u64 p, std::uint64_t seed = 0) {
  trim(f);
  std::vector<u64> out;
  if (f.size() <= 1) return out;
  // g = gcd(f, x^p - x) keeps the product of the distinct linear factors.
  P xp = powmod({0, 1}, p, f, p);
  P t = xp;
  if (t.size() < 2) t.resize(2, 0);
  t[1] = (t[1] + p - 1) % p;
  trim(t);
  P g = gcd(f, t, p);
  std::mt19937_64 rng(seed);
  std::vector<P> stack{g};
  while (!stack.empty()) {
    P h = stack.back();
    stack.pop_back();
    if (h.size() <= 1) continue;
    if (h.size() == 2) {
      out.push_back((p - h[0] * pow_mod(h[1], p - 2, p) % p) % p);
      continue;
    }
    if (p == 2) {
      // h divides x(x+1): test both.
      for (u64 r : {0ull, 1ull}) {
        u64 v = 0;
        for (std::size_t i = h.size(); i-- > 0;) v = (v * r + h[i]) % 2;
        if (v == 0) out.push_back(r);
      }
      continue;
    }
    for (;;) {
      u64 a = rng() % p;
      P s = powmod({a, 1}, (p - 1) / 2, h, p);
      if (s.empty()) s = {0};
      s[0] = (s[0] + p - 1) % p;
      trim(s);
      P d = gcd(h, s, p);
      if (d.size() > 1 && d.size() < h.size()) {
        P q;
        divmod(h, d, p, &q);
        stack.push_back(d);
        stack.push_back(q);
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace polyf

}  // namespace cdg
