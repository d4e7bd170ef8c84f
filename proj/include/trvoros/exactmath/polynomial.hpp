#pragma once

#include <string>
#include <utility>
#include <vector>

#include "trvoros/exactmath/rational.hpp"

namespace trv {

// Ring glue for Q; QElem provides the same set in quotient_ring.hpp.
inline Q zero_of(const Q&) { return Q(0); }
inline Q one_of(const Q&) { return Q(1); }
inline Q scalar_of(const Q&, const Q& v) { return v; }
inline Q inverse(const Q& a) {
  if (sgn(a) == 0) throw ArithmeticError("non-unit: division by zero");
  return 1 / a;
}

// Dense univariate polynomial, c[i] is the coefficient of z^i. The zero
// polynomial has no coefficients and degree() == -1.
template <class R>
struct Poly {
  std::vector<R> c;

  Poly() = default;
  explicit Poly(std::vector<R> v) : c(std::move(v)) { trim(); }

  static Poly monomial(const R& a, int k) {
    if (is_zero(a)) return Poly();
    std::vector<R> v(k + 1, zero_of(a));
    v[k] = a;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero_poly() const { return c.empty(); }
  const R& lead() const { return c.back(); }

  void trim() {
    while (!c.empty() && is_zero(c.back())) c.pop_back();
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly& operator+=(const Poly& b) {
    if (b.c.size() > c.size()) {
      std::size_t old = c.size();
      c.resize(b.c.size(), zero_of(b.c[0]));
      for (std::size_t i = old; i < c.size(); ++i) c[i] = zero_of(b.c[0]);
    }
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& b) {
    if (b.c.size() > c.size()) c.resize(b.c.size(), zero_of(b.c[0]));
    for (std::size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.c.empty() || b.c.empty()) return Poly();
    std::vector<R> r(a.c.size() + b.c.size() - 1, zero_of(a.c[0]));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (is_zero(a.c[i])) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  friend Poly operator*(Poly a, const R& s) {
    for (auto& x : a.c) x *= s;
    a.trim();
    return a;
  }
  friend Poly operator*(const R& s, Poly a) { return std::move(a) * s; }

  R eval(const R& x) const {
    if (c.empty()) return zero_of(x);
    R r = c.back();
    for (int i = degree() - 1; i >= 0; --i) r = r * x + c[i];
    return r;
  }

  Poly derivative() const {
    if (c.size() <= 1) return Poly();
    std::vector<R> r(c.size() - 1, zero_of(c[0]));
    for (std::size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * scalar_of(c[i], Q(static_cast<long>(i)));
    return Poly(std::move(r));
  }
};

using PolynomialQ = Poly<Q>;

// Evaluation of a rational-coefficient polynomial at a ring element.
template <class R>
R eval_at(const PolynomialQ& p, const R& x) {
  if (p.c.empty()) return zero_of(x);
  R r = scalar_of(x, p.c.back());
  for (int i = p.degree() - 1; i >= 0; --i) {
    r = r * x;
    r += scalar_of(x, p.c[i]);
  }
  return r;
}

// p(b + u) as a polynomial in u, coefficients in the ring of b.
template <class R>
Poly<R> taylor_shift(const PolynomialQ& p, const R& b) {
  std::vector<R> acc;
  for (int j = p.degree(); j >= 0; --j) {
    // acc <- acc * (u + b) + p_j
    std::vector<R> next(acc.size() + 1, zero_of(b));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] += acc[i] * b;
    }
    next[0] += scalar_of(b, p.c[j]);
    acc = std::move(next);
  }
  return Poly<R>(std::move(acc));
}

template <class R>
Poly<R> lift(const PolynomialQ& p, const R& like) {
  std::vector<R> v;
  v.reserve(p.c.size());
  for (auto& a : p.c) v.push_back(scalar_of(like, a));
  return Poly<R>(std::move(v));
}

// Rational-coefficient helpers.
PolynomialQ poly_from(std::initializer_list<long> coeffs);
PolynomialQ poly_x();
Q coeff(const PolynomialQ& p, int i);
PolynomialQ monic(const PolynomialQ& p);
std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& a, const PolynomialQ& b);
PolynomialQ poly_mod(const PolynomialQ& a, const PolynomialQ& b);
// Exact division; throws when b does not divide a.
PolynomialQ exact_div(const PolynomialQ& a, const PolynomialQ& b);
// Monic gcd; gcd(a, 0) = monic(a), gcd(0, 0) = 0.
PolynomialQ poly_gcd(const PolynomialQ& a, const PolynomialQ& b);
// Returns (g, s, t) with s a + t b = g, g monic.
struct Bezout {
  PolynomialQ g, s, t;
};
Bezout poly_xgcd(const PolynomialQ& a, const PolynomialQ& b);
bool is_squarefree(const PolynomialQ& p);
// Yun: p = lc * prod s_k^k with s_k squarefree and pairwise coprime; returns (s_k, k).
std::vector<std::pair<PolynomialQ, int>> squarefree_decomposition(const PolynomialQ& p);
PolynomialQ poly_pow(const PolynomialQ& p, int k);
PolynomialQ compose(const PolynomialQ& p, const PolynomialQ& q);
PolynomialQ integrate(const PolynomialQ& p);
// Unique polynomial of degree < n through n points with distinct nodes.
PolynomialQ interpolate(const std::vector<Q>& nodes, const std::vector<Q>& values);
Q resultant(const PolynomialQ& a, const PolynomialQ& b);
Q discriminant(const PolynomialQ& p);
Q eval(const PolynomialQ& p, const Q& x);
// Number of trailing zero coefficients (order of vanishing at 0).
int valuation0(const PolynomialQ& p);
PolynomialQ reverse(const PolynomialQ& p, int n);
std::string to_string(const PolynomialQ& p, const std::string& var = "z");

}  // namespace trv
