#include "trvoros/exactmath/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace trv {

PolynomialQ poly_from(std::initializer_list<long> coeffs) {
  std::vector<Q> v;
  for (long a : coeffs) v.emplace_back(a);
  return PolynomialQ(std::move(v));
}

PolynomialQ poly_x() { return poly_from({0, 1}); }

Q coeff(const PolynomialQ& p, int i) {
  if (i < 0 || i > p.degree()) return 0;
  return p.c[i];
}

PolynomialQ monic(const PolynomialQ& p) {
  if (p.is_zero_poly()) return p;
  Q inv = 1 / p.lead();
  return p * inv;
}

std::pair<PolynomialQ, PolynomialQ> divmod(const PolynomialQ& a, const PolynomialQ& b) {
  if (b.is_zero_poly()) throw ArithmeticError("polynomial division by zero");
  std::vector<Q> r = a.c;
  int db = b.degree();
  if (a.degree() < db) return {PolynomialQ(), a};
  std::vector<Q> q(a.degree() - db + 1);
  Q inv = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    if (sgn(r[i]) == 0) continue;
    Q f = r[i] * inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c[j];
  }
  r.resize(db);
  return {PolynomialQ(std::move(q)), PolynomialQ(std::move(r))};
}

PolynomialQ poly_mod(const PolynomialQ& a, const PolynomialQ& b) { return divmod(a, b).second; }

PolynomialQ exact_div(const PolynomialQ& a, const PolynomialQ& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero_poly()) throw ArithmeticError("inexact polynomial division");
  return q;
}

namespace {

constexpr unsigned long kGcdPrime = 2305843009213693951UL;  // 2^61 - 1

unsigned long mulmod(unsigned long a, unsigned long b) {
  return static_cast<unsigned long>((static_cast<unsigned __int128>(a) * b) % kGcdPrime);
}

unsigned long powmod(unsigned long a, unsigned long e) {
  unsigned long r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

// Image of p mod the prime; false when a denominator or the leading coefficient vanishes there.
bool reduce_mod(const PolynomialQ& p, std::vector<unsigned long>& out) {
  out.assign(p.c.size(), 0);
  for (std::size_t i = 0; i < p.c.size(); ++i) {
    unsigned long d = mpz_fdiv_ui(p.c[i].get_den_mpz_t(), kGcdPrime);
    if (d == 0) return false;
    unsigned long n = mpz_fdiv_ui(p.c[i].get_num_mpz_t(), kGcdPrime);
    out[i] = mulmod(n, powmod(d, kGcdPrime - 2));
  }
  return !out.empty() && out.back() != 0;
}

// True when gcd(a, b) = 1 is certified by a single modular image.
bool coprime_mod_p(const PolynomialQ& a, const PolynomialQ& b) {
  std::vector<unsigned long> x, y;
  if (!reduce_mod(a, x) || !reduce_mod(b, y)) return false;
  while (!y.empty()) {
    // x mod y
    unsigned long inv = powmod(y.back(), kGcdPrime - 2);
    while (x.size() >= y.size() && !x.empty()) {
      unsigned long f = mulmod(x.back(), inv);
      std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < y.size(); ++i) {
        unsigned long t = mulmod(f, y[i]);
        x[i + shift] = x[i + shift] >= t ? x[i + shift] - t : x[i + shift] + kGcdPrime - t;
      }
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  return x.size() == 1;
}

}  // namespace

PolynomialQ poly_gcd(const PolynomialQ& a, const PolynomialQ& b) {
  if (a.degree() > 0 && b.degree() > 0 && coprime_mod_p(a, b)) return poly_from({1});
  PolynomialQ x = a, y = b;
  while (!y.is_zero_poly()) {
    PolynomialQ r = poly_mod(x, y);
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

Bezout poly_xgcd(const PolynomialQ& a, const PolynomialQ& b) {
  PolynomialQ r0 = a, r1 = b;
  PolynomialQ s0 = poly_from({1}), s1, t0, t1 = poly_from({1});
  while (!r1.is_zero_poly()) {
    auto [q, r] = divmod(r0, r1);
    PolynomialQ s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero_poly()) return {r0, s0, t0};
  Q inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

bool is_squarefree(const PolynomialQ& p) {
  if (p.degree() <= 0) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

PolynomialQ poly_pow(const PolynomialQ& p, int k) {
  PolynomialQ r = poly_from({1}), b = p;
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k) b *= b;
  }
  return r;
}

PolynomialQ compose(const PolynomialQ& p, const PolynomialQ& q) {
  PolynomialQ r;
  for (int i = p.degree(); i >= 0; --i) r = r * q + PolynomialQ({p.c[i]});
  return r;
}

PolynomialQ integrate(const PolynomialQ& p) {
  if (p.is_zero_poly()) return p;
  std::vector<Q> v(p.c.size() + 1);
  for (std::size_t i = 0; i < p.c.size(); ++i) v[i + 1] = p.c[i] / Q(static_cast<long>(i + 1));
  return PolynomialQ(std::move(v));
}

// Euclidean resultant over Q.
Q resultant(const PolynomialQ& a, const PolynomialQ& b) {
  if (a.is_zero_poly() || b.is_zero_poly()) return 0;
  PolynomialQ f = a, g = b;
  Q res = 1;
  while (true) {
    int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      Q p = 1;
      for (int i = 0; i < df; ++i) p *= g.lead();
      return res * p;
    }
    if (df < dg) {
      if ((df * dg) % 2) res = -res;
      std::swap(f, g);
      continue;
    }
    PolynomialQ r = poly_mod(f, g);
    if (r.is_zero_poly()) return 0;
    int dr = r.degree();
    // Res(f, g) = (-1)^{df dg} lc(g)^{df - dr} Res(g, r)
    Q p = 1;
    for (int i = 0; i < df - dr; ++i) p *= g.lead();
    if ((df * dg) % 2) res = -res;
    res *= p;
    f = std::move(g);
    g = std::move(r);
  }
}

Q discriminant(const PolynomialQ& p) {
  int n = p.degree();
  if (n < 1) return 0;
  Q r = resultant(p, p.derivative()) / p.lead();
  if ((n * (n - 1) / 2) % 2) r = -r;
  return r;
}

Q eval(const PolynomialQ& p, const Q& x) {
  Q r = 0;
  for (int i = p.degree(); i >= 0; --i) r = r * x + p.c[i];
  return r;
}

int valuation0(const PolynomialQ& p) {
  if (p.is_zero_poly()) return 1 << 28;
  int k = 0;
  while (sgn(p.c[k]) == 0) ++k;
  return k;
}

PolynomialQ reverse(const PolynomialQ& p, int n) {
  std::vector<Q> v(n + 1);
  for (int i = 0; i <= p.degree() && i <= n; ++i) v[n - i] = p.c[i];
  return PolynomialQ(std::move(v));
}

std::string to_string(const PolynomialQ& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Q& a = p.c[i];
    if (sgn(a) == 0) continue;
    Q m = abs(a);
    os << (sgn(a) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (i == 0 || m != 1) os << to_string(m);
    if (i > 0) {
      if (m != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

// Yun's squarefree decomposition: p = lc * prod s_k^k, returned as (s_k, k).
std::vector<std::pair<PolynomialQ, int>> squarefree_decomposition(const PolynomialQ& p) {
  std::vector<std::pair<PolynomialQ, int>> out;
  if (p.degree() < 1) return out;
  PolynomialQ a = monic(p);
  PolynomialQ b = a.derivative();
  PolynomialQ c = poly_gcd(a, b);
  PolynomialQ w = exact_div(a, c);
  int k = 1;
  while (w.degree() > 0) {
    PolynomialQ y = poly_gcd(w, c);
    PolynomialQ z = exact_div(w, y);
    if (z.degree() > 0) out.emplace_back(z, k);
    w = y;
    c = exact_div(c, y);
    ++k;
  }
  return out;
}

PolynomialQ interpolate(const std::vector<Q>& nodes, const std::vector<Q>& values) {
  if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
  size_t n = nodes.size();
  std::vector<Q> dd = values;  // Newton divided differences, in place
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) {
      Q den = nodes[i] - nodes[i - k];
      if (sgn(den) == 0) throw std::invalid_argument("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  PolynomialQ r;
  for (size_t i = n; i-- > 0;) r = r * PolynomialQ(std::vector<Q>{-nodes[i], 1}) + PolynomialQ(std::vector<Q>{dd[i]});
  return r;
}

}  // namespace trv
