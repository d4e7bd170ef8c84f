#include "trvoros/wkb/riccati.hpp"

#include <stdexcept>

namespace trv {

bool Jet::is_zero() const {
  for (const auto& f : c_)
    if (!f.is_zero()) return false;
  return true;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r = a;
  for (int k = 0; k <= r.order(); ++k) r.c_[k] += b.c_[k];
  return r;
}

Jet operator-(const Jet& a) {
  Jet r = a;
  for (auto& f : r.c_) f = -f;
  return r;
}

Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }

Jet operator*(const Jet& a, const Jet& b) {
  int K = a.order();
  Jet r(K, FactoredRF(a.c_[0].base(), PolynomialQ()));
  for (int i = 0; i <= K; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= K; ++j)
      if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

Jet operator*(const Q& s, const Jet& a) {
  Jet r = a;
  for (auto& f : r.c_) f = s * f;
  return r;
}

Jet Jet::inverse() const {
  if (c_[0].is_zero()) throw ArithmeticError("jet inverse: zero constant term");
  int K = order();
  FactoredRF zero(c_[0].base(), PolynomialQ());
  Jet r(K, zero);
  FactoredRF inv0 = c_[0].inverse();
  r.c_[0] = inv0;
  for (int k = 1; k <= K; ++k) {
    FactoredRF acc = zero;
    for (int j = 1; j <= k; ++j)
      if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
    r.c_[k] = (-(acc * inv0)).reduced();
  }
  return r;
}

Jet Jet::dz() const {
  Jet r = *this;
  for (auto& f : r.c_) f = f.derivative();
  return r;
}

Jet Jet::d_eps() const {
  Jet r = *this;
  int K = order();
  for (int k = 0; k < K; ++k) r.c_[k] = Q(k + 1) * c_[k + 1];
  r.c_[K] = FactoredRF(c_[0].base(), PolynomialQ());
  return r;
}

Jet Jet::reduced() const {
  Jet r = *this;
  for (auto& f : r.c_) f = f.reduced();
  return r;
}

namespace {

// f(X) for f a rational function of x and X a jet.
Jet compose(const RationalFunctionQ& f, const Jet& X) {
  int K = X.order();
  const FactorBasePtr& base = X[0].base();
  auto horner = [&](const PolynomialQ& p) {
    Jet acc(K, FactoredRF(base, PolynomialQ()));
    for (int i = p.degree(); i >= 0; --i) acc = acc * X + Jet(K, FactoredRF(base, PolynomialQ(std::vector<Q>{p.c[i]})));
    return acc;
  };
  Jet num = horner(f.num());
  if (f.den().degree() == 0) return (Q(1) / f.den().c[0]) * num;
  return num * horner(f.den()).inverse();
}

Jet affine_jet(const FactorBasePtr& base, int K, const RationalFunctionQ& v0, const RationalFunctionQ& dv) {
  Jet j(K, FactoredRF(base, v0));
  if (K >= 1) j[1] = FactoredRF(base, dv);
  return j;
}

// Denominators met in the expansion: those of x, x', y, the p_{i,j}(x(z)) and the linear factor.
FactorBasePtr make_base(const SpectralCurve& c, const QuantumCurve& q) {
  auto b = std::make_shared<FactorBase>();
  RationalFunctionQ xz = c.x.derivative();
  for (const PolynomialQ& p : {c.x.den(), xz.num(), xz.den(), c.y.den()}) b->absorb(p);
  std::array<RationalFunctionQ, 4> pb;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 2; ++j) {
      RationalFunctionQ f = q.p[i][j].compose(c.x);
      b->absorb(f.den());
    }
    pb[i] = q.p[i][0].compose(c.x);
  }
  RationalFunctionQ L = RationalFunctionQ(Q(3)) * pb[0] * c.y * c.y + RationalFunctionQ(Q(2)) * pb[1] * c.y + pb[2];
  b->absorb(L.num());
  b->absorb(L.den());
  return b;
}

}  // namespace

LambdaFamily fixed_family(const SpectralCurve& c, const QuantumCurve& qc) {
  LambdaFamily f;
  f.curve = c;
  f.qc = qc;
  f.K = 0;
  f.base = make_base(c, qc);
  f.x = Jet(0, FactoredRF(f.base, c.x));
  f.y = Jet(0, FactoredRF(f.base, c.y));
  return f;
}

LambdaFamily lambda_family(CurveTag tag, const CurveParams& params, int K) {
  std::array<SpectralCurve, 3> cs;
  std::array<QuantumCurve, 3> qs;
  for (int i = 0; i < 3; ++i) {
    CurveParams p = params;
    p.lambda += i;
    cs[i] = make_curve(tag, p);
    qs[i] = assemble_quantum_curve(cs[i]);
  }
  auto affine = [](const RationalFunctionQ& a, const RationalFunctionQ& b, const RationalFunctionQ& c) {
    if (c - b != b - a) throw std::invalid_argument("lambda_family: data is not affine in lambda");
    return b - a;
  };
  LambdaFamily f;
  f.curve = cs[0];
  f.qc = qs[0];
  f.K = K;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) f.dp[i][j] = affine(qs[0].p[i][j], qs[1].p[i][j], qs[2].p[i][j]);
  auto base = std::make_shared<FactorBase>(*make_base(cs[0], qs[0]));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) base->absorb(f.dp[i][j].compose(cs[0].x).den());
  f.base = base;
  f.x = affine_jet(f.base, K, cs[0].x, affine(cs[0].x, cs[1].x, cs[2].x));
  f.y = affine_jet(f.base, K, cs[0].y, affine(cs[0].y, cs[1].y, cs[2].y));
  return f;
}

namespace {

struct Coeffs {
  std::array<std::array<Jet, 2>, 4> p;  // p_{i,j}(x(z)) as jets
};

Coeffs pulled_back(const LambdaFamily& fam) {
  Coeffs c;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) {
      c.p[i][j] = compose(fam.qc.p[i][j], fam.x);
      if (fam.K >= 1 && !fam.dp[i][j].is_zero()) {
        Jet d = compose(fam.dp[i][j], fam.x);
        // eps * d(x(z)): shift the jet by one order.
        for (int k = fam.K; k >= 1; --k) c.p[i][j][k] += d[k - 1];
      }
    }
  return c;
}

}  // namespace

WkbSeries riccati_expand(const LambdaFamily& fam, int M) {
  if (M < 0) throw std::invalid_argument("riccati_expand needs M >= 0");
  const int K = fam.K;
  Coeffs C = pulled_back(fam);
  WkbSeries w;
  w.M = M;
  w.K = K;
  w.xz = fam.x.dz();
  Jet inv_xz = w.xz.inverse();
  auto dx = [&](const Jet& f) { return f.dz() * inv_xz; };
  Jet zero(K, FactoredRF(fam.base, PolynomialQ()));

  // U = hbar S = sum_N hbar^N U_N with U_N = S_{N-1}.
  std::vector<Jet> U{fam.y}, Ux{dx(fam.y)}, Uxx{dx(dx(fam.y))};
  auto p = [&](int i, int j) -> const Jet& { return C.p[i][j]; };
  {
    Jet E0 = p(0, 0) * U[0] * U[0] * U[0] + p(1, 0) * U[0] * U[0] + p(2, 0) * U[0] + p(3, 0);
    if (!E0.is_zero()) throw ArithmeticError("riccati: y(z) is not a root of the classical equation");
  }
  Jet L = Q(3) * p(0, 0) * U[0] * U[0] + Q(2) * p(1, 0) * U[0] + p(2, 0);
  if (L[0].is_zero()) throw ArithmeticError("riccati: vanishing linear factor (branch collision)");
  Jet Linv = L.inverse();

  auto get = [&](const std::vector<Jet>& v, int n) -> const Jet& {
    return (n >= 0 && n < static_cast<int>(v.size())) ? v[n] : zero;
  };
  // [U^2]_n and [U^3]_n over the known terms (U_N treated as zero); orders
  // below the current N are final and cached.
  std::vector<Jet> sq_cache;
  int current = 0;
  auto sq = [&](int n) {
    if (n < static_cast<int>(sq_cache.size())) return sq_cache[n];
    Jet s = zero;
    for (int a = 0; a <= n; ++a) {
      int b = n - a;
      if (b < a) break;
      Jet t = get(U, a) * get(U, b);
      s = s + (a == b ? t : Q(2) * t);
    }
    if (n < current && n == static_cast<int>(sq_cache.size())) sq_cache.push_back(s);
    return s;
  };
  auto cube = [&](int n) {
    Jet s = zero;
    for (int a = 0; a <= n; ++a)
      if (!get(U, a).is_zero()) s = s + get(U, a) * sq(n - a);
    return s;
  };
  auto uux = [&](int n) {
    Jet s = zero;
    for (int a = 0; a <= n; ++a) s = s + get(U, a) * get(Ux, n - a);
    return s;
  };
  auto bracket0 = [&](int n) {  // U^3 + 3 hbar U U_x + hbar^2 U_xx at order n
    if (n < 0) return zero;
    return cube(n) + Q(3) * uux(n - 1) + get(Uxx, n - 2);
  };
  auto bracket1 = [&](int n) {  // U^2 + hbar U_x
    if (n < 0) return zero;
    return sq(n) + get(Ux, n - 1);
  };

  for (int N = 1; N <= M + 1; ++N) {
    current = N;
    U.push_back(zero);  // placeholder for U_N
    Ux.push_back(zero);
    Uxx.push_back(zero);
    Jet rest = p(0, 0) * bracket0(N) + p(0, 1) * bracket0(N - 1) + p(1, 0) * bracket1(N) + p(1, 1) * bracket1(N - 1) +
               p(2, 1) * get(U, N - 1);
    if (N == 1) rest = rest + p(3, 1);
    Jet UN = (-(rest * Linv)).reduced();
    U[N] = UN;
    Ux[N] = dx(UN);
    Uxx[N] = dx(Ux[N]);
  }
  w.S = U;
  for (const auto& j : U) w.plain.push_back(j[0].to_rf());
  return w;
}

RationalFunctionQ riccati_residual(const LambdaFamily& fam, const WkbSeries& w, int N) {
  // Direct expansion of p0 h^3 (S'' + 3 S S' + S^3) + p1 h^2 (S' + S^2) + h p2 S + p3 at K = 0.
  auto pb = [&](int i, int j) { return std::vector<RationalFunctionQ>{fam.qc.p[i][j].compose(fam.curve.x)}; };
  RationalFunctionQ xz = fam.curve.x.derivative();
  auto d = [&](const RationalFunctionQ& f) { return f.derivative() / xz; };
  int M = w.M;
  // S as a map from hbar power to coefficient.
  auto S = [&](int m) -> RationalFunctionQ { return (m >= -1 && m <= M) ? w.at(m) : RationalFunctionQ(); };
  RationalFunctionQ total;
  auto pval = [&](int i, int j) { return pb(i, j)[0]; };
  // h^3 S^3: indices m1 + m2 + m3 + 3 = N
  for (int j = 0; j < 2; ++j) {
    int n = N - j;
    RationalFunctionQ term;
    for (int a = -1; a <= M; ++a)
      for (int b = -1; b <= M; ++b) {
        int c = n - 3 - a - b;
        if (c < -1 || c > M) continue;
        term += S(a) * S(b) * S(c);
      }
    for (int a = -1; a <= M; ++a) {
      int b = n - 3 - a;
      if (b < -1 || b > M) continue;
      term += Q(3) * S(a) * d(S(b));
    }
    if (n - 3 >= -1 && n - 3 <= M) term += d(d(S(n - 3)));
    total += pval(0, j) * term;
    RationalFunctionQ t1;
    for (int a = -1; a <= M; ++a) {
      int b = n - 2 - a;
      if (b < -1 || b > M) continue;
      t1 += S(a) * S(b);
    }
    if (n - 2 >= -1 && n - 2 <= M) t1 += d(S(n - 2));
    total += pval(1, j) * t1;
    total += pval(2, j) * S(n - 1);
    if (n == 0) total += pval(3, j);
  }
  return total;
}

Q decay_order(const SpectralCurve& c, const RationalFunctionQ& s, bool at_infinity) {
  RationalFunctionQ inv_x = RationalFunctionQ(Q(1)) / c.x;
  int vs = at_infinity ? s.valuation_at_infinity() : s.valuation_at_zero();
  int vx = at_infinity ? inv_x.valuation_at_infinity() : inv_x.valuation_at_zero();
  if (vx <= 0) throw std::invalid_argument("decay_order: endpoint is not a pole of x");
  Q r(vs, vx);
  r.canonicalize();
  return r;
}

}  // namespace trv
