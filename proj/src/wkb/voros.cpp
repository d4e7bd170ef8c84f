#include "trvoros/wkb/voros.hpp"

#include "trvoros/exactmath/hermite.hpp"

namespace trv {

namespace {
void check_path(const RationalFunctionQ& f);
}

std::optional<Q> integrate_exact(const RationalFunctionQ& f) {
  check_path(f);
  RationalIntegral ri = integrate_rational(f);
  if (!ri.is_rational()) return std::nullopt;
  Q hi, lo;
  try {
    hi = ri.rational.limit_at_infinity();
    lo = ri.rational.limit_at_zero();
  } catch (const ArithmeticError&) {
    throw ArithmeticError("integral diverges at an endpoint of the path");
  }
  return hi - lo;
}

namespace {

int sign_changes(const std::vector<int>& s) {
  int n = 0, prev = 0;
  for (int v : s) {
    if (v == 0) continue;
    if (prev != 0 && v != prev) ++n;
    prev = v;
  }
  return n;
}

}  // namespace

int positive_root_count(const PolynomialQ& p) {
  if (p.degree() < 1) return 0;
  std::vector<PolynomialQ> seq{p, p.derivative()};
  while (seq.back().degree() > 0) {
    PolynomialQ r = poly_mod(seq[seq.size() - 2], seq.back());
    if (r.is_zero_poly()) break;
    seq.push_back(-r);
  }
  std::vector<int> at0, atinf;
  for (const auto& q : seq) {
    // Sign just right of 0: lowest nonzero coefficient.
    int v = valuation0(q);
    at0.push_back(sgn(q.c[v]));
    atinf.push_back(sgn(q.lead()));
  }
  int roots = sign_changes(at0) - sign_changes(atinf);
  return roots;
}

namespace {
void check_path(const RationalFunctionQ& f) {
  for (auto& [fac, k] : squarefree_decomposition(f.den()))
    if (positive_root_count(fac) > 0) throw ArithmeticError("path crossing a turning point");
}
}  // namespace

namespace {

struct RealPoly {
  std::vector<Real> c;
  RealPoly(const PolynomialQ& p, int prec) {
    for (const auto& q : p.c) c.emplace_back(q, prec);
  }
  Real operator()(const Real& x) const {
    Real acc(0.0, x.prec());
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
};

}  // namespace

QuadratureResult integrate_ball(const RationalFunctionQ& f, int prec) {
  if (prec <= 0) prec = default_precision_bits();
  check_path(f);
  int wp = prec + 32;
  RealPoly num(f.num(), wp), den(f.den(), wp);
  Real half_pi = pi(wp) * Real(0.5, wp);
  Real tiny = pow2(-wp, wp);
  // z = exp(pi/2 sinh t), dz = z pi/2 cosh t dt
  auto g = [&](const Real& t) {
    Real s = half_pi * sinh(t);
    Real z = exp(s);
    return num(z) / den(z) * z * half_pi * cosh(t);
  };
  Real h(0.5, wp);
  auto sweep = [&](const Real& step, const Real& start, int stride) {
    // sum of g over start + k * stride * step for k in Z, truncated where terms are negligible
    Real sum(0.0, wp);
    for (int dir : {1, -1}) {
      int small = 0;
      for (long k = (dir == 1 ? 0 : 1); k < 200000; ++k) {
        Real t = start + Real(static_cast<double>(dir * k * stride), wp) * step;
        if (dir == -1) t = start - Real(static_cast<double>(k * stride), wp) * step;
        Real v = g(t);
        sum += v;
        if (abs(v) < tiny) {
          if (++small >= 3) break;
        } else {
          small = 0;
        }
        if (abs(t) > Real(12.0, wp)) break;
      }
    }
    return sum;
  };
  Real sum = sweep(h, Real(0.0, wp), 1);
  Real prev = sum * h;
  QuadratureResult out;
  Real target = pow2(-prec, wp);
  for (int level = 1; level <= 12; ++level) {
    Real hh = h * Real(0.5, wp);
    // new points at odd multiples of hh
    Real odd = sweep(h, hh, 1);
    sum += odd;
    h = hh;
    Real cur = sum * h;
    Real diff = abs(cur - prev);
    out.levels = level;
    prev = cur;
    out.error_estimate = diff;
    if (diff < target * (abs(cur) + Real(1.0, wp))) break;
  }
  Real zero(0.0, prec);
  Real val(0.0, prec);
  mpfr_set(val.get(), prev.get(), MPFR_RNDN);
  // The step-halving difference alone can undershoot near cancellation; floor it at the working precision.
  Real floor = pow2(-(prec - 16), wp) * (abs(prev) + Real(1.0, wp));
  Real est = out.error_estimate < floor ? floor : out.error_estimate;
  Real rad(0.0, prec);
  mpfr_set(rad.get(), est.get(), MPFR_RNDU);
  out.value = BallComplex(val, zero, rad);
  return out;
}

namespace {

RationalFunctionQ integrand(const WkbSeries& w, int m, int k) {
  // eps^k coefficient of S_m x_z
  Jet f = (w.jet(m) * w.xz).reduced();
  return f[k].to_rf();
}

}  // namespace

VorosData voros_from_riccati(const WkbSeries& w, int M, bool force_ball, int prec) {
  if (M > w.M) throw std::invalid_argument("voros_from_riccati: WKB series too short");
  VorosData out;
  for (int m = 1; m <= M; ++m) {
    VorosTerm t;
    t.m = m;
    RationalFunctionQ f = integrand(w, m, 0);
    if (!force_ball) t.exact = integrate_exact(f);
    if (t.exact) {
      t.mode = VorosMode::Exact;
    } else {
      t.mode = VorosMode::Ball;
      QuadratureResult q = integrate_ball(f, prec);
      t.ball = q.value;
      t.error_estimate = q.error_estimate;
    }
    out.terms.push_back(std::move(t));
  }
  return out;
}

std::vector<Q> voros_lambda_derivatives(const WkbSeries& w, int m) {
  std::vector<Q> out;
  Q fact = 1;
  for (int k = 0; k <= w.K; ++k) {
    if (k > 0) fact *= k;
    auto v = integrate_exact(integrand(w, m, k));
    if (!v) throw ArithmeticError("lambda-derivative of a Voros coefficient has a logarithmic part");
    out.push_back(fact * *v);
  }
  return out;
}

Regularization voros_regularization(const LambdaFamily& fam, const WkbSeries& w) {
  if (w.K < 2) throw std::invalid_argument("voros_regularization needs jets of order >= 2");
  // T = d/dlambda|_z + zeta d/dz with zeta = -x_lambda / x_z is d/dlambda at fixed x.
  Jet zeta = -(fam.x.d_eps() * w.xz.inverse());
  auto T = [&](const Jet& f) { return (f.d_eps() + zeta * f.dz()).reduced(); };
  Jet t2y = T(T(w.jet(-1)));
  Jet ts0 = T(w.jet(0));
  Regularization r;
  auto a = integrate_exact((t2y * w.xz).reduced()[0].to_rf());
  auto b = integrate_exact((ts0 * w.xz).reduced()[0].to_rf());
  if (!a || !b) throw ArithmeticError("regularization integrals have logarithmic parts");
  r.d2_v_minus1 = *a;
  r.d_v0 = *b;
  return r;
}

}  // namespace trv
