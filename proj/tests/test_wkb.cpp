#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trvoros/exactmath/bernoulli.hpp"
#include "trvoros/wkb/hbar_series.hpp"
#include "trvoros/wkb/quantum_curve.hpp"
#include "trvoros/wkb/riccati.hpp"
#include "trvoros/wkb/tr_wkb.hpp"
#include "trvoros/wkb/voros.hpp"

using namespace trv;

namespace {

const CurveParams kUnit{1, 1, Q(1, 2)};
const CurveParams kOff{Q(5, 3), Q(7, 2), Q(1, 3)};
const CurveTag kTags[] = {CurveTag::Curve14, CurveTag::Curve23};

RationalFunctionQ rf(std::vector<Q> num, std::vector<Q> den = {1}) {
  return RationalFunctionQ(PolynomialQ(std::move(num)), PolynomialQ(std::move(den)));
}

CurveParams with_nu(CurveParams p, const Q& nu) {
  p.nu = nu;
  return p;
}

// B_{m+1}(nu) / (m (m+1)) lambda^{-m}
Q bernoulli_voros(int m, const Q& nu, const Q& lambda) {
  Q v = bernoulli_polynomial(m + 1).eval(nu) / (m * (m + 1));
  for (int i = 0; i < m; ++i) v /= lambda;
  return v;
}

Real tol(int digits, int prec) {
  Q t(1);
  for (int i = 0; i < digits; ++i) t /= 10;
  return Real(t, prec);
}

}  // namespace

TEST_CASE("differential operator algebra") {
  DiffOp d = DiffOp::d_dx();
  DiffOp x = DiffOp::multiply(rf_z());
  // [d/dx, x] = 1
  CHECK(d * x - x * d == DiffOp::multiply(rf({1})));
  DiffOp f = DiffOp::multiply(rf({1}, {0, 1}));
  CHECK(d * f - f * d == DiffOp::multiply(rf({-1}, {0, 0, 1})));
  DiffOp h = DiffOp::multiply(rf({1}), 1);
  CHECK(h.hbar_degree(0) == 1);
  CHECK((d * d).order() == 2);
  CHECK(Q(2) * d == d + d);
}

TEST_CASE("quantum curves") {
  for (CurveTag tag : kTags)
    for (const CurveParams& p : {kUnit, kOff, with_nu(kOff, Q(0)), with_nu(kOff, Q(-3, 5))}) {
      CAPTURE(tag_name(tag));
      SpectralCurve c = make_curve(tag, p);
      QuantumCurve a = assemble_quantum_curve(c);
      QuantumCurve pre = preset_quantum_curve(tag, p);
      CHECK(a.provenance == QuantumCurve::Assembled);
      CHECK(pre.provenance != QuantumCurve::Assembled);
      CHECK(same_operator(a, pre));
      CHECK(classical_limit(a) == defining_polynomial(c));
    }
  // the operator depends on nu
  CHECK_FALSE(same_operator(preset_quantum_curve(CurveTag::Curve14, kOff),
                            preset_quantum_curve(CurveTag::Curve14, with_nu(kOff, Q(1, 2)))));
}

TEST_CASE("Riccati expansion") {
  for (CurveTag tag : kTags)
    for (const CurveParams& p : {kUnit, kOff}) {
      CAPTURE(tag_name(tag));
      LambdaFamily fam = lambda_family(tag, p, 0);
      const int M = 5;
      WkbSeries w = riccati_expand(fam, M);
      for (int N = 0; N <= M + 1; ++N) CHECK(riccati_residual(fam, w, N).is_zero());
      CHECK(w.at(-1) == rf_z());
      // S_0 x' = -x''/(2x') - (1 - nu)/z
      RationalFunctionQ xz = fam.curve.x.derivative();
      RationalFunctionQ want = -(xz.derivative() / (Q(2) * xz)) - rf({1 - p.nu}, {0, 1});
      CHECK(w.at(0) * xz == want);
      // truncating at a lower order keeps the earlier terms
      WkbSeries w3 = riccati_expand(fam, 3);
      for (int m = -1; m <= 3; ++m) CHECK(w3.at(m) == w.at(m));
      // a broken series leaves a residual
      WkbSeries bad = w;
      bad.plain[3] = bad.plain[3] + rf({1}, {0, 1});
      CHECK_FALSE(riccati_residual(fam, bad, 3).is_zero());
    }
}

TEST_CASE("decay of S_m along the path") {
  for (CurveTag tag : kTags) {
    Q bound = tag == CurveTag::Curve14 ? Q(2) : Q(3, 2);
    for (const CurveParams& p : {kUnit, kOff}) {
      LambdaFamily fam = lambda_family(tag, p, 0);
      WkbSeries w = riccati_expand(fam, 4);
      for (int m = 1; m <= 4; ++m) {
        CAPTURE(m);
        CHECK(decay_order(fam.curve, w.at(m), false) >= bound);
        CHECK(decay_order(fam.curve, w.at(m), true) >= bound);
      }
    }
  }
  // 1/x near z = infinity for Curve14 is z^-2; S = 1/z^4 is O(x^-2)
  SpectralCurve c = make_curve14(kUnit);
  CHECK(decay_order(c, rf({1}, {0, 0, 0, 0, 1}), true) == 2);
}

TEST_CASE("exact and numerical integration on the path") {
  CHECK(integrate_exact(rf({1}, {1, 2, 1})) == Q(1));
  CHECK(integrate_exact(rf({0, 2}, {1, 0, 2, 0, 1})) == Q(1));
  CHECK_FALSE(integrate_exact(rf({1}, {2, 3, 1})).has_value());  // log 2
  CHECK_FALSE(integrate_exact(rf({1}, {1, 1})).has_value());  // log divergence
  CHECK_THROWS(integrate_exact(rf({1}, {0, 0, 1})));
  CHECK_THROWS_WITH(integrate_exact(rf({1}, {1, -2, 1})), "path crossing a turning point");

  CHECK(positive_root_count(PolynomialQ(std::vector<Q>{-1, 0, 1})) == 1);
  CHECK(positive_root_count(PolynomialQ(std::vector<Q>{6, -1, -4, 1})) == 2);  // (z-1)(z-3)(z+2)
  CHECK(positive_root_count(PolynomialQ(std::vector<Q>{1, 0, 1})) == 0);
  CHECK(positive_root_count(PolynomialQ(std::vector<Q>{0, -1, 0, 1})) == 1);

  int prec = 256;
  QuadratureResult q = integrate_ball(rf({1}, {1, 2, 1}), prec);
  CHECK(q.value.contains(Q(1)));
  CHECK(q.value.rad() < tol(60, prec));
  // int 1/((1+z)(2+z)) = log 2
  QuadratureResult l = integrate_ball(rf({1}, {2, 3, 1}), prec);
  CHECK(within(l.value, log_rational_constant(Q(2), prec), tol(50, prec)));
  CHECK_THROWS_WITH(integrate_ball(rf({1}, {-2, 0, 1, 0}), prec), "path crossing a turning point");
}

TEST_CASE("Voros coefficients") {
  const int M = 4;
  for (const CurveParams& base : {kUnit, kOff})
    for (Q nu : {Q(0), Q(1, 3), Q(1, 2), Q(1)}) {
      CAPTURE(to_string(nu));
      CurveParams p = with_nu(base, nu);
      WkbSeries w14 = riccati_expand(lambda_family(CurveTag::Curve14, p, 0), M);
      VorosData v = voros_from_riccati(w14, M);
      REQUIRE(v.terms.size() == static_cast<std::size_t>(M));
      for (int m = 1; m <= M; ++m) {
        const VorosTerm& t = v.terms[m - 1];
        REQUIRE(t.mode == VorosMode::Exact);
        CHECK(*t.exact == bernoulli_voros(m, nu, p.lambda));
      }
      WkbSeries w23 = riccati_expand(lambda_family(CurveTag::Curve23, p, 0), M);
      for (const auto& t : voros_from_riccati(w23, M).terms) CHECK(*t.exact == 0);
    }
  CurveParams p = with_nu(kOff, Q(1, 2));
  WkbSeries w = riccati_expand(lambda_family(CurveTag::Curve14, p, 0), 3);
  VorosData v = voros_from_riccati(w, 3);
  CHECK(*v.terms[0].exact == Q(-1, 40));
  CHECK(*v.terms[2].exact == Q(21, 40000));
  CHECK(v.path == std::string(kVorosPath));
  CHECK_THROWS_AS(voros_from_riccati(w, 4), std::invalid_argument);
}

TEST_CASE("ball mode agrees with exact mode") {
  int prec = 256;
  for (CurveTag tag : kTags) {
    WkbSeries w = riccati_expand(lambda_family(tag, kOff, 0), 4);
    VorosData e = voros_from_riccati(w, 4);
    VorosData b = voros_from_riccati(w, 4, true, prec);
    for (int m = 1; m <= 4; ++m) {
      const VorosTerm& bt = b.terms[m - 1];
      REQUIRE(bt.mode == VorosMode::Ball);
      CHECK(bt.ball->contains(*e.terms[m - 1].exact));
      CHECK(within(*bt.ball, BallComplex(*e.terms[m - 1].exact, prec), tol(30, prec)));
    }
  }
}

TEST_CASE("path crossing a turning point") {
  // lambda < 0 puts a root of 6z^3 + 2t z^2 + lambda on the positive axis
  CurveParams p{Q(-5, 2), Q(1), Q(1, 2)};
  WkbSeries w = riccati_expand(lambda_family(CurveTag::Curve14, p, 0), 2);
  CHECK_THROWS_WITH(voros_from_riccati(w, 2), "path crossing a turning point");
  CHECK_THROWS_WITH(voros_from_riccati(w, 2, true, 128), "path crossing a turning point");
}

TEST_CASE("lambda derivatives and regularization") {
  for (Q nu : {Q(0), Q(1, 3), Q(1, 2), Q(1)}) {
    CurveParams p = with_nu(kOff, nu);
    LambdaFamily fam = lambda_family(CurveTag::Curve14, p, 3);
    WkbSeries w = riccati_expand(fam, 3);
    for (int m = 1; m <= 3; ++m) {
      std::vector<Q> d = voros_lambda_derivatives(w, m);
      REQUIRE(d.size() == 4);
      // d^k (c lambda^-m) = c (-m)(-m-1)...(-m-k+1) lambda^{-m-k}
      Q c = bernoulli_voros(m, nu, Q(1));
      Q fall = 1;
      for (int k = 0; k <= 3; ++k) {
        Q want = c * fall;
        for (int i = 0; i < m + k; ++i) want /= p.lambda;
        CHECK(d[k] == want);
        fall *= -m - k;
      }
    }
    Regularization r = voros_regularization(fam, w);
    CHECK(r.d2_v_minus1 == 1 / p.lambda);
    CHECK(r.d_v0 == -(2 * nu - 1) / (2 * p.lambda));
  }
  Regularization r = voros_regularization(lambda_family(CurveTag::Curve14, kOff, 2),
                                          riccati_expand(lambda_family(CurveTag::Curve14, kOff, 2), 1));
  CHECK(r.d2_v_minus1 == Q(3, 5));
  CHECK(r.d_v0 == Q(1, 10));
  LambdaFamily flat = lambda_family(CurveTag::Curve23, kOff, 2);
  Regularization z = voros_regularization(flat, riccati_expand(flat, 1));
  CHECK(z.d2_v_minus1 == 0);
  CHECK(z.d_v0 == 0);
  LambdaFamily k0 = lambda_family(CurveTag::Curve14, kOff, 0);
  CHECK_THROWS_AS(voros_regularization(k0, riccati_expand(k0, 1)), std::invalid_argument);
}

TEST_CASE("closed forms and hbar series") {
  for (const CurveParams& p : {kUnit, kOff}) {
    const Q& L = p.lambda;
    LogRationalExpr f2 = free_energy_closed_form(CurveTag::Curve14, 2, p);
    LogRationalExpr f3 = free_energy_closed_form(CurveTag::Curve14, 3, p);
    REQUIRE(f2.is_rational());
    CHECK(f2.rational().eval(L) == Q(-1) / (240 * L * L));
    CHECK(f3.rational().eval(L) == Q(1) / (1008 * L * L * L * L));
    CHECK(free_energy_closed_form(CurveTag::Curve23, 2, p).is_zero());
    CHECK(free_energy_closed_form(CurveTag::Curve23, 3, p).is_zero());
    // d^3 F_0 = 1/lambda for Curve14, 0 for Curve23
    LogRationalExpr f0 = free_energy_closed_form(CurveTag::Curve14, 0, p);
    CHECK(f0.derivative().derivative().derivative() == LogRationalExpr(rf({1}, {0, 1})));
    LogRationalExpr g0 = free_energy_closed_form(CurveTag::Curve23, 0, p);
    CHECK(g0.derivative().derivative().derivative().is_zero());

    HbarSeries v = voros_closed_form(CurveTag::Curve14, p, 4);
    for (int m = 1; m <= 4; ++m) CHECK(v.coeff(m).rational().eval(L) == bernoulli_voros(m, p.nu, L));
    CHECK(voros_closed_form(CurveTag::Curve23, p, 4).is_zero());
  }

  // exp(c hbar d/dL) L^2 = L^2 + 2c L hbar + c^2 hbar^2
  HbarSeries s(3);
  s.set(0, LogRationalExpr(rf({0, 0, 1})));
  HbarSeries sh = s.shifted(Q(3));
  CHECK(sh.coeff(0) == LogRationalExpr(rf({0, 0, 1})));
  CHECK(sh.coeff(1) == LogRationalExpr(rf({0, 6})));
  CHECK(sh.coeff(2) == LogRationalExpr(Q(9)));
  CHECK(sh.coeff(3).is_zero());
  CHECK((sh - s.shifted(Q(3))).is_zero());
  CHECK(s.d_lambda(2).coeff(0) == LogRationalExpr(Q(2)));

  // second difference of F equals d^2 F_0 at hbar^0 and vanishes elsewhere
  for (CurveTag tag : kTags) {
    HbarSeries F = free_energy_series(tag, kOff, 6);
    HbarSeries lhs = F.shifted(Q(1)) - F.scaled(Q(2)) + F.shifted(Q(-1));
    LogRationalExpr F0 = F.coeff(-2);
    for (int m = -2; m <= 6; ++m) {
      CAPTURE(m);
      if (m == 0) CHECK(lhs.coeff(m) == F0.derivative().derivative());
      else CHECK(lhs.coeff(m).is_zero());
    }
    LogRationalExpr o2 = F.coeff(0).derivative().derivative() +
                         RationalFunctionQ(Q(1, 12)) * F0.derivative().derivative().derivative().derivative();
    CHECK(o2.is_zero());
  }
}

TEST_CASE("recursion WKB series equals the Riccati series") {
  for (CurveTag tag : kTags) {
    CAPTURE(tag_name(tag));
    SpectralCurve c = make_curve(tag, kUnit);
    Recursion rec(c);
    const int M = 2;
    TrWkbSeries tr = tr_wkb_series(rec, M);
    WkbSeries w = riccati_expand(fixed_family(c, assemble_quantum_curve(c)), M);
    for (int m = -1; m <= M; ++m) CHECK(tr.at(m) == w.at(m));
  }
}
