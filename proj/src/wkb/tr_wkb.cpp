#include "trvoros/wkb/tr_wkb.hpp"

namespace trv {

namespace {

Q engine_value(Recursion& rec, int g, int n, const Q& c) {
  std::vector<Arg> args(n - 1, Arg::divisor_integral(c));
  EngineResult r = rec.engine(g, args);
  if (sgn(r.alpha_residue) != 0) throw ArithmeticError("divisor integral leaves a residue at the base point");
  return eval(r.numerator, c) / eval(poly_pow(rec.turning(), r.D), c);
}

}  // namespace

RationalFunctionQ divisor_contracted(Recursion& rec, int g, int n) {
  if (n < 1) throw std::invalid_argument("divisor_contracted: n >= 1");
  if (n == 1) return rec.engine(g, {}).as_rational_function(rec.turning());
  const PolynomialQ& M = rec.turning();
  int D = Recursion::pole_order(g, n);
  int d = M.degree();
  // Each integrated slot contributes M^(D-1) to the denominator.
  int E = D + (D - 1) * (n - 1);
  int deg = (d * D - 2) + d * (D - 1) * (n - 1);
  std::vector<Q> nodes, values;
  const int extra = 2;
  for (long k = 1; static_cast<int>(nodes.size()) < deg + 1 + extra; ++k) {
    for (long s : {k, -k}) {
      Q c(s, 1);
      if (sgn(eval(M, c)) == 0) continue;
      if (static_cast<int>(nodes.size()) >= deg + 1 + extra) break;
      nodes.push_back(c);
      values.push_back(engine_value(rec, g, n, c) * eval(poly_pow(M, E), c));
    }
  }
  std::vector<Q> fit_n(nodes.begin(), nodes.end() - extra), fit_v(values.begin(), values.end() - extra);
  PolynomialQ num = interpolate(fit_n, fit_v);
  for (size_t i = fit_n.size(); i < nodes.size(); ++i)
    if (eval(num, nodes[i]) != values[i]) throw ArithmeticError("divisor-contracted W fails the off-grid check");
  return RationalFunctionQ(num, poly_pow(M, E));
}

TrWkbSeries tr_wkb_series(Recursion& rec, int M) {
  const SpectralCurve& c = rec.curve();
  DivisorSpec div = divisor_for(c);
  RationalFunctionQ xp = c.x.derivative();
  RationalFunctionQ inv_xp = RationalFunctionQ(Q(1)) / xp;
  TrWkbSeries out;
  out.M = M;
  out.S.push_back(c.y);
  if (M >= 0) {
    // int_D [B(z,s) - x'(z) x'(s) ds / (x(z) - x(s))^2] = -x''/(2x') - sum_i nu_i G(beta_i),
    // G(s) = 1/(z - s) - x'(z)/(x(z) - x(s)).
    RationalFunctionQ s0 = -(xp.derivative() / xp) * RationalFunctionQ(Q(1, 2));
    for (const auto& e : div.endpoints) {
      if (e.where.kind == PointRef::Infinity) {
        if (c.x.valuation_at_infinity() >= 0) throw std::invalid_argument("tr_wkb_series: endpoint is not a pole of x");
        continue;  // G(infinity) = 0
      }
      if (e.where.kind != PointRef::Finite || sgn(e.where.value) != 0 || c.x.valuation_at_zero() >= 0)
        throw std::invalid_argument("tr_wkb_series: only poles of x at 0 and infinity are supported as endpoints");
      // G(0) = 1/z
      s0 -= RationalFunctionQ(poly_from({1}), poly_x()) * RationalFunctionQ(e.weight);
    }
    out.S.push_back(s0 * inv_xp);
  }
  for (int m = 1; m <= M; ++m) {
    RationalFunctionQ acc;
    for (int g = 0; 2 * g - 1 <= m; ++g) {
      int n = m + 2 - 2 * g;
      if (n < 1) continue;
      acc += divisor_contracted(rec, g, n) * RationalFunctionQ(Q(1) / factorial(n - 1));
    }
    out.S.push_back(acc * inv_xp);
  }
  return out;
}

}  // namespace trv
