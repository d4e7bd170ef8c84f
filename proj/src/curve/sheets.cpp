#include "trvoros/curve/sheets.hpp"

#include "trvoros/exactmath/newton_series.hpp"

namespace trv {

QSeries LocalChart::z_value(const QSeries& w) const {
  if (kind == Infinity) return w.inverse();
  return QSeries::constant(base, kExactPrec) + w;
}

QSeries LocalChart::dz_dw(const QSeries& w) const {
  if (kind == Infinity) return -(w * w).inverse();
  return QSeries::constant(one_of(zero()), kExactPrec);
}

QSeries LocalChart::u(int prec) const {
  return QSeries(zero(), 1, prec, {one_of(zero())});
}

LocalChart chart_for(const RamificationPoint& r) {
  LocalChart ch;
  switch (r.where.kind) {
    case PointRef::Infinity:
      ch.kind = LocalChart::Infinity;
      ch.mod = make_modulus(poly_x());
      ch.base = QElem(ch.mod);
      break;
    case PointRef::Finite:
      ch.mod = make_modulus(PolynomialQ({-r.where.value, Q(1)}));
      ch.base = QElem::generator(ch.mod);
      break;
    case PointRef::ConjugateClass:
      ch.mod = make_modulus(r.where.modulus);
      ch.base = QElem::generator(ch.mod);
      break;
  }
  return ch;
}

namespace {

// x in the chart coordinate as A(u)/B(u).
std::pair<Poly<QElem>, Poly<QElem>> chart_fraction(const SpectralCurve& c, const LocalChart& ch) {
  const PolynomialQ& xn = c.x.num();
  const PolynomialQ& xd = c.x.den();
  if (ch.kind == LocalChart::Finite) return {taylor_shift(xn, ch.base), taylor_shift(xd, ch.base)};
  int k = std::max(xn.degree(), xd.degree());
  return {lift(reverse(xn, k), ch.zero()), lift(reverse(xd, k), ch.zero())};
}

QElem at(const Poly<QElem>& p, int i, const QElem& z) { return i <= p.degree() ? p.c[i] : z; }

}  // namespace

CompanionSheets companion_sheets(const SpectralCurve& c, const LocalChart& ch, int order) {
  auto [A, B] = chart_fraction(c, ch);
  QElem zero = ch.zero();
  int n = std::max(A.degree(), B.degree());
  // G(w, u) = (A(w) B(u) - A(u) B(w)) / (w - u) = sum_{i>j} c_ij sum_k w^(j+k) u^(i-1-k)
  std::vector<std::vector<QElem>> G(n, std::vector<QElem>(n, zero));  // G[a][b]: w^a u^b
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j < i; ++j) {
      QElem cij = at(A, i, zero) * at(B, j, zero) - at(A, j, zero) * at(B, i, zero);
      if (cij.is_zero()) continue;
      for (int k = 0; k < i - j; ++k) G[j + k][i - 1 - k] += cij;
    }
  // Deck partner: w = u v; G(u v, u) = sum G[a][b] u^(a+b) v^a.
  int s = 2 * n;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!G[a][b].is_zero()) s = std::min(s, a + b);
  SeriesPoly<QElem> H(n, QSeries(zero, kExactPrec));
  for (int a = 0; a < n; ++a) {
    std::vector<QElem> coeffs(2 * n, zero);
    for (int b = 0; b < n; ++b)
      if (!G[a][b].is_zero()) coeffs[a + b - s] += G[a][b];
    H[a] = QSeries(zero, 0, kExactPrec, coeffs);
  }
  QSeries v = newton_root_series(H, -one_of(zero), order);
  CompanionSheets out;
  out.theta1 = (v * ch.u(kExactPrec)).truncated(order);
  // Remaining preimage: root of G(w, 0) / w.
  std::vector<QElem> g0;
  for (int a = 1; a < n; ++a) g0.push_back(G[a][0]);
  while (!g0.empty() && g0.back().is_zero()) g0.pop_back();
  if (!G[0][0].is_zero()) throw ArithmeticError("companion_sheets: base point is not a zero of dx");
  if (g0.size() == 2) {
    QElem seed = -(g0[0] * g0[1].inverse());
    SeriesPoly<QElem> E(n, QSeries(zero, kExactPrec));
    for (int a = 0; a < n; ++a) {
      std::vector<QElem> coeffs(G[a].begin(), G[a].end());
      E[a] = QSeries(zero, 0, kExactPrec, coeffs);
    }
    out.theta2 = newton_root_series(E, seed, order);
  } else if (g0.size() > 2) {
    throw ArithmeticError("companion_sheets: covers of degree above 3 are not supported");
  }
  return out;
}

}  // namespace trv
