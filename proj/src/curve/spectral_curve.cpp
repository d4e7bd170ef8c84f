#include "trvoros/curve/spectral_curve.hpp"

#include <algorithm>

namespace trv {

std::string tag_name(CurveTag tag) {
  switch (tag) {
    case CurveTag::Curve14: return "(1,4)";
    case CurveTag::Curve23: return "(2,3)";
    default: return "custom";
  }
}

CurveTag parse_curve_tag(const std::string& s) {
  std::string k;
  for (char ch : s)
    if (ch != '(' && ch != ')' && ch != ',' && ch != ' ') k += ch;
  if (k == "14") return CurveTag::Curve14;
  if (k == "23") return CurveTag::Curve23;
  throw UnknownCurveError("unknown curve tag: " + s);
}

std::string to_string(const BivariatePoly& p) {
  std::string s;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    auto [ij, c] = *it;
    if (!s.empty()) s += " + ";
    s += "(" + to_string(c) + ")";
    if (ij.first) s += "*x^" + std::to_string(ij.first);
    if (ij.second) s += "*y^" + std::to_string(ij.second);
  }
  return s.empty() ? "0" : s;
}

std::string PointRef::str() const {
  switch (kind) {
    case Finite: return to_string(value);
    case Infinity: return "infinity";
    default: return "roots of " + to_string(modulus);
  }
}

namespace {

void require_params(const CurveParams& p) {
  if (sgn(p.lambda) == 0 || sgn(p.t) == 0) throw std::invalid_argument("curve parameters require lambda != 0 and t != 0");
}

// Characteristic polynomial of multiplication by a in Q[r]/(m), from power sums.
PolynomialQ charpoly(const QElem& a) {
  int d = a.modulus()->degree();
  std::vector<Q> p(d + 1), e(d + 1);
  QElem pw = one_of(a);
  for (int k = 1; k <= d; ++k) {
    pw *= a;
    p[k] = pw.trace();
  }
  e[0] = 1;
  for (int k = 1; k <= d; ++k) {
    Q s = 0;
    for (int i = 1; i <= k; ++i) s += ((i % 2 == 1) ? Q(1) : Q(-1)) * e[k - i] * p[i];
    e[k] = s / k;
  }
  std::vector<Q> c(d + 1);
  for (int k = 0; k <= d; ++k) c[d - k] = ((k % 2 == 0) ? Q(1) : Q(-1)) * e[k];
  return PolynomialQ(c);
}

// Zero order of f - f(infinity) at infinity, for f regular there.
int infinity_contact_order(const RationalFunctionQ& f) {
  Q v = f.limit_at_infinity();
  return (f - RationalFunctionQ(v)).valuation_at_infinity();
}

}  // namespace

SpectralCurve make_curve14(const CurveParams& p) {
  require_params(p);
  SpectralCurve c;
  // x = (-3 z^3 - 2 t z^2 + lambda) / z
  c.x = RationalFunctionQ(PolynomialQ({p.lambda, Q(0), -2 * p.t, Q(-3)}), poly_from({0, 1}));
  c.y = rf_z();
  c.params = p;
  c.tag = CurveTag::Curve14;
  c.x_lambda = RationalFunctionQ(poly_from({1}), poly_from({0, 1}));
  return c;
}

SpectralCurve make_curve23(const CurveParams& p) {
  require_params(p);
  SpectralCurve c;
  // x = (4 z^3 + 2 lambda z - t) / (2 z^2)
  c.x = RationalFunctionQ(PolynomialQ({-p.t, 2 * p.lambda, Q(0), Q(4)}), poly_from({0, 0, 2}));
  c.y = rf_z();
  c.params = p;
  c.tag = CurveTag::Curve23;
  c.x_lambda = RationalFunctionQ(poly_from({1}), poly_from({0, 1}));
  return c;
}

SpectralCurve make_curve(CurveTag tag, const CurveParams& p) {
  if (tag == CurveTag::Curve14) return make_curve14(p);
  if (tag == CurveTag::Curve23) return make_curve23(p);
  throw UnknownCurveError("custom curves need explicit x(z), y(z)");
}

SpectralCurve make_custom(const RationalFunctionQ& x, const RationalFunctionQ& y, const CurveParams& p) {
  if (x.is_polynomial() && x.num().degree() < 1) throw std::invalid_argument("x(z) must be non-constant");
  if (y.is_polynomial() && y.num().degree() < 1) throw std::invalid_argument("y(z) must be non-constant");
  SpectralCurve c;
  c.x = x;
  c.y = y;
  c.params = p;
  c.tag = CurveTag::Custom;
  return c;
}

PolynomialQ turning_polynomial(const SpectralCurve& c) {
  PolynomialQ n = c.x.derivative().num();
  if (n.degree() < 1) return poly_from({1});
  return exact_div(monic(n), poly_gcd(n, n.derivative()));
}

BivariatePoly defining_polynomial(const SpectralCurve& c) {
  if (c.y != rf_z()) throw std::invalid_argument("implicitization supports y(z) = z only");
  // P = xn(y) - x * xd(y)
  BivariatePoly p;
  const auto& xn = c.x.num();
  const auto& xd = c.x.den();
  for (int j = 0; j <= xn.degree(); ++j)
    if (sgn(xn.c[j]) != 0) p[{0, j}] += xn.c[j];
  for (int j = 0; j <= xd.degree(); ++j)
    if (sgn(xd.c[j]) != 0) p[{1, j}] -= xd.c[j];
  for (auto it = p.begin(); it != p.end();) it = sgn(it->second) == 0 ? p.erase(it) : std::next(it);
  int top = -1;
  Q lead;
  for (auto& [ij, v] : p)
    if (ij.second > top || (ij.second == top && ij.first == 0)) {
      top = ij.second;
      lead = v;
    }
  // Presets use the printed normalizations 3y^3 + ... and 4y^3 + ...
  Q want = c.tag == CurveTag::Curve14 ? Q(3) : c.tag == CurveTag::Curve23 ? Q(4) : Q(abs(lead));
  Q scale = want / lead;
  for (auto& [ij, v] : p) v *= scale;
  return p;
}

std::vector<RamificationPoint> ramification_points(const SpectralCurve& c) {
  std::vector<RamificationPoint> out;
  PolynomialQ n = c.x.derivative().num();
  if (n.degree() >= 1) {
    if (!is_squarefree(n)) throw ArithmeticError("degenerate parameters: dx has a multiple zero");
    for (auto& [f, k] : squarefree_decomposition(n)) {
      RamificationPoint r{RamificationKind::SimpleZeroOfDx, {}, k, std::nullopt};
      if (f.degree() == 1) {
        r.where.kind = PointRef::Finite;
        r.where.value = -f.c[0] / f.c[1];
      } else {
        r.where.kind = PointRef::ConjugateClass;
        r.where.modulus = monic(f);
      }
      out.push_back(r);
    }
  }
  for (auto& [f, k] : squarefree_decomposition(c.x.den())) {
    if (k < 2) continue;
    RamificationPoint r{RamificationKind::HighOrderPoleOfX, {}, k, std::nullopt};
    if (f.degree() == 1) {
      r.where.kind = PointRef::Finite;
      r.where.value = -f.c[0] / f.c[1];
    } else {
      r.where.kind = PointRef::ConjugateClass;
      r.where.modulus = monic(f);
    }
    out.push_back(r);
  }
  int vinf = c.x.valuation_at_infinity();
  if (vinf <= -2) {
    out.push_back({RamificationKind::HighOrderPoleOfX, {PointRef::Infinity, {}, {}}, -vinf, std::nullopt});
  } else if (vinf >= 0) {
    int contact = infinity_contact_order(c.x);
    if (contact >= 2) out.push_back({RamificationKind::SimpleZeroOfDx, {PointRef::Infinity, {}, {}}, contact - 1, std::nullopt});
  }
  return out;
}

AssumptionReport check_assumptions(const SpectralCurve& c) {
  AssumptionReport rep;
  auto degree = [](const RationalFunctionQ& f) { return std::max(f.num().degree(), f.den().degree()); };
  if (degree(c.y) != 1 && degree(c.x) != 1) {
    rep.a1 = {false, "neither x nor y is a coordinate on P^1; generation of C(z) not verified"};
  } else {
    rep.a1 = {true, degree(c.y) == 1 ? "y has degree 1" : "x has degree 1"};
  }
  PolynomialQ n = c.x.derivative().num();
  if (n.degree() >= 1 && !is_squarefree(n)) {
    rep.a3 = {false, "dx has a multiple zero: gcd(" + to_string(n) + ", derivative) = " + to_string(poly_gcd(n, n.derivative()))};
    rep.a4 = {false, "colliding turning points give colliding branch points"};
    return rep;
  }
  std::vector<RamificationPoint> pts = ramification_points(c);
  std::string bad;
  for (const auto& r : pts) {
    if (r.kind == RamificationKind::HighOrderPoleOfX && r.order != 2) bad += "pole of order " + std::to_string(r.order) + " at " + r.where.str() + "; ";
    if (r.kind == RamificationKind::SimpleZeroOfDx && r.order != 1) bad += "dx zero of order " + std::to_string(r.order) + "; ";
  }
  if (!bad.empty()) rep.a3 = {false, bad};
  else rep.a3 = {true, "all ramification points simple"};

  // A2 at ramified poles of x.
  RationalFunctionQ Y = -(c.x * c.x * c.y);
  std::string a2;
  for (const auto& r : pts) {
    if (r.kind != RamificationKind::HighOrderPoleOfX) continue;
    if (r.where.kind == PointRef::Infinity) {
      if (Y.valuation_at_infinity() < 0) continue;
      if (infinity_contact_order(Y) != 1) a2 += "dY = 0 at infinity; ";
    } else if (r.where.kind == PointRef::Finite) {
      RationalFunctionQ Ys = Y.compose(RationalFunctionQ(poly_from({0, 1})) + RationalFunctionQ(r.where.value));
      if (Ys.valuation_at_zero() < 0) continue;
      RationalFunctionQ d = Ys - RationalFunctionQ(Ys.limit_at_zero());
      if (d.valuation_at_zero() != 1) a2 += "dY = 0 at " + r.where.str() + "; ";
    }
  }
  rep.a2 = a2.empty() ? AssumptionCheck{true, "Y = -x^2 y is singular or has dY != 0 at every ramified pole"} : AssumptionCheck{false, a2};

  // A4: x takes distinct values at distinct finite turning points.
  PolynomialQ T = turning_polynomial(c);
  if (T.degree() >= 2) {
    ModulusPtr m = make_modulus(T);
    QElem r = QElem::generator(m);
    QElem xr = eval_at(c.x.num(), r) * eval_at(c.x.den(), r).inverse();
    PolynomialQ cp = charpoly(xr);
    if (!is_squarefree(cp)) rep.a4 = {false, "branch values are roots of " + to_string(cp, "X") + ", which has a repeated root"};
    else rep.a4 = {true, "branch values are the distinct roots of " + to_string(cp, "X")};
  } else {
    rep.a4 = {true, "at most one finite turning point"};
  }
  return rep;
}

DivisorSpec divisor_for(const SpectralCurve& c) {
  if (c.tag == CurveTag::Custom) throw std::invalid_argument("divisor required");
  DivisorSpec d;
  d.endpoints.push_back({{PointRef::Finite, Q(0), {}}, 1 - c.params.nu});
  d.endpoints.push_back({{PointRef::Infinity, {}, {}}, c.params.nu});
  return d;
}

}  // namespace trv
