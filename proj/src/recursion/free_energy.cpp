#include "trvoros/recursion/free_energy.hpp"

#include "trvoros/exactmath/hermite.hpp"

namespace trv {

PhiPrimitive phi_primitive(const SpectralCurve& c) {
  RationalIntegral ri = integrate_rational(c.y * c.x.derivative());
  PhiPrimitive out{ri.rational, Q(0)};
  for (const auto& [f, r] : ri.log_terms) {
    if (f != poly_x()) throw std::invalid_argument("phi_primitive: logarithms other than log z are not supported");
    out.log_coeff = r.c[0];
  }
  return out;
}

namespace {

QSeries rf_series(const RationalFunctionQ& f, const QSeries& Z) {
  QSeries num = poly_at_series(f.num(), Z);
  if (f.den().degree() == 0) return num * scalar_of(Z.zero(), Q(1) / f.den().c[0]);
  return num * poly_at_series(f.den(), Z).inverse();
}

}  // namespace

FreeEnergyResidues free_energy(Recursion& rec, int g, const Q& phi_shift) {
  if (g < 2) throw std::invalid_argument("free_energy needs g >= 2");
  const SpectralCurve& c = rec.curve();
  StoredWPtr w = rec.W(g, 1);
  RationalFunctionQ W = w->as_rational_function();
  PhiPrimitive phi = phi_primitive(c);
  RationalFunctionQ phi_rat = phi.rational + RationalFunctionQ(phi_shift);
  FreeEnergyResidues out;
  Q total = 0;

  for (const auto& rp : ramification_points(c)) {
    if (rp.kind == RamificationKind::SimpleZeroOfDx) {
      LocalChart ch = chart_for(rp);
      int N = 2 * w->D + 8;
      QElem zero = ch.zero(), one = one_of(zero);
      QSeries u(zero, 1, N, {one});
      QSeries Z = ch.z_value(u);
      QSeries Ws = rf_series(W, Z);
      if (!Ws.coeff(-1).is_zero()) throw ArithmeticError("W_{g,1} has a residue at a turning point");
      QSeries P = rf_series(phi_rat, Z);
      if (sgn(phi.log_coeff) != 0) {
        // log(1 + u/rho)
        QElem inv = ch.base.inverse();
        std::vector<QElem> lc(N, zero);
        QElem pw = one;
        for (int k = 1; k < N; ++k) {
          pw = pw * inv;
          QElem term = pw;
          term *= Q((k % 2 == 1) ? 1 : -1, k);
          lc[k] = term;
        }
        QSeries L(zero, 0, N, lc);
        P = P + L * scalar_of(zero, phi.log_coeff);
      }
      total += (P * Ws).coeff(-1).trace();
    } else {
      // No log expansion exists here; record the rational part for the report.
      out.ineffective_points.push_back(rp.where.str());
      RationalFunctionQ f = phi_rat * W;
      if (rp.where.kind == PointRef::Infinity) {
        out.ineffective_residue += residue_at_infinity(f);
      } else {
        RationalFunctionQ shifted = f.compose(rf_z() + RationalFunctionQ(rp.where.value));
        // Coefficient of z^-1 at 0.
        int v = shifted.valuation_at_zero();
        if (v < 0) {
          // shifted = num / den; multiply by z^-v and read coefficient -v-1 of the Taylor series.
          PolynomialQ den = shifted.den();
          PolynomialQ num = shifted.num();
          int vd = valuation0(den);
          PolynomialQ dred = exact_div(den, poly_pow(poly_x(), vd));
          int want = vd - valuation0(num) - 1;  // Taylor order needed in num/dred after dividing z^vn
          int vn = valuation0(num);
          PolynomialQ nred = exact_div(num, poly_pow(poly_x(), vn));
          // Coefficient of z^want in nred / dred.
          std::vector<Q> q(want + 1);
          for (int i = 0; i <= want; ++i) {
            Q acc = coeff(nred, i);
            for (int j = 1; j <= i; ++j) acc -= coeff(dred, j) * q[i - j];
            q[i] = acc / dred.c[0];
          }
          out.ineffective_residue += q[want];
        }
      }
    }
  }
  out.value = total / Q(2 - 2 * g);
  out.ineffective_residue /= Q(2 - 2 * g);
  return out;
}

Q free_energy_by_parts(Recursion& rec, int g) {
  if (g < 2) throw std::invalid_argument("free_energy_by_parts needs g >= 2");
  const SpectralCurve& c = rec.curve();
  StoredWPtr w = rec.W(g, 1);
  RationalIntegral ri = integrate_rational(w->as_rational_function());
  if (!ri.is_rational()) throw ArithmeticError("W_{g,1} has residues");
  RationalFunctionQ f = -(ri.rational * c.y * c.x.derivative());
  // Sum of residues over the roots of M: the 1/M part of the partial fraction.
  RationalIntegral fi = integrate_rational(f);
  const PolynomialQ& M = rec.turning();
  Q total = 0;
  for (const auto& [fac, rem] : fi.log_terms)
    if (fac == M) total += sum_over_roots(rem, fac.derivative(), fac);
  return total / Q(2 - 2 * g);
}

Q residue_at_infinity(const RationalFunctionQ& f) {
  // f = q + r/den; only r/den contributes, with Res_inf = -lead(r)/lead(den) when deg r = deg den - 1.
  auto [q, r] = divmod(f.num(), f.den());
  if (r.is_zero_poly() || r.degree() != f.den().degree() - 1) return 0;
  return -(r.lead() / f.den().lead());
}

Q t_derivative_residue(Recursion& rec, int g) {
  RationalFunctionQ W = g == 0 ? rec.curve().y * rec.curve().x.derivative() : rec.W(g, 1)->as_rational_function();
  RationalFunctionQ z2 = rf_z() * rf_z();
  return -residue_at_infinity(z2 * W);
}

Q variational_integral(Recursion& rec, int g, int n) {
  StoredWPtr w = rec.W(g, n);
  return rec.contract_all(*w, std::vector<Arg>(n, Arg::full_integral()));
}

}  // namespace trv
