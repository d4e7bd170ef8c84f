#include "trvoros/exactmath/hermite.hpp"

#include <stdexcept>

namespace trv {

HermiteResult hermite_reduce(const PolynomialQ& p, const PolynomialQ& m, int k) {
  if (k < 1) throw std::invalid_argument("hermite_reduce: exponent must be positive");
  Bezout e = poly_xgcd(m, m.derivative());
  if (e.g.degree() != 0) throw std::invalid_argument("hermite_reduce: modulus is not squarefree");
  // s m + t m' = 1 (g is monic, so g = 1)
  HermiteResult out;
  std::vector<PolynomialQ> num_at(k + 1);  // num_at[j] over m^j
  {
    auto [q, r] = divmod(p, poly_pow(m, k));
    out.polynomial = q;
    num_at[k] = r;
  }
  // Expand r / m^k = sum_j a_j / m^j with deg a_j < deg m.
  for (int j = k; j >= 1; --j) {
    auto [q, r] = divmod(num_at[j], m);
    num_at[j] = r;
    if (j > 1) num_at[j - 1] += q;
    else out.polynomial += q;
  }
  RationalFunctionQ rational;
  for (int j = k; j >= 2; --j) {
    const PolynomialQ& a = num_at[j];
    if (a.is_zero_poly()) continue;
    // With T = a t mod m and S = (a - T m') / m:
    // a / m^j = d[-T / ((j-1) m^(j-1))] + (S + T' / (j-1)) / m^(j-1)
    PolynomialQ T = poly_mod(a * e.t, m);
    PolynomialQ S = exact_div(a - T * m.derivative(), m);
    Q inv = Q(1) / Q(j - 1);
    rational -= RationalFunctionQ(T * inv, poly_pow(m, j - 1));
    num_at[j - 1] += S + T.derivative() * inv;
    // renormalize num_at[j-1] to degree < deg m
    auto [q2, r2] = divmod(num_at[j - 1], m);
    num_at[j - 1] = r2;
    if (j - 2 >= 1) num_at[j - 2] += q2;
    else out.polynomial += q2;
  }
  out.rational = rational;
  out.remainder = num_at[1];
  return out;
}

}  // namespace trv

#include "trvoros/exactmath/partial_fractions.hpp"

namespace trv {

RationalIntegral integrate_rational(const RationalFunctionQ& f) {
  RationalIntegral out;
  auto fac = squarefree_decomposition(f.den());
  PartialFractions pf = partial_fractions(f, fac);
  out.rational = RationalFunctionQ(integrate(pf.polynomial_part));
  for (const auto& term : pf.terms) {
    PolynomialQ rem;
    for (int k = 1; k <= term.multiplicity; ++k) {
      const PolynomialQ& a = term.numerators[k - 1];
      if (a.is_zero_poly()) continue;
      if (k == 1) {
        rem += a;
        continue;
      }
      HermiteResult h = hermite_reduce(a, term.factor, k);
      out.rational += h.rational;
      if (!h.polynomial.is_zero_poly()) throw std::logic_error("integrate_rational: unexpected polynomial part");
      rem += h.remainder;
    }
    if (!rem.is_zero_poly()) out.log_terms.emplace_back(term.factor, rem);
  }
  return out;
}

}  // namespace trv
