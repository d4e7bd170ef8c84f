#include "trvoros/exactmath/partial_fractions.hpp"

#include <stdexcept>

namespace trv {

RationalFunctionQ PartialFractions::recombine() const {
  RationalFunctionQ r(polynomial_part);
  for (const auto& t : terms)
    for (std::size_t k = 0; k < t.numerators.size(); ++k)
      r += RationalFunctionQ(t.numerators[k], poly_pow(t.factor, static_cast<int>(k) + 1));
  return r;
}

PartialFractions partial_fractions(const RationalFunctionQ& f,
                                   const std::vector<std::pair<PolynomialQ, int>>& factorization) {
  PolynomialQ prod = poly_from({1});
  for (const auto& [p, m] : factorization) {
    if (p.degree() < 1 || m < 1 || !is_squarefree(p)) throw std::invalid_argument("bad factorization");
    prod *= poly_pow(p, m);
  }
  if (monic(prod) != f.den()) throw std::invalid_argument("bad factorization");
  for (std::size_t i = 0; i < factorization.size(); ++i)
    for (std::size_t j = i + 1; j < factorization.size(); ++j)
      if (poly_gcd(factorization[i].first, factorization[j].first).degree() > 0)
        throw std::invalid_argument("bad factorization");

  PartialFractions out;
  auto [q, r] = divmod(f.num(), f.den());
  out.polynomial_part = q;
  PolynomialQ rest_den = f.den();
  PolynomialQ num = r;
  for (const auto& [p, m] : factorization) {
    PolynomialQ a = poly_pow(p, m);
    PolynomialQ b = exact_div(rest_den, monic(a));
    // num / (a b) with s b + t a = 1 splits as num s / a + num t / b.
    Bezout e = poly_xgcd(b, monic(a));
    PolynomialQ na = poly_mod(num * e.s, monic(a));
    PolynomialQ nb = poly_mod(num * e.t, b);
    // na / a' where a' = monic(a) = a / lc(p)^m; expand na in the p-adic basis.
    Q scale = 1;
    for (int i = 0; i < m; ++i) scale *= p.lead();
    PolynomialQ digits = na * scale;  // now over a = p^m exactly
    FactorTerms ft{p, m, std::vector<PolynomialQ>(m)};
    for (int k = 0; k < m; ++k) {
      auto [qq, rr] = divmod(digits, p);
      ft.numerators[m - 1 - k] = rr;  // digit k sits over p^(m-k)
      digits = qq;
    }
    out.terms.push_back(std::move(ft));
    num = nb;
    rest_den = b;
  }
  return out;
}

}  // namespace trv
