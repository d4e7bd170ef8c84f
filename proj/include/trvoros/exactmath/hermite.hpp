#pragma once

#include "trvoros/exactmath/rational_function.hpp"

namespace trv {

// Hermite reduction of p / m^k with m squarefree:
//   p / m^k = d/dz( rational ) + polynomial + remainder / m,  deg remainder < deg m.
struct HermiteResult {
  RationalFunctionQ rational;
  PolynomialQ polynomial;
  PolynomialQ remainder;
};

HermiteResult hermite_reduce(const PolynomialQ& p, const PolynomialQ& m, int k);

}  // namespace trv

namespace trv {

// f = d/dz(rational) + sum_i remainder_i / factor_i with factor_i squarefree,
// pairwise coprime and deg remainder_i < deg factor_i. The second sum is the
// logarithmic part; it is empty exactly when f has a rational primitive.
struct RationalIntegral {
  RationalFunctionQ rational;
  std::vector<std::pair<PolynomialQ, PolynomialQ>> log_terms;  // (factor, remainder), remainder != 0

  bool is_rational() const { return log_terms.empty(); }
};

RationalIntegral integrate_rational(const RationalFunctionQ& f);

}  // namespace trv
