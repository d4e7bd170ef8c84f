#pragma once

#include <utility>
#include <vector>

#include "trvoros/exactmath/rational_function.hpp"

namespace trv {

struct FactorTerms {
  PolynomialQ factor;
  int multiplicity = 1;
  // numerators[k-1] sits over factor^k, each of degree < deg(factor).
  std::vector<PolynomialQ> numerators;
};

struct PartialFractions {
  PolynomialQ polynomial_part;
  std::vector<FactorTerms> terms;

  RationalFunctionQ recombine() const;
};

// Factors must be pairwise coprime and squarefree, and multiply to the
// denominator of f up to a constant.
PartialFractions partial_fractions(const RationalFunctionQ& f,
                                   const std::vector<std::pair<PolynomialQ, int>>& factorization);

}  // namespace trv
