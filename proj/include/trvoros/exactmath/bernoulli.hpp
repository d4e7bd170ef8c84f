#pragma once

#include "trvoros/exactmath/polynomial.hpp"

namespace trv {

// B_n from w/(e^w - 1); B_1 = -1/2.
Q bernoulli_number(int n);
// B_m(X) from w e^{Xw}/(e^w - 1).
PolynomialQ bernoulli_polynomial(int m);

}  // namespace trv
