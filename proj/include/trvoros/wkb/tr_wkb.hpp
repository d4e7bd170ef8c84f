#pragma once

#include <vector>

#include "trvoros/recursion/correlation.hpp"

namespace trv {

// S^TR_m x'(z) = sum_{2g-2+n=m} W_{g,n}(z; L_z, ..., L_z) / (n-1)!, with
// L_z the divisor integral up to z. m = 0 uses the regularized W_{0,2}.
struct TrWkbSeries {
  int M = 0;
  std::vector<RationalFunctionQ> S;  // S[m + 1], m = -1..M

  const RationalFunctionQ& at(int m) const { return S[m + 1]; }
};

// W_{g,n}(z; L_z^{n-1}) as a rational function of z, interpolated from
// engine runs at rational nodes and checked at extra nodes.
RationalFunctionQ divisor_contracted(Recursion& rec, int g, int n);

TrWkbSeries tr_wkb_series(Recursion& rec, int M);

}  // namespace trv
