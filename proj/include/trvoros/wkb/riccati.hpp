#pragma once

#include <vector>

#include "trvoros/exactmath/factored_rf.hpp"
#include "trvoros/wkb/quantum_curve.hpp"

namespace trv {

// sum_{k <= K} c[k](z) eps^k: a quantity at lambda = lambda0 + eps, fixed z.
class Jet {
 public:
  Jet() = default;
  Jet(int K, const FactoredRF& c0) : c_(K + 1, FactoredRF(c0.base(), PolynomialQ())) { c_[0] = c0; }
  explicit Jet(std::vector<FactoredRF> c) : c_(std::move(c)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const FactoredRF& operator[](int k) const { return c_[k]; }
  FactoredRF& operator[](int k) { return c_[k]; }
  bool is_zero() const;

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const Q& s, const Jet& a);
  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }
  Jet inverse() const;
  Jet dz() const;
  // d/d eps, dropping the top order.
  Jet d_eps() const;
  Jet reduced() const;

 private:
  std::vector<FactoredRF> c_;
};

// A one-parameter family in lambda, linear in lambda at fixed z and x.
struct LambdaFamily {
  SpectralCurve curve;  // at lambda0
  QuantumCurve qc;      // at lambda0
  int K = 0;
  FactorBasePtr base;
  Jet x, y;                                     // x(z), y(z) as jets
  std::array<std::array<RationalFunctionQ, 2>, 4> dp;  // d p_{i,j} / d lambda, as functions of x
};

// Builds the family from the assembled operators at lambda0, lambda0 + 1 and
// lambda0 + 2; throws unless every piece is affine in lambda.
LambdaFamily lambda_family(CurveTag tag, const CurveParams& params, int K);
// A family with a fixed operator and no lambda variation (K = 0).
LambdaFamily fixed_family(const SpectralCurve& c, const QuantumCurve& qc);

struct WkbSeries {
  int M = 0;
  int K = 0;
  Jet xz;              // dx/dz
  std::vector<Jet> S;  // S[m + 1] = S_m(x(z)), m = -1..M
  std::vector<RationalFunctionQ> plain;  // eps^0 parts, normalized

  const RationalFunctionQ& at(int m) const { return plain[m + 1]; }
  const Jet& jet(int m) const { return S[m + 1]; }
};

// S_{-1} is the branch y(z); S_0..S_M come from the hbar-expansion of the
// full Riccati equation.
WkbSeries riccati_expand(const LambdaFamily& fam, int M);

// hbar^N coefficient of the Riccati expression with S truncated at M (K = 0 part).
RationalFunctionQ riccati_residual(const LambdaFamily& fam, const WkbSeries& w, int N);

// Order of vanishing of S_m in the local coordinate 1/x at an endpoint of the path.
Q decay_order(const SpectralCurve& c, const RationalFunctionQ& s, bool at_infinity);

}  // namespace trv
