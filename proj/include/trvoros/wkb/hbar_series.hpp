#pragma once

#include <map>
#include <string>

#include "trvoros/curve/spectral_curve.hpp"
#include "trvoros/exactmath/log_rational.hpp"

namespace trv {

// sum_{m <= order} hbar^m c_m with c_m a LogRationalExpr in lambda (variable L);
// t and nu are already substituted.
class HbarSeries {
 public:
  explicit HbarSeries(int order = 0) : order_(order) {}

  int order() const { return order_; }
  const std::map<int, LogRationalExpr>& terms() const { return c_; }
  LogRationalExpr coeff(int m) const;
  void set(int m, LogRationalExpr v);
  void add(int m, const LogRationalExpr& v);

  HbarSeries operator+(const HbarSeries& b) const;
  HbarSeries operator-(const HbarSeries& b) const;
  HbarSeries scaled(const Q& s) const;
  HbarSeries d_lambda(int k = 1) const;
  // exp(c hbar d/dlambda), truncated at order().
  HbarSeries shifted(const Q& c) const;
  bool is_zero() const;
  std::string str() const;

 private:
  int order_;
  std::map<int, LogRationalExpr> c_;
};

// Closed-form F_g as a function of lambda.
LogRationalExpr free_energy_closed_form(CurveTag tag, int g, const CurveParams& p);
// sum_{2g-2 <= M} hbar^{2g-2} F_g.
HbarSeries free_energy_series(CurveTag tag, const CurveParams& p, int M);
// sum_{m=1}^M B_{m+1}(nu) / (m(m+1)) (hbar/lambda)^m, or zero for (2,3).
HbarSeries voros_closed_form(CurveTag tag, const CurveParams& p, int M);

}  // namespace trv
