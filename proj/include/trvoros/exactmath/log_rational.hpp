#pragma once

#include <map>
#include <string>

#include "trvoros/exactmath/ball.hpp"
#include "trvoros/exactmath/rational_function.hpp"

namespace trv {

struct PolyLess {
  bool operator()(const PolynomialQ& a, const PolynomialQ& b) const;
};

// rational(L) + sum_p c_p(L) log p(L) + sum_s c_s(L) [s], with p monic and
// [s] an opaque constant such as "log(-3)".
class LogRationalExpr {
 public:
  LogRationalExpr() = default;
  LogRationalExpr(RationalFunctionQ r) : rational_(std::move(r)) {}  // NOLINT
  LogRationalExpr(const Q& q) : rational_(q) {}                      // NOLINT

  // coeff * log(p); p = lc * monic splits off the constant log(lc).
  static LogRationalExpr log_of(const PolynomialQ& p, const RationalFunctionQ& coeff = Q(1));
  // coeff * log(c) for a nonzero rational constant.
  static LogRationalExpr log_const(const Q& c, const RationalFunctionQ& coeff = Q(1));

  const RationalFunctionQ& rational() const { return rational_; }
  const std::map<PolynomialQ, RationalFunctionQ, PolyLess>& logs() const { return logs_; }
  const std::map<std::string, RationalFunctionQ>& constants() const { return consts_; }
  bool is_rational() const { return logs_.empty() && consts_.empty(); }
  bool is_zero() const { return rational_.is_zero() && is_rational(); }

  friend LogRationalExpr operator+(const LogRationalExpr& a, const LogRationalExpr& b);
  friend LogRationalExpr operator-(const LogRationalExpr& a);
  friend LogRationalExpr operator-(const LogRationalExpr& a, const LogRationalExpr& b) { return a + (-b); }
  friend LogRationalExpr operator*(const RationalFunctionQ& s, const LogRationalExpr& a);
  friend bool operator==(const LogRationalExpr& a, const LogRationalExpr& b);
  LogRationalExpr& operator+=(const LogRationalExpr& b) { return *this = *this + b; }

  LogRationalExpr derivative() const;
  // Numeric value at L = at; opaque constants use the principal branch.
  BallComplex eval(const Q& at, int prec) const;
  std::string str(const std::string& var = "L") const;

 private:
  void clean();
  RationalFunctionQ rational_;
  std::map<PolynomialQ, RationalFunctionQ, PolyLess> logs_;
  std::map<std::string, RationalFunctionQ> consts_;
};

// Principal log of a nonzero rational as a ball.
BallComplex log_rational_constant(const Q& c, int prec);

}  // namespace trv
