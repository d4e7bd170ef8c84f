#include "trvoros/exactmath/log_rational.hpp"

#include <stdexcept>

namespace trv {

bool PolyLess::operator()(const PolynomialQ& a, const PolynomialQ& b) const {
  if (a.c.size() != b.c.size()) return a.c.size() < b.c.size();
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

namespace {
std::string const_key(const Q& c) { return "log(" + to_string(c) + ")"; }

Q parse_const_key(const std::string& s) { return parse_rational(s.substr(4, s.size() - 5)); }
}  // namespace

void LogRationalExpr::clean() {
  for (auto it = logs_.begin(); it != logs_.end();) it = it->second.is_zero() ? logs_.erase(it) : std::next(it);
  for (auto it = consts_.begin(); it != consts_.end();) it = it->second.is_zero() ? consts_.erase(it) : std::next(it);
}

LogRationalExpr LogRationalExpr::log_of(const PolynomialQ& p, const RationalFunctionQ& coeff) {
  if (p.is_zero_poly()) throw ArithmeticError("log of zero");
  LogRationalExpr r;
  Q lc = p.lead();
  if (lc != 1) r = log_const(lc, coeff);
  PolynomialQ m = monic(p);
  if (m.degree() == 0) return r;
  int v = valuation0(m);
  if (v == m.degree()) {
    // log(L^k) = k log L
    r.logs_[poly_x()] += coeff * RationalFunctionQ(Q(v));
  } else {
    r.logs_[m] += coeff;
  }
  r.clean();
  return r;
}

LogRationalExpr LogRationalExpr::log_const(const Q& c, const RationalFunctionQ& coeff) {
  if (sgn(c) == 0) throw ArithmeticError("log of zero");
  LogRationalExpr r;
  if (c != 1) r.consts_[const_key(c)] = coeff;
  r.clean();
  return r;
}

LogRationalExpr operator+(const LogRationalExpr& a, const LogRationalExpr& b) {
  LogRationalExpr r = a;
  r.rational_ += b.rational_;
  for (const auto& [p, c] : b.logs_) r.logs_[p] += c;
  for (const auto& [s, c] : b.consts_) r.consts_[s] += c;
  r.clean();
  return r;
}

LogRationalExpr operator-(const LogRationalExpr& a) { return RationalFunctionQ(Q(-1)) * a; }

LogRationalExpr operator*(const RationalFunctionQ& s, const LogRationalExpr& a) {
  LogRationalExpr r;
  r.rational_ = s * a.rational_;
  for (const auto& [p, c] : a.logs_) r.logs_[p] = s * c;
  for (const auto& [k, c] : a.consts_) r.consts_[k] = s * c;
  r.clean();
  return r;
}

bool operator==(const LogRationalExpr& a, const LogRationalExpr& b) {
  return (a - b).is_zero();
}

LogRationalExpr LogRationalExpr::derivative() const {
  LogRationalExpr r(rational_.derivative());
  for (const auto& [p, c] : logs_) {
    r.rational_ += c * RationalFunctionQ(p.derivative(), p);
    r.logs_[p] += c.derivative();
  }
  for (const auto& [k, c] : consts_) r.consts_[k] += c.derivative();
  r.clean();
  return r;
}

BallComplex log_rational_constant(const Q& c, int prec) {
  if (sgn(c) > 0) return log(BallComplex(c, prec));
  BallComplex l = log(BallComplex(Q(-c), prec));
  // principal branch: log|c| + i pi
  Real piv = pi(prec);
  Real rad = l.rad() + pow2(3 - prec, prec);
  return BallComplex(l.re(), piv, rad);
}

BallComplex LogRationalExpr::eval(const Q& at, int prec) const {
  BallComplex r(rational_.eval(at), prec);
  for (const auto& [p, c] : logs_) r += BallComplex(c.eval(at), prec) * log_rational_constant(eval_at(p, at), prec);
  for (const auto& [k, c] : consts_) r += BallComplex(c.eval(at), prec) * log_rational_constant(parse_const_key(k), prec);
  return r;
}

std::string LogRationalExpr::str(const std::string& var) const {
  std::string s = rational_.str(var);
  for (const auto& [p, c] : logs_) s += " + (" + c.str(var) + ")*log(" + to_string(p, var) + ")";
  for (const auto& [k, c] : consts_) s += " + (" + c.str(var) + ")*" + k;
  return s;
}

}  // namespace trv
