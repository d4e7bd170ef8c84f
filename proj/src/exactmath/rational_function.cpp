#include "trvoros/exactmath/rational_function.hpp"

namespace trv {

RationalFunctionQ::RationalFunctionQ(PolynomialQ n, PolynomialQ d) {
  if (d.is_zero_poly()) throw ArithmeticError("rational function with zero denominator");
  if (n.is_zero_poly()) {
    num_ = PolynomialQ();
    den_ = poly_from({1});
    return;
  }
  PolynomialQ g = poly_gcd(n, d);
  if (g.degree() > 0) {
    n = exact_div(n, g);
    d = exact_div(d, g);
  }
  Q inv = 1 / d.lead();
  num_ = n * inv;
  den_ = d * inv;
}

RationalFunctionQ RationalFunctionQ::from_coprime(PolynomialQ n, PolynomialQ d) {
  if (d.is_zero_poly()) throw ArithmeticError("rational function with zero denominator");
  RationalFunctionQ r;
  if (n.is_zero_poly()) return r;
  Q inv = 1 / d.lead();
  r.num_ = n * inv;
  r.den_ = d * inv;
  return r;
}

RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RationalFunctionQ(a.num_ + b.num_, a.den_);
  PolynomialQ g = poly_gcd(a.den_, b.den_);
  PolynomialQ bd = exact_div(b.den_, g), ad = exact_div(a.den_, g);
  return RationalFunctionQ(a.num_ * bd + b.num_ * ad, a.den_ * bd);
}

RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b) { return a + (-b); }

RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunctionQ();
  PolynomialQ g1 = poly_gcd(a.num_, b.den_), g2 = poly_gcd(b.num_, a.den_);
  PolynomialQ n = exact_div(a.num_, g1) * exact_div(b.num_, g2);
  PolynomialQ d = exact_div(a.den_, g2) * exact_div(b.den_, g1);
  RationalFunctionQ r;
  Q inv = 1 / d.lead();
  r.num_ = n * inv;
  r.den_ = d * inv;
  return r;
}

RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b) {
  if (b.is_zero()) throw ArithmeticError("rational function division by zero");
  RationalFunctionQ inv;
  Q s = 1 / b.num_.lead();
  inv.num_ = b.den_ * s;
  inv.den_ = b.num_ * s;
  return a * inv;
}

RationalFunctionQ RationalFunctionQ::derivative() const {
  if (is_zero()) return *this;
  return RationalFunctionQ(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunctionQ RationalFunctionQ::pow(int k) const {
  if (k < 0) return RationalFunctionQ(Q(1)) / pow(-k);
  RationalFunctionQ r;
  r.num_ = poly_pow(num_, k);
  r.den_ = poly_pow(den_, k);
  return r;
}

Q RationalFunctionQ::eval(const Q& x) const {
  Q d = trv::eval(den_, x);
  if (sgn(d) == 0) throw ArithmeticError("rational function evaluated at a pole");
  return trv::eval(num_, x) / d;
}

int RationalFunctionQ::valuation_at_zero() const {
  if (is_zero()) return 1 << 28;
  return valuation0(num_) - valuation0(den_);
}

Q RationalFunctionQ::limit_at_zero() const {
  int v = valuation_at_zero();
  if (v < 0) throw ArithmeticError("divergent limit at 0");
  if (v > 0) return 0;
  return num_.c[0] / den_.c[0];
}

Q RationalFunctionQ::limit_at_infinity() const {
  if (is_zero()) return 0;
  int v = valuation_at_infinity();
  if (v < 0) throw ArithmeticError("divergent limit at infinity");
  if (v > 0) return 0;
  return num_.lead() / den_.lead();
}

RationalFunctionQ RationalFunctionQ::compose(const RationalFunctionQ& g) const {
  RationalFunctionQ n, d;
  for (int i = num_.degree(); i >= 0; --i) n = n * g + RationalFunctionQ(num_.c[i]);
  for (int i = den_.degree(); i >= 0; --i) d = d * g + RationalFunctionQ(den_.c[i]);
  return n / d;
}

std::string RationalFunctionQ::str(const std::string& var) const {
  if (den_.degree() == 0) return to_string(num_, var);
  return "(" + to_string(num_, var) + ")/(" + to_string(den_, var) + ")";
}

RationalFunctionQ rf_z() { return RationalFunctionQ(poly_x()); }

}  // namespace trv
