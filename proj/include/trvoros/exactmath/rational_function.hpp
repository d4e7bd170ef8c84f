#pragma once

#include <string>

#include "trvoros/exactmath/polynomial.hpp"

namespace trv {

// num/den with den monic and gcd(num, den) = 1.
class RationalFunctionQ {
 public:
  RationalFunctionQ() : num_(), den_(poly_from({1})) {}
  RationalFunctionQ(const Q& c) : num_(PolynomialQ({c})), den_(poly_from({1})) {}  // NOLINT
  RationalFunctionQ(PolynomialQ p) : num_(std::move(p)), den_(poly_from({1})) {}  // NOLINT
  RationalFunctionQ(PolynomialQ n, PolynomialQ d);
  // Skips the gcd; the caller guarantees gcd(n, d) = 1.
  static RationalFunctionQ from_coprime(PolynomialQ n, PolynomialQ d);

  const PolynomialQ& num() const { return num_; }
  const PolynomialQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero_poly(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend bool operator==(const RationalFunctionQ& a, const RationalFunctionQ& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunctionQ& a, const RationalFunctionQ& b) { return !(a == b); }

  friend RationalFunctionQ operator+(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator-(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator*(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator/(const RationalFunctionQ& a, const RationalFunctionQ& b);
  friend RationalFunctionQ operator-(const RationalFunctionQ& a) {
    RationalFunctionQ r = a;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunctionQ& operator+=(const RationalFunctionQ& b) { return *this = *this + b; }
  RationalFunctionQ& operator-=(const RationalFunctionQ& b) { return *this = *this - b; }
  RationalFunctionQ& operator*=(const RationalFunctionQ& b) { return *this = *this * b; }
  RationalFunctionQ& operator/=(const RationalFunctionQ& b) { return *this = *this / b; }

  RationalFunctionQ derivative() const;
  RationalFunctionQ pow(int k) const;
  // Throws on a pole.
  Q eval(const Q& x) const;
  // Order of vanishing at z = 0 (negative for a pole).
  int valuation_at_zero() const;
  // Order of vanishing at z = infinity in the local coordinate 1/z.
  int valuation_at_infinity() const { return den_.degree() - num_.degree(); }
  // Limit at 0 / infinity; throws when the limit diverges.
  Q limit_at_zero() const;
  Q limit_at_infinity() const;
  // f(g(z)).
  RationalFunctionQ compose(const RationalFunctionQ& g) const;

  std::string str(const std::string& var = "z") const;

 private:
  PolynomialQ num_, den_;
};

RationalFunctionQ rf_z();

}  // namespace trv
