#pragma once

#include <memory>
#include <vector>

#include "trvoros/exactmath/polynomial.hpp"

namespace trv {

// Squarefree modulus m; Q[a]/(m(a)) is a product of number fields, one per
// irreducible factor, so sums over the roots of m are traces.
class Modulus {
 public:
  explicit Modulus(const PolynomialQ& m);

  int degree() const { return d_; }
  const PolynomialQ& poly() const { return m_; }
  // reduction of a^(d+k), k = 0..d-2, as a length-d coefficient vector
  const std::vector<Q>& reduced_power(int k) const { return red_[k]; }
  // Tr(a^i) for i = 0..d-1
  const std::vector<Q>& power_sums() const { return ps_; }

 private:
  PolynomialQ m_;
  int d_;
  std::vector<std::vector<Q>> red_;
  std::vector<Q> ps_;
};

using ModulusPtr = std::shared_ptr<const Modulus>;
ModulusPtr make_modulus(const PolynomialQ& m);

class QElem {
 public:
  QElem() = default;
  explicit QElem(ModulusPtr m);
  QElem(ModulusPtr m, const Q& c);
  QElem(ModulusPtr m, const PolynomialQ& rep);
  static QElem generator(const ModulusPtr& m);

  const ModulusPtr& modulus() const { return mod_; }
  const std::vector<Q>& coeffs() const { return c_; }
  PolynomialQ representative() const { return PolynomialQ(c_); }
  bool is_zero() const;
  bool is_rational() const;

  QElem& operator+=(const QElem& b);
  QElem& operator-=(const QElem& b);
  QElem& operator*=(const QElem& b);
  QElem& operator*=(const Q& s);
  friend QElem operator+(QElem a, const QElem& b) { return a += b; }
  friend QElem operator-(QElem a, const QElem& b) { return a -= b; }
  friend QElem operator*(const QElem& a, const QElem& b);
  friend QElem operator*(QElem a, const Q& s) { return a *= s; }
  friend QElem operator*(const Q& s, QElem a) { return a *= s; }
  friend QElem operator-(QElem a);
  friend bool operator==(const QElem& a, const QElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QElem& a, const QElem& b) { return !(a == b); }

  // Throws ArithmeticError("non-unit") when the element is a zero divisor.
  QElem inverse() const;
  // Sum of the values of the representative over the roots of the modulus.
  Q trace() const;

 private:
  ModulusPtr mod_;
  std::vector<Q> c_;
};

inline bool is_zero(const QElem& a) { return a.is_zero(); }
inline QElem zero_of(const QElem& a) { return QElem(a.modulus()); }
inline QElem one_of(const QElem& a) { return QElem(a.modulus(), Q(1)); }
inline QElem scalar_of(const QElem& a, const Q& v) { return QElem(a.modulus(), v); }
inline QElem inverse(const QElem& a) { return a.inverse(); }

using QuotientRingElem = QElem;

// sum over roots r of modulus of num(r)/den(r); throws "pole at root".
Q sum_over_roots(const PolynomialQ& num, const PolynomialQ& den, const PolynomialQ& modulus);

}  // namespace trv
