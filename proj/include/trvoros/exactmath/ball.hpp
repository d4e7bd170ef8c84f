#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "trvoros/exactmath/polynomial.hpp"

namespace trv {

// Working precision in bits: TRVOROS_PRECISION_BITS if set, else 256.
int default_precision_bits();
inline constexpr int kMaxPrecisionBits = 4096;

// Owning wrapper around mpfr_t, rounding to nearest unless stated.
class Real {
 public:
  explicit Real(int prec = 256);
  Real(const Q& q, int prec);
  Real(double d, int prec);
  Real(const Real& o);
  Real(Real&& o) noexcept;
  Real& operator=(const Real& o);
  Real& operator=(Real&& o) noexcept;
  ~Real();

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  int prec() const { return static_cast<int>(mpfr_get_prec(v_)); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  std::string str(int digits = 30) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator-(const Real& a);
  Real& operator+=(const Real& b) { return *this = *this + b; }
  Real& operator-=(const Real& b) { return *this = *this - b; }
  Real& operator*=(const Real& b) { return *this = *this * b; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_); }

 private:
  mpfr_t v_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real exp(const Real& a);
Real log(const Real& a);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& a);
Real cosh(const Real& a);
Real pi(int prec);
// 2^e at the given precision.
Real pow2(long e, int prec);

// Complex ball: the value lies within rad of (re, im).
class BallComplex {
 public:
  explicit BallComplex(int prec = 256);
  BallComplex(const Q& re, int prec);
  BallComplex(const Q& re, const Q& im, int prec);
  BallComplex(Real re, Real im, Real rad);

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  const Real& rad() const { return rad_; }
  int prec() const { return re_.prec(); }

  friend BallComplex operator+(const BallComplex& a, const BallComplex& b);
  friend BallComplex operator-(const BallComplex& a, const BallComplex& b);
  friend BallComplex operator*(const BallComplex& a, const BallComplex& b);
  friend BallComplex operator/(const BallComplex& a, const BallComplex& b);
  friend BallComplex operator-(const BallComplex& a);
  BallComplex& operator+=(const BallComplex& b) { return *this = *this + b; }
  BallComplex& operator*=(const BallComplex& b) { return *this = *this * b; }

  // Upper bound of |z| over the ball.
  Real abs_upper() const;
  // Lower bound of |z| over the ball (zero when the ball contains 0).
  Real abs_lower() const;
  bool contains(const Q& re, const Q& im = Q(0)) const;
  bool contains_zero() const;
  // |mid(a) - mid(b)| + rad(a) + rad(b) <= tol
  friend bool within(const BallComplex& a, const BallComplex& b, const Real& tol);
  std::string str(int digits = 30) const;

 private:
  Real re_, im_, rad_;
};

// Principal branch; throws when the ball meets the negative real axis cut.
BallComplex log(const BallComplex& z);
BallComplex inverse(const BallComplex& z);
BallComplex eval_ball(const PolynomialQ& p, const BallComplex& z);

// Enclosures of all complex roots of p (squarefree); throws when the
// inclusion disks are not pairwise disjoint at the given precision.
std::vector<BallComplex> polynomial_roots(const PolynomialQ& p, int prec);

}  // namespace trv
