#include "trvoros/exactmath/ball.hpp"

#include <cstdlib>
#include <stdexcept>

namespace trv {

int default_precision_bits() {
  if (const char* env = std::getenv("TRVOROS_PRECISION_BITS")) {
    int v = std::atoi(env);
    if (v >= 64 && v <= kMaxPrecisionBits) return v;
  }
  return 256;
}

Real::Real(int prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}
Real::Real(const Q& q, int prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}
Real::Real(double d, int prec) {
  mpfr_init2(v_, prec);
  mpfr_set_d(v_, d, MPFR_RNDN);
}
Real::Real(const Real& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}
Real::Real(Real&& o) noexcept {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_swap(v_, o.v_);
}
Real& Real::operator=(const Real& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}
Real& Real::operator=(Real&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}
Real::~Real() { mpfr_clear(v_); }

std::string Real::str(int digits) const {
  char* s = nullptr;
  mpfr_asprintf(&s, "%.*Rg", digits, v_);
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

namespace {
int pmax(const Real& a, const Real& b) { return std::max(a.prec(), b.prec()); }

using Op = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
Real bin(Op f, const Real& a, const Real& b, mpfr_rnd_t rnd = MPFR_RNDN) {
  Real r(pmax(a, b));
  f(r.get(), a.get(), b.get(), rnd);
  return r;
}
using Un = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
Real un(Un f, const Real& a, mpfr_rnd_t rnd = MPFR_RNDN) {
  Real r(a.prec());
  f(r.get(), a.get(), rnd);
  return r;
}
}  // namespace

Real operator+(const Real& a, const Real& b) { return bin(mpfr_add, a, b); }
Real operator-(const Real& a, const Real& b) { return bin(mpfr_sub, a, b); }
Real operator*(const Real& a, const Real& b) { return bin(mpfr_mul, a, b); }
Real operator/(const Real& a, const Real& b) { return bin(mpfr_div, a, b); }
Real operator-(const Real& a) { return un(mpfr_neg, a); }
Real abs(const Real& a) { return un(mpfr_abs, a); }
Real sqrt(const Real& a) { return un(mpfr_sqrt, a); }
Real exp(const Real& a) { return un(mpfr_exp, a); }
Real log(const Real& a) { return un(mpfr_log, a); }
Real sinh(const Real& a) { return un(mpfr_sinh, a); }
Real cosh(const Real& a) { return un(mpfr_cosh, a); }
Real atan2(const Real& y, const Real& x) { return bin(mpfr_atan2, y, x); }
Real pi(int prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}
Real pow2(long e, int prec) {
  Real r(prec);
  mpfr_set_ui_2exp(r.get(), 1, e, MPFR_RNDN);
  return r;
}

namespace {

// Upward-rounded helpers for radius bookkeeping.
Real add_up(const Real& a, const Real& b) { return bin(mpfr_add, a, b, MPFR_RNDU); }
Real mul_up(const Real& a, const Real& b) { return bin(mpfr_mul, a, b, MPFR_RNDU); }
Real div_up(const Real& a, const Real& b) { return bin(mpfr_div, a, b, MPFR_RNDU); }
Real sub_down(const Real& a, const Real& b) { return bin(mpfr_sub, a, b, MPFR_RNDD); }

Real hypot_up(const Real& a, const Real& b) {
  Real r(pmax(a, b));
  mpfr_hypot(r.get(), a.get(), b.get(), MPFR_RNDU);
  return r;
}

// Bound for the rounding error committed producing a midpoint of modulus m.
Real rounding(const Real& re, const Real& im) {
  Real m = hypot_up(re, im);
  return mul_up(m, pow2(3 - re.prec(), re.prec()));
}

}  // namespace

BallComplex::BallComplex(int prec) : re_(prec), im_(prec), rad_(prec) {}
BallComplex::BallComplex(const Q& re, int prec) : BallComplex(re, Q(0), prec) {}
BallComplex::BallComplex(const Q& re, const Q& im, int prec) : re_(re, prec), im_(im, prec), rad_(prec) {
  rad_ = rounding(re_, im_);
}
BallComplex::BallComplex(Real re, Real im, Real rad) : re_(std::move(re)), im_(std::move(im)), rad_(std::move(rad)) {}

BallComplex operator+(const BallComplex& a, const BallComplex& b) {
  Real re = a.re_ + b.re_, im = a.im_ + b.im_;
  Real rad = add_up(add_up(a.rad_, b.rad_), rounding(re, im));
  return BallComplex(std::move(re), std::move(im), std::move(rad));
}
BallComplex operator-(const BallComplex& a) { return BallComplex(-a.re_, -a.im_, a.rad_); }
BallComplex operator-(const BallComplex& a, const BallComplex& b) { return a + (-b); }

BallComplex operator*(const BallComplex& a, const BallComplex& b) {
  Real re = a.re_ * b.re_ - a.im_ * b.im_;
  Real im = a.re_ * b.im_ + a.im_ * b.re_;
  Real ma = hypot_up(a.re_, a.im_), mb = hypot_up(b.re_, b.im_);
  Real rad = add_up(add_up(mul_up(ma, b.rad_), mul_up(mb, a.rad_)), mul_up(a.rad_, b.rad_));
  rad = add_up(rad, rounding(re, im));
  return BallComplex(std::move(re), std::move(im), std::move(rad));
}

BallComplex inverse(const BallComplex& z) {
  Real lo = z.abs_lower();
  if (mpfr_zero_p(lo.get())) throw ArithmeticError("ball inverse: ball contains zero");
  Real n2 = z.re() * z.re() + z.im() * z.im();
  Real re = z.re() / n2, im = -(z.im() / n2);
  Real m = hypot_up(z.re(), z.im());
  // |1/(z+d) - 1/z| <= r / (|z| (|z| - r))
  Real rad = div_up(z.rad(), bin(mpfr_mul, lo, m, MPFR_RNDD));
  rad = add_up(rad, rounding(re, im));
  return BallComplex(std::move(re), std::move(im), std::move(rad));
}

BallComplex operator/(const BallComplex& a, const BallComplex& b) { return a * inverse(b); }

Real BallComplex::abs_upper() const { return add_up(hypot_up(re_, im_), rad_); }
Real BallComplex::abs_lower() const {
  Real m(re_.prec());
  mpfr_hypot(m.get(), re_.get(), im_.get(), MPFR_RNDD);
  Real d = sub_down(m, rad_);
  if (mpfr_sgn(d.get()) <= 0) return Real(re_.prec());
  return d;
}
bool BallComplex::contains_zero() const { return mpfr_zero_p(abs_lower().get()); }

bool BallComplex::contains(const Q& re, const Q& im) const {
  Real dr = re_ - Real(re, prec()), di = im_ - Real(im, prec());
  Real d = hypot_up(dr, di);
  // allow for the rounding in forming the difference
  return d <= add_up(rad_, rounding(re_, im_));
}

bool within(const BallComplex& a, const BallComplex& b, const Real& tol) {
  Real d = hypot_up(a.re_ - b.re_, a.im_ - b.im_);
  Real tot = add_up(add_up(d, a.rad_), b.rad_);
  return tot <= tol;
}

std::string BallComplex::str(int digits) const {
  return "(" + re_.str(digits) + " + " + im_.str(digits) + "i) +/- " + rad_.str(3);
}

BallComplex log(const BallComplex& z) {
  Real lo = z.abs_lower();
  if (mpfr_zero_p(lo.get())) throw ArithmeticError("ball log: ball contains zero");
  if (mpfr_sgn(z.re().get()) < 0 && abs(z.im()) <= z.rad())
    throw ArithmeticError("ball log: ball meets the branch cut");
  int p = z.prec();
  Real m = sqrt(z.re() * z.re() + z.im() * z.im());
  Real re = log(m);
  Real im = atan2(z.im(), z.re());
  // |log(z+d) - log z| <= r / (|z| - r) away from the cut
  Real rad = div_up(z.rad(), lo);
  rad = add_up(rad, rounding(re, im));
  (void)p;
  return BallComplex(std::move(re), std::move(im), std::move(rad));
}

BallComplex eval_ball(const PolynomialQ& p, const BallComplex& z) {
  BallComplex r(z.prec());
  for (int i = p.degree(); i >= 0; --i) r = r * z + BallComplex(p.c[i], z.prec());
  return r;
}

std::vector<BallComplex> polynomial_roots(const PolynomialQ& p, int prec) {
  int n = p.degree();
  if (n < 1) return {};
  if (!is_squarefree(p)) throw ArithmeticError("polynomial_roots: input is not squarefree");
  PolynomialQ mp = monic(p);
  int wp = prec + 32;
  // Durand-Kerner on midpoints.
  std::vector<Real> xr, xi;
  Real seed_r(Q(2, 5), wp), seed_i(Q(9, 10), wp);
  Real cr(Q(1), wp), ci(Q(0), wp);
  for (int k = 0; k < n; ++k) {
    xr.push_back(cr);
    xi.push_back(ci);
    Real nr = cr * seed_r - ci * seed_i, ni = cr * seed_i + ci * seed_r;
    cr = nr;
    ci = ni;
  }
  auto evalp = [&](const Real& a, const Real& b, Real& outr, Real& outi) {
    outr = Real(wp);
    outi = Real(wp);
    for (int i = n; i >= 0; --i) {
      Real tr = outr * a - outi * b + Real(mp.c[i], wp);
      Real ti = outr * b + outi * a;
      outr = tr;
      outi = ti;
    }
  };
  Real tiny = pow2(-wp + 8, wp);
  for (int it = 0; it < 2000; ++it) {
    Real maxstep(wp);
    for (int i = 0; i < n; ++i) {
      Real pr(wp), pi_(wp);
      evalp(xr[i], xi[i], pr, pi_);
      Real dr(Q(1), wp), di(Q(0), wp);
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        Real er = xr[i] - xr[j], ei = xi[i] - xi[j];
        Real tr = dr * er - di * ei, ti = dr * ei + di * er;
        dr = tr;
        di = ti;
      }
      Real den = dr * dr + di * di;
      if (mpfr_zero_p(den.get())) {
        xr[i] += pow2(-20, wp);
        continue;
      }
      Real sr = (pr * dr + pi_ * di) / den, si = (pi_ * dr - pr * di) / den;
      xr[i] -= sr;
      xi[i] -= si;
      Real st = abs(sr) + abs(si);
      if (maxstep < st) maxstep = st;
    }
    if (maxstep < tiny) break;
  }
  // Inclusion radii n |p(x_i)| / |prod_{j != i} (x_i - x_j)| computed in balls.
  std::vector<BallComplex> out;
  for (int i = 0; i < n; ++i) {
    BallComplex x(xr[i], xi[i], Real(wp));
    BallComplex num = eval_ball(mp, x);
    BallComplex den(Q(1), wp);
    for (int j = 0; j < n; ++j)
      if (j != i) den = den * (x - BallComplex(xr[j], xi[j], Real(wp)));
    BallComplex w = num / den;
    Real r = mul_up(w.abs_upper(), Real(Q(n), wp));
    out.emplace_back(xr[i], xi[i], r);
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Real d(wp);
      mpfr_hypot(d.get(), (out[i].re() - out[j].re()).get(), (out[i].im() - out[j].im()).get(), MPFR_RNDD);
      if (d <= add_up(out[i].rad(), out[j].rad())) throw ArithmeticError("polynomial_roots: enclosures overlap");
    }
  return out;
}

}  // namespace trv
