#include "trvoros/wkb/hbar_series.hpp"

#include <sstream>

#include "trvoros/exactmath/bernoulli.hpp"

namespace trv {

LogRationalExpr HbarSeries::coeff(int m) const {
  auto it = c_.find(m);
  return it == c_.end() ? LogRationalExpr() : it->second;
}

void HbarSeries::set(int m, LogRationalExpr v) {
  if (m > order_) return;
  if (v.is_zero()) c_.erase(m);
  else c_[m] = std::move(v);
}

void HbarSeries::add(int m, const LogRationalExpr& v) { set(m, coeff(m) + v); }

HbarSeries HbarSeries::operator+(const HbarSeries& b) const {
  HbarSeries r(std::min(order_, b.order_));
  for (const auto& [m, v] : c_) r.add(m, v);
  for (const auto& [m, v] : b.c_) r.add(m, v);
  return r;
}

HbarSeries HbarSeries::operator-(const HbarSeries& b) const { return *this + b.scaled(Q(-1)); }

HbarSeries HbarSeries::scaled(const Q& s) const {
  HbarSeries r(order_);
  for (const auto& [m, v] : c_) r.set(m, RationalFunctionQ(s) * v);
  return r;
}

HbarSeries HbarSeries::d_lambda(int k) const {
  HbarSeries r(order_);
  for (const auto& [m, v] : c_) {
    LogRationalExpr d = v;
    for (int i = 0; i < k; ++i) d = d.derivative();
    r.set(m, d);
  }
  return r;
}

HbarSeries HbarSeries::shifted(const Q& c) const {
  HbarSeries r(order_);
  for (const auto& [m, v] : c_) {
    LogRationalExpr d = v;
    Q w = 1;  // c^n / n!
    for (int n = 0; m + n <= order_; ++n) {
      if (n > 0) {
        d = d.derivative();
        w = w * c / Q(n);
      }
      if (sgn(w) != 0) r.add(m + n, RationalFunctionQ(w) * d);
      if (d.is_zero() || sgn(c) == 0) break;
    }
  }
  return r;
}

bool HbarSeries::is_zero() const { return c_.empty(); }

std::string HbarSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : c_) {
    if (!first) os << " + ";
    first = false;
    os << "hbar^" << m << " [" << v.str("lambda") << "]";
  }
  if (first) os << "0";
  os << " + O(hbar^" << order_ + 1 << ")";
  return os.str();
}

namespace {

RationalFunctionQ L_pow(int k) {
  if (k >= 0) return RationalFunctionQ(poly_pow(poly_x(), k));
  return RationalFunctionQ(poly_from({1}), poly_pow(poly_x(), -k));
}

Q qpow(const Q& a, int k) {
  Q r = 1;
  for (int i = 0; i < k; ++i) r *= a;
  return r;
}

}  // namespace

LogRationalExpr free_energy_closed_form(CurveTag tag, int g, const CurveParams& p) {
  if (g < 0) throw std::invalid_argument("free_energy_closed_form: negative genus");
  const Q& t = p.t;
  if (tag == CurveTag::Curve14) {
    if (g == 0) {
      // -t^6/972 + 2 L t^3/27 - 3 L^2/4 + (L^2/4) log(-3 L^2)
      PolynomialQ r(std::vector<Q>{Q(-qpow(t, 6) / 972), Q(2 * qpow(t, 3) / 27), Q(-3, 4)});
      LogRationalExpr out(RationalFunctionQ{r});
      out += LogRationalExpr::log_of(PolynomialQ(std::vector<Q>{0, 0, -3}), RationalFunctionQ(Q(1, 4)) * L_pow(2));
      return out;
    }
    if (g == 1) return LogRationalExpr::log_of(poly_x(), RationalFunctionQ(Q(-1, 12)));
    return LogRationalExpr(RationalFunctionQ(bernoulli_number(2 * g) / Q(2 * g * (2 * g - 2))) * L_pow(2 - 2 * g));
  }
  if (tag == CurveTag::Curve23) {
    if (g == 0) return LogRationalExpr::log_const(Q(-2 * t), RationalFunctionQ(Q(-1, 4)) * L_pow(2));
    if (g == 1) return LogRationalExpr::log_const(t, RationalFunctionQ(Q(-1, 8)));
    return LogRationalExpr();
  }
  throw std::invalid_argument("free_energy_closed_form: no closed form for a custom curve");
}

HbarSeries free_energy_series(CurveTag tag, const CurveParams& p, int M) {
  HbarSeries s(M);
  for (int g = 0; 2 * g - 2 <= M; ++g) s.set(2 * g - 2, free_energy_closed_form(tag, g, p));
  return s;
}

HbarSeries voros_closed_form(CurveTag tag, const CurveParams& p, int M) {
  HbarSeries s(M);
  if (tag == CurveTag::Curve23) return s;
  if (tag != CurveTag::Curve14) throw std::invalid_argument("voros_closed_form: no closed form for a custom curve");
  for (int m = 1; m <= M; ++m) {
    Q c = eval(bernoulli_polynomial(m + 1), p.nu) / Q(m * (m + 1));
    s.set(m, LogRationalExpr(RationalFunctionQ(c) * L_pow(-m)));
  }
  return s;
}

}  // namespace trv
