#pragma once

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <string>
#include <vector>

#include "trvoros/exactmath/polynomial.hpp"

namespace trv {

struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Laurent series sum_{e >= val} c[e - val] u^e known up to (excluding) u^prec.
// Coefficients past c.size() but below prec are zero; nothing is assumed at
// or beyond prec.
// Precision used for series that are exact (polynomials).
inline constexpr int kExactPrec = 1 << 28;

template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries() = default;
  TruncatedSeries(R zero, int prec) : zero_(std::move(zero)), val_(prec), prec_(prec) {}
  TruncatedSeries(R zero, int val, int prec, std::vector<R> c)
      : zero_(std::move(zero)), val_(val), prec_(prec), c_(std::move(c)) {
    if (static_cast<int>(c_.size()) > prec_ - val_) c_.resize(std::max(0, prec_ - val_), zero_);
    normalize();
  }

  static TruncatedSeries constant(const R& a, int prec) {
    return TruncatedSeries(zero_of(a), 0, prec, {a});
  }
  static TruncatedSeries monomial(const R& a, int e, int prec) {
    return TruncatedSeries(zero_of(a), e, prec, {a});
  }
  static TruncatedSeries from_poly(const Poly<R>& p, int prec, const R& zero) {
    return TruncatedSeries(zero, 0, prec, p.c);
  }

  const R& zero() const { return zero_; }
  int val() const { return val_; }
  int prec() const { return prec_; }
  int length() const { return prec_ - val_; }
  bool is_known_zero() const { return c_.empty(); }
  const std::vector<R>& raw() const { return c_; }

  R coeff(int e) const {
    if (e >= prec_) throw TruncationError("series coefficient u^" + std::to_string(e) + " beyond precision " + std::to_string(prec_));
    if (e < val_ || e - val_ >= static_cast<int>(c_.size())) return zero_;
    return c_[e - val_];
  }
  const R& lead() const { return c_.front(); }

  TruncatedSeries truncated(int prec) const {
    TruncatedSeries r = *this;
    if (prec < r.prec_) {
      r.prec_ = prec;
      if (r.val_ > prec) r.val_ = prec;
      int keep = std::max(0, prec - r.val_);
      if (static_cast<int>(r.c_.size()) > keep) r.c_.resize(keep, zero_);
      r.normalize();
    }
    return r;
  }

  TruncatedSeries shifted(int k) const {
    TruncatedSeries r = *this;
    r.val_ += k;
    r.prec_ += k;
    return r;
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    int prec = std::min(a.prec_, b.prec_);
    int val = std::min(a.val_, b.val_);
    if (val > prec) val = prec;
    auto extent = [](const TruncatedSeries& s) { return s.c_.empty() ? INT_MIN : s.val_ + static_cast<int>(s.c_.size()); };
    int top = std::min<int>(prec, std::max(extent(a), extent(b)));
    std::vector<R> c(std::max(0, top - val), a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      int e = a.val_ + static_cast<int>(i);
      if (e < prec) c[e - val] += a.c_[i];
    }
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      int e = b.val_ + static_cast<int>(i);
      if (e < prec) c[e - val] += b.c_[i];
    }
    return TruncatedSeries(a.zero_, val, prec, std::move(c));
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a) {
    TruncatedSeries r = a;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int val = a.val_ + b.val_;
    int prec = std::min(a.val_ + b.prec_, b.val_ + a.prec_);
    if (a.c_.empty() || b.c_.empty()) return TruncatedSeries(a.zero_, prec);
    int n = std::min<int>(prec - val, static_cast<int>(a.c_.size() + b.c_.size()) - 1);
    std::vector<R> c(std::max(0, n), a.zero_);
    int na = std::min<int>(a.c_.size(), n), nb = std::min<int>(b.c_.size(), n);
    for (int i = 0; i < na; ++i) {
      if (is_zero(a.c_[i])) continue;
      int lim = std::min(nb, n - i);
      for (int j = 0; j < lim; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(a.zero_, val, prec, std::move(c));
  }
  TruncatedSeries& operator+=(const TruncatedSeries& b) { return *this = *this + b; }
  TruncatedSeries& operator-=(const TruncatedSeries& b) { return *this = *this - b; }
  TruncatedSeries& operator*=(const TruncatedSeries& b) { return *this = *this * b; }

  friend TruncatedSeries operator*(TruncatedSeries a, const R& s) {
    for (auto& x : a.c_) x *= s;
    a.normalize();
    return a;
  }
  friend TruncatedSeries operator*(const R& s, TruncatedSeries a) { return std::move(a) * s; }
  template <class S = R, class = std::enable_if_t<!std::is_same_v<S, Q>>>
  friend TruncatedSeries operator*(TruncatedSeries a, const Q& s) {
    for (auto& x : a.c_) x *= s;
    a.normalize();
    return a;
  }

  // Requires a unit leading coefficient.
  TruncatedSeries inverse() const {
    if (c_.empty()) throw TruncationError("inverse of a series with no known nonzero term");
    int n = prec_ - val_;
    if (n > (1 << 20)) throw TruncationError("inverse of a series without finite precision");
    R a0inv = trv::inverse(c_[0]);
    std::vector<R> b(n, zero_);
    b[0] = a0inv;
    for (int k = 1; k < n; ++k) {
      R s = zero_;
      int lim = std::min<int>(k, static_cast<int>(c_.size()) - 1);
      for (int j = 1; j <= lim; ++j) s += c_[j] * b[k - j];
      b[k] = -(s * a0inv);
    }
    return TruncatedSeries(zero_, -val_, -val_ + n, std::move(b));
  }
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) { return a * b.inverse(); }

  TruncatedSeries pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    TruncatedSeries r = constant(one_of(zero_), kExactPrec);
    TruncatedSeries base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return r;
  }

  TruncatedSeries derivative() const {
    std::vector<R> c(c_.size(), zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * scalar_of(zero_, Q(val_ + static_cast<long>(i)));
    return TruncatedSeries(zero_, val_ - 1, prec_ - 1, std::move(c));
  }

  R residue() const { return coeff(-1); }

 private:
  void normalize() {
    std::size_t k = 0;
    while (k < c_.size() && is_zero(c_[k])) ++k;
    if (k == c_.size()) {
      c_.clear();
      val_ = prec_;
      return;
    }
    if (k > 0) {
      c_.erase(c_.begin(), c_.begin() + k);
      val_ += static_cast<int>(k);
    }
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }

  R zero_{};
  int val_ = 0;
  int prec_ = 0;
  std::vector<R> c_;
};

// Evaluate a polynomial at a series by Horner.
template <class R, class C>
TruncatedSeries<R> poly_at_series(const Poly<C>& p, const TruncatedSeries<R>& s) {
  const R& z = s.zero();
  TruncatedSeries<R> r(z, kExactPrec);
  for (int i = p.degree(); i >= 0; --i) {
    r = r * s;
    R ci;
    if constexpr (std::is_same_v<C, R>) ci = p.c[i];
    else ci = scalar_of(z, p.c[i]);
    r = r + TruncatedSeries<R>::constant(ci, kExactPrec);
  }
  return r;
}

// Coefficient of u^{-1}.
template <class R>
R residue_series(const TruncatedSeries<R>& f) {
  return f.residue();
}

}  // namespace trv
