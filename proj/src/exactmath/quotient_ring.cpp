#include "trvoros/exactmath/quotient_ring.hpp"

namespace trv {

namespace {
std::vector<Q> reduce_vec(std::vector<Q> v, const Modulus& m) {
  int d = m.degree();
  for (int k = static_cast<int>(v.size()) - 1; k >= d; --k) {
    if (sgn(v[k]) == 0) continue;
    const auto& r = m.reduced_power(k - d);
    for (int i = 0; i < d; ++i) v[i] += v[k] * r[i];
  }
  v.resize(d);
  return v;
}
}  // namespace

Modulus::Modulus(const PolynomialQ& m) : m_(monic(m)), d_(m.degree()) {
  if (d_ < 1) throw ArithmeticError("modulus must have positive degree");
  if (!is_squarefree(m_)) throw ArithmeticError("modulus is not squarefree");
  // a^d = -sum_{i<d} m_i a^i, then multiply by a repeatedly.
  std::vector<Q> cur(d_);
  for (int i = 0; i < d_; ++i) cur[i] = -m_.c[i];
  for (int k = 0; k <= d_ - 2 || k == 0; ++k) {
    red_.push_back(cur);
    if (k >= d_ - 2) break;
    std::vector<Q> nxt(d_);
    for (int i = 0; i + 1 < d_; ++i) nxt[i + 1] = cur[i];
    for (int i = 0; i < d_; ++i) nxt[i] -= cur[d_ - 1] * m_.c[i];
    cur = std::move(nxt);
  }
  // Tr(a^k) from the matrix of multiplication by a^k.
  ps_.assign(d_, 0);
  for (int k = 0; k < d_; ++k) {
    Q tr = 0;
    for (int i = 0; i < d_; ++i) {
      int e = i + k;
      if (e < d_) {
        if (e == i) tr += 1;
      } else {
        tr += red_[e - d_][i];
      }
    }
    ps_[k] = tr;
  }
}

ModulusPtr make_modulus(const PolynomialQ& m) { return std::make_shared<const Modulus>(m); }

QElem::QElem(ModulusPtr m) : mod_(std::move(m)), c_(mod_->degree()) {}

QElem::QElem(ModulusPtr m, const Q& c) : mod_(std::move(m)), c_(mod_->degree()) { c_[0] = c; }

QElem::QElem(ModulusPtr m, const PolynomialQ& rep) : mod_(std::move(m)) {
  PolynomialQ r = rep.degree() >= mod_->degree() ? poly_mod(rep, mod_->poly()) : rep;
  c_.assign(mod_->degree(), Q(0));
  for (int i = 0; i <= r.degree(); ++i) c_[i] = r.c[i];
}

QElem QElem::generator(const ModulusPtr& m) {
  if (m->degree() == 1) return QElem(m, -m->poly().c[0]);
  QElem a(m);
  a.c_[1] = 1;
  return a;
}

bool QElem::is_zero() const {
  for (auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool QElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

QElem& QElem::operator+=(const QElem& b) {
  if (c_.empty()) return *this = b;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  return *this;
}

QElem& QElem::operator-=(const QElem& b) {
  if (c_.empty()) return *this = -b;
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
  return *this;
}

QElem& QElem::operator*=(const QElem& b) { return *this = *this * b; }

QElem& QElem::operator*=(const Q& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

QElem operator*(const QElem& a, const QElem& b) {
  int d = a.mod_->degree();
  if (d == 1) {
    QElem r(a.mod_);
    r.c_[0] = a.c_[0] * b.c_[0];
    return r;
  }
  std::vector<Q> prod(2 * d - 1);
  for (int i = 0; i < d; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (int j = 0; j < d; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      prod[i + j] += a.c_[i] * b.c_[j];
    }
  }
  QElem r(a.mod_);
  r.c_ = reduce_vec(std::move(prod), *a.mod_);
  return r;
}

QElem operator-(QElem a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

QElem QElem::inverse() const {
  if (mod_->degree() == 1) {
    if (sgn(c_[0]) == 0) throw ArithmeticError("non-unit in quotient ring");
    return QElem(mod_, Q(1 / c_[0]));
  }
  Bezout b = poly_xgcd(representative(), mod_->poly());
  if (b.g.degree() != 0) throw ArithmeticError("non-unit in quotient ring");
  return QElem(mod_, b.s);
}

Q QElem::trace() const {
  Q t = 0;
  const auto& ps = mod_->power_sums();
  for (std::size_t i = 0; i < c_.size(); ++i) t += c_[i] * ps[i];
  return t;
}

Q sum_over_roots(const PolynomialQ& num, const PolynomialQ& den, const PolynomialQ& modulus) {
  ModulusPtr m = make_modulus(modulus);
  QElem d(m, den);
  QElem dinv;
  try {
    dinv = d.inverse();
  } catch (const ArithmeticError&) {
    throw ArithmeticError("pole at root");
  }
  return (QElem(m, num) * dinv).trace();
}

}  // namespace trv
