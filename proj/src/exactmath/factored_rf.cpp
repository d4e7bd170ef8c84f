#include "trvoros/exactmath/factored_rf.hpp"

#include <algorithm>
#include <stdexcept>

namespace trv {

void FactorBase::absorb(const PolynomialQ& p) {
  for (auto& [f, k] : squarefree_decomposition(p)) add_squarefree(f);
}

void FactorBase::add_squarefree(PolynomialQ p) {
  p = monic(p);
  for (std::size_t i = 0; i < f_.size() && p.degree() > 0; ++i) {
    PolynomialQ g = poly_gcd(p, f_[i]);
    if (g.degree() <= 0) continue;
    PolynomialQ rest_b = exact_div(f_[i], g);
    PolynomialQ rest_p = exact_div(p, g);
    f_[i] = g;
    if (rest_b.degree() > 0) f_.push_back(monic(rest_b));
    p = monic(rest_p);
  }
  if (p.degree() > 0) f_.push_back(p);
}

FactoredRF::FactoredRF(FactorBasePtr base, const PolynomialQ& num)
    : base_(std::move(base)), num_(num), e_(base_->size(), 0) {}

FactoredRF::FactoredRF(FactorBasePtr base, const RationalFunctionQ& f) : FactoredRF(base, f.num()) {
  FactoredRF d(base_, f.den());
  *this = *this * d.inverse();
}

namespace {

PolynomialQ factor_pow(const FactorBase& b, int i, int e) { return poly_pow(b.factors()[i], e); }

}  // namespace

FactoredRF operator+(const FactoredRF& a, const FactoredRF& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  FactoredRF r(a.base_, PolynomialQ());
  PolynomialQ na = a.num_, nb = b.num_;
  for (std::size_t i = 0; i < a.e_.size(); ++i) {
    int m = std::max(a.e_[i], b.e_[i]);
    r.e_[i] = m;
    if (a.e_[i] < m) na *= factor_pow(*a.base_, static_cast<int>(i), m - a.e_[i]);
    if (b.e_[i] < m) nb *= factor_pow(*a.base_, static_cast<int>(i), m - b.e_[i]);
  }
  r.num_ = na + nb;
  return r;
}

FactoredRF operator*(const FactoredRF& a, const FactoredRF& b) {
  FactoredRF r(a.base_, a.num_ * b.num_);
  if (r.num_.is_zero_poly()) return r;
  for (std::size_t i = 0; i < a.e_.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

FactoredRF operator*(const Q& s, const FactoredRF& a) {
  FactoredRF r = a;
  r.num_ = r.num_ * s;
  return r;
}

// (N / prod b^e)' = (N' prod b - N sum_i e_i b_i' prod_{j != i} b_j) / (prod b^e * prod_{e_j > 0} b_j)
FactoredRF FactoredRF::derivative() const {
  FactoredRF r(base_, PolynomialQ());
  if (is_zero()) return r;
  const auto& fs = base_->factors();
  std::vector<int> act;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] > 0) act.push_back(static_cast<int>(i));
  PolynomialQ all = poly_from({1});
  for (int i : act) all *= fs[i];
  PolynomialQ n = num_.derivative() * all;
  for (int i : act) {
    PolynomialQ others = exact_div(all, fs[i]);
    n -= num_ * fs[i].derivative() * others * Q(e_[i]);
  }
  r.num_ = n;
  r.e_ = e_;
  for (int i : act) r.e_[i] += 1;
  return r.reduced();
}

FactoredRF FactoredRF::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  FactoredRF r(base_, PolynomialQ());
  PolynomialQ n = num_;
  std::vector<int> f(e_.size(), 0);
  const auto& fs = base_->factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    while (n.degree() >= fs[i].degree()) {
      auto [q, rem] = divmod(n, fs[i]);
      if (!rem.is_zero_poly()) break;
      n = q;
      ++f[i];
    }
  }
  if (n.degree() != 0) throw ArithmeticError("inverse: numerator does not factor over the base");
  // 1 / (c prod b^f / prod b^e) = prod b^e / (c prod b^f)
  PolynomialQ num(std::vector<Q>{Q(1) / n.c[0]});
  for (std::size_t i = 0; i < fs.size(); ++i)
    if (e_[i] > 0) num *= poly_pow(fs[i], e_[i]);
  r.num_ = num;
  r.e_ = f;
  return r;
}

FactoredRF FactoredRF::reduced() const {
  FactoredRF r = *this;
  if (r.is_zero()) {
    std::fill(r.e_.begin(), r.e_.end(), 0);
    return r;
  }
  const auto& fs = base_->factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    while (r.e_[i] > 0) {
      auto [q, rem] = divmod(r.num_, fs[i]);
      if (!rem.is_zero_poly()) break;
      r.num_ = q;
      --r.e_[i];
    }
  }
  return r;
}

RationalFunctionQ FactoredRF::to_rf() const {
  FactoredRF r = reduced();
  PolynomialQ den = poly_from({1});
  for (std::size_t i = 0; i < r.e_.size(); ++i)
    if (r.e_[i] > 0) den *= poly_pow(base_->factors()[i], r.e_[i]);
  return RationalFunctionQ::from_coprime(r.num_, den);
}

bool operator==(const FactoredRF& a, const FactoredRF& b) { return (a - b).is_zero(); }

}  // namespace trv
