#pragma once

#include <map>
#include <vector>

#include "trvoros/exactmath/polynomial.hpp"

namespace trv {

// Sparse multivariate polynomial over Q in a fixed number of variables.
class MPoly {
 public:
  using Exponent = std::vector<int>;

  explicit MPoly(int nvars = 0) : n_(nvars) {}
  static MPoly constant(int nvars, const Q& c) {
    MPoly r(nvars);
    if (sgn(c) != 0) r.t_[Exponent(nvars, 0)] = c;
    return r;
  }
  static MPoly var(int nvars, int i) {
    MPoly r(nvars);
    Exponent e(nvars, 0);
    e[i] = 1;
    r.t_[e] = 1;
    return r;
  }
  // Univariate p placed in variable i.
  static MPoly from_univariate(int nvars, int i, const PolynomialQ& p) {
    MPoly r(nvars);
    for (int k = 0; k <= p.degree(); ++k) {
      if (sgn(p.c[k]) == 0) continue;
      Exponent e(nvars, 0);
      e[i] = k;
      r.t_[e] = p.c[k];
    }
    return r;
  }

  int nvars() const { return n_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<Exponent, Q>& terms() const { return t_; }

  friend MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.t_) a.add_term(e, c);
    return a;
  }
  friend MPoly operator-(MPoly a, const MPoly& b) {
    for (const auto& [e, c] : b.t_) a.add_term(e, -c);
    return a;
  }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(a.n_);
    for (const auto& [ea, ca] : a.t_)
      for (const auto& [eb, cb] : b.t_) {
        Exponent e(a.n_);
        for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    return r;
  }
  friend MPoly operator*(MPoly a, const Q& s) {
    if (sgn(s) == 0) return MPoly(a.n_);
    for (auto& [e, c] : a.t_) c *= s;
    return a;
  }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }

  MPoly pow(int k) const {
    MPoly r = constant(n_, Q(1));
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  Q eval(const std::vector<Q>& x) const {
    Q s = 0;
    for (const auto& [e, c] : t_) {
      Q m = c;
      for (int i = 0; i < n_; ++i)
        for (int k = 0; k < e[i]; ++k) m *= x[i];
      s += m;
    }
    return s;
  }

 private:
  void add_term(const Exponent& e, const Q& c) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      if (sgn(c) != 0) t_.emplace(e, c);
      return;
    }
    it->second += c;
    if (sgn(it->second) == 0) t_.erase(it);
  }
  int n_;
  std::map<Exponent, Q> t_;
};

}  // namespace trv
