#pragma once

#include <memory>
#include <vector>

#include "trvoros/exactmath/rational_function.hpp"

namespace trv {

// Pairwise coprime squarefree polynomials; denominators are products of their powers.
class FactorBase {
 public:
  // Refines the base so every squarefree factor of p is a product of base elements.
  void absorb(const PolynomialQ& p);
  const std::vector<PolynomialQ>& factors() const { return f_; }
  int size() const { return static_cast<int>(f_.size()); }

 private:
  void add_squarefree(PolynomialQ p);
  std::vector<PolynomialQ> f_;
};

using FactorBasePtr = std::shared_ptr<const FactorBase>;

// num / prod_i base_i^e_i, without gcd normalization.
class FactoredRF {
 public:
  FactoredRF() = default;
  FactoredRF(FactorBasePtr base, const PolynomialQ& num);
  // Throws when the denominator does not factor over the base.
  FactoredRF(FactorBasePtr base, const RationalFunctionQ& f);

  const FactorBasePtr& base() const { return base_; }
  const PolynomialQ& num() const { return num_; }
  const std::vector<int>& exps() const { return e_; }
  bool is_zero() const { return num_.is_zero_poly(); }

  friend FactoredRF operator+(const FactoredRF& a, const FactoredRF& b);
  friend FactoredRF operator-(const FactoredRF& a) {
    FactoredRF r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend FactoredRF operator-(const FactoredRF& a, const FactoredRF& b) { return a + (-b); }
  friend FactoredRF operator*(const FactoredRF& a, const FactoredRF& b);
  friend FactoredRF operator*(const Q& s, const FactoredRF& a);
  FactoredRF& operator+=(const FactoredRF& b) { return *this = *this + b; }

  FactoredRF derivative() const;
  // Throws unless the numerator is a constant times base powers.
  FactoredRF inverse() const;
  // Cancels base factors dividing the numerator.
  FactoredRF reduced() const;
  RationalFunctionQ to_rf() const;
  friend bool operator==(const FactoredRF& a, const FactoredRF& b);

 private:
  FactorBasePtr base_;
  PolynomialQ num_;
  std::vector<int> e_;
};

}  // namespace trv
