#pragma once

#include <vector>

#include "trvoros/exactmath/series.hpp"

namespace trv {

// Polynomial in theta whose coefficients are power series in u.
template <class R>
using SeriesPoly = std::vector<TruncatedSeries<R>>;

template <class R>
TruncatedSeries<R> eval_series_poly(const SeriesPoly<R>& eq, const TruncatedSeries<R>& theta) {
  TruncatedSeries<R> r(theta.zero(), kExactPrec);
  for (int i = static_cast<int>(eq.size()) - 1; i >= 0; --i) r = r * theta + eq[i];
  return r;
}

template <class R>
SeriesPoly<R> derivative(const SeriesPoly<R>& eq) {
  SeriesPoly<R> d;
  for (std::size_t i = 1; i < eq.size(); ++i) d.push_back(eq[i] * scalar_of(eq[i].zero(), Q(static_cast<long>(i))));
  return d;
}

// Root theta(u) of eq with theta(0) = seed, correct through u^{order-1}.
template <class R>
TruncatedSeries<R> newton_root_series(const SeriesPoly<R>& eq, const R& seed, int order) {
  SeriesPoly<R> f, df;
  for (auto& s : eq) f.push_back(s.truncated(order));
  df = derivative(f);
  auto exact = [](const TruncatedSeries<R>& s, int prec) {
    std::vector<R> c;
    for (int e = 0; e < prec; ++e) c.push_back(s.coeff(e));
    return TruncatedSeries<R>(s.zero(), 0, kExactPrec, std::move(c));
  };
  TruncatedSeries<R> theta(zero_of(seed), 0, kExactPrec, {seed});
  TruncatedSeries<R> d0 = eval_series_poly(df, theta).truncated(1);
  if (d0.is_known_zero() || d0.val() != 0) throw ArithmeticError("non-simple root; use quadratic/Puiseux path");
  try {
    (void)trv::inverse(d0.lead());
  } catch (const ArithmeticError&) {
    throw ArithmeticError("non-simple root; use quadratic/Puiseux path");
  }
  int prec = 1;
  while (prec < order) {
    int next = std::min(order, 2 * prec);
    TruncatedSeries<R> val = eval_series_poly(f, theta).truncated(next);
    TruncatedSeries<R> der = eval_series_poly(df, theta).truncated(next);
    theta = exact(theta - val / der, next);
    prec = next;
  }
  TruncatedSeries<R> check = eval_series_poly(f, theta).truncated(order);
  if (!check.is_known_zero()) throw ArithmeticError("newton_root_series: seed is not a root");
  return theta.truncated(order);
}

}  // namespace trv
