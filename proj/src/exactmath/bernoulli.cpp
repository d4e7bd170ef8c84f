#include "trvoros/exactmath/bernoulli.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

#include "trvoros/exactmath/series.hpp"

namespace trv {

namespace {

// Taylor coefficients of w/(e^w - 1), computed by inverting (e^w - 1)/w.
std::vector<Q> bernoulli_table(int n) {
  std::vector<Q> c;
  Q f = 1;
  for (int k = 0; k <= n; ++k) {
    f /= (k + 1);
    c.push_back(f);  // 1/(k+1)!
  }
  auto inv = TruncatedSeries<Q>(Q(0), 0, n + 1, c).inverse();
  std::vector<Q> out;
  Q fact = 1;
  for (int k = 0; k <= n; ++k) {
    if (k > 0) fact *= k;
    out.push_back(inv.coeff(k) * fact);
  }
  return out;
}

}  // namespace

Q bernoulli_number(int n) {
  if (n < 0) throw std::invalid_argument("bernoulli_number: negative index");
  static std::mutex mu;
  static std::vector<Q> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= n) cache = bernoulli_table(std::max(2 * n, 32));
  return cache[n];
}

PolynomialQ bernoulli_polynomial(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli_polynomial: negative index");
  std::vector<Q> c(m + 1);
  for (int k = 0; k <= m; ++k) c[m - k] = binomial(m, k) * bernoulli_number(k);
  return PolynomialQ(c);
}

}  // namespace trv
