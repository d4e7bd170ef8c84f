#include "trvoros/curve/newton_polygon.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace trv {

namespace {

long cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return static_cast<long>(a.first - o.first) * (b.second - o.second) -
         static_cast<long>(a.second - o.second) * (b.first - o.first);
}

}  // namespace

NewtonPolygonData newton_polygon(const BivariatePoly& P) {
  NewtonPolygonData d;
  for (const auto& [ij, c] : P)
    if (sgn(c) != 0) d.support.push_back(ij);
  if (d.support.empty()) throw std::invalid_argument("newton_polygon: zero polynomial");
  std::vector<LatticePoint> pts = d.support;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Andrew's monotone chain.
  if (pts.size() <= 2) {
    d.hull = pts;
  } else {
    std::vector<LatticePoint> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
      while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
      h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
      while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
      h[k++] = pts[i];
    }
    h.resize(k - 1);
    d.hull = h;
  }
  int ymax = 0;
  for (const auto& p : d.support) ymax = std::max(ymax, p.second);
  d.alpha.assign(ymax + 1, std::nullopt);
  // Leftmost intersection of each horizontal line with the hull edges.
  std::vector<LatticePoint> poly = d.hull;
  for (int m = 0; m <= ymax; ++m) {
    std::optional<Q> best;
    auto consider = [&](const Q& a) {
      if (!best || a < *best) best = a;
    };
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& p = poly[i];
      const auto& q = poly[(i + 1) % poly.size()];
      if (p.second == m) consider(Q(p.first));
      if ((p.second - m) * (q.second - m) < 0) {
        // p + s (q - p) with s = (m - p.y) / (q.y - p.y)
        Q s(m - p.second, q.second - p.second);
        s.canonicalize();
        consider(Q(p.first) + s * (q.first - p.first));
      }
    }
    d.alpha[m] = best;
  }
  return d;
}

LatticeCounts lattice_counts(const NewtonPolygonData& poly) {
  LatticeCounts c;
  const auto& h = poly.hull;
  if (h.size() < 3) {
    if (h.size() == 2) c.boundary = std::gcd(std::abs(h[1].first - h[0].first), std::abs(h[1].second - h[0].second)) + 1;
    else c.boundary = static_cast<long>(h.size());
    return c;
  }
  long a2 = 0, b = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const auto& p = h[i];
    const auto& q = h[(i + 1) % h.size()];
    a2 += static_cast<long>(p.first) * q.second - static_cast<long>(q.first) * p.second;
    b += std::gcd(std::abs(q.first - p.first), std::abs(q.second - p.second));
  }
  c.twice_area = std::abs(a2);
  c.boundary = b;
  // Pick: A = I + B/2 - 1
  c.interior = (c.twice_area - b + 2) / 2;
  return c;
}

bool is_admissible(const NewtonPolygonData& poly, const BivariatePoly& P) {
  if (lattice_counts(poly).interior != 0) return false;
  auto coef = [&](int i, int j) {
    auto it = P.find({i, j});
    return it == P.end() ? Q(0) : it->second;
  };
  if (sgn(coef(0, 0)) == 0) return sgn(coef(1, 0)) != 0 || sgn(coef(0, 1)) != 0;
  return true;
}

}  // namespace trv
