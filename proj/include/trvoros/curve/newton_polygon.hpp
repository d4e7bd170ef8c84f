#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "trvoros/curve/spectral_curve.hpp"

namespace trv {

using LatticePoint = std::pair<int, int>;

struct NewtonPolygonData {
  std::vector<LatticePoint> support;
  // Counter-clockwise hull vertices (collinear points removed).
  std::vector<LatticePoint> hull;
  // alpha[m] = inf{a : (a, m) in hull}, empty when the line y = m misses it.
  std::vector<std::optional<Q>> alpha;
};

NewtonPolygonData newton_polygon(const BivariatePoly& P);
// Twice the hull area, boundary and interior lattice point counts.
struct LatticeCounts {
  long twice_area = 0;
  long boundary = 0;
  long interior = 0;
};
LatticeCounts lattice_counts(const NewtonPolygonData& poly);
bool is_admissible(const NewtonPolygonData& poly, const BivariatePoly& P);

}  // namespace trv
