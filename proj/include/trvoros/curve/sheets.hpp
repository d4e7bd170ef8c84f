#pragma once

#include <optional>

#include "trvoros/curve/spectral_curve.hpp"
#include "trvoros/exactmath/series.hpp"

namespace trv {

using QSeries = TruncatedSeries<QElem>;

// Local coordinate u at a ramification point: z = rho + u (rho a root of
// the modulus) or z = 1/u at infinity.
struct LocalChart {
  enum Kind { Finite, Infinity } kind = Finite;
  ModulusPtr mod;
  QElem base;  // rho; unused at infinity

  QElem zero() const { return QElem(mod); }
  // Chart coordinate w (a series in u) mapped to the z-value, as a Laurent series.
  QSeries z_value(const QSeries& w) const;
  // dz/dw evaluated along w.
  QSeries dz_dw(const QSeries& w) const;
  // The identity coordinate u, known through u^(prec-1).
  QSeries u(int prec) const;
};

LocalChart chart_for(const RamificationPoint& r);

struct CompanionSheets {
  QSeries theta1;                // local deck partner, chart coordinate
  std::optional<QSeries> theta2;  // remaining preimage when it stays in the chart
};

// Preimages of x(z) near the base point, in the chart coordinate, correct
// through u^(order-1). Throws when the base is not a simple ramification.
CompanionSheets companion_sheets(const SpectralCurve& c, const LocalChart& chart, int order);

}  // namespace trv
