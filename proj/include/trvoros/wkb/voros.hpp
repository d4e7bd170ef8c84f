#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trvoros/exactmath/ball.hpp"
#include "trvoros/wkb/riccati.hpp"

namespace trv {

// The integration path: the positive real z-axis from 0 to infinity.
inline constexpr const char* kVorosPath = "z: 0 -> +infinity along the positive real axis";

// int_0^infinity f(z) dz when f has a rational primitive; nullopt when a
// logarithmic part survives. Throws on divergence at an endpoint or a pole
// on the positive axis.
std::optional<Q> integrate_exact(const RationalFunctionQ& f);

struct QuadratureResult {
  BallComplex value;
  Real error_estimate;  // difference between the last two step sizes
  int levels = 0;
};

// Double-exponential quadrature on (0, infinity); throws when f has a pole
// on the positive axis.
QuadratureResult integrate_ball(const RationalFunctionQ& f, int prec);

// Number of distinct roots of a squarefree polynomial in (0, infinity), by Sturm sequences.
int positive_root_count(const PolynomialQ& p);

enum class VorosMode { Exact, Ball };

struct VorosTerm {
  int m = 0;
  VorosMode mode = VorosMode::Exact;
  std::optional<Q> exact;
  std::optional<BallComplex> ball;
  Real error_estimate;
};

struct VorosData {
  std::vector<VorosTerm> terms;  // m = 1..M
  std::string path = kVorosPath;
};

// V_m = int S_m dx for m = 1..M. Exact first; `force_ball` skips it.
VorosData voros_from_riccati(const WkbSeries& w, int M, bool force_ball = false, int prec = 0);

// d^k V_m / d lambda^k for k = 0..K (exact; requires the logarithmic parts to vanish).
std::vector<Q> voros_lambda_derivatives(const WkbSeries& w, int m);

// d^2 V_{-1} / d lambda^2 = int d^2 S_{-1} dx and d V_0 / d lambda = int d S_0 dx,
// lambda-derivatives taken at fixed x. Needs K >= 2.
struct Regularization {
  Q d2_v_minus1;
  Q d_v0;
};
Regularization voros_regularization(const LambdaFamily& fam, const WkbSeries& w);

}  // namespace trv
