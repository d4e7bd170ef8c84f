#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trvoros/exactmath/quotient_ring.hpp"
#include "trvoros/exactmath/rational_function.hpp"

namespace trv {

enum class CurveTag { Curve14, Curve23, Custom };

struct UnknownCurveError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string tag_name(CurveTag tag);
// Accepts "(1,4)", "1,4", "14" and the (2,3) analogues.
CurveTag parse_curve_tag(const std::string& s);

struct CurveParams {
  Q lambda = 1;
  Q t = 1;
  Q nu = Q(1, 2);
};

// Polynomial in (x, y): key (i, j) is the coefficient of x^i y^j.
using BivariatePoly = std::map<std::pair<int, int>, Q>;
std::string to_string(const BivariatePoly& p);

struct SpectralCurve {
  RationalFunctionQ x, y;
  CurveParams params;
  CurveTag tag = CurveTag::Custom;
  // d x / d lambda at fixed z (zero for custom curves).
  RationalFunctionQ x_lambda;
};

SpectralCurve make_curve14(const CurveParams& p);
SpectralCurve make_curve23(const CurveParams& p);
SpectralCurve make_curve(CurveTag tag, const CurveParams& p);
SpectralCurve make_custom(const RationalFunctionQ& x, const RationalFunctionQ& y, const CurveParams& p);

// Squarefree part of the numerator of dx/dz, made monic. Its roots are the
// zeros of dx (in the finite plane).
PolynomialQ turning_polynomial(const SpectralCurve& c);

// P(x, y) with P(x(z), y(z)) = 0; only y = z is supported. Presets carry the
// printed normalization; otherwise the top power of y has a positive coefficient.
BivariatePoly defining_polynomial(const SpectralCurve& c);

enum class RamificationKind { SimpleZeroOfDx, HighOrderPoleOfX };

struct PointRef {
  enum Kind { Finite, Infinity, ConjugateClass } kind = Finite;
  Q value;           // Finite
  PolynomialQ modulus;  // ConjugateClass (monic, squarefree)
  std::string str() const;
};

struct RamificationPoint {
  RamificationKind kind;
  PointRef where;
  int order = 0;  // zero order of dx, or pole order of x
  std::optional<bool> effective;  // filled in by the recursion
};

// Throws "degenerate parameters" when the turning polynomial is not squarefree.
std::vector<RamificationPoint> ramification_points(const SpectralCurve& c);

struct AssumptionCheck {
  bool pass = true;
  std::string witness;
};
struct AssumptionReport {
  AssumptionCheck a1, a2, a3, a4;
  bool all_pass() const { return a1.pass && a2.pass && a3.pass && a4.pass; }
};
AssumptionReport check_assumptions(const SpectralCurve& c);

struct DivisorEndpoint {
  PointRef where;
  Q weight;
};
struct DivisorSpec {
  std::vector<DivisorEndpoint> endpoints;
};
// (0, 1 - nu) and (infinity, nu) for the two presets; throws "divisor required".
DivisorSpec divisor_for(const SpectralCurve& c);

}  // namespace trv
