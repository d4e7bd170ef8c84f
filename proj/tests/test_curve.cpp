#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "trvoros/curve/curve_json.hpp"
#include "trvoros/curve/newton_polygon.hpp"
#include "trvoros/curve/sheets.hpp"
#include "trvoros/curve/spectral_curve.hpp"

using namespace trv;

namespace {

PolynomialQ P(std::vector<Q> c) { return PolynomialQ(std::move(c)); }

const RamificationPoint* find_kind(const std::vector<RamificationPoint>& rs, RamificationKind k) {
  for (const auto& r : rs)
    if (r.kind == k) return &r;
  return nullptr;
}

SpectralCurve airy() { return make_custom(RationalFunctionQ(P({0, 0, 1})), rf_z(), CurveParams{}); }

// x(theta(u)) - x(z(u)) as a series in the chart coordinate.
QSeries fiber_defect(const SpectralCurve& c, const LocalChart& ch, const QSeries& theta, int order) {
  auto x_at = [&](const QSeries& w) {
    QSeries z = ch.z_value(w);
    return poly_at_series(c.x.num(), z) / poly_at_series(c.x.den(), z);
  };
  return (x_at(theta) - x_at(ch.u(order + 4))).truncated(order);
}

}  // namespace

TEST_CASE("preset parametrizations") {
  CurveParams p{Q(5, 3), Q(7, 2), Q(1, 3)};
  SpectralCurve c14 = make_curve14(p);
  CHECK(c14.x == RationalFunctionQ(P({p.lambda, 0, -2 * p.t, -3}), poly_x()));
  CHECK(c14.y == rf_z());
  SpectralCurve c23 = make_curve23(p);
  CHECK(c23.x == RationalFunctionQ(P({-p.t / 2, p.lambda, 0, 2}), P({0, 0, 1})));
  CHECK(parse_curve_tag("(1,4)") == CurveTag::Curve14);
  CHECK(parse_curve_tag("(2,3)") == CurveTag::Curve23);
  CHECK_THROWS_AS(parse_curve_tag("(3,3)"), UnknownCurveError);
}

TEST_CASE("ramification points") {
  SpectralCurve c14 = make_curve14({1, 1, Q(1, 2)});
  auto r14 = ramification_points(c14);
  const auto* turn = find_kind(r14, RamificationKind::SimpleZeroOfDx);
  REQUIRE(turn);
  CHECK(turn->where.kind == PointRef::ConjugateClass);
  CHECK(turn->where.modulus == monic(P({1, 0, 2, 6})));
  const auto* pole = find_kind(r14, RamificationKind::HighOrderPoleOfX);
  REQUIRE(pole);
  CHECK(pole->where.kind == PointRef::Infinity);
  CHECK(pole->order == 2);

  SpectralCurve c23 = make_curve23({1, 1, Q(1, 2)});
  auto r23 = ramification_points(c23);
  turn = find_kind(r23, RamificationKind::SimpleZeroOfDx);
  REQUIRE(turn);
  CHECK(turn->where.modulus == monic(P({1, -1, 0, 2})));
  pole = find_kind(r23, RamificationKind::HighOrderPoleOfX);
  REQUIRE(pole);
  CHECK(pole->where.kind == PointRef::Finite);
  CHECK(pole->where.value == 0);
  CHECK(pole->order == 2);

  auto ra = ramification_points(airy());
  CHECK(ra.size() == 2);
  const auto* az = find_kind(ra, RamificationKind::SimpleZeroOfDx);
  REQUIRE(az);
  bool at_zero = (az->where.kind == PointRef::Finite && az->where.value == 0) ||
                 (az->where.kind == PointRef::ConjugateClass && az->where.modulus == poly_x());
  CHECK(at_zero);
  CHECK(find_kind(ra, RamificationKind::HighOrderPoleOfX)->where.kind == PointRef::Infinity);
}

TEST_CASE("assumption checks") {
  CHECK(check_assumptions(make_curve14({1, 1, Q(1, 2)})).all_pass());
  CHECK(check_assumptions(make_curve23({1, 1, Q(1, 2)})).all_pass());
  CHECK(check_assumptions(make_curve14({Q(5, 3), Q(7, 2), Q(1, 3)})).all_pass());
  CHECK(check_assumptions(airy()).all_pass());
  // disc(6z^3 + 2t z^2 + lambda) = 0 at lambda = -8t^3/243; t = 3 gives lambda = -8/9.
  SpectralCurve bad = make_curve14({Q(-8, 9), Q(3), Q(1, 2)});
  CHECK_THROWS(ramification_points(bad));
  AssumptionReport rep = check_assumptions(bad);
  CHECK_FALSE(rep.all_pass());
  CHECK((!rep.a3.pass || !rep.a4.pass));
}

TEST_CASE("Newton polygons and admissibility") {
  SpectralCurve c14 = make_curve14({1, 1, Q(1, 2)});
  BivariatePoly p14 = defining_polynomial(c14);
  CHECK(p14 == BivariatePoly{{{0, 3}, 3}, {{0, 2}, 2}, {{1, 1}, 1}, {{0, 0}, -1}});
  NewtonPolygonData n14 = newton_polygon(p14);
  std::set<LatticePoint> hull14(n14.hull.begin(), n14.hull.end());
  CHECK(hull14 == std::set<LatticePoint>{{0, 0}, {1, 1}, {0, 3}});
  REQUIRE(n14.alpha.size() >= 4);
  for (int m = 0; m < 4; ++m) CHECK(n14.alpha[m] == Q(0));
  LatticeCounts lc = lattice_counts(n14);
  CHECK(lc.twice_area == 3);
  CHECK(lc.boundary == 5);
  CHECK(lc.interior == 0);
  CHECK(is_admissible(n14, p14));

  SpectralCurve c23 = make_curve23({1, 1, Q(1, 2)});
  BivariatePoly p23 = defining_polynomial(c23);
  CHECK(p23 == BivariatePoly{{{0, 3}, 4}, {{1, 2}, -2}, {{0, 1}, 2}, {{0, 0}, -1}});
  NewtonPolygonData n23 = newton_polygon(p23);
  for (int m = 0; m < 4; ++m) CHECK(n23.alpha[m] == Q(0));
  CHECK(is_admissible(n23, p23));

  BivariatePoly just_y{{{0, 1}, 1}};
  NewtonPolygonData ny = newton_polygon(just_y);
  CHECK(ny.hull.size() == 1);
  CHECK(ny.alpha[1] == Q(0));

  BivariatePoly tri{{{0, 0}, 1}, {{3, 0}, 1}, {{0, 3}, 1}};
  CHECK_FALSE(is_admissible(newton_polygon(tri), tri));

  // alpha is invariant under scaling P
  BivariatePoly scaled = p14;
  for (auto& [k, v] : scaled) v *= Q(-7, 2);
  CHECK(newton_polygon(scaled).alpha == n14.alpha);
}

TEST_CASE("divisors") {
  for (Q nu : {Q(1, 2), Q(0), Q(2, 7), Q(-3, 5)}) {
    DivisorSpec d = divisor_for(make_curve14({1, 1, nu}));
    Q total = 0;
    for (const auto& e : d.endpoints) {
      total += e.weight;
      if (e.where.kind == PointRef::Infinity) CHECK(e.weight == nu);
      else CHECK(e.weight == 1 - nu);
    }
    CHECK(total == 1);
  }
  CHECK_THROWS(divisor_for(airy()));
}

TEST_CASE("companion sheets") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23}) {
    SpectralCurve c = make_curve(tag, {1, 1, Q(1, 2)});
    auto rs = ramification_points(c);
    const auto* turn = find_kind(rs, RamificationKind::SimpleZeroOfDx);
    REQUIRE(turn);
    LocalChart ch = chart_for(*turn);
    const int order = 8;
    CompanionSheets s = companion_sheets(c, ch, order);
    CHECK(fiber_defect(c, ch, s.theta1, order).is_known_zero());
    REQUIRE(s.theta2);
    CHECK(fiber_defect(c, ch, *s.theta2, order).is_known_zero());
    // deck partner: theta1 = -u + O(u^2) at a simple ramification point
    CHECK(s.theta1.coeff(0).is_zero());
    CHECK(s.theta1.coeff(1) == QElem(ch.mod, Q(-1)));
    CHECK_FALSE(s.theta2->coeff(0).is_zero());
    // raising the order keeps the known coefficients
    CompanionSheets t = companion_sheets(c, ch, order + 4);
    for (int e = 0; e < order; ++e) CHECK(t.theta1.coeff(e) == s.theta1.coeff(e));
  }
  SpectralCurve a = airy();
  auto ra = ramification_points(a);
  const auto* turn = find_kind(ra, RamificationKind::SimpleZeroOfDx);
  LocalChart ch = chart_for(*turn);
  CompanionSheets s = companion_sheets(a, ch, 6);
  CHECK(s.theta1.coeff(1) == QElem(ch.mod, Q(-1)));
  for (int e = 2; e < 6; ++e) CHECK(s.theta1.coeff(e).is_zero());
  CHECK_FALSE(s.theta2);
}

TEST_CASE("custom curves from JSON") {
  auto doc = nlohmann::json::parse(R"({"x_num": {"0": "5/3", "2": "-7", "3": -3}, "x_den": {"1": 1},
                                       "y_num": {"1": 1}, "params": {"lambda": "5/3", "t": "7/2", "nu": "1/3"}})");
  SpectralCurve c = curve_from_json(doc);
  SpectralCurve preset = make_curve14({Q(5, 3), Q(7, 2), Q(1, 3)});
  CHECK(c.tag == CurveTag::Custom);
  CHECK(c.x == preset.x);
  CHECK(c.y == preset.y);
  CHECK(c.params.nu == Q(1, 3));
  CHECK(turning_polynomial(c) == turning_polynomial(preset));
  CHECK_THROWS_WITH(divisor_for(c), "divisor required");

  SpectralCurve a = curve_from_json(nlohmann::json::parse(R"({"x_num": {"2": 1}, "y_num": {"1": 1}})"));
  CHECK(a.x == airy().x);
  CHECK(a.params.lambda == 1);

  for (const char* bad : {R"([1, 2])", R"({"y_num": {"1": 1}})", R"({"x_num": {"a": 1}, "y_num": {"1": 1}})",
                          R"({"x_num": {"-1": 1}, "y_num": {"1": 1}})", R"({"x_num": {"0": 0}, "y_num": {"1": 1}})",
                          R"({"x_num": {"2": 1.5}, "y_num": {"1": 1}})", R"({"x_num": [1], "y_num": {"1": 1}})"})
    CHECK_THROWS_AS(curve_from_json(nlohmann::json::parse(bad)), InvalidCurveDocument);
  CHECK_THROWS_AS(curve_from_json(nlohmann::json::parse(R"({"x_num": {"2": "1/0"}, "y_num": {"1": 1}})")),
                  InvalidRationalError);
}
