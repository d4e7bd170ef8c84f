#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trvoros/curve/curve_json.hpp"
#include "trvoros/curve/newton_polygon.hpp"
#include "trvoros/recursion/correlation.hpp"
#include "trvoros/recursion/free_energy.hpp"
#include "trvoros/verify/verify.hpp"
#include "trvoros/wkb/hbar_series.hpp"
#include "trvoros/wkb/quantum_curve.hpp"
#include "trvoros/wkb/riccati.hpp"
#include "trvoros/wkb/voros.hpp"

using namespace trv;
using json = nlohmann::ordered_json;

namespace {

enum Exit {
  kOk = 0,
  kVerificationFailed = 1,
  kInvalidRational = 2,
  kUnknownCurve = 3,
  kCapExceeded = 4,
  kComputationError = 5,
  kInvalidCurveDocument = 6,
};

struct PointOpts {
  std::string curve = "(1,4)";
  std::string lambda = "1";
  std::string t = "1";
  std::string nu = "1/2";
  std::string custom;  // path to a curve document
};

void add_point(CLI::App* sub, PointOpts& o, bool with_nu) {
  sub->add_option("--curve", o.curve, "curve tag: (1,4) or (2,3)")->capture_default_str();
  sub->add_option("--lambda", o.lambda, "lambda_infinity as P/Q")->capture_default_str();
  sub->add_option("--t", o.t, "t as P/Q")->capture_default_str();
  if (with_nu) sub->add_option("--nu", o.nu, "nu_infinity as P/Q")->capture_default_str();
}

CurveParams params_of(const PointOpts& o) { return {parse_rational(o.lambda), parse_rational(o.t), parse_rational(o.nu)}; }

void add_custom(CLI::App* sub, PointOpts& o) {
  sub->add_option("--custom", o.custom, "JSON curve document {x_num, x_den, y_num, y_den, params}")->excludes("--curve");
}

SpectralCurve load_custom(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InvalidCurveDocument("cannot read " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(f);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidCurveDocument(path + ": " + e.what());
  }
  return curve_from_json(doc);
}

// The preset, or the custom curve when --custom was given.
SpectralCurve curve_of(const PointOpts& o) {
  return o.custom.empty() ? make_curve(parse_curve_tag(o.curve), params_of(o)) : load_custom(o.custom);
}

std::string curve_label(const PointOpts& o) { return o.custom.empty() ? o.curve : "custom"; }

json params_json(const CurveParams& p) {
  return {{"lambda", to_string(p.lambda)}, {"t", to_string(p.t)}, {"nu", to_string(p.nu)}};
}

std::string monomial_str(const std::vector<int>& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "z" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

// Numerator of a stored W as a sum of monomials in z1..zn, highest total degree first.
std::string numerator_str(const StoredW& w) {
  std::map<std::vector<int>, Q, std::greater<>> terms;
  int s = w.side();
  for (size_t idx = 0; idx < w.coef.size(); ++idx) {
    if (sgn(w.coef[idx]) == 0) continue;
    std::vector<int> e(w.n);
    size_t r = idx;
    for (int k = 0; k < w.n; ++k) {
      e[k] = static_cast<int>(r % s);
      r /= s;
    }
    terms[e] = w.coef[idx];
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Q a = abs(c);
    std::string m = monomial_str(e);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (m.empty()) os << to_string(a);
    else if (a == 1) os << m;
    else os << to_string(a) << "*" << m;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

int cmd_curve(const PointOpts& o, bool as_json) {
  SpectralCurve c = curve_of(o);
  const CurveParams& p = c.params;
  BivariatePoly P = defining_polynomial(c);
  NewtonPolygonData np = newton_polygon(P);
  LatticeCounts lc = lattice_counts(np);
  AssumptionReport ar = check_assumptions(c);
  json j;
  j["curve"] = curve_label(o);
  j["params"] = params_json(p);
  j["x"] = c.x.str();
  j["y"] = c.y.str();
  j["P"] = to_string(P);
  j["turning_polynomial"] = to_string(turning_polynomial(c));
  json hull = json::array();
  for (auto [a, b] : np.hull) hull.push_back({a, b});
  j["newton_polygon"] = {{"hull", hull}, {"interior_points", lc.interior}, {"admissible", is_admissible(np, P)}};
  json ram = json::array();
  for (const auto& r : ramification_points(c))
    ram.push_back({{"kind", r.kind == RamificationKind::SimpleZeroOfDx ? "zero of dx" : "pole of x"},
                   {"where", r.where.str()},
                   {"order", r.order}});
  j["ramification_points"] = ram;
  j["assumptions"] = {{"A1", ar.a1.pass}, {"A2", ar.a2.pass}, {"A3", ar.a3.pass}, {"A4", ar.a4.pass}};
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "x(z) = " << j["x"].get<std::string>() << "\n"
              << "y(z) = " << j["y"].get<std::string>() << "\n"
              << "P(x,y) = " << j["P"].get<std::string>() << "\n"
              << "turning polynomial: " << j["turning_polynomial"].get<std::string>() << "\n"
              << "Newton polygon interior points: " << lc.interior << "\n";
    for (const auto& r : ram) std::cout << "ramification: " << r["kind"].get<std::string>() << " at " << r["where"].get<std::string>() << "\n";
    std::cout << "assumptions A1-A4: " << (ar.all_pass() ? "pass" : "fail") << "\n";
  }
  return kOk;
}

int cmd_tr(const PointOpts& o, int g, int n, bool as_json) {
  SpectralCurve c = curve_of(o);
  const CurveParams& p = c.params;
  if (c.tag == CurveTag::Custom) {
    BivariatePoly P = defining_polynomial(c);
    if (!check_assumptions(c).all_pass()) throw InvalidCurveDocument("custom curve fails assumptions A1-A4");
    if (!is_admissible(newton_polygon(P), P)) throw InvalidCurveDocument("custom curve is not admissible");
  }
  Recursion rec(c);
  if (2 * g + n - 2 < 1) throw std::invalid_argument("tr: need 2g + n - 2 >= 1");
  StoredWPtr w = rec.W(g, n);
  std::string denom;
  for (int k = 1; k <= n; ++k) {
    std::string zk = "z" + std::to_string(k);
    std::string m = to_string(rec.turning(), zk);
    denom += (k > 1 ? " * " : "") + std::string("(") + m + ")^" + std::to_string(w->D);
  }
  std::string num = n == 1 ? to_string(w->slice({}), "z1") : numerator_str(*w);
  if (as_json) {
    json j;
    j["curve"] = curve_label(o);
    j["params"] = params_json(p);
    j["g"] = g;
    j["n"] = n;
    j["numerator"] = num;
    j["denominator"] = denom;
    j["residue_free"] = w->residue_free;
    std::cout << j.dump(2) << "\n";
  } else {
    std::string forms = n == 1 ? "dz1" : "(dz1...dz" + std::to_string(n) + ")";
    std::cout << "W_{" << g << "," << n << "} / " << forms << " =\n  (" << num << ")\n  / (" << denom << ")\n";
  }
  return kOk;
}

int cmd_free_energy(const PointOpts& o, int g, bool as_json) {
  CurveParams p = params_of(o);
  CurveTag tag = parse_curve_tag(o.curve);
  LogRationalExpr closed = free_energy_closed_form(tag, g, p);
  json j;
  j["curve"] = o.curve;
  j["params"] = params_json(p);
  j["g"] = g;
  j["closed_form"] = closed.str("lambda");
  if (g >= 2) {
    Recursion rec(make_curve(tag, p));
    FreeEnergyResidues r = free_energy(rec, g);
    j["residue_formula"] = to_string(r.value);
    j["closed_form_value"] = to_string(closed.rational().eval(p.lambda));
    j["ineffective_residue"] = to_string(r.ineffective_residue);
  }
  if (as_json) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "F_" << g << " closed form: " << j["closed_form"].get<std::string>() << "\n";
    if (g >= 2)
      std::cout << "F_" << g << " residue formula: " << j["residue_formula"].get<std::string>()
                << "  (closed form at lambda: " << j["closed_form_value"].get<std::string>() << ")\n";
  }
  return kOk;
}

int cmd_voros(const PointOpts& o, int M, const std::string& mode, bool as_json) {
  CurveParams p = params_of(o);
  CurveTag tag = parse_curve_tag(o.curve);
  if (mode != "exact" && mode != "ball") throw CLI::ValidationError("--mode", "expected exact or ball");
  if (M < 1 || M > 12) throw CapExceededError("Voros order cap exceeded: M = " + std::to_string(M));
  WkbSeries w = riccati_expand(lambda_family(tag, p, 0), M);
  VorosData v = voros_from_riccati(w, M, mode == "ball");
  HbarSeries closed = voros_closed_form(tag, p, M);
  json rows = json::array();
  for (const auto& t : v.terms) {
    json r;
    r["m"] = t.m;
    r["mode"] = t.mode == VorosMode::Exact ? "exact" : "ball";
    if (t.exact) r["value"] = to_string(*t.exact);
    if (t.ball) {
      r["value"] = t.ball->str(40);
      r["radius"] = t.ball->rad().str(6);
    }
    r["closed_form"] = to_string(closed.coeff(t.m).rational().eval(p.lambda));
    rows.push_back(r);
  }
  if (as_json) {
    json j;
    j["curve"] = o.curve;
    j["params"] = params_json(p);
    j["path"] = v.path;
    j["terms"] = rows;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "path: " << v.path << "\n";
    for (const auto& r : rows)
      std::cout << "V_" << r["m"].get<int>() << " = " << r["value"].get<std::string>() << "  [" << r["mode"].get<std::string>()
                << "; closed form " << r["closed_form"].get<std::string>() << "]\n";
  }
  return kOk;
}

int cmd_quantize(const PointOpts& o, bool as_json) {
  CurveParams p = params_of(o);
  CurveTag tag = parse_curve_tag(o.curve);
  QuantumCurve a = assemble_quantum_curve(make_curve(tag, p));
  QuantumCurve pr = preset_quantum_curve(tag, p);
  bool same = same_operator(a, pr);
  if (as_json) {
    json j;
    j["curve"] = o.curve;
    j["params"] = params_json(p);
    j["assembled"] = a.str();
    j["operator"] = a.op().str();
    j["C1"] = to_string(a.C1);
    j["C2"] = to_string(a.C2);
    j["matches_preset"] = same;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "assembled: " << a.str() << "\n"
              << "operator:  " << a.op().str() << "\n"
              << "C1 = " << to_string(a.C1) << ", C2 = " << to_string(a.C2) << "\n"
              << "matches preset: " << (same ? "yes" : "no") << "\n";
  }
  return same ? kOk : kVerificationFailed;
}

int cmd_verify(bool all, const PointOpts& o, bool point_given, const std::string& json_out, SuiteOptions so) {
  ReportDocument doc;
  if (all || !point_given) {
    doc = run_suite(so);
  } else {
    doc = ReportDocument{};
    doc.cases = run_point(parse_curve_tag(o.curve), params_of(o), so);
  }
  for (const auto& c : doc.cases)
    std::cout << status_name(c.status) << "  " << c.id << "  " << tag_name(c.curve) << "  (" << to_string(c.params.lambda)
              << ", " << to_string(c.params.t) << ", " << to_string(c.params.nu) << ")\n";
  std::cout << "pass " << doc.count(CaseStatus::Pass) << ", fail " << doc.count(CaseStatus::Fail) << ", skipped "
            << doc.count(CaseStatus::Skipped) << "\n";
  if (!json_out.empty()) {
    std::ofstream f(json_out);
    if (!f) throw std::runtime_error("cannot write " + json_out);
    f << doc.to_json().dump(2) << "\n";
  }
  return doc.all_pass() ? kOk : kVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"trvoros: topological recursion, quantum curves and Voros coefficients"};
  app.require_subcommand(1);

  PointOpts po;
  bool as_json = false;

  auto* curve = app.add_subcommand("curve", "spectral curve data");
  add_point(curve, po, false);
  add_custom(curve, po);
  curve->add_flag("--json", as_json);

  int g = 0, n = 1;
  auto* tr = app.add_subcommand("tr", "correlation function W_{g,n}");
  add_point(tr, po, false);
  add_custom(tr, po);
  tr->add_option("--g", g)->required();
  tr->add_option("--n", n)->required();
  tr->add_flag("--json", as_json);

  auto* fe = app.add_subcommand("free-energy", "free energy F_g");
  add_point(fe, po, false);
  fe->add_option("--g", g)->required();
  fe->add_flag("--json", as_json);

  int M = 6;
  std::string mode = "exact";
  auto* vo = app.add_subcommand("voros", "Voros coefficients V_1..V_M");
  add_point(vo, po, true);
  vo->add_option("--M", M)->capture_default_str();
  vo->add_option("--mode", mode)->capture_default_str();
  vo->add_flag("--json", as_json);

  auto* qu = app.add_subcommand("quantize", "assembled quantum curve");
  add_point(qu, po, true);
  qu->add_flag("--json", as_json);

  bool all = false;
  std::string json_out;
  SuiteOptions so;
  auto* ve = app.add_subcommand("verify", "theorem verification suite");
  add_point(ve, po, true);
  ve->add_flag("--all", all, "both curves at (1,1,1/2) and (5/3,7/2,1/3)");
  ve->add_option("--json", json_out, "write the report to this file");
  ve->add_option("--gmax", so.g_max, "highest genus for the free-energy check")->capture_default_str();
  ve->add_option("--M", so.M, "hbar order")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*curve) return cmd_curve(po, as_json);
    if (*tr) return cmd_tr(po, g, n, as_json);
    if (*fe) return cmd_free_energy(po, g, as_json);
    if (*vo) return cmd_voros(po, M, mode, as_json);
    if (*qu) return cmd_quantize(po, as_json);
    if (*ve) {
      bool point_given = ve->count("--curve") + ve->count("--lambda") + ve->count("--t") + ve->count("--nu") > 0;
      return cmd_verify(all, po, point_given, json_out, so);
    }
  } catch (const InvalidRationalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidRational;
  } catch (const InvalidCurveDocument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalidCurveDocument;
  } catch (const UnknownCurveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUnknownCurve;
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputationError;
  }
  return kOk;
}
