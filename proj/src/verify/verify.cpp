#include "trvoros/verify/verify.hpp"

#include <chrono>
#include <ctime>

#include "trvoros/recursion/free_energy.hpp"
#include "trvoros/wkb/hbar_series.hpp"
#include "trvoros/wkb/quantum_curve.hpp"
#include "trvoros/wkb/riccati.hpp"
#include "trvoros/wkb/tr_wkb.hpp"
#include "trvoros/wkb/voros.hpp"

namespace trv {

using json = nlohmann::ordered_json;

std::string status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "pass";
    case CaseStatus::Fail: return "fail";
    case CaseStatus::Skipped: return "skipped";
  }
  return "?";
}

VerifyContext::VerifyContext(CurveTag tag, CurveParams p)
    : tag_(tag), params_(std::move(p)), curve_(make_curve(tag, params_)) {
  try {
    AssumptionReport r = check_assumptions(curve_);
    if (!r.all_pass()) {
      for (const auto* a : {&r.a1, &r.a2, &r.a3, &r.a4})
        if (!a->pass) assumption_failure_ += a->witness + "; ";
      if (assumption_failure_.empty()) assumption_failure_ = "assumptions fail";
    }
  } catch (const std::exception& e) {
    assumption_failure_ = e.what();
  }
}

Recursion& VerifyContext::recursion() {
  if (!rec_) rec_ = std::make_unique<Recursion>(curve_);
  return *rec_;
}

namespace {

// Records named comparisons; any failure fails the case.
class Checks {
 public:
  explicit Checks(VerificationCase& c) : c_(c) {}
  void add(const std::string& name, bool ok, json info = json::object()) {
    info["check"] = name;
    info["ok"] = ok;
    // keep "check" first for readability
    json row = json::object();
    row["check"] = name;
    for (auto it = info.begin(); it != info.end(); ++it)
      if (it.key() != "check") row[it.key()] = it.value();
    list_.push_back(std::move(row));
    if (!ok) c_.status = CaseStatus::Fail;
  }
  void finish() { c_.details["checks"] = list_; }

 private:
  VerificationCase& c_;
  json list_ = json::array();
};

VerificationCase start(VerifyContext& ctx, const std::string& id, int M, std::string a, std::string b) {
  VerificationCase c;
  c.id = id;
  c.curve = ctx.tag();
  c.params = ctx.params();
  c.M = M;
  c.provenance = {std::move(a), std::move(b)};
  c.details["provenance"] = json::array({c.provenance[0], c.provenance[1]});
  if (M > 0) c.details["order"] = M;
  if (!ctx.assumption_failure().empty()) {
    c.status = CaseStatus::Skipped;
    c.details["reason"] = "parameter point violates the genericity assumptions: " + ctx.assumption_failure();
  }
  return c;
}

template <class F>
VerificationCase guarded(VerificationCase c, F&& body) {
  if (c.status == CaseStatus::Skipped) return c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.status = CaseStatus::Fail;
    c.details["error"] = e.what();
  }
  return c;
}

LogRationalExpr d_n(LogRationalExpr e, int n) {
  for (int i = 0; i < n; ++i) e = e.derivative();
  return e;
}

Q rational_at(const LogRationalExpr& e, const Q& lambda) {
  if (!e.is_rational()) throw ArithmeticError("expected a rational coefficient, got " + e.str("lambda"));
  return e.rational().eval(lambda);
}

Real tolerance(int decimal_digits, int prec) {
  Q t(1);
  for (int i = 0; i < decimal_digits; ++i) t /= 10;
  return Real(t, prec);
}

std::string qs(const Q& q) { return to_string(q); }

Q decay_bound(CurveTag tag) { return tag == CurveTag::Curve14 ? Q(2) : Q(3, 2); }

}  // namespace

VerificationCase verify_main_i(VerifyContext& ctx, int M) {
  auto c = start(ctx, "main_i", M, "Riccati WKB series integrated exactly along z in (0, infinity)",
                 "closed-form F_g with Taylor shifts in lambda");
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    const CurveParams& p = ctx.params();
    const Q& nu = p.nu;
    LambdaFamily fam = lambda_family(ctx.tag(), p, 3);
    WkbSeries w = riccati_expand(fam, M);
    HbarSeries F = free_energy_series(ctx.tag(), p, M + 2);
    LogRationalExpr F0 = F.coeff(-2);
    HbarSeries rhs = F.shifted(Q(1) - nu) - F.shifted(-nu);
    rhs.add(-1, -F0.derivative());
    rhs.add(0, RationalFunctionQ(Q(2 * nu - 1) / 2) * d_n(F0, 2));
    for (int m = -2; m <= 0; ++m)
      ck.add("order " + std::to_string(m) + " cancels", rhs.coeff(m).is_zero(), {{"rhs", rhs.coeff(m).str("lambda")}});
    int prec = default_precision_bits();
    VorosData ball = voros_from_riccati(w, M, true, prec);
    Real tol = tolerance(25, prec);
    for (int m = 1; m <= M; ++m) {
      std::vector<Q> lhs = voros_lambda_derivatives(w, m);
      LogRationalExpr r = rhs.coeff(m);
      Q d3 = rational_at(d_n(r, 3), p.lambda);
      ck.add("d^3/dlambda^3 at order " + std::to_string(m), lhs[3] == d3, {{"lhs", qs(lhs[3])}, {"rhs", qs(d3)}});
      if (r.is_rational()) {
        Q v = r.rational().eval(p.lambda);
        ck.add("order " + std::to_string(m), lhs[0] == v, {{"lhs", qs(lhs[0])}, {"rhs", qs(v)}});
      }
      BallComplex rb = r.eval(p.lambda, prec);
      const BallComplex& lb = *ball.terms[m - 1].ball;
      ck.add("ball spot check at order " + std::to_string(m), within(lb, rb, tol),
             {{"lhs", lb.str(30)}, {"rhs", rb.str(30)}, {"tolerance", "1e-25"}});
    }
    Regularization reg = voros_regularization(fam, w);
    Q d3F0 = rational_at(d_n(F0, 3), p.lambda);
    ck.add("d^2 V_-1 = d^3 F_0", reg.d2_v_minus1 == d3F0, {{"lhs", qs(reg.d2_v_minus1)}, {"rhs", qs(d3F0)}});
    Q want = -Q(2 * nu - 1) / 2 * d3F0;
    ck.add("d V_0 = -(2 nu - 1)/2 d^3 F_0", reg.d_v0 == want, {{"lhs", qs(reg.d_v0)}, {"rhs", qs(want)}});
    c.details["path"] = kVorosPath;
    c.mode = "exact+ball";
    ck.finish();
  });
}

VerificationCase verify_main_ii(VerifyContext& ctx, int M) {
  auto c = start(ctx, "main_ii", M, "closed-form F_g with Taylor shifts in lambda",
                 "second derivative of the closed-form F_0");
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    const CurveParams& p = ctx.params();
    HbarSeries F = free_energy_series(ctx.tag(), p, M);
    LogRationalExpr F0 = F.coeff(-2);
    HbarSeries lhs = F.shifted(Q(1)) - F.scaled(Q(2)) + F.shifted(Q(-1));
    HbarSeries rhs(M);
    rhs.set(0, d_n(F0, 2));
    int prec = default_precision_bits();
    Real tol = tolerance(30, prec);
    for (int m = -2; m <= M; ++m) {
      LogRationalExpr l = lhs.coeff(m), r = rhs.coeff(m);
      std::string k = std::to_string(m);
      ck.add("order " + k, l == r, {{"lhs", l.str("lambda")}, {"rhs", r.str("lambda")}});
      Q l3 = rational_at(d_n(l, 3), p.lambda), r3 = rational_at(d_n(r, 3), p.lambda);
      ck.add("d^3/dlambda^3 at order " + k, l3 == r3, {{"lhs", qs(l3)}, {"rhs", qs(r3)}});
      ck.add("ball spot check at order " + k, within(l.eval(p.lambda, prec), r.eval(p.lambda, prec), tol));
    }
    if (M >= 2) {
      LogRationalExpr o2 = d_n(F.coeff(0), 2) + RationalFunctionQ(Q(1, 12)) * d_n(F0, 4);
      ck.add("d^2 F_1 + (1/12) d^4 F_0 = 0", o2.is_zero(), {{"value", o2.str("lambda")}});
    }
    ck.finish();
  });
}

VerificationCase verify_main_iii(VerifyContext& ctx, int g_max) {
  auto c = start(ctx, "main_iii", 0, "residue formula on recursion W_{g,1}", "Bernoulli closed form of F_g");
  c.details["g_max"] = g_max;
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    for (int g = 2; g <= g_max; ++g) {
      FreeEnergyResidues r = free_energy(ctx.recursion(), g);
      Q closed = rational_at(free_energy_closed_form(ctx.tag(), g, ctx.params()), ctx.params().lambda);
      ck.add("F_" + std::to_string(g), r.value == closed,
             {{"recursion", qs(r.value)}, {"closed_form", qs(closed)}, {"ineffective_residue", qs(r.ineffective_residue)}});
    }
    ck.finish();
  });
}

namespace {

// V_m at the given nu, exact where possible.
struct VorosRow {
  bool exact;
  Q q;
  std::optional<BallComplex> b;
};

std::vector<VorosRow> voros_at(CurveTag tag, CurveParams p, const Q& nu, int M) {
  p.nu = nu;
  WkbSeries w = riccati_expand(lambda_family(tag, p, 0), M);
  VorosData v = voros_from_riccati(w, M);
  std::vector<VorosRow> out;
  for (const auto& t : v.terms) out.push_back({t.mode == VorosMode::Exact, t.exact.value_or(Q(0)), t.ball});
  return out;
}

bool row_equals(const VorosRow& r, const Q& want, const Real& tol) {
  if (r.exact) return r.q == want;
  return within(*r.b, BallComplex(want, r.b->prec()), tol);
}

std::string row_str(const VorosRow& r) { return r.exact ? to_string(r.q) : r.b->str(30); }

}  // namespace

VerificationCase verify_main_iv(VerifyContext& ctx, int M) {
  auto c = start(ctx, "main_iv", M, "Riccati WKB series integrated along z in (0, infinity)",
                 "Bernoulli-polynomial closed form");
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    const CurveParams& p = ctx.params();
    Real tol = tolerance(30, default_precision_bits());
    auto v = voros_at(ctx.tag(), p, p.nu, M);
    auto v_reflected = voros_at(ctx.tag(), p, Q(1) - p.nu, M);
    HbarSeries closed = voros_closed_form(ctx.tag(), p, M);
    bool all_exact = true;
    for (int m = 1; m <= M; ++m) {
      const VorosRow& r = v[m - 1];
      all_exact = all_exact && r.exact;
      Q want = rational_at(closed.coeff(m), p.lambda);
      ck.add("V_" + std::to_string(m), row_equals(r, want, tol), {{"riccati", row_str(r)}, {"closed_form", qs(want)}});
      // B_{m+1}(1 - X) = (-1)^{m+1} B_{m+1}(X)
      const VorosRow& s = v_reflected[m - 1];
      Q sign = (m % 2 == 1) ? Q(1) : Q(-1);
      bool ok = r.exact && s.exact ? s.q == sign * r.q : within(*s.b, BallComplex(sign * want, s.b->prec()), tol);
      ck.add("reflection nu -> 1 - nu at order " + std::to_string(m), ok,
             {{"at_nu", row_str(r)}, {"at_1_minus_nu", row_str(s)}});
    }
    c.mode = all_exact ? "exact" : "ball";
    c.details["path"] = kVorosPath;
    ck.finish();
  });
}

VerificationCase verify_voros_parameter(VerifyContext& ctx, int M) {
  auto c = start(ctx, "voros_parameter", M, "Riccati WKB Voros coefficients at shifted nu",
                 "series expansion of the logarithm");
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    const CurveParams& p = ctx.params();
    Real tol = tolerance(30, default_precision_bits());
    auto v0 = voros_at(ctx.tag(), p, Q(0), M);
    auto v1 = voros_at(ctx.tag(), p, Q(1), M);
    for (int m = 1; m <= M; ++m) {
      bool ok = v0[m - 1].exact && v1[m - 1].exact ? v0[m - 1].q == v1[m - 1].q
                                                   : within(*v0[m - 1].b, *v1[m - 1].b, tol);
      ck.add("V_" + std::to_string(m) + "(nu=0) = V_" + std::to_string(m) + "(nu=1)", ok,
             {{"nu_0", row_str(v0[m - 1])}, {"nu_1", row_str(v1[m - 1])}});
    }
    if (ctx.tag() == CurveTag::Curve14) {
      // V(-nu) - V(1-nu) = log(1 + nu hbar / lambda), coefficient -(-nu/lambda)^m / m.
      auto vm = voros_at(ctx.tag(), p, -p.nu, M);
      auto vp = voros_at(ctx.tag(), p, Q(1) - p.nu, M);
      Q r = -p.nu / p.lambda, pw = 1;
      for (int m = 1; m <= M; ++m) {
        pw *= r;
        Q want = -pw / Q(m);
        const VorosRow &a = vm[m - 1], &b = vp[m - 1];
        bool ok = a.exact && b.exact && a.q - b.q == want;
        ck.add("V_" + std::to_string(m) + "(-nu) - V_" + std::to_string(m) + "(1-nu)", ok,
               {{"difference", a.exact && b.exact ? qs(a.q - b.q) : "ball"}, {"log_expansion", qs(want)}});
      }
    }
    ck.finish();
  });
}

VerificationCase verify_quantization(VerifyContext& ctx, int M) {
  auto c = start(ctx, "quantization", M, "Newton-polygon assembly and recursion divisor integrals",
                 "preset operator and Riccati hierarchy");
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    QuantumCurve assembled = assemble_quantum_curve(ctx.curve());
    QuantumCurve preset = preset_quantum_curve(ctx.tag(), ctx.params());
    ck.add("assembled operator = preset", same_operator(assembled, preset),
           {{"assembled", assembled.str()}, {"preset", preset.str()}});
    BivariatePoly cl = classical_limit(assembled), dp = defining_polynomial(ctx.curve());
    ck.add("classical limit = defining polynomial", cl == dp, {{"limit", to_string(cl)}, {"curve", to_string(dp)}});
    TrWkbSeries tr = tr_wkb_series(ctx.recursion(), M);
    WkbSeries w = riccati_expand(fixed_family(ctx.curve(), assembled), M);
    for (int m = -1; m <= M; ++m)
      ck.add("S^TR_" + std::to_string(m) + " = S^Riccati_" + std::to_string(m), tr.at(m) == w.at(m));
    ck.finish();
  });
}

VerificationCase verify_variational(VerifyContext& ctx) {
  auto c = start(ctx, "variational", 0, "iterated exact integrals of recursion W_{g,n}",
                 "lambda-derivatives of the closed-form F_g");
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    for (auto [g, n] : {std::pair{1, 1}, {0, 3}, {1, 2}, {0, 4}}) {
      Q lhs = variational_integral(ctx.recursion(), g, n);
      Q rhs = rational_at(d_n(free_energy_closed_form(ctx.tag(), g, ctx.params()), n), ctx.params().lambda);
      ck.add("(" + std::to_string(g) + "," + std::to_string(n) + ")", lhs == rhs, {{"integral", qs(lhs)}, {"closed_form", qs(rhs)}});
    }
    ck.finish();
  });
}

VerificationCase verify_t_dependence(VerifyContext& ctx) {
  auto c = start(ctx, "t_dependence", 0, "recursion residues and free energies at two values of t",
                 "t-independence of the closed forms");
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    for (int g : {1, 2}) {
      Q r = t_derivative_residue(ctx.recursion(), g);
      ck.add("-Res_inf z^2 W_{" + std::to_string(g) + ",1} = 0", sgn(r) == 0, {{"value", qs(r)}});
    }
    c.details["g0_residue_report_only"] = qs(t_derivative_residue(ctx.recursion(), 0));
    CurveParams other = ctx.params();
    other.t = ctx.params().t == Q(7, 2) ? Q(1) : Q(7, 2);
    Recursion rec2(make_curve(ctx.tag(), other));
    Q a = free_energy(ctx.recursion(), 2).value, b = free_energy(rec2, 2).value;
    ck.add("F_2(t) = F_2(t')", a == b, {{"t", qs(ctx.params().t)}, {"t_prime", qs(other.t)}, {"F2", qs(a)}, {"F2_prime", qs(b)}});
    ck.finish();
  });
}

VerificationCase verify_decay(VerifyContext& ctx, int M) {
  auto c = start(ctx, "decay", M, "valuations of Riccati S_m at the endpoints", "decay bound in 1/x");
  return guarded(std::move(c), [&](VerificationCase& c) {
    Checks ck(c);
    WkbSeries w = riccati_expand(lambda_family(ctx.tag(), ctx.params(), 0), M);
    Q bound = decay_bound(ctx.tag());
    c.details["bound"] = qs(bound);
    for (int m = 1; m <= M; ++m) {
      Q at0 = decay_order(ctx.curve(), w.at(m), false), atinf = decay_order(ctx.curve(), w.at(m), true);
      ck.add("S_" + std::to_string(m), at0 >= bound && atinf >= bound, {{"z_to_0", qs(at0)}, {"z_to_infinity", qs(atinf)}});
    }
    ck.finish();
  });
}

int ReportDocument::count(CaseStatus s) const {
  int n = 0;
  for (const auto& c : cases) n += c.status == s;
  return n;
}

json ReportDocument::to_json() const {
  json j;
  j["schema"] = 1;
  j["engine_version"] = engine_version;
  j["timestamp"] = timestamp;
  json arr = json::array();
  for (const auto& c : cases) {
    json e;
    e["id"] = c.id;
    e["curve"] = tag_name(c.curve);
    e["params"] = {{"lambda", to_string(c.params.lambda)}, {"t", to_string(c.params.t)}, {"nu", to_string(c.params.nu)}};
    e["mode"] = c.mode;
    e["status"] = status_name(c.status);
    e["details"] = c.details;
    arr.push_back(std::move(e));
  }
  j["cases"] = std::move(arr);
  j["summary"] = {{"pass", count(CaseStatus::Pass)}, {"fail", count(CaseStatus::Fail)}, {"skipped", count(CaseStatus::Skipped)}};
  return j;
}

std::vector<VerificationCase> run_point(CurveTag tag, const CurveParams& p, const SuiteOptions& o) {
  VerifyContext ctx(tag, p);
  std::vector<VerificationCase> out;
  out.push_back(verify_quantization(ctx, o.quantization_M));
  out.push_back(verify_decay(ctx, 4));
  out.push_back(verify_main_iv(ctx, o.M));
  out.push_back(verify_voros_parameter(ctx, o.M));
  out.push_back(verify_main_i(ctx, o.M));
  out.push_back(verify_main_ii(ctx, o.M));
  out.push_back(verify_variational(ctx));
  out.push_back(verify_t_dependence(ctx));
  out.push_back(verify_main_iii(ctx, o.g_max));
  return out;
}

std::vector<CurveParams> default_points() { return {CurveParams{1, 1, Q(1, 2)}, CurveParams{Q(5, 3), Q(7, 2), Q(1, 3)}}; }

ReportDocument run_suite(const SuiteOptions& o) {
  ReportDocument doc;
  std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  doc.timestamp = buf;
  for (const auto& p : default_points())
    for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23})
      for (auto& c : run_point(tag, p, o)) doc.cases.push_back(std::move(c));
  return doc;
}

}  // namespace trv
