#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <set>
#include <sys/wait.h>

#include "trvoros/verify/verify.hpp"

using namespace trv;
using json = nlohmann::ordered_json;

namespace {

const CurveParams kUnit{1, 1, Q(1, 2)};

SuiteOptions quick() {
  SuiteOptions o;
  o.M = 3;
  o.g_max = 2;
  o.quantization_M = 1;
  return o;
}

json without_timestamp(json j) {
  j.erase("timestamp");
  return j;
}

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(TRVOROS_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("every case passes at a regular point") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23}) {
    auto cases = run_point(tag, kUnit, quick());
    std::set<std::string> ids;
    for (const auto& c : cases) {
      CAPTURE(c.id);
      CAPTURE(c.details.dump());
      CHECK(c.status == CaseStatus::Pass);
      CHECK(c.curve == tag);
      ids.insert(c.id);
    }
    CHECK(ids == std::set<std::string>{"main_i", "main_ii", "main_iii", "main_iv", "voros_parameter", "quantization",
                                       "variational", "t_dependence", "decay"});
  }
}

TEST_CASE("independence audit") {
  for (const auto& c : run_point(CurveTag::Curve23, kUnit, quick())) {
    CAPTURE(c.id);
    CHECK_FALSE(c.provenance[0].empty());
    CHECK_FALSE(c.provenance[1].empty());
    CHECK(c.provenance[0] != c.provenance[1]);
    CHECK(c.details["provenance"] == json::array({c.provenance[0], c.provenance[1]}));
  }
}

TEST_CASE("report schema and determinism") {
  ReportDocument a, b;
  a.timestamp = "2026-01-01T00:00:00Z";
  b.timestamp = "2026-06-01T12:00:00Z";
  a.cases = run_point(CurveTag::Curve23, kUnit, quick());
  b.cases = run_point(CurveTag::Curve23, kUnit, quick());
  json j = a.to_json();
  std::set<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.insert(it.key());
  CHECK(keys == std::set<std::string>{"schema", "engine_version", "timestamp", "cases", "summary"});
  CHECK(j["schema"] == 1);
  CHECK(j["engine_version"] == kEngineVersion);
  REQUIRE(j["cases"].size() == a.cases.size());
  for (const auto& c : j["cases"]) {
    std::vector<std::string> ck;
    for (auto it = c.begin(); it != c.end(); ++it) ck.push_back(it.key());
    CHECK(ck == std::vector<std::string>{"id", "curve", "params", "mode", "status", "details"});
    CHECK(c["curve"] == "(2,3)");
    CHECK(c["params"] == json{{"lambda", "1"}, {"t", "1"}, {"nu", "1/2"}});
    CHECK(std::set<std::string>{"pass", "fail", "skipped"}.count(c["status"].get<std::string>()) == 1);
  }
  CHECK(j["summary"] == json{{"pass", a.count(CaseStatus::Pass)}, {"fail", 0}, {"skipped", 0}});
  CHECK(without_timestamp(j).dump() == without_timestamp(b.to_json()).dump());
  CHECK(j.dump() != b.to_json().dump());
}

TEST_CASE("cases are skipped off the generic locus") {
  // discriminant of 6z^3 + 2t z^2 + lambda vanishes at (lambda, t) = (-8/9, 3)
  auto cases = run_point(CurveTag::Curve14, {Q(-8, 9), Q(3), Q(1, 2)}, quick());
  REQUIRE_FALSE(cases.empty());
  for (const auto& c : cases) {
    CAPTURE(c.id);
    CHECK(c.status == CaseStatus::Skipped);
    CHECK(c.details.contains("reason"));
  }
  ReportDocument d;
  d.cases = cases;
  CHECK(d.all_pass());
  CHECK(d.to_json()["summary"]["skipped"] == cases.size());
}

TEST_CASE("errors inside a case become failures") {
  // a turning point on the positive axis leaves the Voros integrals undefined
  VerifyContext ctx(CurveTag::Curve14, {Q(-5, 2), Q(1), Q(1, 2)});
  REQUIRE(ctx.assumption_failure().empty());
  VerificationCase c = verify_main_iv(ctx, 2);
  CHECK(c.status == CaseStatus::Fail);
  CHECK(c.details["error"].get<std::string>().find("path crossing a turning point") != std::string::npos);
  ReportDocument d;
  d.cases = {c};
  CHECK_FALSE(d.all_pass());
  CHECK(d.to_json()["summary"]["fail"] == 1);
}

TEST_CASE("command line") {
  CHECK(cli("curve --curve '(1,4)'").code == 0);
  CHECK(cli("curve --lambda 1/0").code == 2);
  CHECK(cli("curve --lambda x").code == 2);
  CHECK(cli("curve --curve '(3,3)'").code == 3);
  CHECK(cli("voros --M 40").code == 4);
  CHECK(cli("tr --g 9 --n 1").code == 4);
  CHECK(cli("voros --lambda -5/2").code == 5);
  CHECK(cli("curve --custom /nonexistent/curve.json").code == 6);
  CHECK(cli("quantize --curve '(2,3)' --lambda 5/3 --t 7/2 --nu 1/3").code == 0);

  Run v = cli("voros --curve '(2,3)' --M 4 --json");
  REQUIRE(v.code == 0);
  json vj = json::parse(v.out);
  REQUIRE(vj["terms"].size() == 4);
  for (const auto& t : vj["terms"]) CHECK(t["value"] == "0");

  Run w = cli("tr --curve '(1,4)' --lambda 1 --t 1 --g 0 --n 3 --json");
  REQUIRE(w.code == 0);
  CHECK(json::parse(w.out)["denominator"] == "(z1^3 + 1/3*z1^2 + 1/6)^2 * (z2^3 + 1/3*z2^2 + 1/6)^2 * (z3^3 + 1/3*z3^2 + 1/6)^2");

  std::string out = "verify_cli_report.json";
  Run r = cli("verify --curve '(2,3)' --M 2 --gmax 2 --json " + out);
  CHECK(r.code == 0);
  std::ifstream f(out);
  REQUIRE(f);
  json rep = json::parse(f);
  CHECK(rep["schema"] == 1);
  CHECK(rep["summary"]["fail"] == 0);
  CHECK(rep["cases"].size() == 9);
  std::remove(out.c_str());
}
