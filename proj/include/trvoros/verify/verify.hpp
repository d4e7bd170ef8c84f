#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"
#include "trvoros/curve/spectral_curve.hpp"
#include "trvoros/recursion/correlation.hpp"

namespace trv {

inline constexpr const char* kEngineVersion = "1.0.0";

enum class CaseStatus { Pass, Fail, Skipped };
std::string status_name(CaseStatus s);

struct VerificationCase {
  std::string id;
  CurveTag curve = CurveTag::Curve14;
  CurveParams params;
  int M = 0;
  std::string mode = "exact";
  CaseStatus status = CaseStatus::Pass;
  // The two independent sources being compared.
  std::array<std::string, 2> provenance;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

// Curve, parameters and a lazily built recursion shared by the cases of one point.
class VerifyContext {
 public:
  VerifyContext(CurveTag tag, CurveParams p);
  CurveTag tag() const { return tag_; }
  const CurveParams& params() const { return params_; }
  const SpectralCurve& curve() const { return curve_; }
  Recursion& recursion();
  // Empty when the assumptions hold.
  std::string assumption_failure() const { return assumption_failure_; }

 private:
  CurveTag tag_;
  CurveParams params_;
  SpectralCurve curve_;
  std::string assumption_failure_;
  std::unique_ptr<Recursion> rec_;
};

VerificationCase verify_main_i(VerifyContext& ctx, int M);
VerificationCase verify_main_ii(VerifyContext& ctx, int M);
VerificationCase verify_main_iii(VerifyContext& ctx, int g_max);
VerificationCase verify_main_iv(VerifyContext& ctx, int M);
VerificationCase verify_voros_parameter(VerifyContext& ctx, int M);
VerificationCase verify_quantization(VerifyContext& ctx, int M);
VerificationCase verify_variational(VerifyContext& ctx);
VerificationCase verify_t_dependence(VerifyContext& ctx);
VerificationCase verify_decay(VerifyContext& ctx, int M);

struct SuiteOptions {
  int M = 6;
  int g_max = 3;
  int quantization_M = 3;
};

struct ReportDocument {
  std::string engine_version = kEngineVersion;
  std::string timestamp;
  std::vector<VerificationCase> cases;

  int count(CaseStatus s) const;
  bool all_pass() const { return count(CaseStatus::Fail) == 0; }
  nlohmann::ordered_json to_json() const;
};

// All cases for one curve and parameter point.
std::vector<VerificationCase> run_point(CurveTag tag, const CurveParams& p, const SuiteOptions& o);
// Both curves at (1, 1, 1/2) and (5/3, 7/2, 1/3).
ReportDocument run_suite(const SuiteOptions& o);
std::vector<CurveParams> default_points();

}  // namespace trv
