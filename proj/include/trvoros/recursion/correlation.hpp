#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "trvoros/curve/sheets.hpp"
#include "trvoros/curve/spectral_curve.hpp"

namespace trv {

struct CapExceededError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class RecursionMode { Local, Global };

// A slot of W filled by a linear functional of the variable s.
struct Arg {
  enum Kind { Point, DivisorIntegral, FullIntegral } kind = Point;
  Q c;  // point, or upper end of the divisor integral

  static Arg point(const Q& c) { return {Point, c}; }
  // sum_i nu_i int_{beta_i}^{c}
  static Arg divisor_integral(const Q& c) { return {DivisorIntegral, c}; }
  // int_0^infinity
  static Arg full_integral() { return {FullIntegral, Q(0)}; }
  bool is_point() const { return kind == Point; }
};

// W_{g,n}(z_1..z_n) / (dz_1..dz_n) = N(z_1..z_n) / prod_k M(z_k)^D with M the
// monic turning polynomial; N is dense of degree <= deg in each variable.
struct StoredW {
  int g = 0, n = 0;
  int D = 0;
  int deg = 0;
  PolynomialQ M;
  std::vector<Q> coef;  // index i_1 + s i_2 + s^2 i_3 + ..., s = deg + 1
  bool residue_free = false;

  int side() const { return deg + 1; }
  Q value(const std::vector<Q>& z) const;
  // Numerator as a polynomial in z_1 with the other variables fixed at `rest`.
  PolynomialQ slice(const std::vector<Q>& rest) const;
  // Only for n == 1.
  RationalFunctionQ as_rational_function() const;
};

using StoredWPtr = std::shared_ptr<const StoredW>;

struct MemoStats {
  long hits = 0;
  long computations = 0;
  long duplicates_discarded = 0;
};

// (g, n) -> StoredW, written once; publication is atomic.
class MemoTable {
 public:
  StoredWPtr find(int g, int n) const;
  // Publishes value unless a value is already present; returns the winner.
  StoredWPtr publish(int g, int n, StoredWPtr value);
  MemoStats stats() const;

 private:
  mutable std::mutex mu_;
  std::map<std::pair<int, int>, StoredWPtr> table_;
  mutable MemoStats stats_;
};

struct RecursionOptions {
  RecursionMode mode = RecursionMode::Local;
  Q alpha = Q(37, 100);
  int max_g = 3;
  int max_n = 5;
};

// Outcome at a ramification point outside the turning class.
struct IneffectiveReport {
  std::string where;
  bool checked = false;  // false when the arguments made the check inapplicable
  bool vanished = true;
};

struct EngineResult {
  int D = 0;
  PolynomialQ numerator;  // over M(z0)^D
  Q alpha_residue;        // total residue multiplying -1/(z0 - alpha)
  std::vector<IneffectiveReport> ineffective;

  RationalFunctionQ as_rational_function(const PolynomialQ& M) const;
};

class Recursion {
 public:
  explicit Recursion(SpectralCurve c, RecursionOptions o = {});

  const SpectralCurve& curve() const { return curve_; }
  const PolynomialQ& turning() const { return M_; }
  const RecursionOptions& options() const { return opts_; }
  MemoTable& memo() { return memo_; }

  // Stored W_{g,n}, 2g + n - 2 >= 1.
  StoredWPtr W(int g, int n);
  // W_{g, |args|+1}(z0; args) as a rational function of z0 (one run of the recursion).
  EngineResult engine(int g, const std::vector<Arg>& args, RecursionMode mode);
  EngineResult engine(int g, const std::vector<Arg>& args) { return engine(g, args, opts_.mode); }

  // Contraction vector of a functional against s^j / M(s)^D, j = 0..deg.
  std::vector<Q> functional_vector(int D, int deg, const Arg& a);
  // W_{g,n} with every slot filled.
  Q contract_all(const StoredW& w, const std::vector<Arg>& args);
  // W_{g,n}(z; args) with one free slot, as a rational function of z.
  RationalFunctionQ contract_to_univariate(const StoredW& w, const std::vector<Arg>& args);

  static int pole_order(int g, int n) { return 6 * g + 2 * n - 4; }

 private:
  struct ChartData;
  StoredWPtr build(int g, int n);
  void check_caps(int g, int n) const;

  SpectralCurve curve_;
  RecursionOptions opts_;
  PolynomialQ M_;
  DivisorSpec divisor_;
  std::vector<std::shared_ptr<ChartData>> charts_;
  MemoTable memo_;
  std::mutex fv_mu_;
  std::map<std::tuple<int, int, int, std::string>, std::vector<Q>> fv_cache_;
  std::map<int, std::vector<std::pair<RationalFunctionQ, PolynomialQ>>> primitives_;
};

}  // namespace trv
