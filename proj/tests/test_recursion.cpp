#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "printed_forms.hpp"
#include "trvoros/exactmath/partial_fractions.hpp"
#include "trvoros/recursion/free_energy.hpp"
#include "trvoros/recursion/rk.hpp"

using namespace trv;
using namespace trv::testing;

namespace {

const CurveParams kUnit{1, 1, Q(1, 2)};
const CurveParams kOff{Q(5, 3), Q(7, 2), Q(1, 3)};

Recursion& shared(CurveTag tag, const CurveParams& p) {
  static std::map<std::pair<int, std::string>, std::unique_ptr<Recursion>> cache;
  auto key = std::make_pair(static_cast<int>(tag), to_string(p.lambda) + "|" + to_string(p.t) + "|" + to_string(p.nu));
  auto& slot = cache[key];
  if (!slot) slot = std::make_unique<Recursion>(make_curve(tag, p));
  return *slot;
}

// Coefficient array of W after relabelling the variables by perm.
std::vector<Q> permuted(const StoredW& w, const std::vector<int>& perm) {
  int s = w.side();
  std::vector<Q> out(w.coef.size());
  for (std::size_t idx = 0; idx < w.coef.size(); ++idx) {
    std::vector<int> e(w.n);
    std::size_t rest = idx;
    for (int k = 0; k < w.n; ++k) {
      e[k] = static_cast<int>(rest % s);
      rest /= s;
    }
    std::size_t j = 0;
    for (int k = w.n - 1; k >= 0; --k) j = j * s + e[perm[k]];
    out[j] = w.coef[idx];
  }
  return out;
}

// Sum of residues of W_{g,1} over each root of M, as the 1/M numerator.
PolynomialQ residue_numerator(Recursion& rec, int g) {
  RationalFunctionQ f = rec.W(g, 1)->as_rational_function();
  const PolynomialQ& M = rec.turning();
  int k = f.den().degree() / M.degree();
  PartialFractions pf = partial_fractions(f, {{M, k}});
  REQUIRE(pf.terms.size() == 1);
  return pf.terms[0].numerators[0];
}

}  // namespace

TEST_CASE("set partitions and R operator terms") {
  CHECK(set_partitions(0).empty());
  CHECK(set_partitions(1).size() == 1);
  CHECK(set_partitions(2).size() == 2);
  CHECK(set_partitions(3).size() == 5);
  CHECK(set_partitions(4).size() == 15);
  for (int k = 1; k <= 6; ++k) {
    std::set<std::vector<std::vector<int>>> seen;
    for (const auto& part : set_partitions(k)) {
      std::vector<int> all;
      for (const auto& b : part) {
        CHECK(std::is_sorted(b.begin(), b.end()));
        all.insert(all.end(), b.begin(), b.end());
      }
      std::sort(all.begin(), all.end());
      std::vector<int> want(k);
      for (int i = 0; i < k; ++i) want[i] = i;
      CHECK(all == want);
      seen.insert(part);
    }
    CHECK(seen.size() == set_partitions(k).size());
  }
  CHECK(set_partitions(6).size() == 203);
  CHECK(r_operator_zero(0, 0) == 1);
  CHECK(r_operator_zero(1, 0) == 0);
  CHECK(r_operator_zero(0, 2) == 0);

  // R^(1) W_{g,n+1}(t; z) is the single block W_{g,n+1}(t, z).
  auto r1 = r_operator_terms(1, 2, 2);
  REQUIRE(r1.size() == 1);
  CHECK(r_terms_str(r1) == "W_{2,3}(t1,z1,z2)");
  CHECK(r_operator_terms(1, 0, 0).empty());

  auto r2 = r_operator_terms(2, 1, 1);
  CHECK(r2.size() == 3);
  std::string s = r_terms_str(r2);
  CHECK(s.find("W_{0,3}(t1,t2,z1)") != std::string::npos);
  CHECK(s.find("W_{0,2}(t1,z1) W_{1,1}(t2)") != std::string::npos);
  CHECK(s.find("W_{1,1}(t1) W_{0,2}(t2,z1)") != std::string::npos);
  CHECK(s.find("W_{0,1}") == std::string::npos);

  // g = 0: a split needs each block to carry two slots, and the joint block has genus -1.
  CHECK(r_operator_terms(2, 0, 0).empty());
  CHECK(r_operator_terms(2, 0, 2).size() == 2);
  // three singletons with two arguments always leave a bare W_{0,1}
  CHECK(r_operator_terms(3, 0, 2).empty());
  CHECK(r_operator_terms(3, 1, 0).empty());
  CHECK(r_terms_str(r_operator_terms(3, 0, 3)).find("W_{0,2}(t1,z") != std::string::npos);
  for (const auto& term : r_operator_terms(3, 2, 2))
    for (const auto& b : term) CHECK(b.g >= 0);
}

TEST_CASE("W03 equals the printed form") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23})
    for (const CurveParams& p : {kUnit, kOff}) {
      CAPTURE(tag_name(tag));
      CAPTURE(to_string(p.lambda));
      Recursion& rec = shared(tag, p);
      StoredWPtr w = rec.W(0, 3);
      CHECK(w->D == 2);
      PrintedW03 f = printed_w03(tag, p);
      CHECK(printed_w03_cleared(f) == stored_w03_cleared(*w, f.lead));
      std::array<Q, 3> z{Q(1, 2), Q(1, 3), Q(1, 5)};
      CHECK(printed_w03_value(f, z) == w->value({z[0], z[1], z[2]}));
    }
  Q v = printed_w03_value(printed_w03(CurveTag::Curve23, kUnit), {Q(1, 2), Q(1, 3), Q(1, 5)});
  CHECK(v == Q(-226651, 41616));
}

TEST_CASE("W03 is holomorphic on the diagonals") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23}) {
    PrintedW03 f = printed_w03(tag, kOff);
    MPoly cleared = printed_w03_cleared(f);
    // The cleared printed numerator vanishes to order 3 along z1 = z2.
    for (Q a : {Q(1, 3), Q(-2), Q(5, 7)})
      for (Q b : {Q(1, 4), Q(3)}) {
        std::vector<Q> on{a, a, b};
        CHECK(cleared.eval(on) == 0);
      }
    // Approaching the diagonal, the printed sum converges to the stored value there.
    StoredWPtr w = shared(tag, kOff).W(0, 3);
    Q on_diag = w->value({Q(1, 2), Q(1, 2), Q(1, 5)});
    Q near = printed_w03_value(f, {Q(1, 2), Q(1, 2) + Q(1, 1000000), Q(1, 5)});
    Q gap = abs(Q(near - on_diag));
    CHECK(gap < Q(1, 1000) * (abs(on_diag) + 1));
  }
}

TEST_CASE("W11 equals the printed form") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23})
    for (const CurveParams& p : {kUnit, kOff}) {
      CAPTURE(tag_name(tag));
      CAPTURE(to_string(p.lambda));
      StoredWPtr w = shared(tag, p).W(1, 1);
      CHECK(w->D == 4);
      for (Q z : {Q(1, 2), Q(-3, 7), Q(2), Q(11, 5)}) CHECK(w->value({z}) == printed_w11_value(tag, p, z));
    }
}

TEST_CASE("symmetry") {
  Recursion& rec = shared(CurveTag::Curve14, kOff);
  for (auto [g, n] : {std::pair{0, 3}, std::pair{1, 2}}) {
    StoredWPtr w = rec.W(g, n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    while (std::next_permutation(perm.begin(), perm.end())) CHECK(permuted(*w, perm) == w->coef);
  }
  StoredWPtr w = shared(CurveTag::Curve23, kOff).W(0, 4);
  CHECK(permuted(*w, {1, 0, 2, 3}) == w->coef);
  CHECK(permuted(*w, {3, 2, 1, 0}) == w->coef);
  CHECK(permuted(*w, {1, 2, 3, 0}) == w->coef);
}

TEST_CASE("W_{g,1} has no residues at the turning points") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23}) {
    Recursion& rec = shared(tag, kOff);
    for (int g : {1, 2}) {
      CHECK(residue_numerator(rec, g).is_zero_poly());
      CHECK(rec.W(g, 1)->residue_free);
    }
  }
}

TEST_CASE("independent of the base point alpha") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23}) {
    Recursion& a = shared(tag, kOff);
    RecursionOptions o;
    o.alpha = Q(-5, 7);
    o.max_g = 2;
    Recursion b(make_curve(tag, kOff), o);
    for (auto [g, n] : {std::pair{0, 3}, std::pair{1, 1}, std::pair{0, 4}, std::pair{2, 1}})
      CHECK(a.W(g, n)->coef == b.W(g, n)->coef);
  }
}

TEST_CASE("global and local recursions agree") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23}) {
    Recursion& rec = shared(tag, kUnit);
    std::vector<std::vector<Arg>> arg_sets = {{}, {Arg::point(Q(1, 2)), Arg::point(Q(-1, 3))}};
    for (int g : {0, 1}) {
      const auto& args = g == 0 ? arg_sets[1] : arg_sets[0];
      EngineResult local = rec.engine(g, args, RecursionMode::Local);
      EngineResult global = rec.engine(g, args, RecursionMode::Global);
      CHECK(local.D == global.D);
      CHECK(local.numerator == global.numerator);
      CHECK(global.alpha_residue == 0);
    }
  }
}

TEST_CASE("ineffective ramification points contribute nothing") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23}) {
    Recursion& rec = shared(tag, kOff);
    EngineResult r = rec.engine(1, {});
    for (const auto& rep : r.ineffective) {
      CAPTURE(rep.where);
      CHECK(rep.checked);
      CHECK(rep.vanished);
    }
    FreeEnergyResidues f = free_energy(rec, 2);
    CHECK(f.ineffective_residue == 0);
  }
}

TEST_CASE("F2 from residues") {
  for (const CurveParams& p : {kUnit, kOff}) {
    Recursion& r14 = shared(CurveTag::Curve14, p);
    Q f2 = free_energy(r14, 2).value;
    CHECK(f2 == Q(-1) / (240 * p.lambda * p.lambda));
    CHECK(free_energy(r14, 2, Q(17, 3)).value == f2);
    CHECK(free_energy_by_parts(r14, 2) == f2);

    Recursion& r23 = shared(CurveTag::Curve23, p);
    CHECK(free_energy(r23, 2).value == 0);
    CHECK(free_energy(r23, 2, Q(-4)).value == 0);
    CHECK(free_energy_by_parts(r23, 2) == 0);
  }
  CHECK_THROWS(free_energy(shared(CurveTag::Curve14, kUnit), 1));
}

TEST_CASE("variational identities") {
  const Q& L = kOff.lambda;
  Recursion& r14 = shared(CurveTag::Curve14, kOff);
  CHECK(variational_integral(r14, 1, 1) == Q(-1) / (12 * L));
  CHECK(variational_integral(r14, 0, 3) == 1 / L);
  CHECK(variational_integral(r14, 1, 2) == 1 / (12 * L * L));
  CHECK(variational_integral(r14, 0, 4) == Q(-1) / (L * L));
  Recursion& r23 = shared(CurveTag::Curve23, kOff);
  CHECK(variational_integral(r23, 1, 1) == 0);
  CHECK(variational_integral(r23, 0, 3) == 0);
}

TEST_CASE("t-derivative residues") {
  for (CurveTag tag : {CurveTag::Curve14, CurveTag::Curve23}) {
    Recursion& rec = shared(tag, kOff);
    CHECK(t_derivative_residue(rec, 1) == 0);
    CHECK(t_derivative_residue(rec, 2) == 0);
  }
  CHECK(residue_at_infinity(RationalFunctionQ(PolynomialQ(std::vector<Q>{1}), PolynomialQ(std::vector<Q>{0, 1}))) == -1);
  CHECK(residue_at_infinity(RationalFunctionQ(PolynomialQ(std::vector<Q>{0, 0, 1}))) == 0);
}

TEST_CASE("caps and memoization") {
  RecursionOptions o;
  o.max_g = 1;
  o.max_n = 3;
  Recursion rec(make_curve14(kUnit), o);
  CHECK_THROWS_AS(rec.W(2, 1), CapExceededError);
  CHECK_THROWS_AS(rec.W(0, 4), CapExceededError);
  StoredWPtr a = rec.W(1, 1);
  StoredWPtr b = rec.W(1, 1);
  CHECK(a.get() == b.get());
  CHECK(rec.memo().stats().hits >= 1);
  CHECK(Recursion::pole_order(2, 1) == 10);
}
