#include "trvoros/recursion/correlation.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

#include "trvoros/exactmath/hermite.hpp"
#include "trvoros/recursion/rk.hpp"

namespace trv {

// ---------------------------------------------------------------- StoredW

Q StoredW::value(const std::vector<Q>& z) const {
  // Horner over the highest axis first.
  std::vector<Q> cur = coef;
  int s = side();
  for (int axis = n - 1; axis >= 0; --axis) {
    std::size_t stride = cur.size() / s;
    std::vector<Q> next(stride);
    for (std::size_t j = 0; j < stride; ++j) {
      Q acc = 0;
      for (int i = s - 1; i >= 0; --i) acc = acc * z[axis] + cur[j + stride * i];
      next[j] = acc;
    }
    cur = std::move(next);
  }
  Q den = 1;
  for (int k = 0; k < n; ++k) {
    Q m = eval(M, z[k]);
    for (int e = 0; e < D; ++e) den *= m;
  }
  return cur[0] / den;
}

PolynomialQ StoredW::slice(const std::vector<Q>& rest) const {
  std::vector<Q> cur = coef;
  int s = side();
  for (int axis = n - 1; axis >= 1; --axis) {
    std::size_t stride = cur.size() / s;
    std::vector<Q> next(stride);
    for (std::size_t j = 0; j < stride; ++j) {
      Q acc = 0;
      for (int i = s - 1; i >= 0; --i) acc = acc * rest[axis - 1] + cur[j + stride * i];
      next[j] = acc;
    }
    cur = std::move(next);
  }
  return PolynomialQ(cur);
}

RationalFunctionQ StoredW::as_rational_function() const {
  if (n != 1) throw std::invalid_argument("as_rational_function needs n = 1");
  return RationalFunctionQ(PolynomialQ(coef), poly_pow(M, D));
}

RationalFunctionQ EngineResult::as_rational_function(const PolynomialQ& M) const {
  return RationalFunctionQ(numerator, poly_pow(M, D));
}

// ---------------------------------------------------------------- MemoTable

StoredWPtr MemoTable::find(int g, int n) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = table_.find({g, n});
  if (it == table_.end()) return nullptr;
  ++stats_.hits;
  return it->second;
}

StoredWPtr MemoTable::publish(int g, int n, StoredWPtr value) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = table_.emplace(std::make_pair(g, n), value);
  if (inserted) {
    ++stats_.computations;
    return value;
  }
  if (it->second->coef != value->coef) throw std::logic_error("memo table: conflicting values for one key");
  ++stats_.duplicates_discarded;
  return it->second;
}

MemoStats MemoTable::stats() const {
  std::lock_guard<std::mutex> lock(mu_);
  return stats_;
}

// ---------------------------------------------------------------- charts

struct Recursion::ChartData {
  RamificationPoint rp;
  LocalChart chart;
  bool effective = false;
  std::mutex mu;
  int order = 0;
  CompanionSheets sheets;

  CompanionSheets sheets_at(const SpectralCurve& c, int want) {
    std::lock_guard<std::mutex> lock(mu);
    if (want > order) {
      sheets = companion_sheets(c, chart, want);
      order = want;
    }
    CompanionSheets out;
    out.theta1 = sheets.theta1.truncated(want);
    if (sheets.theta2) out.theta2 = sheets.theta2->truncated(want);
    return out;
  }
};

Recursion::Recursion(SpectralCurve c, RecursionOptions o) : curve_(std::move(c)), opts_(o) {
  M_ = turning_polynomial(curve_);
  divisor_ = curve_.tag == CurveTag::Custom ? DivisorSpec{} : divisor_for(curve_);
  for (const auto& rp : ramification_points(curve_)) {
    auto cd = std::make_shared<ChartData>();
    cd->rp = rp;
    cd->chart = chart_for(rp);
    cd->effective = rp.kind == RamificationKind::SimpleZeroOfDx && rp.where.kind != PointRef::Infinity;
    if (rp.kind == RamificationKind::SimpleZeroOfDx && rp.where.kind == PointRef::Infinity)
      throw std::invalid_argument("zeros of dx at infinity are not supported");
    charts_.push_back(cd);
  }
}

void Recursion::check_caps(int g, int n) const {
  if (g > opts_.max_g) throw CapExceededError("genus cap exceeded: g = " + std::to_string(g));
  if (n > opts_.max_n) throw CapExceededError("arity cap exceeded: n = " + std::to_string(n));
}

// ---------------------------------------------------------------- functionals

std::vector<Q> Recursion::functional_vector(int D, int deg, const Arg& a) {
  std::string key = std::to_string(static_cast<int>(a.kind)) + ":" + to_string(a.c);
  {
    std::lock_guard<std::mutex> lock(fv_mu_);
    auto it = fv_cache_.find({D, deg, static_cast<int>(a.kind), key});
    if (it != fv_cache_.end()) return it->second;
  }
  std::vector<Q> v(deg + 1);
  if (a.kind == Arg::Point) {
    Q m = eval(M_, a.c);
    if (sgn(m) == 0) throw ArithmeticError("point functional at a turning point");
    Q den = 1;
    for (int e = 0; e < D; ++e) den *= m;
    Q p = 1;
    for (int j = 0; j <= deg; ++j) {
      v[j] = p / den;
      p *= a.c;
    }
  } else {
    std::vector<std::pair<RationalFunctionQ, PolynomialQ>> prim;
    {
      std::lock_guard<std::mutex> lock(fv_mu_);
      auto& slot = primitives_[D];
      for (int j = static_cast<int>(slot.size()); j <= deg; ++j) {
        HermiteResult h = hermite_reduce(PolynomialQ::monomial(Q(1), j), M_, D);
        if (!h.polynomial.is_zero_poly()) throw ArithmeticError("functional_vector: integrand not proper");
        slot.emplace_back(h.rational, h.remainder);
      }
      prim = slot;
    }
    auto F = [&](int j, const PointRef& p) -> Q {
      if (p.kind == PointRef::Infinity) return prim[j].first.limit_at_infinity();
      return prim[j].first.eval(p.value);
    };
    for (int j = 0; j <= deg; ++j) {
      if (a.kind == Arg::FullIntegral) {
        v[j] = F(j, {PointRef::Infinity, {}, {}}) - F(j, {PointRef::Finite, Q(0), {}});
      } else {
        if (divisor_.endpoints.empty()) throw std::invalid_argument("divisor required");
        Q s = prim[j].first.eval(a.c);
        for (const auto& e : divisor_.endpoints) s -= e.weight * F(j, e.where);
        v[j] = s;
      }
    }
  }
  std::lock_guard<std::mutex> lock(fv_mu_);
  fv_cache_[{D, deg, static_cast<int>(a.kind), key}] = v;
  return v;
}

namespace {

// Contract the trailing axes of a tensor with side s.
std::vector<Q> contract_tail(std::vector<Q> t, int s, const std::vector<std::vector<Q>>& vecs) {
  for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) {
    std::size_t stride = t.size() / s;
    std::vector<Q> next(stride);
    for (int i = 0; i < s; ++i) {
      const Q& vi = (*it)[i];
      if (sgn(vi) == 0) continue;
      for (std::size_t j = 0; j < stride; ++j)
        if (sgn(t[j + stride * i]) != 0) next[j] += t[j + stride * i] * vi;
    }
    t = std::move(next);
  }
  return t;
}

}  // namespace

Q Recursion::contract_all(const StoredW& w, const std::vector<Arg>& args) {
  if (static_cast<int>(args.size()) != w.n) throw std::invalid_argument("contract_all: wrong number of arguments");
  bool integral = std::any_of(args.begin(), args.end(), [](const Arg& a) { return !a.is_point(); });
  if (integral && !w.residue_free) throw ArithmeticError("integral functional on a W with residues");
  std::vector<std::vector<Q>> vecs;
  for (const auto& a : args) vecs.push_back(functional_vector(w.D, w.deg, a));
  return contract_tail(w.coef, w.side(), vecs)[0];
}

RationalFunctionQ Recursion::contract_to_univariate(const StoredW& w, const std::vector<Arg>& args) {
  if (static_cast<int>(args.size()) != w.n - 1) throw std::invalid_argument("contract_to_univariate: wrong arity");
  std::vector<std::vector<Q>> vecs;
  for (const auto& a : args) vecs.push_back(functional_vector(w.D, w.deg, a));
  return RationalFunctionQ(PolynomialQ(contract_tail(w.coef, w.side(), vecs)), poly_pow(M_, w.D));
}

// ---------------------------------------------------------------- engine

namespace {

// A point on the curve given as a Laurent series in the chart parameter u.
struct Slot {
  QSeries Z;   // z-value
  QSeries dZ;  // dz/du
  std::vector<QSeries> pow;
  std::map<int, QSeries> inv_md;
  std::optional<QSeries> inv_m;

  const QSeries& power(int i) {
    if (pow.empty()) pow.push_back(QSeries::constant(one_of(Z.zero()), kExactPrec));
    while (static_cast<int>(pow.size()) <= i) pow.push_back(pow.back() * Z);
    return pow[i];
  }
  const QSeries& inv_MD(const PolynomialQ& M, int D) {
    auto it = inv_md.find(D);
    if (it != inv_md.end()) return it->second;
    if (!inv_m) inv_m = poly_at_series(M, Z).inverse();
    return inv_md.emplace(D, inv_m->pow(D)).first->second;
  }
};

QSeries rf_at(const RationalFunctionQ& f, const QSeries& Z) {
  QSeries num = poly_at_series(f.num(), Z);
  if (f.den().degree() == 0) return num * scalar_of(Z.zero(), Q(1) / f.den().c[0]);
  return num * poly_at_series(f.den(), Z).inverse();
}

// sum_i a_i P[i] with exact coefficient bookkeeping.
QSeries lincomb(const std::vector<Q>& a, Slot& s, std::size_t offset = 0, std::size_t stride = 1, int count = -1) {
  const QElem zero = s.Z.zero();
  int val = INT32_MAX, prec = INT32_MAX;
  for (int i = 0; i < count; ++i) {
    const Q& ai = a[offset + stride * i];
    if (sgn(ai) == 0) continue;
    const QSeries& p = s.power(i);
    val = std::min(val, p.val());
    prec = std::min(prec, p.prec());
  }
  if (val == INT32_MAX) return QSeries(zero, kExactPrec);
  if (val > prec) val = prec;
  std::vector<QElem> acc(prec - val, zero);
  for (int i = 0; i < count; ++i) {
    const Q& ai = a[offset + stride * i];
    if (sgn(ai) == 0) continue;
    const QSeries& p = s.power(i);
    const auto& raw = p.raw();
    for (std::size_t k = 0; k < raw.size(); ++k) {
      int e = p.val() + static_cast<int>(k);
      if (e >= prec) break;
      QElem t = raw[k];
      t *= ai;
      acc[e - val] += t;
    }
  }
  return QSeries(zero, val, prec, std::move(acc));
}

}  // namespace

EngineResult Recursion::engine(int g, const std::vector<Arg>& args, RecursionMode mode) {
  const int n = static_cast<int>(args.size());
  check_caps(g, n + 1);
  if (2 * g + n + 1 - 2 < 1) throw std::invalid_argument("engine needs 2g + n - 2 >= 1");
  const int D = pole_order(g, n + 1);
  const bool all_points = std::all_of(args.begin(), args.end(), [](const Arg& a) { return a.is_point(); });
  const int d = M_.degree();

  EngineResult res;
  res.D = D;
  std::vector<Q> numer(d * D + 1);

  for (auto& cdp : charts_) {
    ChartData& cd = *cdp;
    if (!cd.effective && !all_points) {
      res.ineffective.push_back({cd.rp.where.str(), false, true});
      continue;
    }
    const LocalChart& ch = cd.chart;
    const QElem zero = ch.zero();
    const QElem one = one_of(zero);
    int N = D + 8;
    QSeries G;
    for (int attempt = 0;; ++attempt) {
      CompanionSheets sh = cd.sheets_at(curve_, N);
      std::vector<Slot> slots;
      auto make_slot = [&](const QSeries& w, const QSeries& dw) {
        Slot s;
        s.Z = ch.z_value(w);
        s.dZ = ch.dz_dw(w) * dw;
        return s;
      };
      QSeries u(zero, 1, N, {one});
      slots.push_back(make_slot(u, QSeries::constant(one, kExactPrec)));
      slots.push_back(make_slot(sh.theta1, sh.theta1.derivative()));
      bool have2 = mode == RecursionMode::Global && sh.theta2.has_value();
      if (have2) slots.push_back(make_slot(*sh.theta2, sh.theta2->derivative()));

      std::vector<QSeries> yv;
      for (auto& s : slots) yv.push_back(rf_at(curve_.y, s.Z));
      QSeries xp0 = rf_at(curve_.x.derivative(), slots[0].Z) * slots[0].dZ;

      std::map<std::string, QSeries> block_cache;
      auto block = [&](int gb, const std::vector<int>& sl, const std::vector<int>& ai) -> QSeries {
        std::string key = std::to_string(gb) + "|";
        for (int s : sl) key += std::to_string(s) + ",";
        key += "|";
        for (int a : ai) key += std::to_string(a) + ",";
        auto it = block_cache.find(key);
        if (it != block_cache.end()) return it->second;
        int m = static_cast<int>(sl.size() + ai.size());
        QSeries v(zero, kExactPrec);
        if (gb < 0) {
        } else if (gb == 0 && m == 2) {
          if (sl.size() == 2) {
            Slot& a = slots[sl[0]];
            Slot& b = slots[sl[1]];
            QSeries diff = a.Z - b.Z;
            v = a.dZ * b.dZ * (diff * diff).inverse();
          } else if (sl.size() == 1) {
            Slot& a = slots[sl[0]];
            const Arg& f = args[ai[0]];
            auto shifted_inv = [&](const Q& c) { return (a.Z - QSeries::constant(scalar_of(zero, c), kExactPrec)).inverse(); };
            if (f.kind == Arg::Point) {
              QSeries r = shifted_inv(f.c);
              v = a.dZ * r * r;
            } else if (f.kind == Arg::DivisorIntegral) {
              QSeries r = shifted_inv(f.c);
              for (const auto& e : divisor_.endpoints)
                if (e.where.kind == PointRef::Finite) r = r - shifted_inv(e.where.value) * scalar_of(zero, e.weight);
              v = a.dZ * r;
            } else {
              v = -(a.dZ * a.Z.inverse());
            }
          } else {
            throw std::logic_error("W_{0,2} block without a series slot");
          }
        } else {
          StoredWPtr w = W(gb, m);
          bool integral = std::any_of(ai.begin(), ai.end(), [&](int i) { return !args[i].is_point(); });
          if (integral && !w->residue_free) throw ArithmeticError("integral functional on a W with residues");
          std::vector<std::vector<Q>> vecs;
          for (int i : ai) vecs.push_back(functional_vector(w->D, w->deg, args[i]));
          std::vector<Q> t = contract_tail(w->coef, w->side(), vecs);
          int s = w->side();
          if (sl.size() == 1) {
            v = lincomb(t, slots[sl[0]], 0, 1, s);
          } else if (sl.size() == 2) {
            Slot& a = slots[sl[0]];
            Slot& b = slots[sl[1]];
            v = QSeries(zero, kExactPrec);
            for (int j = 0; j < s; ++j) {
              QSeries inner = lincomb(t, a, static_cast<std::size_t>(j) * s, 1, s);
              if (inner.is_known_zero() && inner.prec() >= kExactPrec / 2) continue;
              v = v + inner * b.power(j);
            }
          } else if (sl.size() == 3) {
            Slot& a = slots[sl[0]];
            Slot& b = slots[sl[1]];
            Slot& c = slots[sl[2]];
            v = QSeries(zero, kExactPrec);
            for (int k = 0; k < s; ++k) {
              QSeries mid(zero, kExactPrec);
              for (int j = 0; j < s; ++j) {
                QSeries inner = lincomb(t, a, static_cast<std::size_t>(k) * s * s + static_cast<std::size_t>(j) * s, 1, s);
                if (inner.is_known_zero() && inner.prec() >= kExactPrec / 2) continue;
                mid = mid + inner * b.power(j);
              }
              v = v + mid * c.power(k);
            }
          } else {
            throw std::logic_error("block with no series slot");
          }
          for (int sidx : sl) v = v * slots[sidx].dZ * slots[sidx].inv_MD(M_, w->D);
        }
        block_cache.emplace(key, v);
        return v;
      };

      G = QSeries(zero, kExactPrec);
      std::vector<std::vector<int>> betas = {{1}};
      if (have2) betas = {{1}, {2}, {1, 2}};
      for (const auto& beta : betas) {
        int k = static_cast<int>(beta.size());
        std::vector<int> t = {0};
        t.insert(t.end(), beta.begin(), beta.end());
        QSeries E = QSeries::constant(one, kExactPrec);
        for (int b : beta) E = E * (yv[0] - yv[b]) * xp0;
        QSeries R(zero, kExactPrec);
        for (const auto& term : r_operator_terms(k + 1, g, n)) {
          QSeries prod = QSeries::constant(one, kExactPrec);
          for (const auto& blk : term) {
            std::vector<int> sl;
            for (int ti : blk.t) sl.push_back(t[ti]);
            prod = prod * block(blk.g, sl, blk.args);
            if (prod.is_known_zero() && prod.prec() >= kExactPrec / 2) break;
          }
          R = R + prod;
        }
        QSeries contrib = R * E.inverse();
        G = (k % 2 == 1) ? G + contrib : G - contrib;
      }
      if (G.prec() >= 0) break;
      if (attempt > 6) throw TruncationError("engine: truncation underflow persists");
      N += -G.prec() + 4;
    }

    if (!cd.effective) {
      bool vanished = true;
      for (int e = G.val(); e < 0; ++e)
        if (!G.coeff(e).is_zero()) vanished = false;
      res.ineffective.push_back({cd.rp.where.str(), true, vanished});
      continue;
    }
    if (G.val() < -D) throw ArithmeticError("engine: pole order exceeds the bound 6g + 2n - 4");
    res.alpha_residue += G.coeff(-1).trace();
    // q(z0) = M(z0) / (z0 - rho) by synthetic division.
    Poly<QElem> Mq = lift(M_, zero);
    std::vector<QElem> qc(d, zero);
    {
      QElem carry = zero;
      for (int i = d; i >= 1; --i) {
        carry = carry * ch.base + Mq.c[i];
        qc[i - 1] = carry;
      }
    }
    Poly<QElem> q(qc);
    // sum_j c_j q^j M^(D-j) by Horner in q.
    std::vector<Poly<QElem>> Mpow(D + 1);
    Mpow[0] = Poly<QElem>({one});
    for (int k = 1; k <= D; ++k) Mpow[k] = Mpow[k - 1] * Mq;
    Poly<QElem> acc;
    for (int j = D; j >= 1; --j) {
      acc = acc * q;
      QElem cj = G.coeff(-j);
      if (!cj.is_zero()) acc += Mpow[D - j] * cj;
    }
    acc = acc * q;
    for (int i = 0; i <= acc.degree(); ++i) {
      if (i >= static_cast<int>(numer.size())) numer.resize(i + 1);
      numer[i] += acc.c[i].trace();
    }
  }
  res.numerator = PolynomialQ(numer);
  return res;
}

// ---------------------------------------------------------------- storage

StoredWPtr Recursion::W(int g, int n) {
  if (auto p = memo_.find(g, n)) return p;
  check_caps(g, n);
  if (2 * g + n - 2 < 1) throw std::invalid_argument("W: stored functions need 2g + n - 2 >= 1");
  return memo_.publish(g, n, build(g, n));
}

StoredWPtr Recursion::build(int g, int n) {
  auto w = std::make_shared<StoredW>();
  w->g = g;
  w->n = n;
  w->D = pole_order(g, n);
  w->M = M_;
  const int d = M_.degree();
  w->deg = d * w->D - 2;
  const int s = w->side();
  const int D = w->D;

  auto check_result = [&](const EngineResult& r) {
    if (sgn(r.alpha_residue) != 0) throw ArithmeticError("recursion result depends on the base point alpha");
    for (const auto& ie : r.ineffective)
      if (ie.checked && !ie.vanished) throw ArithmeticError("nonzero contribution at ineffective point " + ie.where);
    if (r.numerator.degree() > w->deg) throw ArithmeticError("numerator degree exceeds the storage bound");
  };

  if (n == 1) {
    EngineResult r = engine(g, {});
    check_result(r);
    w->coef.assign(s, Q(0));
    for (int i = 0; i <= r.numerator.degree(); ++i) w->coef[i] = r.numerator.c[i];
  } else {
    // Interpolation nodes avoid z = 0 and the turning points.
    std::vector<Q> nodes;
    for (int k = 1; static_cast<int>(nodes.size()) < s; ++k) {
      for (Q c : {Q(k), Q(-k)}) {
        if (static_cast<int>(nodes.size()) < s && sgn(eval(M_, c)) != 0) nodes.push_back(c);
      }
    }
    std::vector<Q> mD(s);
    for (int i = 0; i < s; ++i) {
      Q m = eval(M_, nodes[i]), p = 1;
      for (int e = 0; e < D; ++e) p *= m;
      mD[i] = p;
    }
    const int k = n - 1;
    std::size_t total = 1;
    for (int i = 0; i < n; ++i) total *= s;
    std::vector<Q> vals(total);
    std::vector<int> idx(k, 0);
    std::function<void(int, int)> rec = [&](int pos, int lo) {
      if (pos == k) {
        std::vector<Arg> args;
        Q scale = 1;
        for (int i : idx) {
          args.push_back(Arg::point(nodes[i]));
          scale *= mD[i];
        }
        EngineResult r = engine(g, args, RecursionMode::Local);
        check_result(r);
        PolynomialQ p = r.numerator * scale;
        std::vector<int> perm = idx;
        std::sort(perm.begin(), perm.end());
        do {
          std::size_t off = 0, mul = s;
          for (int i : perm) {
            off += mul * i;
            mul *= s;
          }
          for (int i = 0; i <= p.degree(); ++i) vals[off + i] = p.c[i];
        } while (std::next_permutation(perm.begin(), perm.end()));
        return;
      }
      for (int i = lo; i < s; ++i) {
        idx[pos] = i;
        rec(pos + 1, i);
      }
    };
    rec(0, 0);
    // Inverse Vandermonde on each node axis.
    std::vector<std::vector<Q>> V(s, std::vector<Q>(s));
    {
      // Solve via Lagrange basis coefficients: column i is the coefficient vector of L_i.
      for (int i = 0; i < s; ++i) {
        PolynomialQ L = poly_from({1});
        Q den = 1;
        for (int j = 0; j < s; ++j) {
          if (j == i) continue;
          L *= PolynomialQ({-nodes[j], Q(1)});
          den *= nodes[i] - nodes[j];
        }
        for (int e = 0; e < s; ++e) V[e][i] = coeff(L, e) / den;
      }
    }
    std::size_t stride = s;
    for (int axis = 1; axis < n; ++axis) {
      std::vector<Q> out(total);
      for (std::size_t base = 0; base < total; ++base) {
        if ((base / stride) % s != 0) continue;
        for (int e = 0; e < s; ++e) {
          Q acc = 0;
          for (int i = 0; i < s; ++i)
            if (sgn(V[e][i]) != 0 && sgn(vals[base + stride * i]) != 0) acc += V[e][i] * vals[base + stride * i];
          out[base + stride * e] = acc;
        }
      }
      vals = std::move(out);
      stride *= s;
    }
    w->coef = std::move(vals);
    // Symmetry between z0 and z1 is not built in; it certifies the tensor.
    for (std::size_t off = 0; off < total; ++off) {
      std::size_t i0 = off % s, i1 = (off / s) % s;
      std::size_t sw = off - i0 - i1 * s + i1 + i0 * s;
      if (w->coef[off] != w->coef[sw]) throw ArithmeticError("recursion output is not symmetric");
    }
    // Spot check off the grid.
    std::vector<Arg> args;
    std::vector<Q> rest;
    Q scale = 1;
    for (int i = 0; i < k; ++i) {
      Q c(2 * i + 3, 7);
      if (sgn(eval(M_, c)) == 0) c += Q(1, 11);
      args.push_back(Arg::point(c));
      rest.push_back(c);
      Q m = eval(M_, c);
      for (int e = 0; e < D; ++e) scale *= m;
    }
    EngineResult r = engine(g, args, RecursionMode::Local);
    check_result(r);
    if (r.numerator * scale != w->slice(rest)) throw ArithmeticError("interpolated W fails the off-grid check");
  }
  // Per-variable residues vanish iff the Hermite remainders cancel.
  std::vector<std::pair<RationalFunctionQ, PolynomialQ>> prim;
  {
    std::lock_guard<std::mutex> lock(fv_mu_);
    auto& slot = primitives_[D];
    for (int j = static_cast<int>(slot.size()); j <= w->deg; ++j) {
      HermiteResult h = hermite_reduce(PolynomialQ::monomial(Q(1), j), M_, D);
      slot.emplace_back(h.rational, h.remainder);
    }
    prim = slot;
  }
  bool ok = true;
  std::size_t rest_count = w->coef.size() / s;
  for (std::size_t r = 0; r < rest_count && ok; ++r) {
    PolynomialQ acc;
    for (int j = 0; j < s; ++j)
      if (sgn(w->coef[j + s * r]) != 0) acc += prim[j].second * w->coef[j + s * r];
    if (!acc.is_zero_poly()) ok = false;
  }
  w->residue_free = ok;
  return w;
}

}  // namespace trv
