#include "trvoros/wkb/quantum_curve.hpp"

#include <sstream>

namespace trv {

namespace {

const RationalFunctionQ& zero_rf() {
  static const RationalFunctionQ z;
  return z;
}

RationalFunctionQ x_pow(int e) {
  if (e >= 0) return RationalFunctionQ(poly_pow(poly_x(), e));
  return RationalFunctionQ(poly_from({1}), poly_pow(poly_x(), -e));
}

// k-th derivative.
RationalFunctionQ nth_derivative(RationalFunctionQ f, int k) {
  for (int i = 0; i < k; ++i) f = f.derivative();
  return f;
}

}  // namespace

DiffOp DiffOp::multiply(const RationalFunctionQ& f, int hbar_power) {
  DiffOp d;
  d.add(0, hbar_power, f);
  d.trim();
  return d;
}

DiffOp DiffOp::d_dx() {
  DiffOp d;
  d.add(1, 0, Q(1));
  return d;
}

const RationalFunctionQ& DiffOp::coeff(int k, int j) const {
  if (k < 0 || k >= static_cast<int>(a_.size()) || j < 0 || j >= static_cast<int>(a_[k].size())) return zero_rf();
  return a_[k][j];
}

int DiffOp::hbar_degree(int k) const {
  if (k < 0 || k >= static_cast<int>(a_.size())) return -1;
  return static_cast<int>(a_[k].size()) - 1;
}

void DiffOp::add(int k, int j, const RationalFunctionQ& f) {
  if (static_cast<int>(a_.size()) <= k) a_.resize(k + 1);
  if (static_cast<int>(a_[k].size()) <= j) a_[k].resize(j + 1);
  a_[k][j] += f;
}

void DiffOp::trim() {
  for (auto& row : a_)
    while (!row.empty() && row.back().is_zero()) row.pop_back();
  while (!a_.empty() && a_.back().empty()) a_.pop_back();
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
  DiffOp r = a;
  for (std::size_t k = 0; k < b.a_.size(); ++k)
    for (std::size_t j = 0; j < b.a_[k].size(); ++j) r.add(static_cast<int>(k), static_cast<int>(j), b.a_[k][j]);
  r.trim();
  return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) { return a + Q(-1) * b; }

DiffOp operator*(const Q& s, const DiffOp& a) {
  DiffOp r = a;
  for (auto& row : r.a_)
    for (auto& f : row) f *= RationalFunctionQ(s);
  r.trim();
  return r;
}

// (f d^p)(g d^q) = f sum_i C(p, i) g^(i) d^(p+q-i)
DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  DiffOp r;
  for (std::size_t p = 0; p < a.a_.size(); ++p)
    for (std::size_t ja = 0; ja < a.a_[p].size(); ++ja) {
      const RationalFunctionQ& f = a.a_[p][ja];
      if (f.is_zero()) continue;
      for (std::size_t q = 0; q < b.a_.size(); ++q)
        for (std::size_t jb = 0; jb < b.a_[q].size(); ++jb) {
          const RationalFunctionQ& g = b.a_[q][jb];
          if (g.is_zero()) continue;
          for (std::size_t i = 0; i <= p; ++i)
            r.add(static_cast<int>(p + q - i), static_cast<int>(ja + jb),
                  f * nth_derivative(g, static_cast<int>(i)) * RationalFunctionQ(Q(binomial(static_cast<int>(p), static_cast<int>(i)))));
        }
    }
  r.trim();
  return r;
}

bool operator==(const DiffOp& a, const DiffOp& b) {
  DiffOp d = a - b;
  return d.a_.empty();
}

std::string DiffOp::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = order(); k >= 0; --k)
    for (int j = 0; j <= hbar_degree(k); ++j) {
      if (a_[k][j].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << a_[k][j].str("x") << ")";
      if (j > 0) os << "*h^" << j;
      if (k > 0) os << "*d^" << k;
    }
  return first ? "0" : os.str();
}

DiffOp QuantumCurve::op() const {
  DiffOp r;
  for (int i = 0; i < 4; ++i) {
    int k = 3 - i;
    DiffOp dk = DiffOp::multiply(Q(1));
    for (int s = 0; s < k; ++s) dk = dk * DiffOp::d_dx();
    for (int j = 0; j < 2; ++j)
      if (!p[i][j].is_zero()) r = r + DiffOp::multiply(p[i][j], k + j) * dk;
  }
  return r;
}

std::string QuantumCurve::str() const {
  std::ostringstream os;
  const char* names[] = {"h^3 d^3", "h^2 d^2", "h d", "1"};
  for (int i = 0; i < 4; ++i) {
    os << "p" << i << " = (" << p[i][0].str("x") << ")";
    if (!p[i][1].is_zero()) os << " + h*(" << p[i][1].str("x") << ")";
    os << "   [" << names[i] << "]\n";
  }
  return os.str();
}

bool same_operator(const QuantumCurve& a, const QuantumCurve& b) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j)
      if (a.p[i][j] != b.p[i][j]) return false;
  return true;
}

QuantumCurve assemble_quantum_curve(const SpectralCurve& c) { return assemble_quantum_curve(c, divisor_for(c)); }

QuantumCurve assemble_quantum_curve(const SpectralCurve& c, const DivisorSpec& divisor) {
  BivariatePoly P = defining_polynomial(c);
  int ymax = 0;
  for (const auto& [ij, v] : P) ymax = std::max(ymax, ij.second);
  if (ymax != 3) throw std::invalid_argument("quantization needs a cubic defining polynomial");
  NewtonPolygonData np = newton_polygon(P);
  if (!is_admissible(np, P)) throw std::invalid_argument("curve is not admissible");
  std::array<int, 4> e{};
  for (int m = 0; m < 4; ++m) {
    if (!np.alpha[m]) throw std::invalid_argument("Newton polygon misses the row y^" + std::to_string(m));
    const Q& a = *np.alpha[m];
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
    e[m] = static_cast<int>(fl.get_si());
  }
  // p_i(x) multiplies y^(3-i).
  std::array<PolynomialQ, 4> pi;
  for (const auto& [ij, v] : P) {
    int i = 3 - ij.second;
    std::vector<Q> cf(ij.first + 1);
    cf[ij.first] = v;
    pi[i] += PolynomialQ(cf);
  }
  auto Pm = [&](int m) {
    RationalFunctionQ s;
    for (int k = 1; k <= m - 1; ++k) s += RationalFunctionQ(pi[m - 1 - k]).compose(c.x) * c.y.pow(k);
    return s;
  };
  std::array<Q, 3> C{};
  for (int k = 1; k <= 2; ++k) {
    RationalFunctionQ f = Pm(k + 1) / c.x.pow(e[3 - k] + 1);
    for (const auto& ep : divisor.endpoints) {
      Q lim;
      try {
        if (ep.where.kind == PointRef::Infinity) lim = f.limit_at_infinity();
        else lim = f.compose(rf_z() + RationalFunctionQ(ep.where.value)).limit_at_zero();
      } catch (const ArithmeticError&) {
        throw std::invalid_argument("divisor endpoint violates theorem hypotheses");
      }
      C[k] += ep.weight * lim;
    }
  }
  DiffOp hb = DiffOp::multiply(Q(1), 1);
  auto D = [&](int i) { return hb * DiffOp::multiply(x_pow(e[i] - e[i - 1])) * DiffOp::d_dx(); };
  auto mul = [&](const RationalFunctionQ& f) { return DiffOp::multiply(f); };
  DiffOp op = D(1) * D(2) * mul(RationalFunctionQ(pi[0]) * x_pow(-e[3])) * D(3) +
              D(1) * mul(RationalFunctionQ(pi[1]) * x_pow(-e[2])) * D(2) +
              mul(RationalFunctionQ(pi[2]) * x_pow(-e[1])) * D(1) + mul(RationalFunctionQ(pi[3]) * x_pow(-e[0])) -
              C[1] * (hb * D(1) * mul(x_pow(e[2] - e[1]))) - C[2] * (hb * mul(x_pow(e[1] - e[0])));
  QuantumCurve q;
  q.provenance = QuantumCurve::Assembled;
  q.C1 = C[1];
  q.C2 = C[2];
  for (int k = 0; k <= op.order(); ++k) {
    int i = 3 - k;
    if (i < 0) throw std::logic_error("quantized operator has order above 3");
    for (int j = 0; j <= op.hbar_degree(k); ++j) {
      const RationalFunctionQ& f = op.coeff(k, j);
      if (f.is_zero()) continue;
      if (j < k || j > k + 1) throw std::logic_error("quantized operator is not of WKB type");
      q.p[i][j - k] = f;
    }
  }
  if (!q.p[0][1].is_zero() || !q.p[1][1].is_zero()) throw std::logic_error("quantized operator has hbar corrections in p0 or p1");
  return q;
}

QuantumCurve preset_quantum_curve(CurveTag tag, const CurveParams& pr) {
  QuantumCurve q;
  RationalFunctionQ x = rf_z();
  if (tag == CurveTag::Curve14) {
    // 3 h^3 d^3 + 2t h^2 d^2 + x h d - (lambda - nu h)
    q.provenance = QuantumCurve::Preset14;
    q.p[0][0] = Q(3);
    q.p[1][0] = Q(Q(2) * pr.t);
    q.p[2][0] = x;
    q.p[3][0] = Q(-pr.lambda);
    q.p[3][1] = pr.nu;
  } else if (tag == CurveTag::Curve23) {
    // 4 h^3 d^3 - 2x h^2 d^2 + 2(lambda - nu h - h) h d - t
    q.provenance = QuantumCurve::Preset23;
    q.p[0][0] = Q(4);
    q.p[1][0] = Q(-2) * x;
    q.p[2][0] = Q(Q(2) * pr.lambda);
    q.p[2][1] = Q(Q(-2) * (pr.nu + 1));
    q.p[3][0] = Q(-pr.t);
  } else {
    throw UnknownCurveError("no preset operator for custom curves");
  }
  return q;
}

BivariatePoly classical_limit(const QuantumCurve& q) {
  BivariatePoly out;
  for (int i = 0; i < 4; ++i) {
    const RationalFunctionQ& f = q.p[i][0];
    if (!f.is_polynomial()) throw std::invalid_argument("classical_limit needs polynomial coefficients");
    PolynomialQ n = f.num() * (Q(1) / f.den().c[0]);
    for (int a = 0; a <= n.degree(); ++a)
      if (sgn(n.c[a]) != 0) out[{a, 3 - i}] = n.c[a];
  }
  return out;
}

}  // namespace trv
