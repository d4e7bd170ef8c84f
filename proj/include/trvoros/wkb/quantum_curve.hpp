#pragma once

#include <array>
#include <string>
#include <vector>

#include "trvoros/curve/newton_polygon.hpp"
#include "trvoros/curve/spectral_curve.hpp"

namespace trv {

// sum_{k, j} a[k][j](x) hbar^j (d/dx)^k, coefficients acting by left multiplication.
class DiffOp {
 public:
  DiffOp() = default;
  static DiffOp multiply(const RationalFunctionQ& f, int hbar_power = 0);
  static DiffOp d_dx();

  const RationalFunctionQ& coeff(int k, int j) const;
  int order() const { return static_cast<int>(a_.size()) - 1; }
  int hbar_degree(int k) const;

  friend DiffOp operator+(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator-(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend DiffOp operator*(const Q& s, const DiffOp& a);
  friend bool operator==(const DiffOp& a, const DiffOp& b);

  std::string str() const;

 private:
  void add(int k, int j, const RationalFunctionQ& f);
  void trim();
  std::vector<std::vector<RationalFunctionQ>> a_;
};

// p_i(x, hbar) = p_{i,0}(x) + hbar p_{i,1}(x), multiplying hbar^(3-i) (d/dx)^(3-i).
struct QuantumCurve {
  enum Provenance { Assembled, Preset14, Preset23 } provenance = Assembled;
  std::array<std::array<RationalFunctionQ, 2>, 4> p;
  Q C1, C2;  // only meaningful for Assembled

  DiffOp op() const;
  std::string str() const;
};

bool same_operator(const QuantumCurve& a, const QuantumCurve& b);

// Builds the operator of the quantization theorem from the curve's
// defining polynomial and the divisor.
QuantumCurve assemble_quantum_curve(const SpectralCurve& c, const DivisorSpec& divisor);
QuantumCurve assemble_quantum_curve(const SpectralCurve& c);
// The operators printed for the two preset curves.
QuantumCurve preset_quantum_curve(CurveTag tag, const CurveParams& p);

// Symbol at hbar -> 0 with hbar d/dx -> y, as a bivariate polynomial.
BivariatePoly classical_limit(const QuantumCurve& q);

}  // namespace trv
