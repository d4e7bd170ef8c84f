#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trvoros/recursion/correlation.hpp"

namespace trv {

// Primitive of y dx as rational(z) + log_coeff * log z.
struct PhiPrimitive {
  RationalFunctionQ rational;
  Q log_coeff;
};
PhiPrimitive phi_primitive(const SpectralCurve& c);

struct FreeEnergyResidues {
  Q value;                // F_g from the turning class
  Q ineffective_residue;  // Res of Phi_rational W_{g,1} at the non-turning ramification points
  std::vector<std::string> ineffective_points;
};

// F_g = 1/(2-2g) sum_r Res Phi W_{g,1}, g >= 2, with log z expanded as
// log(rho) + log(1 + u/rho) at each root rho of the turning class.
// `phi_shift` is added to Phi to exercise the constant-independence.
FreeEnergyResidues free_energy(Recursion& rec, int g, const Q& phi_shift = Q(0));

// Same quantity via Res Phi dH = -Res H y dx where W_{g,1} = dH.
Q free_energy_by_parts(Recursion& rec, int g);

// Res_{z = infinity} f(z) dz.
Q residue_at_infinity(const RationalFunctionQ& f);

// -Res_{z = infinity} z^2 W_{g,1}; g = 0 uses W_{0,1} = y dx.
Q t_derivative_residue(Recursion& rec, int g);

// int_0^infinity ... int_0^infinity W_{g,n}.
Q variational_integral(Recursion& rec, int g, int n);

}  // namespace trv
