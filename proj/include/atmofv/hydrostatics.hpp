#pragma once

#include "atmofv/mesh.hpp"
#include "atmofv/thermo.hpp"

namespace atmofv {

/// Local polytropic equilibrium p0 = P rho0^gamma anchored at a cell centre.
///
/// Within the cell,
///   rho0(z) = (rho0_c^(gamma-1) - (gamma-1)/gamma * g/P * (z - z_c))^(1/(gamma-1)),
/// evaluated here in the equivalent scaled form
///   rho0(z) = rho0_c * (1 - lapse * (z - z_c))^(1/(gamma-1)),
///   lapse   = (gamma-1)/gamma * g * rho0_c / p0_c,
/// which reproduces rho0_c bitwise at z = z_c and stays constant when g = 0.
struct HydrostaticProfile {
  double rho0_c = 0.0;
  double p0_c = 0.0;
  double z_c = 0.0;
  double dz = 0.0;
  double lapse = 0.0;     // 1/m
  double exponent = 0.0;  // 1/(gamma-1)
  double gamma = 0.0;

  /// P = p0_c / rho0_c^gamma.
  double polytropic_coefficient() const;

  /// Root argument 1 - lapse * (z - z_c); must stay positive.
  double base(double z) const { return 1.0 - lapse * (z - z_c); }

  double rho0(double z) const;
  double p0(double z) const;

  struct Value {
    double rho0;
    double p0;
  };
  /// Both profiles with a single pow; throws ProfileDegenerateError if base(z) <= 0.
  Value evaluate(double z) const;

  friend bool operator==(const HydrostaticProfile&, const HydrostaticProfile&) = default;
};

/// Throws ProfileDegenerateError when the root argument is non-positive
/// anywhere in [z_c - dz/2, z_c + dz/2], DomainError on non-positive anchors.
HydrostaticProfile profile_from_center(double rho0_c, double p0_c, double z_c, double dz,
                                       const GasConstants& k);

struct ColumnState {
  double p0;
  double rho0;
  double T0;
};

/// Uniform-theta hydrostatic column:
///   p0 = p_g (1 - g z/(c_p theta0))^(c_p/R), T0 = theta0 (p0/p_g)^(R/c_p), rho0 = p0/(R T0).
ColumnState isentropic_column(double theta0, double z, const GasConstants& k);

using HydrostaticProfileField = Field<HydrostaticProfile>;


/// Re-anchors every interior profile at the current cell averages, so the
/// centre perturbations p' and rho' vanish exactly afterwards.
HydrostaticProfileField refresh_profiles(const Field<ConservedState>& states, const Mesh& mesh,
                                         const GasConstants& k);

}  // namespace atmofv
