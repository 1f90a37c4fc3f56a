#pragma once

#include "atmofv/mesh.hpp"
#include "atmofv/thermo.hpp"

#include <string>
#include <string_view>

namespace atmofv {

enum class FluxScheme { RoePike, Hllc, AusmUp, HllcAusm };

/// Low-Mach parameters of the AUSM family.
struct AusmParams {
  double K_p = 0.25;
  double K_u = 0.75;
  double sigma = 1.0;
  double M_inf = 0.01;
  /// Use coefficient 2 (canonical AUSM+) instead of 1 in the interface-Mach
  /// polynomial M2(1 -+ c M2).
  bool beta_canonical = false;
};

/// Cut-off Mach number used when none is given. AUSM+-up needs a larger
/// cut-off than HLLC-AUSM: its M_p term scales like 1/f_a and sets the
/// explicit time-step limit.
inline constexpr double default_m_inf(FluxScheme scheme) {
  return scheme == FluxScheme::AusmUp ? 0.3 : 0.01;
}

struct SolverChoice {
  FluxScheme scheme = FluxScheme::HllcAusm;
  AusmParams ausm;

  static SolverChoice defaults_for(FluxScheme s) {
    SolverChoice c{s, {}};
    c.ausm.M_inf = default_m_inf(s);
    return c;
  }
};

/// Throws ConfigError on non-positive parameters or M_inf outside (0, 1].
void validate(const SolverChoice& choice);

/// CLI tokens: roe-pike | hllc | ausm-up | hllc-ausm.
FluxScheme parse_flux_scheme(std::string_view token);
std::string_view to_string(FluxScheme scheme);
inline constexpr FluxScheme kAllSchemes[] = {FluxScheme::RoePike, FluxScheme::Hllc,
                                             FluxScheme::AusmUp, FluxScheme::HllcAusm};

struct InterfaceFlux {
  double mass = 0.0;
  Vec2 momentum;
  double energy = 0.0;
};

/// Left/right states at a face; `normal` points from left to right.
struct FacePair {
  PrimitiveState left;
  PrimitiveState right;
  Vec2 normal;
  double z_face = 0.0;
};

/// (rho u.n, rho u (u.n) + p n, (rho e + p) u.n) with e = c_v T + K + g z.
InterfaceFlux physical_flux(const PrimitiveState& s, Vec2 n, double z, const GasConstants& k);

InterfaceFlux roe_pike_flux(const FacePair& fp, const GasConstants& k);
InterfaceFlux hllc_flux(const FacePair& fp, const GasConstants& k);
InterfaceFlux ausm_up_flux(const FacePair& fp, const AusmParams& params, const GasConstants& k);
InterfaceFlux hllc_ausm_flux(const FacePair& fp, const GasConstants& k,
                             const AusmParams& params = {});

/// Dispatch on choice.scheme.
InterfaceFlux compute_flux(const SolverChoice& choice, const FacePair& fp, const GasConstants& k);

}  // namespace atmofv
