#pragma once

#include "atmofv/hydrostatics.hpp"
#include "atmofv/mesh.hpp"
#include "atmofv/riemann.hpp"
#include "atmofv/thermo.hpp"

#include <cmath>

namespace atmofv {

/// Monotonized central limiter: 0 at extrema, else sign(a) min(2|a|, |a+b|/2, 2|b|).
inline double mc_limiter(double a, double b) {
  if (a * b <= 0.0) return 0.0;
  const double m = std::min(std::min(2.0 * std::abs(a), 0.5 * std::abs(a + b)), 2.0 * std::abs(b));
  return a > 0.0 ? m : -m;
}

/// Limited slopes of p', rho', u and w along one axis.
struct Slopes {
  double p = 0.0;
  double rho = 0.0;
  double u = 0.0;
  double w = 0.0;
};

struct CellSlopes {
  Slopes x;
  Slopes z;
};

/// Slopes of cell c. Pressure and density differences are perturbations with
/// respect to c's own hydrostatic profile evaluated at the neighbour centre;
/// velocity uses raw neighbour values. Needs ghosts filled.
CellSlopes perturbation_slopes(const Field<PrimitiveState>& prim,
                               const HydrostaticProfileField& profiles, const Mesh& mesh,
                               CellIndex c);

enum class FaceSide { West, East, South, North };

/// Reconstructed state of cell c at one of its faces: p = p0_c(z_face) + p',
/// rho likewise, linear velocity, T from the equation of state. Throws
/// PositivityError naming cell and face on non-positive rho or p.
PrimitiveState face_state(const Field<PrimitiveState>& prim, const HydrostaticProfileField& profiles,
                          const CellSlopes& slopes, const Mesh& mesh, CellIndex c, FaceSide side,
                          const GasConstants& k);

/// Left/right states at a mesh face. At walls the exterior state mirrors the
/// interior one (normal velocity negated).
FacePair reconstruct_face(const Field<PrimitiveState>& prim, const HydrostaticProfileField& profiles,
                          const Mesh& mesh, std::size_t face_index, const GasConstants& k);

}  // namespace atmofv
