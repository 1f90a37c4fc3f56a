#pragma once

#include "atmofv/hydrostatics.hpp"
#include "atmofv/mesh.hpp"
#include "atmofv/thermo.hpp"

namespace atmofv {

/// No-flux walls on all four sides by ghost-cell reflection.
///
/// Ghost cells mirror the interior across the wall: the normal velocity is
/// negated, the tangential one copied. At the bottom and top walls pressure
/// and density are mirrored as perturbations of the wall-adjacent cell's
/// hydrostatic profile, which is continued analytically into the ghost
/// layers; T follows from the equation of state. Corner ghosts are untouched.
void fill_ghosts(Field<PrimitiveState>& prim, const HydrostaticProfileField& profiles,
                 const Mesh& mesh, const GasConstants& k);

}  // namespace atmofv
