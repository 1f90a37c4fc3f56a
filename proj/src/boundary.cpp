#include "atmofv/boundary.hpp"

namespace atmofv {

namespace {

PrimitiveState mirror_vertical(const PrimitiveState& src, double z_src, double z_ghost,
                               const HydrostaticProfile& wall_profile, const GasConstants& k) {
  const HydrostaticProfile::Value at_src = wall_profile.evaluate(z_src);
  const HydrostaticProfile::Value at_ghost = wall_profile.evaluate(z_ghost);
  PrimitiveState g;
  g.rho = at_ghost.rho0 + (src.rho - at_src.rho0);
  g.p = at_ghost.p0 + (src.p - at_src.p0);
  g.u = src.u;
  g.w = -src.w;
  g.T = g.p / (g.rho * k.R);
  g.theta = g.T / exner(g.p, k);
  return g;
}

}  // namespace

void fill_ghosts(Field<PrimitiveState>& prim, const HydrostaticProfileField& profiles,
                 const Mesh& mesh, const GasConstants& k) {
  const int nx = mesh.nx();
  const int nz = mesh.nz();
  const int ng = mesh.n_ghost();

  for (int j = 0; j < nz; ++j) {
    for (int layer = 0; layer < ng; ++layer) {
      PrimitiveState left = prim(layer, j);
      left.u = -left.u;
      prim(-1 - layer, j) = left;
      PrimitiveState right = prim(nx - 1 - layer, j);
      right.u = -right.u;
      prim(nx + layer, j) = right;
    }
  }

  for (int i = 0; i < nx; ++i) {
    const HydrostaticProfile& bottom = profiles(i, 0);
    const HydrostaticProfile& top = profiles(i, nz - 1);
    for (int layer = 0; layer < ng; ++layer) {
      prim(i, -1 - layer) = mirror_vertical(prim(i, layer), mesh.z_center(layer),
                                            mesh.z_center(-1 - layer), bottom, k);
      prim(i, nz + layer) = mirror_vertical(prim(i, nz - 1 - layer), mesh.z_center(nz - 1 - layer),
                                            mesh.z_center(nz + layer), top, k);
    }
  }
}

}  // namespace atmofv
