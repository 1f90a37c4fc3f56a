#include "atmofv/muscl.hpp"

#include "atmofv/error.hpp"

#include <sstream>

namespace atmofv {

namespace {

const char* side_name(FaceSide s) {
  switch (s) {
    case FaceSide::West:
      return "west";
    case FaceSide::East:
      return "east";
    case FaceSide::South:
      return "south";
    case FaceSide::North:
      return "north";
  }
  return "?";
}

}  // namespace

CellSlopes perturbation_slopes(const Field<PrimitiveState>& prim,
                               const HydrostaticProfileField& profiles, const Mesh& mesh,
                               CellIndex c) {
  const HydrostaticProfile& prof = profiles(c);
  const PrimitiveState& s = prim(c);
  const double zc = mesh.z_center(c.j);
  const double p_own = s.p - prof.p0_c;
  const double rho_own = s.rho - prof.rho0_c;

  CellSlopes out;
  {
    // Horizontal neighbours share z_c, so the profile value there is the anchor.
    const PrimitiveState& wst = prim(c.i - 1, c.j);
    const PrimitiveState& est = prim(c.i + 1, c.j);
    const double dx = mesh.dx();
    out.x.p = mc_limiter((p_own - (wst.p - prof.p0_c)) / dx, ((est.p - prof.p0_c) - p_own) / dx);
    out.x.rho =
        mc_limiter((rho_own - (wst.rho - prof.rho0_c)) / dx, ((est.rho - prof.rho0_c) - rho_own) / dx);
    out.x.u = mc_limiter((s.u - wst.u) / dx, (est.u - s.u) / dx);
    out.x.w = mc_limiter((s.w - wst.w) / dx, (est.w - s.w) / dx);
  }
  {
    const PrimitiveState& sth = prim(c.i, c.j - 1);
    const PrimitiveState& nth = prim(c.i, c.j + 1);
    const double dz = mesh.dz();
    const HydrostaticProfile::Value below = prof.evaluate(zc - dz);
    const HydrostaticProfile::Value above = prof.evaluate(zc + dz);
    out.z.p = mc_limiter((p_own - (sth.p - below.p0)) / dz, ((nth.p - above.p0) - p_own) / dz);
    out.z.rho =
        mc_limiter((rho_own - (sth.rho - below.rho0)) / dz, ((nth.rho - above.rho0) - rho_own) / dz);
    out.z.u = mc_limiter((s.u - sth.u) / dz, (nth.u - s.u) / dz);
    out.z.w = mc_limiter((s.w - sth.w) / dz, (nth.w - s.w) / dz);
  }
  return out;
}

PrimitiveState face_state(const Field<PrimitiveState>& prim, const HydrostaticProfileField& profiles,
                          const CellSlopes& slopes, const Mesh& mesh, CellIndex c, FaceSide side,
                          const GasConstants& k) {
  const HydrostaticProfile& prof = profiles(c);
  const PrimitiveState& s = prim(c);
  const double zc = mesh.z_center(c.j);
  const bool horizontal = side == FaceSide::West || side == FaceSide::East;
  const Slopes& sl = horizontal ? slopes.x : slopes.z;
  const double sign = (side == FaceSide::East || side == FaceSide::North) ? 1.0 : -1.0;
  const double half = 0.5 * (horizontal ? mesh.dx() : mesh.dz());
  const double z_face = horizontal ? zc : zc + sign * half;

  const HydrostaticProfile::Value eq =
      horizontal ? HydrostaticProfile::Value{prof.rho0_c, prof.p0_c} : prof.evaluate(z_face);
  PrimitiveState f;
  f.p = eq.p0 + ((s.p - prof.p0_c) + sign * half * sl.p);
  f.rho = eq.rho0 + ((s.rho - prof.rho0_c) + sign * half * sl.rho);
  f.u = s.u + sign * half * sl.u;
  f.w = s.w + sign * half * sl.w;
  if (!(f.p > 0.0) || !(f.rho > 0.0)) {
    std::ostringstream os;
    os << "non-positive reconstruction (rho=" << f.rho << ", p=" << f.p << ") in cell (" << c.i
       << ", " << c.j << ") at " << side_name(side) << " face";
    throw PositivityError(os.str());
  }
  f.T = f.p / (f.rho * k.R);
  f.theta = f.T / exner(f.p, k);
  return f;
}

FacePair reconstruct_face(const Field<PrimitiveState>& prim, const HydrostaticProfileField& profiles,
                          const Mesh& mesh, std::size_t face_index, const GasConstants& k) {
  const FaceGeometry geo = mesh.face(face_index);
  const bool x_face = geo.normal.x != 0.0;
  FacePair fp;
  fp.normal = geo.normal;
  fp.z_face = geo.z;

  const bool owner_inside = mesh.is_interior(geo.owner);
  const bool neighbor_inside = mesh.is_interior(geo.neighbor);
  if (owner_inside) {
    const CellSlopes sl = perturbation_slopes(prim, profiles, mesh, geo.owner);
    fp.left = face_state(prim, profiles, sl, mesh, geo.owner, x_face ? FaceSide::East : FaceSide::North, k);
  }
  if (neighbor_inside) {
    const CellSlopes sl = perturbation_slopes(prim, profiles, mesh, geo.neighbor);
    fp.right =
        face_state(prim, profiles, sl, mesh, geo.neighbor, x_face ? FaceSide::West : FaceSide::South, k);
  }
  if (!owner_inside) {
    fp.left = fp.right;
    (x_face ? fp.left.u : fp.left.w) *= -1.0;
  }
  if (!neighbor_inside) {
    fp.right = fp.left;
    (x_face ? fp.right.u : fp.right.w) *= -1.0;
  }
  return fp;
}

}  // namespace atmofv
