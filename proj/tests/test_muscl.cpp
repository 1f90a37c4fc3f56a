#include "atmofv/boundary.hpp"
#include "atmofv/error.hpp"
#include "atmofv/hydrostatics.hpp"
#include "atmofv/muscl.hpp"
#include "support.hpp"

#include <doctest.h>

#include <random>

using namespace atmofv;
using testing_support::close_rel;

TEST_CASE("mc limiter values") {
  CHECK(mc_limiter(1.0, 1.0) == 1.0);
  CHECK(mc_limiter(1.0, -2.0) == 0.0);
  CHECK(mc_limiter(0.5, 2.0) == 1.0);
  CHECK(mc_limiter(-0.5, -2.0) == -1.0);
  CHECK(mc_limiter(0.0, 3.0) == 0.0);
}

TEST_CASE("mc limiter is TVD") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> d(-10.0, 10.0);
  for (int n = 0; n < 10000; ++n) {
    const double a = d(rng), b = d(rng);
    const double r = mc_limiter(a, b);
    if (a * b > 0.0) {
      CHECK(std::abs(r) <= 2.0 * std::min(std::abs(a), std::abs(b)));
      CHECK((r == 0.0 || (r > 0.0) == (a > 0.0)));
    } else {
      CHECK(r == 0.0);
    }
  }
}

namespace {

struct Column {
  GasConstants k;
  Mesh mesh;
  Field<ConservedState> q;
  HydrostaticProfileField prof;
  Field<PrimitiveState> prim;

  explicit Column(const GasConstants& gas = dry_air(), GridSpec spec = {5, 8, 100.0, 100.0, 0.0, 0.0, 2})
      : k(gas), mesh(build_grid(spec)), q(testing_support::hydrostatic_field(mesh, k)),
        prof(refresh_profiles(q, mesh, k)), prim(mesh) {
    for (int j = 0; j < mesh.nz(); ++j)
      for (int i = 0; i < mesh.nx(); ++i)
        prim(i, j) = primitive_from_conserved(q(i, j), mesh.z_center(j), k);
    fill_ghosts(prim, prof, mesh, k);
  }
};

}  // namespace

TEST_CASE("equilibrium gives zero perturbation slopes, boundary cells included") {
  Column c;
  for (int j = 0; j < c.mesh.nz(); ++j) {
    for (int i = 0; i < c.mesh.nx(); ++i) {
      const CellSlopes s = perturbation_slopes(c.prim, c.prof, c.mesh, {i, j});
      const double pscale = c.prim(i, j).p / c.mesh.dz();
      const double rscale = c.prim(i, j).rho / c.mesh.dz();
      CHECK(std::abs(s.z.p) <= 1e-13 * pscale);
      CHECK(std::abs(s.z.rho) <= 1e-13 * rscale);
      CHECK(s.x.p == 0.0);
      CHECK(s.x.rho == 0.0);
      CHECK(s.x.u == 0.0);
      CHECK(s.z.w == 0.0);
    }
  }
}

TEST_CASE("equilibrium face states are continuous and equal the analytic column") {
  Column c;
  for (std::size_t f = 0; f < c.mesh.num_faces(); ++f) {
    const FacePair fp = reconstruct_face(c.prim, c.prof, c.mesh, f, c.k);
    CHECK(close_rel(fp.left.p, fp.right.p, 1e-12));
    CHECK(close_rel(fp.left.rho, fp.right.rho, 1e-12));
    const ColumnState col = isentropic_column(300.0, fp.z_face, c.k);
    CHECK(close_rel(fp.left.p, col.p0, 1e-12));
    CHECK(close_rel(fp.left.rho, col.rho0, 1e-12));
    CHECK(fp.left.u == 0.0);
    CHECK(fp.left.w == 0.0);
  }
}

TEST_CASE("horizontal slopes are limited differences of total values") {
  Column c;
  c.prim(1, 3).p += 50.0;
  c.prim(3, 3).p -= 20.0;
  c.prim(3, 3).rho += 0.001;
  const CellSlopes s = perturbation_slopes(c.prim, c.prof, c.mesh, {2, 3});
  const double dx = c.mesh.dx();
  CHECK(s.x.p == mc_limiter((c.prim(2, 3).p - c.prim(1, 3).p) / dx, (c.prim(3, 3).p - c.prim(2, 3).p) / dx));
  CHECK(s.x.rho ==
        mc_limiter((c.prim(2, 3).rho - c.prim(1, 3).rho) / dx, (c.prim(3, 3).rho - c.prim(2, 3).rho) / dx));
}

TEST_CASE("vertical slope recovers a manufactured linear perturbation") {
  Column c;
  // Profiles from the exact column; p = column + G z, rho = column + H z.
  const double G = 0.37, H = 2.0e-6;
  HydrostaticProfileField prof(c.mesh);
  for (int j = 0; j < c.mesh.nz(); ++j) {
    const double z = c.mesh.z_center(j);
    const ColumnState col = isentropic_column(300.0, z, c.k);
    for (int i = 0; i < c.mesh.nx(); ++i) {
      prof(i, j) = profile_from_center(col.rho0, col.p0, z, c.mesh.dz(), c.k);
      c.prim(i, j).p = col.p0 + G * z;
      c.prim(i, j).rho = col.rho0 + H * z;
    }
  }
  for (int j = 1; j + 1 < c.mesh.nz(); ++j) {
    const CellSlopes s = perturbation_slopes(c.prim, prof, c.mesh, {2, j});
    CHECK(s.z.p == doctest::Approx(G).epsilon(1e-6));
    CHECK(s.z.rho == doctest::Approx(H).epsilon(1e-6));
    const PrimitiveState top = face_state(c.prim, prof, s, c.mesh, {2, j}, FaceSide::North, c.k);
    const double zf = c.mesh.z_center(j) + 0.5 * c.mesh.dz();
    CHECK(top.p == doctest::Approx(isentropic_column(300.0, zf, c.k).p0 + G * zf).epsilon(1e-12));
  }
}

TEST_CASE("single-cell pressure offset against a scalar MUSCL oracle") {
  Column c;
  const double delta = 40.0;
  const int i0 = 2, j0 = 4;
  c.prim(i0, j0).p += delta;
  // Perturbation sequence seen by the cells around (i0, j0) along x: 0, delta, 0.
  auto oracle = [](double a, double b) { return mc_limiter(a, b); };
  const double dx = c.mesh.dx();
  {
    const CellSlopes s = perturbation_slopes(c.prim, c.prof, c.mesh, {i0, j0});
    CHECK(s.x.p == oracle(delta / dx, -delta / dx));
    const PrimitiveState e = face_state(c.prim, c.prof, s, c.mesh, {i0, j0}, FaceSide::East, c.k);
    CHECK(e.p == c.prof(i0, j0).p0_c + delta);
  }
  {
    const CellSlopes s = perturbation_slopes(c.prim, c.prof, c.mesh, {i0 - 1, j0});
    const double slope = oracle(0.0, delta / dx);
    CHECK(s.x.p == slope);
    const PrimitiveState e = face_state(c.prim, c.prof, s, c.mesh, {i0 - 1, j0}, FaceSide::East, c.k);
    CHECK(e.p == c.prof(i0 - 1, j0).p0_c + 0.5 * dx * slope);
  }
  // Two-cell ramp 0, delta, 2 delta: interior slope delta/dx.
  c.prim(i0 + 1, j0).p += 2 * delta;
  const CellSlopes s = perturbation_slopes(c.prim, c.prof, c.mesh, {i0, j0});
  CHECK(s.x.p == doctest::Approx(oracle(delta / dx, 2 * delta / dx - delta / dx)));
  const PrimitiveState w = face_state(c.prim, c.prof, s, c.mesh, {i0, j0}, FaceSide::West, c.k);
  CHECK(w.p == doctest::Approx(c.prof(i0, j0).p0_c + delta - 0.5 * dx * s.x.p).epsilon(1e-14));
}

TEST_CASE("uniform flow without gravity reconstructs the cell state everywhere") {
  const GasConstants k = make_gas_constants(715.5, 287.0, 0.0, 1e5);
  const Mesh mesh = build_grid({4, 4, 1.0, 1.0, 0.0, 0.0, 2});
  PrimitiveState s{1.1, 12.0, -3.0, 9.0e4, 0.0, 0.0};
  s.T = s.p / (s.rho * k.R);
  s.theta = potential_temperature(s.p, s.T, k);
  Field<ConservedState> q(mesh);
  Field<PrimitiveState> prim(mesh);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      q(i, j) = conserved_from_primitive(s, mesh.z_center(j), k);
      prim(i, j) = s;
    }
  const HydrostaticProfileField prof = refresh_profiles(q, mesh, k);
  fill_ghosts(prim, prof, mesh, k);
  for (int j = 0; j < 4; ++j)
    for (int i = 1; i < 3; ++i) {
      const std::size_t f = mesh.x_face_index(i + 1, j);
      const FacePair fp = reconstruct_face(prim, prof, mesh, f, k);
      CHECK(close_rel(fp.left.p, s.p, 1e-14));
      CHECK(close_rel(fp.right.rho, s.rho, 1e-14));
      CHECK(fp.left.u == s.u);
      CHECK(fp.right.w == s.w);
    }
}

TEST_CASE("wall faces mirror the interior state") {
  Column c;
  c.prim(0, 2).u = 5.0;
  c.prim(0, 2).w = 1.0;
  fill_ghosts(c.prim, c.prof, c.mesh, c.k);
  const FacePair fp = reconstruct_face(c.prim, c.prof, c.mesh, c.mesh.x_face_index(0, 2), c.k);
  CHECK(fp.left.u == -fp.right.u);
  CHECK(fp.left.w == fp.right.w);
  CHECK(fp.left.p == fp.right.p);
}

TEST_CASE("negative reconstructed pressure is a positivity error") {
  Column c;
  c.prim(2, 3).p = 1.0;  // far below both neighbours
  c.prim(3, 3).p = 1.0;
  c.prim(2, 3).rho = 1e-6;
  const CellSlopes s{{-1e9, 0.0, 0.0, 0.0}, {}};
  CHECK_THROWS_AS(face_state(c.prim, c.prof, s, c.mesh, {2, 3}, FaceSide::East, c.k), PositivityError);
}
