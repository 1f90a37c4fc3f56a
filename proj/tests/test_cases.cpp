#include "atmofv/cases.hpp"
#include "atmofv/error.hpp"
#include "atmofv/hydrostatics.hpp"
#include "atmofv/operator.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace atmofv;
using testing_support::close_rel;

TEST_CASE("case tokens") {
  CHECK(parse_case_id("hydrostatic") == CaseId::Hydrostatic);
  CHECK(parse_case_id("bubble") == CaseId::Bubble);
  CHECK(parse_case_id("density-current") == CaseId::DensityCurrent);
  CHECK_THROWS_AS(parse_case_id("squall-line"), ConfigError);
}

TEST_CASE("presets") {
  const CaseConfig h = preset(CaseId::Hydrostatic);
  const GridSpec gh = grid_spec(h);
  CHECK(gh.nx == 64);
  CHECK(gh.nz == 4);
  CHECK(h.dt == 0.1);
  CHECK(step_count(h) == 36000);

  const CaseConfig b = preset(CaseId::Bubble);
  CHECK(grid_spec(b).nx == 200);
  CHECK(grid_spec(b).nz == 200);
  CHECK(b.diffusion.mu_a == 0.15);
  CHECK(b.diffusion.Pr == 1.0);
  CHECK(b.t_end == 600.0);
  CHECK(step_count(b) == 60000);
  CHECK(b.bump.center_x == 500.0);
  CHECK(b.bump.center_z == 350.0);

  const CaseConfig d = preset(CaseId::DensityCurrent);
  CHECK(grid_spec(d).nx == 512);
  CHECK(grid_spec(d).nz == 128);
  CHECK(d.dt == 0.05);
  CHECK(d.diffusion.mu_a == 75.0);
  CHECK(step_count(d) == 18000);
  for (CaseId id : {CaseId::Hydrostatic, CaseId::Bubble, CaseId::DensityCurrent}) CHECK_NOTHROW(validate(preset(id)));
}

TEST_CASE("inconsistent configurations") {
  CaseConfig c = preset(CaseId::Hydrostatic);
  c.dz = 250.0;  // 800 / 250 is not an integer
  CHECK_THROWS_AS(grid_spec(c), ConfigError);
  c = preset(CaseId::Hydrostatic);
  c.dt = 0.07;
  CHECK_THROWS_AS(step_count(c), ConfigError);
  c.dt = -1.0;
  CHECK_THROWS_AS(step_count(c), ConfigError);
  c = preset(CaseId::Bubble);
  c.diffusion.Pr = 0.0;
  CHECK_THROWS_AS(validate(c), ConfigError);
  c = preset(CaseId::Bubble);
  c.t_end = 0.0;
  CHECK(step_count(c) == 0);
}

TEST_CASE("hydrostatic initial state") {
  const GasConstants k = dry_air();
  const CaseConfig cfg = preset(CaseId::Hydrostatic);
  const Mesh mesh(grid_spec(cfg));
  const Field<ConservedState> q = init_hydrostatic(cfg, mesh, k);
  const PrimitiveState ground = primitive_from_conserved(q(0, 0), mesh.z_center(0), k);
  CHECK(ground.rho < 1.16144);
  CHECK(ground.rho == doctest::Approx(1.16144).epsilon(0.02));
  for (int j = 0; j < mesh.nz(); ++j)
    for (int i = 0; i < mesh.nx(); ++i) {
      const PrimitiveState s = primitive_from_conserved(q(i, j), mesh.z_center(j), k);
      CHECK(std::abs(s.theta - 300.0) <= 1e-12 * 300.0);
      CHECK(s.u == 0.0);
      CHECK(s.w == 0.0);
    }
  for (FluxScheme scheme : kAllSchemes) {
    const RhsField rhs = assemble_rhs(q, {{scheme, {}}, cfg.diffusion}, mesh, k);
    double worst = 0.0;
    for (int j = 0; j < mesh.nz(); ++j)
      for (int i = 0; i < mesh.nx(); ++i) worst = std::max(worst, std::abs(rhs(i, j).rho_w));
    CHECK(worst <= 1e-10 * 1.2 * k.g);
  }
}

TEST_CASE("bubble initial state") {
  const GasConstants k = dry_air();
  CaseConfig cfg = preset(CaseId::Bubble);
  CHECK(cfg.bump(500.0, 350.0) == 0.5);
  CHECK(std::abs(cfg.bump(750.0, 350.0)) <= 1e-17);
  CHECK(cfg.bump(500.0, 350.0 + 125.0) == doctest::Approx(0.25).epsilon(1e-14));

  // Odd cell count so one centre sits exactly at the bubble centre.
  cfg.x_max = 1010.0;
  cfg.dx = 10.0;
  cfg.z_max = 1000.0;
  cfg.dz = 10.0;
  cfg.bump.center_x = 505.0;
  cfg.bump.center_z = 355.0;
  const Mesh mesh(grid_spec(cfg));
  const Field<ConservedState> q = init_bubble(cfg, mesh, k);
  const PrimitiveState c = primitive_from_conserved(q(50, 35), mesh.z_center(35), k);
  CHECK(c.theta == doctest::Approx(300.5).epsilon(1e-12));
  const ColumnState col = isentropic_column(300.0, mesh.z_center(35), k);
  CHECK(close_rel(c.p, col.p0, 1e-12));
  CHECK(c.rho < col.rho0);

  const CaseConfig hcfg = [&] {
    CaseConfig h = cfg;
    h.id = CaseId::Hydrostatic;
    return h;
  }();
  const Field<ConservedState> h = init_hydrostatic(hcfg, mesh, k);
  // Far field is bitwise the hydrostatic initializer.
  CHECK(q(0, 0) == h(0, 0));
  CHECK(q(100, 99) == h(100, 99));
  CHECK(q(50, 80) == h(50, 80));
}

TEST_CASE("density-current initial state") {
  const GasConstants k = dry_air();
  const CaseConfig cfg = preset(CaseId::DensityCurrent);
  CHECK(cfg.bump(0.0, 3000.0) == -15.0);
  CHECK(cfg.bump(2000.0, 3000.0) == doctest::Approx(-7.5).epsilon(1e-14));
  CHECK(std::abs(cfg.bump(4000.0, 3000.0)) <= 1e-15);
  CHECK(std::abs(cfg.bump(0.0, 5000.0)) <= 1e-15);
  CHECK(cfg.bump(0.0, 5001.0) == 0.0);
  const Mesh mesh(grid_spec(cfg));
  const Field<ConservedState> q = initial_state(cfg, mesh, k);
  const PrimitiveState s = primitive_from_conserved(q(0, 59), mesh.z_center(59), k);
  CHECK(s.theta == doctest::Approx(300.0 + cfg.bump(25.0, 2975.0)).epsilon(1e-12));
  CHECK(s.theta < 285.1);
  for (int j = 0; j < mesh.nz(); j += 7)
    for (int i = 0; i < mesh.nx(); i += 13) {
      const PrimitiveState p = primitive_from_conserved(q(i, j), mesh.z_center(j), k);
      CHECK_NOTHROW(validate(p, k));
    }
}
