#include "atmofv/shocktube.hpp"

#include "atmofv/cases.hpp"
#include "atmofv/error.hpp"
#include "atmofv/simulation.hpp"

#include <cmath>

namespace atmofv {

ShockTubeResult run_shock_tube(const SolverChoice& solver, const ShockTubeSetup& setup) {
  if (setup.cells < 3) throw ConfigError("shock tube needs at least 3 cells");
  const GasConstants k = make_gas_constants(2.5, 1.0, 0.0, 1.0e5);
  const double h = 1.0 / setup.cells;

  CaseConfig cfg;
  cfg.id = CaseId::Hydrostatic;
  cfg.x_min = 0.0;
  cfg.x_max = 1.0;
  cfg.z_max = 3.0 * h;
  cfg.dx = h;
  cfg.dz = h;
  cfg.dt = setup.dt_per_dx * h;
  cfg.t_end = setup.t_end;
  cfg.diffusion = {0.0, 1.0};
  cfg.solver = solver;

  const Mesh mesh(grid_spec(cfg));
  Field<ConservedState> q(mesh);
  for (int j = 0; j < mesh.nz(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const GasState1D& s = mesh.x_center(i) < 0.5 ? setup.left : setup.right;
      q(i, j) = {s.rho, s.rho * s.u, 0.0, s.p / (k.gamma - 1.0) + 0.5 * s.rho * s.u * s.u};
    }
  }

  Simulation sim(cfg, k, std::move(q));
  for (std::int64_t n = 0; n < sim.total_steps(); ++n) sim.step();

  const ExactRiemannSolution exact(setup.left, setup.right, k.gamma);
  ShockTubeResult r;
  const int j = 1;
  for (int i = 0; i < mesh.nx(); ++i) {
    const double x = mesh.x_center(i);
    const double rho = sim.state().states(i, j).rho;
    const double ref = exact.sample((x - 0.5) / setup.t_end).rho;
    r.x.push_back(x);
    r.rho.push_back(rho);
    r.rho_exact.push_back(ref);
    r.l1_error += std::abs(rho - ref) * h;
  }
  return r;
}

}  // namespace atmofv
