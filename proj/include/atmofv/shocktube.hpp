#pragma once

#include "atmofv/exact_riemann.hpp"
#include "atmofv/riemann.hpp"

#include <vector>

namespace atmofv {

struct ShockTubeSetup {
  int cells = 400;
  double t_end = 0.2;
  /// dt = dt_per_dx * dx; 0.2 gives N steps to t = 0.2 on the unit tube.
  double dt_per_dx = 0.2;
  GasState1D left{1.0, 0.0, 1.0};
  GasState1D right{0.125, 0.0, 0.1};
};

struct ShockTubeResult {
  std::vector<double> x;
  std::vector<double> rho;
  std::vector<double> rho_exact;
  double l1_error = 0.0;
};

/// Sod problem on [0, 1] with the diaphragm at 0.5, gamma = 1.4 and no
/// gravity, advanced by the full 2D operator on an N x 3 strip between
/// reflecting walls. L1 density error against the exact solution at cell
/// centres.
ShockTubeResult run_shock_tube(const SolverChoice& solver, const ShockTubeSetup& setup = {});

}  // namespace atmofv
