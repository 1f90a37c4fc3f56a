#pragma once

#include "atmofv/mesh.hpp"
#include "atmofv/operator.hpp"
#include "atmofv/riemann.hpp"
#include "atmofv/thermo.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace atmofv {

enum class CaseId { Hydrostatic, Bubble, DensityCurrent };

/// Preset names: hydrostatic | bubble | density-current.
CaseId parse_case_id(std::string_view token);
std::string_view to_string(CaseId id);

/// Potential-temperature anomaly (amplitude/2) (1 + cos(pi r)) for r <= 1 with
/// r = |((x - x_c)/r_x, (z - z_c)/r_z)|.
struct ThetaBump {
  double center_x = 0.0;
  double center_z = 0.0;
  double radius_x = 1.0;
  double radius_z = 1.0;
  double amplitude = 0.0;  // K

  double operator()(double x, double z) const;
};

struct CaseConfig {
  CaseId id = CaseId::Hydrostatic;
  double x_min = 0.0;
  double x_max = 0.0;
  double z_min = 0.0;
  double z_max = 0.0;
  double dx = 0.0;
  double dz = 0.0;
  double dt = 0.0;
  double t_end = 0.0;
  double theta0 = 300.0;
  DiffusionParams diffusion;
  SolverChoice solver;
  ThetaBump bump;
  /// Refresh hydrostatic profiles at every RK stage (true) or once per step.
  bool refresh_per_stage = true;
};

/// Benchmark defaults.
///   hydrostatic:     [0,16000]x[0,800], dx=250, dz=200, dt=0.1, t_end=3600, mu_a=0
///   bubble:          [0,1000]^2, h=5, dt=1/160, t_end=600, mu_a=0.15, Pr=1,
///                    +0.5 K bump of radius 250 m at (500, 350)
///   density-current: [0,25600]x[0,6400], h=50, dt=0.05, t_end=900, mu_a=75, Pr=1,
///                    -15 K bump with radii (4000, 2000) at (0, 3000)
CaseConfig preset(CaseId id);

/// Integer cell counts from extents and spacings; throws ConfigError otherwise.
GridSpec grid_spec(const CaseConfig& cfg);

/// t_end / dt as an integer; throws ConfigError unless dt divides t_end.
std::int64_t step_count(const CaseConfig& cfg);

/// Throws ConfigError on any inconsistent field.
void validate(const CaseConfig& cfg);

Field<ConservedState> init_hydrostatic(const CaseConfig& cfg, const Mesh& mesh,
                                       const GasConstants& k);
Field<ConservedState> init_bubble(const CaseConfig& cfg, const Mesh& mesh, const GasConstants& k);
Field<ConservedState> init_density_current(const CaseConfig& cfg, const Mesh& mesh,
                                           const GasConstants& k);

/// Dispatches on cfg.id.
Field<ConservedState> initial_state(const CaseConfig& cfg, const Mesh& mesh, const GasConstants& k);

}  // namespace atmofv
