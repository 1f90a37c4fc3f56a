#include "atmofv/cases.hpp"

#include "atmofv/error.hpp"
#include "atmofv/hydrostatics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace atmofv {

namespace {

int cell_count(double lo, double hi, double h, const char* axis) {
  const double n = (hi - lo) / h;
  const double rounded = std::round(n);
  if (!(h > 0.0) || !(rounded >= 1.0) || std::abs(n - rounded) > 1e-9 * std::max(1.0, n)) {
    std::ostringstream os;
    os << axis << " extent [" << lo << ", " << hi << "] is not an integer multiple of spacing " << h;
    throw ConfigError(os.str());
  }
  return static_cast<int>(rounded);
}

/// Cell state with potential temperature theta0 + theta' at the
/// undisturbed column pressure.
ConservedState column_state(double theta0, double theta_p, double z, const GasConstants& k) {
  const ColumnState col = isentropic_column(theta0, z, k);
  const double theta = theta0 + theta_p;
  PrimitiveState s;
  s.p = col.p0;
  s.T = theta * std::pow(col.p0 / k.p_g, k.R / k.c_p);
  s.rho = col.p0 / (k.R * s.T);
  s.theta = theta;
  const double e = k.c_v * s.T + k.g * z;
  return {s.rho, 0.0, 0.0, s.rho * e};
}

Field<ConservedState> init_with_bump(const CaseConfig& cfg, const Mesh& mesh,
                                     const GasConstants& k, bool with_bump) {
  Field<ConservedState> q(mesh);
  for (int j = 0; j < mesh.nz(); ++j) {
    const double z = mesh.z_center(j);
    for (int i = 0; i < mesh.nx(); ++i) {
      const double theta_p = with_bump ? cfg.bump(mesh.x_center(i), z) : 0.0;
      q(i, j) = column_state(cfg.theta0, theta_p, z, k);
    }
  }
  return q;
}

}  // namespace

double ThetaBump::operator()(double x, double z) const {
  const double rx = (x - center_x) / radius_x;
  const double rz = (z - center_z) / radius_z;
  const double r = std::sqrt(rx * rx + rz * rz);
  if (r > 1.0) return 0.0;
  return 0.5 * amplitude * (1.0 + std::cos(std::numbers::pi * r));
}

CaseId parse_case_id(std::string_view token) {
  for (CaseId id : {CaseId::Hydrostatic, CaseId::Bubble, CaseId::DensityCurrent}) {
    if (to_string(id) == token) return id;
  }
  throw ConfigError("unknown case '" + std::string(token) +
                    "' (expected hydrostatic | bubble | density-current)");
}

std::string_view to_string(CaseId id) {
  switch (id) {
    case CaseId::Hydrostatic:
      return "hydrostatic";
    case CaseId::Bubble:
      return "bubble";
    case CaseId::DensityCurrent:
      return "density-current";
  }
  return "unknown";
}

CaseConfig preset(CaseId id) {
  CaseConfig c;
  c.id = id;
  c.theta0 = 300.0;
  c.solver.scheme = FluxScheme::HllcAusm;
  switch (id) {
    case CaseId::Hydrostatic:
      c.x_max = 16000.0;
      c.z_max = 800.0;
      c.dx = 250.0;
      c.dz = 200.0;
      c.dt = 0.1;
      c.t_end = 3600.0;
      c.diffusion = {0.0, 1.0};
      break;
    case CaseId::Bubble:
      c.x_max = 1000.0;
      c.z_max = 1000.0;
      c.dx = 5.0;
      c.dz = 5.0;
      c.dt = 0.01;
      c.t_end = 600.0;
      c.diffusion = {0.15, 1.0};
      c.bump = {500.0, 350.0, 250.0, 250.0, 0.5};
      break;
    case CaseId::DensityCurrent:
      c.x_max = 25600.0;
      c.z_max = 6400.0;
      c.dx = 50.0;
      c.dz = 50.0;
      c.dt = 0.05;
      c.t_end = 900.0;
      c.diffusion = {75.0, 1.0};
      c.bump = {0.0, 3000.0, 4000.0, 2000.0, -15.0};
      break;
  }
  return c;
}

GridSpec grid_spec(const CaseConfig& cfg) {
  GridSpec g;
  g.nx = cell_count(cfg.x_min, cfg.x_max, cfg.dx, "x");
  g.nz = cell_count(cfg.z_min, cfg.z_max, cfg.dz, "z");
  g.dx = cfg.dx;
  g.dz = cfg.dz;
  g.x0 = cfg.x_min;
  g.z0 = cfg.z_min;
  g.n_ghost = 2;
  return g;
}

std::int64_t step_count(const CaseConfig& cfg) {
  if (!(cfg.dt > 0.0) || !(cfg.t_end >= 0.0)) {
    std::ostringstream os;
    os << "need dt > 0 and t_end >= 0 (dt=" << cfg.dt << ", t_end=" << cfg.t_end << ")";
    throw ConfigError(os.str());
  }
  const double n = cfg.t_end / cfg.dt;
  const double rounded = std::round(n);
  if (std::abs(n - rounded) > 1e-9 * std::max(1.0, n)) {
    std::ostringstream os;
    os << "t_end=" << cfg.t_end << " is not an integer multiple of dt=" << cfg.dt;
    throw ConfigError(os.str());
  }
  return static_cast<std::int64_t>(rounded);
}

void validate(const CaseConfig& cfg) {
  Mesh mesh(grid_spec(cfg));
  (void)mesh;
  (void)step_count(cfg);
  validate(cfg.diffusion);
  validate(cfg.solver);
  if (!(cfg.theta0 > 0.0)) throw ConfigError("theta0 must be positive");
  if (cfg.id != CaseId::Hydrostatic && (!(cfg.bump.radius_x > 0.0) || !(cfg.bump.radius_z > 0.0))) {
    throw ConfigError("perturbation radii must be positive");
  }
}

Field<ConservedState> init_hydrostatic(const CaseConfig& cfg, const Mesh& mesh,
                                       const GasConstants& k) {
  return init_with_bump(cfg, mesh, k, false);
}

Field<ConservedState> init_bubble(const CaseConfig& cfg, const Mesh& mesh, const GasConstants& k) {
  return init_with_bump(cfg, mesh, k, true);
}

Field<ConservedState> init_density_current(const CaseConfig& cfg, const Mesh& mesh,
                                           const GasConstants& k) {
  return init_with_bump(cfg, mesh, k, true);
}

Field<ConservedState> initial_state(const CaseConfig& cfg, const Mesh& mesh, const GasConstants& k) {
  switch (cfg.id) {
    case CaseId::Hydrostatic:
      return init_hydrostatic(cfg, mesh, k);
    case CaseId::Bubble:
      return init_bubble(cfg, mesh, k);
    case CaseId::DensityCurrent:
      return init_density_current(cfg, mesh, k);
  }
  throw ConfigError("unknown case id");
}

}  // namespace atmofv
