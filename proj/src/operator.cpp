#include "atmofv/operator.hpp"

#include "atmofv/boundary.hpp"
#include "atmofv/error.hpp"
#include "atmofv/muscl.hpp"
#include "atmofv/riemann_kernels.hpp"

#include <exception>
#include <mutex>
#include <sstream>

namespace atmofv {

namespace {

/// Collects the first exception thrown inside an OpenMP loop body.
class ErrorSink {
 public:
  void capture() {
    std::lock_guard<std::mutex> lock(mutex_);
    if (!first_) first_ = std::current_exception();
  }
  void rethrow() {
    if (first_) std::rethrow_exception(first_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr first_;
};

struct Contribution {
  double mass = 0.0;
  double mom_x = 0.0;
  double mom_z = 0.0;
  double energy = 0.0;
};

Contribution scaled(const InterfaceFlux& f, double factor) {
  return {f.mass * factor, f.momentum.x * factor, f.momentum.z * factor, f.energy * factor};
}

void add(ConservedState& q, const Contribution& c) {
  q.rho += c.mass;
  q.rho_u += c.mom_x;
  q.rho_w += c.mom_z;
  q.rho_e += c.energy;
}

void subtract(ConservedState& q, const Contribution& c) {
  q.rho -= c.mass;
  q.rho_u -= c.mom_x;
  q.rho_w -= c.mom_z;
  q.rho_e -= c.energy;
}

std::string cell_prefix(int i, int j) {
  std::ostringstream os;
  os << "cell (" << i << ", " << j << "): ";
  return os.str();
}

}  // namespace

void validate(const DiffusionParams& params) {
  if (!(params.mu_a >= 0.0) || !(params.Pr > 0.0)) {
    std::ostringstream os;
    os << "diffusion needs mu_a >= 0 and Pr > 0 (mu_a=" << params.mu_a << ", Pr=" << params.Pr
       << ")";
    throw ConfigError(os.str());
  }
}

RhsField flux_divergence(const std::vector<InterfaceFlux>& face_fluxes, const Mesh& mesh) {
  if (face_fluxes.size() != mesh.num_faces()) {
    throw ConfigError("face flux count does not match the mesh");
  }
  RhsField rhs(mesh);
  const double volume = mesh.cell_volume();
  for (std::size_t f = 0; f < face_fluxes.size(); ++f) {
    const FaceGeometry geo = mesh.face(f);
    const Contribution c = scaled(face_fluxes[f], geo.area / volume);
    if (mesh.is_interior(geo.owner)) subtract(rhs(geo.owner), c);
    if (mesh.is_interior(geo.neighbor)) add(rhs(geo.neighbor), c);
  }
  return rhs;
}

RhsField well_balanced_source(const HydrostaticProfileField& profiles, const Mesh& mesh) {
  RhsField rhs(mesh);
  const double volume = mesh.cell_volume();
  const double area = mesh.dx();
  for (int j = 0; j < mesh.nz(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const HydrostaticProfile& prof = profiles(i, j);
      const double zc = mesh.z_center(j);
      const double p_south = prof.evaluate(zc - 0.5 * mesh.dz()).p0;
      const double p_north = prof.evaluate(zc + 0.5 * mesh.dz()).p0;
      double src = 0.0;
      src += p_south * (-area) / volume;
      src += p_north * area / volume;
      rhs(i, j).rho_w = src;
    }
  }
  return rhs;
}

RhsField diffusion_rhs(const Field<PrimitiveState>& prim, const DiffusionParams& params,
                       const Mesh& mesh, const GasConstants& k) {
  RhsField rhs(mesh);
  const double volume = mesh.cell_volume();
  const double wx = mesh.dz() / mesh.dx() / volume;  // A/|d|/V on x-faces
  const double wz = mesh.dx() / mesh.dz() / volume;
  const double thermal = k.c_p * params.mu_a / params.Pr;
  for (int j = 0; j < mesh.nz(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      const PrimitiveState& c = prim(i, j);
      const PrimitiveState* nbr[4] = {&prim(i - 1, j), &prim(i + 1, j), &prim(i, j - 1),
                                      &prim(i, j + 1)};
      const double weight[4] = {wx, wx, wz, wz};
      double lap_u = 0.0;
      double lap_w = 0.0;
      double lap_T = 0.0;
      for (int n = 0; n < 4; ++n) {
        lap_u += (nbr[n]->u - c.u) * weight[n];
        lap_w += (nbr[n]->w - c.w) * weight[n];
        lap_T += (nbr[n]->T - c.T) * weight[n];
      }
      rhs(i, j).rho_u = params.mu_a * lap_u;
      rhs(i, j).rho_w = params.mu_a * lap_w;
      rhs(i, j).rho_e = thermal * lap_T;
    }
  }
  return rhs;
}

RhsField assemble_rhs_reference(const Field<ConservedState>& states, const OperatorConfig& config,
                                const Mesh& mesh, const GasConstants& k) {
  const HydrostaticProfileField profiles = refresh_profiles(states, mesh, k);

  Field<PrimitiveState> prim(mesh);
  for (int j = 0; j < mesh.nz(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      prim(i, j) = primitive_from_conserved(states(i, j), mesh.z_center(j), k);
    }
  }
  fill_ghosts(prim, profiles, mesh, k);

  std::vector<InterfaceFlux> fluxes(mesh.num_faces());
  for (std::size_t f = 0; f < fluxes.size(); ++f) {
    fluxes[f] = compute_flux(config.solver, reconstruct_face(prim, profiles, mesh, f, k), k);
  }

  const RhsField div = flux_divergence(fluxes, mesh);
  const RhsField src = well_balanced_source(profiles, mesh);
  const RhsField diff = diffusion_rhs(prim, config.diffusion, mesh, k);
  RhsField rhs(mesh);
  for (int j = 0; j < mesh.nz(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      rhs(i, j) = (div(i, j) + src(i, j)) + diff(i, j);
    }
  }
  return rhs;
}

SpatialOperator::SpatialOperator(const Mesh& mesh, const GasConstants& k,
                                 const OperatorConfig& config)
    : mesh_(mesh),
      k_(k),
      config_(config),
      prim_(mesh),
      profiles_(mesh),
      source_w_(mesh),
      minus_side_(mesh.num_faces()),
      plus_side_(mesh.num_faces()),
      fluxes_(mesh.num_faces()) {
  validate(config_.solver);
  validate(config_.diffusion);
}

void SpatialOperator::evaluate(const Field<ConservedState>& states, RhsField& rhs, bool refresh) {
  if (rhs.nx() != mesh_.nx() || rhs.nz() != mesh_.nz() || rhs.n_ghost() != mesh_.n_ghost()) {
    rhs = RhsField(mesh_);
  }
  compute_primitives(states, refresh || !have_profiles_);
  have_profiles_ = true;
  fill_ghosts(prim_, profiles_, mesh_, k_);
  reconstruct();
  mirror_walls();
  compute_fluxes();
  accumulate(rhs);
}

void SpatialOperator::compute_primitives(const Field<ConservedState>& states, bool refresh) {
  const int nx = mesh_.nx();
  const int nz = mesh_.nz();
  const double g = k_.g;
  const double c_v = k_.c_v;
  const double R = k_.R;
  ErrorSink errors;

#pragma omp parallel for schedule(static)
  for (int j = 0; j < nz; ++j) {
    try {
      const double z = mesh_.z_center(j);
      for (int i = 0; i < nx; ++i) {
        const ConservedState& q = states(i, j);
        PrimitiveState& s = prim_(i, j);
        if (!(q.rho > 0.0)) {
          std::ostringstream os;
          os << cell_prefix(i, j) << "non-positive density " << q.rho;
          throw InvalidStateError(os.str());
        }
        s.rho = q.rho;
        s.u = q.rho_u / q.rho;
        s.w = q.rho_w / q.rho;
        const double U = q.rho_e / q.rho - 0.5 * (s.u * s.u + s.w * s.w) - g * z;
        if (!(U > 0.0)) {
          std::ostringstream os;
          os << cell_prefix(i, j) << "non-positive internal energy " << U;
          throw InvalidStateError(os.str());
        }
        s.T = U / c_v;
        s.p = s.rho * R * s.T;
        s.theta = 0.0;
        if (refresh) profiles_(i, j) = profile_from_center(s.rho, s.p, z, mesh_.dz(), k_);
      }
    } catch (...) {
      errors.capture();
    }
  }
  errors.rethrow();
}

void SpatialOperator::reconstruct() {
  const int nx = mesh_.nx();
  const int nz = mesh_.nz();
  const double dx = mesh_.dx();
  const double dz = mesh_.dz();
  const double hx = 0.5 * dx;
  const double hz = 0.5 * dz;
  const double volume = mesh_.cell_volume();
  ErrorSink errors;

#pragma omp parallel for schedule(static)
  for (int j = 0; j < nz; ++j) {
    try {
      const double zc = mesh_.z_center(j);
      for (int i = 0; i < nx; ++i) {
        const HydrostaticProfile& prof = profiles_(i, j);
        const PrimitiveState& s = prim_(i, j);
        const PrimitiveState& wst = prim_(i - 1, j);
        const PrimitiveState& est = prim_(i + 1, j);
        const PrimitiveState& sth = prim_(i, j - 1);
        const PrimitiveState& nth = prim_(i, j + 1);
        const double p_own = s.p - prof.p0_c;
        const double rho_own = s.rho - prof.rho0_c;

        const double sx_p =
            mc_limiter((p_own - (wst.p - prof.p0_c)) / dx, ((est.p - prof.p0_c) - p_own) / dx);
        const double sx_rho = mc_limiter((rho_own - (wst.rho - prof.rho0_c)) / dx,
                                         ((est.rho - prof.rho0_c) - rho_own) / dx);
        const double sx_u = mc_limiter((s.u - wst.u) / dx, (est.u - s.u) / dx);
        const double sx_w = mc_limiter((s.w - wst.w) / dx, (est.w - s.w) / dx);

        const HydrostaticProfile::Value below = prof.evaluate(zc - dz);
        const HydrostaticProfile::Value above = prof.evaluate(zc + dz);
        const HydrostaticProfile::Value south = prof.evaluate(zc - hz);
        const HydrostaticProfile::Value north = prof.evaluate(zc + hz);
        const double sz_p =
            mc_limiter((p_own - (sth.p - below.p0)) / dz, ((nth.p - above.p0) - p_own) / dz);
        const double sz_rho = mc_limiter((rho_own - (sth.rho - below.rho0)) / dz,
                                         ((nth.rho - above.rho0) - rho_own) / dz);
        const double sz_u = mc_limiter((s.u - sth.u) / dz, (nth.u - s.u) / dz);
        const double sz_w = mc_limiter((s.w - sth.w) / dz, (nth.w - s.w) / dz);

        const FaceVars fw{prof.rho0_c + (rho_own + -1.0 * hx * sx_rho), s.u + -1.0 * hx * sx_u,
                          s.w + -1.0 * hx * sx_w, prof.p0_c + (p_own + -1.0 * hx * sx_p)};
        const FaceVars fe{prof.rho0_c + (rho_own + 1.0 * hx * sx_rho), s.u + 1.0 * hx * sx_u,
                          s.w + 1.0 * hx * sx_w, prof.p0_c + (p_own + 1.0 * hx * sx_p)};
        const FaceVars fs{south.rho0 + (rho_own + -1.0 * hz * sz_rho), s.u + -1.0 * hz * sz_u,
                          s.w + -1.0 * hz * sz_w, south.p0 + (p_own + -1.0 * hz * sz_p)};
        const FaceVars fn{north.rho0 + (rho_own + 1.0 * hz * sz_rho), s.u + 1.0 * hz * sz_u,
                          s.w + 1.0 * hz * sz_w, north.p0 + (p_own + 1.0 * hz * sz_p)};

        const FaceVars* faces[4] = {&fw, &fe, &fs, &fn};
        static constexpr const char* names[4] = {"west", "east", "south", "north"};
        for (int n = 0; n < 4; ++n) {
          if (!(faces[n]->p > 0.0) || !(faces[n]->rho > 0.0)) {
            std::ostringstream os;
            os << "non-positive reconstruction (rho=" << faces[n]->rho << ", p=" << faces[n]->p
               << ") in cell (" << i << ", " << j << ") at " << names[n] << " face";
            throw PositivityError(os.str());
          }
        }

        plus_side_[mesh_.x_face_index(i, j)] = fw;
        minus_side_[mesh_.x_face_index(i + 1, j)] = fe;
        plus_side_[mesh_.z_face_index(i, j)] = fs;
        minus_side_[mesh_.z_face_index(i, j + 1)] = fn;

        double src = 0.0;
        src += south.p0 * (-dx) / volume;
        src += north.p0 * dx / volume;
        source_w_(i, j) = src;
      }
    } catch (...) {
      errors.capture();
    }
  }
  errors.rethrow();
}

void SpatialOperator::mirror_walls() {
  const int nx = mesh_.nx();
  const int nz = mesh_.nz();
  for (int j = 0; j < nz; ++j) {
    FaceVars& west = minus_side_[mesh_.x_face_index(0, j)];
    west = plus_side_[mesh_.x_face_index(0, j)];
    west.u *= -1.0;
    FaceVars& east = plus_side_[mesh_.x_face_index(nx, j)];
    east = minus_side_[mesh_.x_face_index(nx, j)];
    east.u *= -1.0;
  }
  for (int i = 0; i < nx; ++i) {
    FaceVars& bottom = minus_side_[mesh_.z_face_index(i, 0)];
    bottom = plus_side_[mesh_.z_face_index(i, 0)];
    bottom.w *= -1.0;
    FaceVars& top = plus_side_[mesh_.z_face_index(i, nz)];
    top = minus_side_[mesh_.z_face_index(i, nz)];
    top.w *= -1.0;
  }
}

void SpatialOperator::compute_fluxes() {
  const int nx = mesh_.nx();
  const int nz = mesh_.nz();
  const double g = k_.g;
  const FluxScheme scheme = config_.solver.scheme;
  const auto c = kernels::FluxConstants::from(k_, config_.solver.ausm);
  ErrorSink errors;

  // Rows 0..nz-1 carry x-faces, rows nz..2nz carry z-faces.
#pragma omp parallel for schedule(static)
  for (int row = 0; row < 2 * nz + 1; ++row) {
    try {
      if (row < nz) {
        const int j = row;
        const double z = mesh_.z_center(j);
        for (int i = 0; i <= nx; ++i) {
          const std::size_t f = mesh_.x_face_index(i, j);
          const FaceVars& L = minus_side_[f];
          const FaceVars& R = plus_side_[f];
          const kernels::NormalFlux nf =
              kernels::solve(scheme, {L.rho, L.u, L.w, L.p}, {R.rho, R.u, R.w, R.p}, c);
          fluxes_[f] = {nf.mass, {nf.mom_n, nf.mom_t}, nf.energy + g * z * nf.mass};
        }
      } else {
        const int j = row - nz;
        const double z = mesh_.z_min() + j * mesh_.dz();
        for (int i = 0; i < nx; ++i) {
          const std::size_t f = mesh_.z_face_index(i, j);
          const FaceVars& L = minus_side_[f];
          const FaceVars& R = plus_side_[f];
          const kernels::NormalFlux nf =
              kernels::solve(scheme, {L.rho, L.w, -L.u, L.p}, {R.rho, R.w, -R.u, R.p}, c);
          fluxes_[f] = {nf.mass, {-nf.mom_t, nf.mom_n}, nf.energy + g * z * nf.mass};
        }
      }
    } catch (...) {
      errors.capture();
    }
  }
  errors.rethrow();
}

void SpatialOperator::accumulate(RhsField& rhs) const {
  const int nx = mesh_.nx();
  const int nz = mesh_.nz();
  const double volume = mesh_.cell_volume();
  const double fx = mesh_.dz() / volume;
  const double fz = mesh_.dx() / volume;
  const double wx = mesh_.dz() / mesh_.dx() / volume;
  const double wz = mesh_.dx() / mesh_.dz() / volume;
  const double mu = config_.diffusion.mu_a;
  const double thermal = k_.c_p * config_.diffusion.mu_a / config_.diffusion.Pr;

#pragma omp parallel for schedule(static)
  for (int j = 0; j < nz; ++j) {
    for (int i = 0; i < nx; ++i) {
      ConservedState div;
      add(div, scaled(fluxes_[mesh_.x_face_index(i, j)], fx));
      subtract(div, scaled(fluxes_[mesh_.x_face_index(i + 1, j)], fx));
      add(div, scaled(fluxes_[mesh_.z_face_index(i, j)], fz));
      subtract(div, scaled(fluxes_[mesh_.z_face_index(i, j + 1)], fz));

      const PrimitiveState& c = prim_(i, j);
      const PrimitiveState* nbr[4] = {&prim_(i - 1, j), &prim_(i + 1, j), &prim_(i, j - 1),
                                      &prim_(i, j + 1)};
      const double weight[4] = {wx, wx, wz, wz};
      double lap_u = 0.0;
      double lap_w = 0.0;
      double lap_T = 0.0;
      for (int n = 0; n < 4; ++n) {
        lap_u += (nbr[n]->u - c.u) * weight[n];
        lap_w += (nbr[n]->w - c.w) * weight[n];
        lap_T += (nbr[n]->T - c.T) * weight[n];
      }

      ConservedState src;
      src.rho_w = source_w_(i, j);
      const ConservedState diff{0.0, mu * lap_u, mu * lap_w, thermal * lap_T};
      rhs(i, j) = (div + src) + diff;
    }
  }
}

RhsField assemble_rhs(const Field<ConservedState>& states, const OperatorConfig& config,
                      const Mesh& mesh, const GasConstants& k) {
  SpatialOperator op(mesh, k, config);
  RhsField rhs(mesh);
  op.evaluate(states, rhs);
  return rhs;
}

}  // namespace atmofv
