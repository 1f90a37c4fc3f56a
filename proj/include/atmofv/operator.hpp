#pragma once

#include "atmofv/hydrostatics.hpp"
#include "atmofv/mesh.hpp"
#include "atmofv/riemann.hpp"
#include "atmofv/thermo.hpp"

#include <vector>

namespace atmofv {

/// Per-cell time derivative of the conserved variables; ghost entries stay zero.
using RhsField = Field<ConservedState>;

struct DiffusionParams {
  double mu_a = 0.0;  // m^2/s
  double Pr = 1.0;
};

void validate(const DiffusionParams& params);

struct OperatorConfig {
  SolverChoice solver;
  DiffusionParams diffusion;
};

/// -(1/V) sum_j f_j A_j with outward orientation; `face_fluxes` follows the
/// mesh face enumeration and each flux is oriented along the face normal.
RhsField flux_divergence(const std::vector<InterfaceFlux>& face_fluxes, const Mesh& mesh);

/// Gravity term in surface form: the source S0 = -(1/V) sum_j p0_i(z_j) (A_j n_j . z)
/// enters the RHS as -S0. Each cell uses its own profile at its faces.
RhsField well_balanced_source(const HydrostaticProfileField& profiles, const Mesh& mesh);

/// mu_a Laplacian of (u, w) into momentum and c_p mu_a/Pr Laplacian of T into
/// energy, two-point face gradients. Needs ghosts filled.
RhsField diffusion_rhs(const Field<PrimitiveState>& prim, const DiffusionParams& params,
                       const Mesh& mesh, const GasConstants& k);

/// Serial assembly from the per-operation building blocks: refresh profiles,
/// fill ghosts, reconstruct, solve Riemann problems, sum the three parts.
/// Kept as the reference for the OpenMP kernel.
RhsField assemble_rhs_reference(const Field<ConservedState>& states, const OperatorConfig& config,
                                const Mesh& mesh, const GasConstants& k);

/// OpenMP right-hand-side kernel with reusable workspace.
///
/// Results are bitwise independent of the thread count: every face and every
/// cell is written by exactly one loop iteration, and cell sums read faces in
/// a fixed order.
class SpatialOperator {
 public:
  SpatialOperator(const Mesh& mesh, const GasConstants& k, const OperatorConfig& config);

  /// Evaluates L(states) into rhs. With refresh == false the hydrostatic
  /// profiles from the previous refreshing call are reused.
  void evaluate(const Field<ConservedState>& states, RhsField& rhs, bool refresh = true);

  /// Interior primitives (theta not computed) and ghosts from the last call.
  const Field<PrimitiveState>& primitives() const { return prim_; }
  const HydrostaticProfileField& profiles() const { return profiles_; }
  const Mesh& mesh() const { return mesh_; }
  const GasConstants& constants() const { return k_; }
  const OperatorConfig& config() const { return config_; }

 private:
  struct FaceVars {
    double rho, u, w, p;
  };

  void compute_primitives(const Field<ConservedState>& states, bool refresh);
  void reconstruct();
  void mirror_walls();
  void compute_fluxes();
  void accumulate(RhsField& rhs) const;

  Mesh mesh_;
  GasConstants k_;
  OperatorConfig config_;
  bool have_profiles_ = false;

  Field<PrimitiveState> prim_;
  HydrostaticProfileField profiles_;
  Field<double> source_w_;
  // Reconstructed states on both sides of each face, mesh face order.
  std::vector<FaceVars> minus_side_;
  std::vector<FaceVars> plus_side_;
  std::vector<InterfaceFlux> fluxes_;
};

/// One-shot kernel evaluation.
RhsField assemble_rhs(const Field<ConservedState>& states, const OperatorConfig& config,
                      const Mesh& mesh, const GasConstants& k);

}  // namespace atmofv
