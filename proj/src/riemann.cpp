#include "atmofv/riemann.hpp"

#include "atmofv/error.hpp"
#include "atmofv/riemann_kernels.hpp"

#include <sstream>

namespace atmofv {

namespace {

struct Frame {
  Vec2 n;
  Vec2 t;
};

Frame make_frame(Vec2 n) { return {n, {-n.z, n.x}}; }

kernels::NormalState to_normal(const PrimitiveState& s, const Frame& f) {
  return {s.rho, s.u * f.n.x + s.w * f.n.z, s.u * f.t.x + s.w * f.t.z, s.p};
}

InterfaceFlux to_global(const kernels::NormalFlux& nf, const Frame& f, double z,
                        const GasConstants& k) {
  InterfaceFlux out;
  out.mass = nf.mass;
  out.momentum = {nf.mom_n * f.n.x + nf.mom_t * f.t.x, nf.mom_n * f.n.z + nf.mom_t * f.t.z};
  out.energy = nf.energy + k.g * z * nf.mass;
  return out;
}

InterfaceFlux solve_pair(FluxScheme scheme, const FacePair& fp, const GasConstants& k,
                         const AusmParams& params) {
  const Frame f = make_frame(fp.normal);
  const auto c = kernels::FluxConstants::from(k, params);
  const auto nf = kernels::solve(scheme, to_normal(fp.left, f), to_normal(fp.right, f), c);
  return to_global(nf, f, fp.z_face, k);
}

}  // namespace

void validate(const SolverChoice& choice) {
  const AusmParams& a = choice.ausm;
  if (!(a.K_p > 0.0) || !(a.K_u > 0.0) || !(a.sigma > 0.0) || !(a.M_inf > 0.0) ||
      !(a.M_inf <= 1.0)) {
    std::ostringstream os;
    os << "AUSM parameters must be positive with M_inf in (0, 1] (K_p=" << a.K_p
       << ", K_u=" << a.K_u << ", sigma=" << a.sigma << ", M_inf=" << a.M_inf << ")";
    throw ConfigError(os.str());
  }
}

FluxScheme parse_flux_scheme(std::string_view token) {
  for (FluxScheme s : kAllSchemes) {
    if (to_string(s) == token) return s;
  }
  throw ConfigError("unknown flux scheme '" + std::string(token) +
                    "' (expected roe-pike | hllc | ausm-up | hllc-ausm)");
}

std::string_view to_string(FluxScheme scheme) {
  switch (scheme) {
    case FluxScheme::RoePike:
      return "roe-pike";
    case FluxScheme::Hllc:
      return "hllc";
    case FluxScheme::AusmUp:
      return "ausm-up";
    case FluxScheme::HllcAusm:
      return "hllc-ausm";
  }
  return "unknown";
}

InterfaceFlux physical_flux(const PrimitiveState& s, Vec2 n, double z, const GasConstants& k) {
  const double un = s.u * n.x + s.w * n.z;
  const double e = k.c_v * s.T + 0.5 * (s.u * s.u + s.w * s.w) + k.g * z;
  InterfaceFlux f;
  f.mass = s.rho * un;
  f.momentum = {s.rho * s.u * un + s.p * n.x, s.rho * s.w * un + s.p * n.z};
  f.energy = (s.rho * e + s.p) * un;
  return f;
}

InterfaceFlux roe_pike_flux(const FacePair& fp, const GasConstants& k) {
  return solve_pair(FluxScheme::RoePike, fp, k, {});
}

InterfaceFlux hllc_flux(const FacePair& fp, const GasConstants& k) {
  return solve_pair(FluxScheme::Hllc, fp, k, {});
}

InterfaceFlux ausm_up_flux(const FacePair& fp, const AusmParams& params, const GasConstants& k) {
  return solve_pair(FluxScheme::AusmUp, fp, k, params);
}

InterfaceFlux hllc_ausm_flux(const FacePair& fp, const GasConstants& k, const AusmParams& params) {
  return solve_pair(FluxScheme::HllcAusm, fp, k, params);
}

InterfaceFlux compute_flux(const SolverChoice& choice, const FacePair& fp, const GasConstants& k) {
  return solve_pair(choice.scheme, fp, k, choice.ausm);
}

}  // namespace atmofv
