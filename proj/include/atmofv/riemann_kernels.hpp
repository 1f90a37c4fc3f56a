#pragma once

// Face-normal Riemann kernels shared by the public flux API and the RHS
// kernel. States are expressed in the frame (n, t) of the face; the energy
// carried here excludes the gravitational potential, which callers add back
// as g * z_face * mass.

#include "atmofv/error.hpp"
#include "atmofv/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace atmofv::kernels {

struct NormalState {
  double rho;
  double un;
  double ut;
  double p;
};

struct NormalFlux {
  double mass;
  double mom_n;
  double mom_t;
  double energy;
};

struct FluxConstants {
  double gamma;
  double inv_gm1;  // c_v / R, so that rho U = inv_gm1 * p
  AusmParams ausm;

  static FluxConstants from(const GasConstants& k, const AusmParams& ausm = {}) {
    return {k.gamma, k.c_v / k.R, ausm};
  }
};

/// Specific Phi-free total energy U + K.
inline double specific_energy(const NormalState& s, const FluxConstants& c) {
  return c.inv_gm1 * s.p / s.rho + 0.5 * (s.un * s.un + s.ut * s.ut);
}

inline NormalFlux normal_physical_flux(const NormalState& s, const FluxConstants& c) {
  const double m = s.rho * s.un;
  const double E = specific_energy(s, c);
  return {m, m * s.un + s.p, m * s.ut, (s.rho * E + s.p) * s.un};
}

[[noreturn]] inline void throw_degenerate(const char* what, double a, double b) {
  std::ostringstream os;
  os.precision(17);
  os << what << " (" << a << " vs " << b << ")";
  throw DegenerateWaveError(os.str());
}

inline NormalFlux roe_pike(const NormalState& L, const NormalState& R, const FluxConstants& c) {
  const double sqL = std::sqrt(L.rho);
  const double sqR = std::sqrt(R.rho);
  const double wsum = 1.0 / (sqL + sqR);
  const double rho_t = sqL * sqR;
  const double un_t = (sqL * L.un + sqR * R.un) * wsum;
  const double ut_t = (sqL * L.ut + sqR * R.ut) * wsum;
  const double hL = specific_energy(L, c) + L.p / L.rho;
  const double hR = specific_energy(R, c) + R.p / R.rho;
  const double h_t = (sqL * hL + sqR * hR) * wsum;
  const double K_t = 0.5 * (un_t * un_t + ut_t * ut_t);
  const double a2 = (c.gamma - 1.0) * (h_t - K_t);
  if (!(a2 > 0.0)) {
    std::ostringstream os;
    os << "Roe-averaged sound speed squared is " << a2;
    throw SolverBreakdownError(os.str());
  }
  const double a_t = std::sqrt(a2);

  const double dp = R.p - L.p;
  const double dun = R.un - L.un;
  const double dut = R.ut - L.ut;
  const double drho = R.rho - L.rho;

  const double alpha1 = (dp - rho_t * a_t * dun) / (2.0 * a2);
  const double alpha2 = drho - dp / a2;
  const double alpha4 = rho_t * dut;
  const double alpha5 = (dp + rho_t * a_t * dun) / (2.0 * a2);

  const double l1 = std::abs(un_t - a_t) * alpha1;
  const double l2 = std::abs(un_t) * alpha2;
  const double l4 = std::abs(un_t) * alpha4;
  const double l5 = std::abs(un_t + a_t) * alpha5;

  const NormalFlux fL = normal_physical_flux(L, c);
  const NormalFlux fR = normal_physical_flux(R, c);

  const double d_mass = l1 + l2 + l5;
  const double d_mom_n = l1 * (un_t - a_t) + l2 * un_t + l5 * (un_t + a_t);
  const double d_mom_t = (l1 + l2 + l5) * ut_t + l4;
  const double d_energy =
      l1 * (h_t - un_t * a_t) + l2 * K_t + l4 * ut_t + l5 * (h_t + un_t * a_t);

  return {0.5 * (fL.mass + fR.mass) - 0.5 * d_mass, 0.5 * (fL.mom_n + fR.mom_n) - 0.5 * d_mom_n,
          0.5 * (fL.mom_t + fR.mom_t) - 0.5 * d_mom_t,
          0.5 * (fL.energy + fR.energy) - 0.5 * d_energy};
}

struct HllcSpeeds {
  double S_L;
  double S_R;
  double S_star;
};

inline HllcSpeeds hllc_speeds(const NormalState& L, const NormalState& R, const FluxConstants& c) {
  const double aL = std::sqrt(c.gamma * L.p / L.rho);
  const double aR = std::sqrt(c.gamma * R.p / R.rho);
  // Two-sided bounds keep S_L <= S_R for colliding supersonic data, which
  // the branch selection needs to be mirror symmetric.
  const double S_L = std::min(L.un - aL, R.un - aR);
  const double S_R = std::max(L.un + aL, R.un + aR);
  const double num = (R.p - L.p) + L.rho * L.un * (S_L - L.un) - R.rho * R.un * (S_R - R.un);
  const double den = L.rho * (S_L - L.un) - R.rho * (S_R - R.un);
  return {S_L, S_R, num / den};
}

/// F* = F + S (U* - U) for the side with wave speed S.
inline NormalFlux hllc_star_flux(const NormalState& s, double S, double S_star,
                                 const FluxConstants& c) {
  if (S == S_star) throw_degenerate("HLLC outer wave speed equals contact speed", S, S_star);
  const double E = specific_energy(s, c);
  const double rel = S - s.un;
  const double scale = s.rho * rel / (S - S_star);
  const double U0 = s.rho;
  const double U1 = s.rho * s.un;
  const double U2 = s.rho * s.ut;
  const double U3 = s.rho * E;
  const double Us0 = scale;
  const double Us1 = scale * S_star;
  const double Us2 = scale * s.ut;
  const double Us3 = scale * (E + (S_star - s.un) * (S_star + s.p / (s.rho * rel)));
  const NormalFlux f = normal_physical_flux(s, c);
  return {f.mass + S * (Us0 - U0), f.mom_n + S * (Us1 - U1), f.mom_t + S * (Us2 - U2),
          f.energy + S * (Us3 - U3)};
}

inline NormalFlux hllc(const NormalState& L, const NormalState& R, const FluxConstants& c) {
  const HllcSpeeds sp = hllc_speeds(L, R, c);
  if (sp.S_L >= 0.0) return normal_physical_flux(L, c);
  if (sp.S_star >= 0.0) return hllc_star_flux(L, sp.S_L, sp.S_star, c);
  if (sp.S_R > 0.0) return hllc_star_flux(R, sp.S_R, sp.S_star, c);
  return normal_physical_flux(R, c);
}

// AUSM split polynomials.
inline double mach1_plus(double M) { return 0.5 * (M + std::abs(M)); }
inline double mach1_minus(double M) { return 0.5 * (M - std::abs(M)); }
inline double mach2_plus(double M) { return 0.25 * (M + 1.0) * (M + 1.0); }
inline double mach2_minus(double M) { return -0.25 * (M - 1.0) * (M - 1.0); }

/// Pressure-splitting polynomial P1+.
inline double pressure_plus(double M) {
  if (std::abs(M) >= 1.0) return mach1_plus(M) / M;
  return mach2_plus(M) * ((2.0 - M) - 3.0 * M * mach2_minus(M));
}
/// Pressure-splitting polynomial P1-.
inline double pressure_minus(double M) {
  if (std::abs(M) >= 1.0) return mach1_minus(M) / M;
  return mach2_minus(M) * ((-2.0 - M) + 3.0 * M * mach2_plus(M));
}
/// Interface-Mach polynomial P2+; coeff is 1 (literal) or 2 (canonical).
inline double mach_plus(double M, double coeff) {
  if (std::abs(M) >= 1.0) return mach1_plus(M);
  return mach2_plus(M) * (1.0 - coeff * mach2_minus(M));
}
inline double mach_minus(double M, double coeff) {
  if (std::abs(M) >= 1.0) return mach1_minus(M);
  return mach2_minus(M) * (1.0 + coeff * mach2_plus(M));
}

struct AusmInterface {
  double a_half;
  double mach;      // interface Mach number including M_p
  double pressure;  // interface pressure including p_u
};

inline AusmInterface ausm_interface(const NormalState& L, const NormalState& R,
                                    const FluxConstants& c) {
  const AusmParams& prm = c.ausm;
  const double aL = std::sqrt(c.gamma * L.p / L.rho);
  const double aR = std::sqrt(c.gamma * R.p / R.rho);
  const double a = 0.5 * (aL + aR);
  const double ML = L.un / a;
  const double MR = R.un / a;
  const double Mbar2 = (L.un * L.un + R.un * R.un) / (2.0 * a * a);
  const double Mo2 = std::min(1.0, std::max(Mbar2, prm.M_inf * prm.M_inf));
  const double Mo = std::sqrt(Mo2);
  const double fa = Mo * (2.0 - Mo);
  const double rho_half = 0.5 * (L.rho + R.rho);
  const double coeff = prm.beta_canonical ? 2.0 : 1.0;

  const double Mp = -(prm.K_p / fa) * std::max(1.0 - prm.sigma * Mbar2, 0.0) * (R.p - L.p) /
                    (rho_half * a * a);
  const double PpL = pressure_plus(ML);
  const double PmR = pressure_minus(MR);
  const double pu = -prm.K_u * PpL * PmR * (L.rho + R.rho) * fa * a * (R.un - L.un);
  return {a, mach_plus(ML, coeff) + mach_minus(MR, coeff) + Mp, PpL * L.p + PmR * R.p + pu};
}

inline NormalFlux ausm_up(const NormalState& L, const NormalState& R, const FluxConstants& c) {
  const AusmInterface ai = ausm_interface(L, R, c);
  const double mdot = ai.a_half * ai.mach * (ai.mach > 0.0 ? L.rho : R.rho);
  const double mp = 0.5 * (mdot + std::abs(mdot));
  const double mm = 0.5 * (mdot - std::abs(mdot));
  const double hL = specific_energy(L, c) + L.p / L.rho;
  const double hR = specific_energy(R, c) + R.p / R.rho;
  return {mp + mm, mp * L.un + mm * R.un + ai.pressure, mp * L.ut + mm * R.ut, mp * hL + mm * hR};
}

inline NormalFlux hllc_ausm(const NormalState& L, const NormalState& R, const FluxConstants& c) {
  const HllcSpeeds sp = hllc_speeds(L, R, c);
  const double relL = sp.S_L - L.un;
  const double relR = sp.S_R - R.un;
  if (relL == 0.0) throw_degenerate("HLLC-AUSM left wave speed equals normal velocity", sp.S_L, L.un);
  if (relR == 0.0) throw_degenerate("HLLC-AUSM right wave speed equals normal velocity", sp.S_R, R.un);
  const double p_star = R.rho * (R.un - sp.S_R) * (R.un - sp.S_star) + R.p;

  double mdot;
  if (sp.S_star > 0.0) {
    if (sp.S_L == sp.S_star) throw_degenerate("HLLC-AUSM left wave speed equals contact speed", sp.S_L, sp.S_star);
    const double rho_star = relL / (sp.S_L - sp.S_star) * L.rho;
    mdot = L.rho * L.un + sp.S_L * (rho_star - L.rho);
  } else {
    if (sp.S_R == sp.S_star) throw_degenerate("HLLC-AUSM right wave speed equals contact speed", sp.S_R, sp.S_star);
    const double rho_star = relR / (sp.S_R - sp.S_star) * R.rho;
    mdot = R.rho * R.un + sp.S_R * (rho_star - R.rho);
  }

  const double hL = specific_energy(L, c) + L.p / L.rho + sp.S_L * (p_star - L.p) / (L.rho * relL);
  const double hR = specific_energy(R, c) + R.p / R.rho + sp.S_R * (p_star - R.p) / (R.rho * relR);
  const double p_tilde = ausm_interface(L, R, c).pressure;
  const double mp = 0.5 * (mdot + std::abs(mdot));
  const double mm = 0.5 * (mdot - std::abs(mdot));
  return {mp + mm, mp * L.un + mm * R.un + p_tilde, mp * L.ut + mm * R.ut, mp * hL + mm * hR};
}

inline NormalFlux solve(FluxScheme scheme, const NormalState& L, const NormalState& R,
                        const FluxConstants& c) {
  switch (scheme) {
    case FluxScheme::RoePike:
      return roe_pike(L, R, c);
    case FluxScheme::Hllc:
      return hllc(L, R, c);
    case FluxScheme::AusmUp:
      return ausm_up(L, R, c);
    case FluxScheme::HllcAusm:
      return hllc_ausm(L, R, c);
  }
  return {};
}

}  // namespace atmofv::kernels
