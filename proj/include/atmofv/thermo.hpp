#pragma once

#include <cmath>

namespace atmofv {

/// Dry-air constants. Built through make_gas_constants so that
/// R == c_p - c_v and gamma == c_p / c_v hold exactly as stored.
struct GasConstants {
  double c_v = 715.5;
  double c_p = 1002.5;
  double R = 287.0;
  double gamma = 1002.5 / 715.5;
  double g = 9.81;
  double p_g = 1.0e5;
};

/// c_p is derived as c_v + R; throws ConfigError unless every field is positive.
GasConstants make_gas_constants(double c_v, double R, double g, double p_g);

/// The dry-air default: c_v = 715.5, R = 287, g = 9.81, p_g = 1e5.
GasConstants dry_air();

struct PrimitiveState {
  double rho = 0.0;
  double u = 0.0;
  double w = 0.0;
  double p = 0.0;
  double T = 0.0;
  double theta = 0.0;
};

/// Per-cell conserved vector. rho_e includes the gravitational energy g*z.
struct ConservedState {
  double rho = 0.0;
  double rho_u = 0.0;
  double rho_w = 0.0;
  double rho_e = 0.0;

  ConservedState& operator+=(const ConservedState& o) {
    rho += o.rho;
    rho_u += o.rho_u;
    rho_w += o.rho_w;
    rho_e += o.rho_e;
    return *this;
  }
  friend ConservedState operator+(ConservedState a, const ConservedState& b) { return a += b; }
  friend ConservedState operator*(double s, const ConservedState& a) {
    return {s * a.rho, s * a.rho_u, s * a.rho_w, s * a.rho_e};
  }
  friend bool operator==(const ConservedState&, const ConservedState&) = default;
};

PrimitiveState primitive_from_conserved(const ConservedState& q, double z, const GasConstants& k);

ConservedState conserved_from_primitive(const PrimitiveState& s, double z, const GasConstants& k);

double sound_speed(double p, double rho, const GasConstants& k);

/// theta = T / (p/p_g)^(R/c_p).
double potential_temperature(double p, double T, const GasConstants& k);

/// (p/p_g)^(R/c_p)
inline double exner(double p, const GasConstants& k) { return std::pow(p / k.p_g, k.R / k.c_p); }

/// Throws InvalidStateError unless rho, p, T, theta are positive and p = rho R T
/// to 1e-12 relative.
void validate(const PrimitiveState& s, const GasConstants& k);

}  // namespace atmofv
