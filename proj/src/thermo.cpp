#include "atmofv/thermo.hpp"

#include "atmofv/error.hpp"

#include <cmath>
#include <sstream>

namespace atmofv {

GasConstants make_gas_constants(double c_v, double R, double g, double p_g) {
  if (!(c_v > 0.0) || !(R > 0.0) || !(g >= 0.0) || !(p_g > 0.0)) {
    std::ostringstream os;
    os << "gas constants must be positive (c_v=" << c_v << ", R=" << R << ", g=" << g
       << ", p_g=" << p_g << ")";
    throw ConfigError(os.str());
  }
  GasConstants k;
  k.c_v = c_v;
  k.R = R;
  k.c_p = c_v + R;
  k.gamma = k.c_p / c_v;
  k.g = g;
  k.p_g = p_g;
  return k;
}

GasConstants dry_air() { return make_gas_constants(715.5, 287.0, 9.81, 1.0e5); }

PrimitiveState primitive_from_conserved(const ConservedState& q, double z, const GasConstants& k) {
  if (!(q.rho > 0.0)) {
    std::ostringstream os;
    os << "non-positive density " << q.rho << " at z=" << z;
    throw InvalidStateError(os.str());
  }
  PrimitiveState s;
  s.rho = q.rho;
  s.u = q.rho_u / q.rho;
  s.w = q.rho_w / q.rho;
  const double U = q.rho_e / q.rho - 0.5 * (s.u * s.u + s.w * s.w) - k.g * z;
  if (!(U > 0.0)) {
    std::ostringstream os;
    os << "non-positive internal energy " << U << " at z=" << z;
    throw InvalidStateError(os.str());
  }
  s.T = U / k.c_v;
  s.p = s.rho * k.R * s.T;
  s.theta = s.T / exner(s.p, k);
  return s;
}

ConservedState conserved_from_primitive(const PrimitiveState& s, double z, const GasConstants& k) {
  validate(s, k);
  const double e = k.c_v * s.T + 0.5 * (s.u * s.u + s.w * s.w) + k.g * z;
  return {s.rho, s.rho * s.u, s.rho * s.w, s.rho * e};
}

double sound_speed(double p, double rho, const GasConstants& k) {
  if (!(p > 0.0) || !(rho > 0.0)) {
    std::ostringstream os;
    os << "sound speed needs p > 0 and rho > 0 (p=" << p << ", rho=" << rho << ")";
    throw DomainError(os.str());
  }
  return std::sqrt(k.gamma * p / rho);
}

double potential_temperature(double p, double T, const GasConstants& k) {
  if (!(p > 0.0) || !(T > 0.0)) {
    std::ostringstream os;
    os << "potential temperature needs p > 0 and T > 0 (p=" << p << ", T=" << T << ")";
    throw DomainError(os.str());
  }
  return T / exner(p, k);
}

void validate(const PrimitiveState& s, const GasConstants& k) {
  const bool positive = s.rho > 0.0 && s.p > 0.0 && s.T > 0.0 && s.theta > 0.0;
  const double p_eos = s.rho * k.R * s.T;
  if (!positive || !(std::abs(s.p - p_eos) <= 1e-12 * std::abs(s.p))) {
    std::ostringstream os;
    os.precision(17);
    os << "invalid primitive state (rho=" << s.rho << ", p=" << s.p << ", T=" << s.T
       << ", theta=" << s.theta << ")";
    throw InvalidStateError(os.str());
  }
}

}  // namespace atmofv
