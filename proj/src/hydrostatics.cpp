#include "atmofv/hydrostatics.hpp"

#include "atmofv/error.hpp"

#include <cmath>
#include <sstream>

namespace atmofv {

double HydrostaticProfile::polytropic_coefficient() const {
  return p0_c / std::pow(rho0_c, gamma);
}

double HydrostaticProfile::rho0(double z) const { return evaluate(z).rho0; }

double HydrostaticProfile::p0(double z) const { return evaluate(z).p0; }

HydrostaticProfile::Value HydrostaticProfile::evaluate(double z) const {
  const double b = base(z);
  if (!(b > 0.0)) {
    std::ostringstream os;
    os << "hydrostatic profile anchored at z=" << z_c << " is degenerate at z=" << z;
    throw ProfileDegenerateError(os.str());
  }
  const double s = std::pow(b, exponent);
  return {rho0_c * s, p0_c * b * s};
}

HydrostaticProfile profile_from_center(double rho0_c, double p0_c, double z_c, double dz,
                                       const GasConstants& k) {
  if (!(rho0_c > 0.0) || !(p0_c > 0.0)) {
    std::ostringstream os;
    os << "profile anchor must be positive (rho=" << rho0_c << ", p=" << p0_c << ")";
    throw DomainError(os.str());
  }
  HydrostaticProfile prof;
  prof.rho0_c = rho0_c;
  prof.p0_c = p0_c;
  prof.z_c = z_c;
  prof.dz = dz;
  prof.gamma = k.gamma;
  prof.exponent = 1.0 / (k.gamma - 1.0);
  prof.lapse = (k.gamma - 1.0) / k.gamma * k.g * rho0_c / p0_c;
  if (!(prof.base(z_c + 0.5 * dz) > 0.0)) {
    std::ostringstream os;
    os << "hydrostatic profile degenerate inside cell at z=" << z_c << " (dz=" << dz << ")";
    throw ProfileDegenerateError(os.str());
  }
  return prof;
}

ColumnState isentropic_column(double theta0, double z, const GasConstants& k) {
  const double b = 1.0 - k.g * z / (k.c_p * theta0);
  if (!(b > 0.0) || !(theta0 > 0.0)) {
    std::ostringstream os;
    os << "z=" << z << " lies above the top of a theta0=" << theta0 << " K atmosphere";
    throw AboveAtmosphereError(os.str());
  }
  ColumnState c;
  c.p0 = k.p_g * std::pow(b, k.c_p / k.R);
  c.T0 = theta0 * std::pow(c.p0 / k.p_g, k.R / k.c_p);
  c.rho0 = c.p0 / (k.R * c.T0);
  return c;
}

HydrostaticProfileField refresh_profiles(const Field<ConservedState>& states, const Mesh& mesh,
                                         const GasConstants& k) {
  HydrostaticProfileField profiles(mesh);
  for (int j = 0; j < mesh.nz(); ++j) {
    const double z = mesh.z_center(j);
    for (int i = 0; i < mesh.nx(); ++i) {
      const ConservedState& q = states(i, j);
      PrimitiveState s;
      try {
        s = primitive_from_conserved(q, z, k);
      } catch (const InvalidStateError& e) {
        std::ostringstream os;
        os << "cell (" << i << ", " << j << "): " << e.what();
        throw InvalidStateError(os.str());
      }
      profiles(i, j) = profile_from_center(s.rho, s.p, z, mesh.dz(), k);
    }
  }
  return profiles;
}

}  // namespace atmofv
