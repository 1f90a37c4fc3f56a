#pragma once

#include "atmofv/cases.hpp"
#include "atmofv/hydrostatics.hpp"
#include "atmofv/mesh.hpp"
#include "atmofv/thermo.hpp"

#include <cmath>
#include <random>

namespace testing_support {

inline bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

/// Pressure of a uniform-theta column from a fine RK4 integration of
/// dp/dz = -rho g with rho = p / (R theta (p/p_g)^(R/c_p)).
inline double column_pressure_ode(double theta0, double z, const atmofv::GasConstants& k,
                                  int steps = 20000) {
  auto f = [&](double p) { return -p * k.g / (k.R * theta0 * std::pow(p / k.p_g, k.R / k.c_p)); };
  double p = k.p_g;
  const double h = z / steps;
  for (int n = 0; n < steps; ++n) {
    const double k1 = f(p);
    const double k2 = f(p + 0.5 * h * k1);
    const double k3 = f(p + 0.5 * h * k2);
    const double k4 = f(p + h * k3);
    p += h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  return p;
}

inline double column_density_ode(double theta0, double z, const atmofv::GasConstants& k) {
  const double p = column_pressure_ode(theta0, z, k);
  return p / (k.R * theta0 * std::pow(p / k.p_g, k.R / k.c_p));
}

/// Exact uniform-theta hydrostatic state on the grid.
inline atmofv::Field<atmofv::ConservedState> hydrostatic_field(const atmofv::Mesh& mesh,
                                                               const atmofv::GasConstants& k,
                                                               double theta0 = 300.0) {
  atmofv::Field<atmofv::ConservedState> q(mesh);
  for (int j = 0; j < mesh.nz(); ++j) {
    const double z = mesh.z_center(j);
    const auto col = atmofv::isentropic_column(theta0, z, k);
    for (int i = 0; i < mesh.nx(); ++i) {
      q(i, j) = {col.rho0, 0.0, 0.0, col.rho0 * (k.c_v * col.T0 + k.g * z)};
    }
  }
  return q;
}

/// Random physically valid primitive state.
inline atmofv::PrimitiveState random_state(std::mt19937_64& rng, const atmofv::GasConstants& k) {
  std::uniform_real_distribution<double> rho(0.2, 2.0);
  std::uniform_real_distribution<double> vel(-400.0, 400.0);
  std::uniform_real_distribution<double> p(2.0e4, 2.0e5);
  atmofv::PrimitiveState s;
  s.rho = rho(rng);
  s.u = vel(rng);
  s.w = vel(rng);
  s.p = p(rng);
  s.T = s.p / (s.rho * k.R);
  s.theta = atmofv::potential_temperature(s.p, s.T, k);
  return s;
}

}  // namespace testing_support
