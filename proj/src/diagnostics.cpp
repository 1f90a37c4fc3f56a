#include "atmofv/diagnostics.hpp"

#include "atmofv/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace atmofv {

Field<double> theta_perturbation(const Field<ConservedState>& states, const Mesh& mesh,
                                 double theta0, const GasConstants& k) {
  Field<double> out(mesh, 0.0);
  for (int j = 0; j < mesh.nz(); ++j) {
    const double z = mesh.z_center(j);
    for (int i = 0; i < mesh.nx(); ++i) {
      const PrimitiveState s = primitive_from_conserved(states(i, j), z, k);
      out(i, j) = potential_temperature(s.p, s.T, k) - theta0;
    }
  }
  return out;
}

double total_mass(const Field<ConservedState>& states, const Mesh& mesh) {
  double sum = 0.0;
  for (int j = 0; j < mesh.nz(); ++j) {
    double row = 0.0;
    for (int i = 0; i < mesh.nx(); ++i) row += states(i, j).rho;
    sum += row;
  }
  return sum * mesh.cell_volume();
}

double cfl_number(const Field<ConservedState>& states, const Mesh& mesh, double dt,
                  const GasConstants& k) {
  double cfl = 0.0;
  for (int j = 0; j < mesh.nz(); ++j) {
    const double z = mesh.z_center(j);
    for (int i = 0; i < mesh.nx(); ++i) {
      const PrimitiveState s = primitive_from_conserved(states(i, j), z, k);
      const double a = sound_speed(s.p, s.rho, k);
      const double c = (std::abs(s.u) + a) * dt / mesh.dx() + (std::abs(s.w) + a) * dt / mesh.dz();
      cfl = std::max(cfl, c);
    }
  }
  return cfl;
}

DiagnosticRecord make_record(const Field<ConservedState>& states, const Mesh& mesh, double t,
                             double dt, double theta0, const GasConstants& k) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  double w_max = -inf, w_min = inf, u_max = -inf, u_min = inf, th_max = -inf, th_min = inf;
  for (int j = 0; j < mesh.nz(); ++j) {
    const double z = mesh.z_center(j);
    for (int i = 0; i < mesh.nx(); ++i) {
      const PrimitiveState s = primitive_from_conserved(states(i, j), z, k);
      const double th = potential_temperature(s.p, s.T, k) - theta0;
      w_max = std::max(w_max, s.w);
      w_min = std::min(w_min, s.w);
      u_max = std::max(u_max, s.u);
      u_min = std::min(u_min, s.u);
      th_max = std::max(th_max, th);
      th_min = std::min(th_min, th);
    }
  }
  DiagnosticRecord r;
  r.t = t;
  r.w_max = w_max;
  r.w_min = w_min;
  r.u_max = u_max;
  r.u_min = u_min;
  r.theta_p_min = th_min;
  r.theta_p_max = th_max;
  r.total_mass = total_mass(states, mesh);
  r.cfl = cfl_number(states, mesh, dt, k);
  return r;
}

std::vector<std::pair<double, double>> line_sample(const Field<double>& field, const Mesh& mesh,
                                                   double z_line) {
  if (!(z_line >= mesh.z_min() && z_line <= mesh.z_max())) {
    std::ostringstream os;
    os << "line z=" << z_line << " outside [" << mesh.z_min() << ", " << mesh.z_max() << "]";
    throw RangeError(os.str());
  }
  // Nearest centre; s is the fractional row coordinate, ceil(s - 1/2)
  // rounds half down.
  const double s = (z_line - mesh.z_min()) / mesh.dz() - 0.5;
  const int j = std::clamp(static_cast<int>(std::ceil(s - 0.5)), 0, mesh.nz() - 1);
  std::vector<std::pair<double, double>> out;
  out.reserve(static_cast<std::size_t>(mesh.nx()));
  for (int i = 0; i < mesh.nx(); ++i) out.emplace_back(mesh.x_center(i), field(i, j));
  return out;
}

double front_location(const std::vector<double>& x, const std::vector<double>& theta_p,
                      double x_min) {
  constexpr double level = -1.0;
  for (std::size_t i = theta_p.size(); i-- > 1;) {
    const double a = theta_p[i - 1];
    const double b = theta_p[i];
    if ((a <= level && b > level) || (a > level && b <= level)) {
      return x[i - 1] + (level - a) / (b - a) * (x[i] - x[i - 1]);
    }
  }
  return x_min;
}

double front_location(const Field<double>& theta_p, const Mesh& mesh) {
  std::vector<double> x(static_cast<std::size_t>(mesh.nx()));
  std::vector<double> row(x.size());
  for (int i = 0; i < mesh.nx(); ++i) {
    x[static_cast<std::size_t>(i)] = mesh.x_center(i);
    row[static_cast<std::size_t>(i)] = theta_p(i, 0);
  }
  return front_location(x, row, mesh.x_min());
}

int count_minima_below(const std::vector<double>& values, double threshold) {
  const std::size_t n = values.size();
  if (n < 3) return 0;
  std::vector<double> s(values);
  for (std::size_t i = 1; i + 1 < n; ++i) s[i] = (values[i - 1] + values[i] + values[i + 1]) / 3.0;
  int count = 0;
  std::size_t i = 1;
  while (i + 1 < n) {
    if (s[i] < s[i - 1]) {
      // Walk across a flat bottom before deciding.
      std::size_t e = i;
      while (e + 1 < n && s[e + 1] == s[i]) ++e;
      if (e + 1 < n && s[e + 1] > s[i] && s[i] < threshold) ++count;
      i = e + 1;
    } else {
      ++i;
    }
  }
  return count;
}

}  // namespace atmofv
