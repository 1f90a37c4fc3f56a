#pragma once

#include "atmofv/mesh.hpp"
#include "atmofv/thermo.hpp"

#include <utility>
#include <vector>

namespace atmofv {

struct DiagnosticRecord {
  double t = 0.0;
  double w_max = 0.0;
  double w_min = 0.0;
  double u_max = 0.0;
  double u_min = 0.0;
  double theta_p_min = 0.0;
  double theta_p_max = 0.0;
  double total_mass = 0.0;
  double cfl = 0.0;
};

/// theta(p, T) - theta0 per interior cell; ghosts are zero.
Field<double> theta_perturbation(const Field<ConservedState>& states, const Mesh& mesh,
                                 double theta0, const GasConstants& k);

/// Sum of rho * V over interior cells, summed row by row in a fixed order.
double total_mass(const Field<ConservedState>& states, const Mesh& mesh);

/// max over cells of (|u| + a) dt/dx + (|w| + a) dt/dz.
double cfl_number(const Field<ConservedState>& states, const Mesh& mesh, double dt,
                  const GasConstants& k);

/// Extrema over interior cell centres, no interpolation.
DiagnosticRecord make_record(const Field<ConservedState>& states, const Mesh& mesh, double t,
                             double dt, double theta0, const GasConstants& k);

/// Values of the row whose centres are nearest z_line, paired with the
/// centre x of each cell. Ties go to the lower row. Throws RangeError when
/// z_line lies outside [z_min, z_max].
std::vector<std::pair<double, double>> line_sample(const Field<double>& field, const Mesh& mesh,
                                                   double z_line);

/// Rightmost ground position where theta' crosses -1 K, linearly
/// interpolated between adjacent centres. Returns mesh.x_min() when there is
/// no crossing.
double front_location(const Field<double>& theta_p, const Mesh& mesh);

/// Same search on a bare row of values at positions x.
double front_location(const std::vector<double>& x, const std::vector<double>& theta_p,
                      double x_min);

/// Number of local minima deeper than `threshold` after a 3-point running
/// mean (end points keep their value).
int count_minima_below(const std::vector<double>& values, double threshold);

}  // namespace atmofv
