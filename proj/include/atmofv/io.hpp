#pragma once

#include "atmofv/diagnostics.hpp"
#include "atmofv/mesh.hpp"
#include "atmofv/thermo.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace atmofv {

/// printf "%.17g": round-trips every double.
std::string format_double(double v);

inline constexpr std::string_view kDiagnosticsHeader =
    "t,w_max,w_min,u_max,u_min,theta_p_min,theta_p_max,total_mass,cfl";

std::string to_csv_row(const DiagnosticRecord& r);
DiagnosticRecord parse_csv_row(std::string_view line);

/// Whole file at once; throws IoError naming the path.
void write_diagnostics_csv(const std::vector<DiagnosticRecord>& records,
                           const std::filesystem::path& path);

/// Incremental CSV writer that flushes after every appended record so an
/// aborted run leaves a valid file.
class DiagnosticsCsvWriter {
 public:
  explicit DiagnosticsCsvWriter(std::filesystem::path path);
  void append(const DiagnosticRecord& r);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

/// Cell fields written to a snapshot. p_prime is relative to the
/// undisturbed isentropic column of theta0.
struct SnapshotFields {
  Field<double> theta_p;
  Field<double> u;
  Field<double> w;
  Field<double> p_prime;
  Field<double> rho;
};

SnapshotFields snapshot_fields(const Field<ConservedState>& states, const Mesh& mesh, double theta0,
                               const GasConstants& k);

/// "<case>_<flux>_t<seconds>" with seconds in %g notation.
std::string snapshot_stem(std::string_view case_name, std::string_view flux_name, double t);

/// VTK legacy ASCII, STRUCTURED_POINTS with one cell per grid cell.
void write_vtk(const SnapshotFields& fields, const Mesh& mesh, const std::filesystem::path& path);

/// Interior values as nz rows (bottom first) of nx comma-separated values.
void write_grid_csv(const Field<double>& field, const Mesh& mesh, const std::filesystem::path& path);

/// "x,value" rows.
void write_line_csv(const std::vector<std::pair<double, double>>& samples,
                    const std::filesystem::path& path);

}  // namespace atmofv
