#include "atmofv/io.hpp"

#include "atmofv/error.hpp"
#include "atmofv/hydrostatics.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>

namespace atmofv {

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::out | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  return out;
}

void check_stream(const std::ostream& out, const std::filesystem::path& path) {
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

void write_array(std::ostream& out, const char* name, const Field<double>& f, const Mesh& mesh) {
  out << "SCALARS " << name << " double 1\nLOOKUP_TABLE default\n";
  for (int j = 0; j < mesh.nz(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) out << format_double(f(i, j)) << '\n';
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_csv_row(const DiagnosticRecord& r) {
  std::string s;
  for (double v : {r.t, r.w_max, r.w_min, r.u_max, r.u_min, r.theta_p_min, r.theta_p_max,
                   r.total_mass, r.cfl}) {
    if (!s.empty()) s += ',';
    s += format_double(v);
  }
  return s;
}

DiagnosticRecord parse_csv_row(std::string_view line) {
  double v[9];
  std::size_t pos = 0;
  for (int c = 0; c < 9; ++c) {
    const std::size_t end = c == 8 ? line.size() : line.find(',', pos);
    if (end == std::string_view::npos) throw IoError("short CSV row: " + std::string(line));
    const auto field = line.substr(pos, end - pos);
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v[c]);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
      throw IoError("bad CSV value '" + std::string(field) + "'");
    }
    pos = end + 1;
  }
  return {v[0], v[1], v[2], v[3], v[4], v[5], v[6], v[7], v[8]};
}

void write_diagnostics_csv(const std::vector<DiagnosticRecord>& records,
                           const std::filesystem::path& path) {
  if (records.empty()) throw IoError("no diagnostic records for '" + path.string() + "'");
  std::ofstream out = open_for_write(path);
  out << kDiagnosticsHeader << '\n';
  for (const auto& r : records) out << to_csv_row(r) << '\n';
  out.flush();
  check_stream(out, path);
}

DiagnosticsCsvWriter::DiagnosticsCsvWriter(std::filesystem::path path)
    : path_(std::move(path)), out_(open_for_write(path_)) {
  out_ << kDiagnosticsHeader << '\n';
  out_.flush();
  check_stream(out_, path_);
}

void DiagnosticsCsvWriter::append(const DiagnosticRecord& r) {
  out_ << to_csv_row(r) << '\n';
  out_.flush();
  check_stream(out_, path_);
}

SnapshotFields snapshot_fields(const Field<ConservedState>& states, const Mesh& mesh, double theta0,
                               const GasConstants& k) {
  SnapshotFields f{Field<double>(mesh), Field<double>(mesh), Field<double>(mesh),
                   Field<double>(mesh), Field<double>(mesh)};
  for (int j = 0; j < mesh.nz(); ++j) {
    const double z = mesh.z_center(j);
    const double p_bg = isentropic_column(theta0, z, k).p0;
    for (int i = 0; i < mesh.nx(); ++i) {
      const PrimitiveState s = primitive_from_conserved(states(i, j), z, k);
      f.theta_p(i, j) = s.theta - theta0;
      f.u(i, j) = s.u;
      f.w(i, j) = s.w;
      f.p_prime(i, j) = s.p - p_bg;
      f.rho(i, j) = s.rho;
    }
  }
  return f;
}

std::string snapshot_stem(std::string_view case_name, std::string_view flux_name, double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", t);
  return std::string(case_name) + "_" + std::string(flux_name) + "_t" + buf;
}

void write_vtk(const SnapshotFields& fields, const Mesh& mesh, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  out << "# vtk DataFile Version 3.0\n"
      << "atmofv snapshot\n"
      << "ASCII\n"
      << "DATASET STRUCTURED_POINTS\n"
      << "DIMENSIONS " << mesh.nx() + 1 << ' ' << mesh.nz() + 1 << " 1\n"
      << "ORIGIN " << format_double(mesh.x_min()) << ' ' << format_double(mesh.z_min()) << " 0\n"
      << "SPACING " << format_double(mesh.dx()) << ' ' << format_double(mesh.dz()) << " 1\n"
      << "CELL_DATA " << static_cast<long long>(mesh.nx()) * mesh.nz() << '\n';
  write_array(out, "theta_p", fields.theta_p, mesh);
  write_array(out, "u", fields.u, mesh);
  write_array(out, "w", fields.w, mesh);
  write_array(out, "p_prime", fields.p_prime, mesh);
  write_array(out, "rho", fields.rho, mesh);
  out.flush();
  check_stream(out, path);
}

void write_grid_csv(const Field<double>& field, const Mesh& mesh, const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  for (int j = 0; j < mesh.nz(); ++j) {
    for (int i = 0; i < mesh.nx(); ++i) {
      if (i > 0) out << ',';
      out << format_double(field(i, j));
    }
    out << '\n';
  }
  out.flush();
  check_stream(out, path);
}

void write_line_csv(const std::vector<std::pair<double, double>>& samples,
                    const std::filesystem::path& path) {
  std::ofstream out = open_for_write(path);
  out << "x,value\n";
  for (const auto& [x, v] : samples) out << format_double(x) << ',' << format_double(v) << '\n';
  out.flush();
  check_stream(out, path);
}

}  // namespace atmofv
