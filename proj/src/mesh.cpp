#include "atmofv/mesh.hpp"

#include "atmofv/error.hpp"

#include <sstream>

namespace atmofv {

namespace {

void check_spec(const GridSpec& s) {
  std::ostringstream os;
  if (s.nx < 3 || s.nz < 3) {
    os << "grid needs at least 3x3 interior cells, got " << s.nx << "x" << s.nz;
  } else if (!(s.dx > 0.0) || !(s.dz > 0.0)) {
    os << "grid spacing must be positive (dx=" << s.dx << ", dz=" << s.dz << ")";
  } else if (s.n_ghost != 2) {
    os << "n_ghost must be 2, got " << s.n_ghost;
  } else {
    return;
  }
  throw ConfigError(os.str());
}

}  // namespace

Mesh::Mesh(const GridSpec& spec) : spec_(spec) { check_spec(spec_); }

Mesh build_grid(const GridSpec& spec) { return Mesh(spec); }

FaceGeometry Mesh::face(std::size_t index) const {
  FaceGeometry f;
  if (index < num_x_faces()) {
    const int row = static_cast<int>(index / (spec_.nx + 1));
    const int col = static_cast<int>(index % (spec_.nx + 1));
    f.normal = {1.0, 0.0};
    f.area = spec_.dz;
    f.x = spec_.x0 + col * spec_.dx;
    f.z = z_center(row);
    f.owner = {col - 1, row};
    f.neighbor = {col, row};
    return f;
  }
  if (index >= num_faces()) {
    std::ostringstream os;
    os << "face index " << index << " out of range (" << num_faces() << " faces)";
    throw RangeError(os.str());
  }
  const std::size_t k = index - num_x_faces();
  const int row = static_cast<int>(k / spec_.nx);
  const int col = static_cast<int>(k % spec_.nx);
  f.normal = {0.0, 1.0};
  f.area = spec_.dx;
  f.x = x_center(col);
  f.z = spec_.z0 + row * spec_.dz;
  f.owner = {col, row - 1};
  f.neighbor = {col, row};
  return f;
}

}  // namespace atmofv
