#pragma once

#include <cstddef>
#include <vector>

namespace atmofv {

struct GridSpec {
  int nx = 0;
  int nz = 0;
  double dx = 0.0;
  double dz = 0.0;
  double x0 = 0.0;
  double z0 = 0.0;
  int n_ghost = 2;
};

struct Vec2 {
  double x = 0.0;
  double z = 0.0;

  friend Vec2 operator-(const Vec2& v) { return {-v.x, -v.z}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Column/row index. Ghost cells have i < 0, i >= nx, j < 0 or j >= nz.
struct CellIndex {
  int i = 0;
  int j = 0;
  friend bool operator==(const CellIndex&, const CellIndex&) = default;
};

/// Face between `owner` and `neighbor`; `normal` points from owner to neighbor.
/// Wall faces have a ghost cell on one side.
struct FaceGeometry {
  Vec2 normal;
  double area = 0.0;
  double x = 0.0;
  double z = 0.0;
  CellIndex owner;
  CellIndex neighbor;
};

/// Uniform Cartesian grid in the xz-plane.
///
/// Faces are enumerated x-faces first (row-major, nx+1 per row), then
/// z-faces (row-major, nx per row, nz+1 rows).
class Mesh {
 public:
  explicit Mesh(const GridSpec& spec);

  const GridSpec& spec() const { return spec_; }
  int nx() const { return spec_.nx; }
  int nz() const { return spec_.nz; }
  double dx() const { return spec_.dx; }
  double dz() const { return spec_.dz; }
  int n_ghost() const { return spec_.n_ghost; }

  double x_center(int i) const { return spec_.x0 + (i + 0.5) * spec_.dx; }
  double z_center(int j) const { return spec_.z0 + (j + 0.5) * spec_.dz; }
  double cell_volume() const { return spec_.dx * spec_.dz; }
  double x_min() const { return spec_.x0; }
  double x_max() const { return spec_.x0 + spec_.nx * spec_.dx; }
  double z_min() const { return spec_.z0; }
  double z_max() const { return spec_.z0 + spec_.nz * spec_.dz; }

  std::size_t num_x_faces() const { return static_cast<std::size_t>(spec_.nx + 1) * spec_.nz; }
  std::size_t num_z_faces() const { return static_cast<std::size_t>(spec_.nx) * (spec_.nz + 1); }
  std::size_t num_faces() const { return num_x_faces() + num_z_faces(); }

  /// Index of the x-face at the left side of cell column i (0 <= i <= nx).
  std::size_t x_face_index(int i, int j) const {
    return static_cast<std::size_t>(j) * (spec_.nx + 1) + i;
  }
  /// Index of the z-face at the bottom of cell row j (0 <= j <= nz).
  std::size_t z_face_index(int i, int j) const {
    return num_x_faces() + static_cast<std::size_t>(j) * spec_.nx + i;
  }

  FaceGeometry face(std::size_t index) const;

  bool is_interior(CellIndex c) const {
    return c.i >= 0 && c.i < spec_.nx && c.j >= 0 && c.j < spec_.nz;
  }

 private:
  GridSpec spec_;
};

/// Validates the GridSpec and builds the mesh; throws ConfigError on bad input.
Mesh build_grid(const GridSpec& spec);

/// Cell-centred storage over interior and ghost cells, indexed (i, j) with
/// i in [-n_ghost, nx + n_ghost) and j in [-n_ghost, nz + n_ghost).
template <class T>
class Field {
 public:
  Field() = default;
  Field(int nx, int nz, int n_ghost, const T& init = T{})
      : nx_(nx), nz_(nz), ng_(n_ghost), stride_(nx + 2 * n_ghost),
        data_(static_cast<std::size_t>(nx + 2 * n_ghost) * (nz + 2 * n_ghost), init) {}
  explicit Field(const Mesh& mesh, const T& init = T{})
      : Field(mesh.nx(), mesh.nz(), mesh.n_ghost(), init) {}

  int nx() const { return nx_; }
  int nz() const { return nz_; }
  int n_ghost() const { return ng_; }
  int stride() const { return stride_; }

  std::size_t offset(int i, int j) const {
    return static_cast<std::size_t>(j + ng_) * stride_ + static_cast<std::size_t>(i + ng_);
  }
  T& operator()(int i, int j) { return data_[offset(i, j)]; }
  const T& operator()(int i, int j) const { return data_[offset(i, j)]; }
  T& operator()(CellIndex c) { return (*this)(c.i, c.j); }
  const T& operator()(CellIndex c) const { return (*this)(c.i, c.j); }

  /// Flat storage including ghosts.
  std::vector<T>& values() { return data_; }
  const std::vector<T>& values() const { return data_; }

  friend bool operator==(const Field&, const Field&) = default;

 private:
  int nx_ = 0;
  int nz_ = 0;
  int ng_ = 0;
  int stride_ = 0;
  std::vector<T> data_;
};

}  // namespace atmofv
