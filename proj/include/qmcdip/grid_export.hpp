#ifndef QMCDIP_GRID_EXPORT_HPP
#define QMCDIP_GRID_EXPORT_HPP

#include <array>
#include <string>
#include <vector>

#include "qmcdip/geometry.hpp"
#include "qmcdip/orbitals.hpp"

namespace qmcdip {

// Axis-aligned box, bohr.
struct GridBox {
  Vec3 lo = Vec3(-4, -4, -4);
  Vec3 hi = Vec3(4, 4, 4);
};

// Volumetric scalar grid in the cube-style plain-text layout: header with
// origin, per-axis step and counts, body in z-fastest ordering.
struct VolumetricGrid {
  Vec3 origin = Vec3::Zero();
  Vec3 step = Vec3::Zero();
  std::array<int, 3> counts = {0, 0, 0};
  std::vector<double> values;  // z fastest, then y, then x

  double& at(int ix, int iy, int iz) { return values[(ix * counts[1] + iy) * counts[2] + iz]; }
  double at(int ix, int iy, int iz) const { return values[(ix * counts[1] + iy) * counts[2] + iz]; }
  Vec3 point(int ix, int iy, int iz) const {
    return origin + Vec3(ix * step.x(), iy * step.y(), iz * step.z());
  }
};

// Samples orbital amplitudes on the grid.  resolution is points per axis
// (>= 2); orbital_index must be valid.  Throws std::invalid_argument.
VolumetricGrid sample_orbital_grid(const Geometry& geometry, const OrbitalSet& orbitals,
                                   int orbital_index, const GridBox& box, int resolution);

// sample + write in one go; throws std::runtime_error on unwritable paths.
void export_orbital_grid(const Geometry& geometry, const OrbitalSet& orbitals, int orbital_index,
                         const GridBox& box, int resolution, const std::string& path);

void write_grid(const VolumetricGrid& grid, const std::string& path, const std::string& comment);
VolumetricGrid read_grid(const std::string& path);

}  // namespace qmcdip

#endif
