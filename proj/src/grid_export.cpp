#include "qmcdip/grid_export.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qmcdip {

VolumetricGrid sample_orbital_grid(const Geometry& geometry, const OrbitalSet& orbitals,
                                   int orbital_index, const GridBox& box, int resolution) {
  if (orbital_index < 0 || orbital_index >= orbitals.size()) {
    throw std::invalid_argument("orbital index " + std::to_string(orbital_index) + " out of range");
  }
  if (resolution < 2) throw std::invalid_argument("grid resolution must be >= 2 points per axis");

  VolumetricGrid grid;
  grid.origin = box.lo;
  grid.counts = {resolution, resolution, resolution};
  grid.step = (box.hi - box.lo) / (resolution - 1);
  grid.values.resize(static_cast<std::size_t>(resolution) * resolution * resolution);
  for (int ix = 0; ix < resolution; ++ix) {
    for (int iy = 0; iy < resolution; ++iy) {
      for (int iz = 0; iz < resolution; ++iz) {
        grid.at(ix, iy, iz) = orbitals.evaluate(geometry, orbital_index, grid.point(ix, iy, iz)).value;
      }
    }
  }
  return grid;
}

void write_grid(const VolumetricGrid& grid, const std::string& path, const std::string& comment) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out.precision(17);
  out << "# qmcdip volumetric grid: " << comment << "\n";
  out << "origin " << grid.origin.x() << " " << grid.origin.y() << " " << grid.origin.z() << "\n";
  out << "step " << grid.step.x() << " " << grid.step.y() << " " << grid.step.z() << "\n";
  out << "counts " << grid.counts[0] << " " << grid.counts[1] << " " << grid.counts[2] << "\n";
  int per_line = 0;
  for (std::size_t i = 0; i < grid.values.size(); ++i) {
    out << grid.values[i];
    if (++per_line == 6 || i + 1 == grid.values.size()) {
      out << "\n";
      per_line = 0;
    } else {
      out << " ";
    }
  }
  if (!out) throw std::runtime_error("write failed on '" + path + "'");
}

VolumetricGrid read_grid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  VolumetricGrid grid;
  std::string line;
  std::getline(in, line);  // comment
  std::string tag;
  in >> tag >> grid.origin.x() >> grid.origin.y() >> grid.origin.z();
  if (tag != "origin") throw std::runtime_error("bad grid header in '" + path + "'");
  in >> tag >> grid.step.x() >> grid.step.y() >> grid.step.z();
  if (tag != "step") throw std::runtime_error("bad grid header in '" + path + "'");
  in >> tag >> grid.counts[0] >> grid.counts[1] >> grid.counts[2];
  if (tag != "counts") throw std::runtime_error("bad grid header in '" + path + "'");
  const std::size_t n = static_cast<std::size_t>(grid.counts[0]) * grid.counts[1] * grid.counts[2];
  grid.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(in >> grid.values[i])) throw std::runtime_error("truncated grid body in '" + path + "'");
  }
  return grid;
}

void export_orbital_grid(const Geometry& geometry, const OrbitalSet& orbitals, int orbital_index,
                         const GridBox& box, int resolution, const std::string& path) {
  const VolumetricGrid grid = sample_orbital_grid(geometry, orbitals, orbital_index, box, resolution);
  write_grid(grid, path, "orbital " + orbitals.orbitals[orbital_index].label);
}

}  // namespace qmcdip
