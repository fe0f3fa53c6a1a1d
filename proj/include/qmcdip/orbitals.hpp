#ifndef QMCDIP_ORBITALS_HPP
#define QMCDIP_ORBITALS_HPP

#include <string>
#include <vector>

#include "qmcdip/geometry.hpp"

namespace qmcdip {

// Cartesian Gaussian primitive  c * (x-Cx)^lx (y-Cy)^ly (z-Cz)^lz exp(-alpha |r-C|^2),
// total angular momentum lx+ly+lz <= 2 (s, p, cartesian d).
struct GaussianPrimitive {
  int lx = 0, ly = 0, lz = 0;
  double alpha = 1.0;   // bohr^-2
  double coeff = 1.0;
  int center = 0;       // index into Geometry::nuclei
};

// Analytic Slater/hydrogenic primitive on a center.
//   axis < 0 : c * r^rpow exp(-zeta r)          (s-type, rpow in {0,1,2})
//   axis in {0,1,2} : c * u_axis exp(-zeta r)   (p-type, rpow must be 0)
struct SlaterPrimitive {
  int rpow = 0;
  int axis = -1;
  double zeta = 1.0;    // bohr^-1
  double coeff = 1.0;
  int center = 0;
};

// A molecular orbital as a sum of primitives (possibly on several centers).
struct Orbital {
  std::string label;
  std::vector<GaussianPrimitive> gaussians;
  std::vector<SlaterPrimitive> slaters;
};

struct OrbitalEval {
  double value = 0.0;
  Vec3 gradient = Vec3::Zero();
  double laplacian = 0.0;
};

struct OrbitalSet {
  std::vector<Orbital> orbitals;

  int size() const { return static_cast<int>(orbitals.size()); }

  OrbitalEval evaluate(const Geometry& geometry, int orbital_index, const Vec3& r) const;

  // Throws std::invalid_argument on bad primitives (non-positive exponents,
  // angular momentum above d, invalid center indices).
  void validate(const Geometry& geometry) const;
};

OrbitalEval evaluate_orbital(const Orbital& orbital, const Geometry& geometry, const Vec3& r);

}  // namespace qmcdip

#endif
