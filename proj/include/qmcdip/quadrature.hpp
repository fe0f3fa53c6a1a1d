#ifndef QMCDIP_QUADRATURE_HPP
#define QMCDIP_QUADRATURE_HPP

#include <vector>

#include "qmcdip/geometry.hpp"
#include "qmcdip/rng.hpp"

namespace qmcdip {

// Lebedev-style spherical quadrature: unit nodes and positive weights summing
// to one, integrating spherical harmonics exactly up to the declared order.
struct AngularQuadrature {
  int order = 0;                // exact through spherical harmonics of degree <= order
  std::vector<Vec3> nodes;
  std::vector<double> weights;

  int size() const { return static_cast<int>(nodes.size()); }
};

// Available orders: 3 (6 nodes), 5 (14 nodes), 7 (26 nodes).  Requests in
// between are rounded up; above 7 throws std::invalid_argument.
AngularQuadrature make_lebedev_quadrature(int order);

// Uniformly random rotation matrix (Haar measure on SO(3)) drawn from rng;
// applied to the quadrature frame per evaluation to unbias the angular
// truncation.
Eigen::Matrix3d random_rotation(RngStream& rng);

// Legendre polynomial P_l(x), l <= 3.
double legendre_pl(int l, double x);

}  // namespace qmcdip

#endif
