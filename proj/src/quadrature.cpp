#include "qmcdip/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qmcdip {

namespace {

void add_octahedron_vertices(AngularQuadrature& q, double w) {
  for (int k = 0; k < 3; ++k) {
    for (double s : {1.0, -1.0}) {
      Vec3 v = Vec3::Zero();
      v[k] = s;
      q.nodes.push_back(v);
      q.weights.push_back(w);
    }
  }
}

void add_cube_vertices(AngularQuadrature& q, double w) {
  const double c = 1.0 / std::sqrt(3.0);
  for (double sx : {1.0, -1.0})
    for (double sy : {1.0, -1.0})
      for (double sz : {1.0, -1.0}) {
        q.nodes.push_back(Vec3(sx * c, sy * c, sz * c));
        q.weights.push_back(w);
      }
}

void add_edge_midpoints(AngularQuadrature& q, double w) {
  const double c = 1.0 / std::sqrt(2.0);
  const int pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
  for (const auto& p : pairs) {
    for (double s0 : {1.0, -1.0})
      for (double s1 : {1.0, -1.0}) {
        Vec3 v = Vec3::Zero();
        v[p[0]] = s0 * c;
        v[p[1]] = s1 * c;
        q.nodes.push_back(v);
        q.weights.push_back(w);
      }
  }
}

}  // namespace

AngularQuadrature make_lebedev_quadrature(int order) {
  AngularQuadrature q;
  if (order <= 3) {
    q.order = 3;
    add_octahedron_vertices(q, 1.0 / 6.0);
  } else if (order <= 5) {
    q.order = 5;
    add_octahedron_vertices(q, 1.0 / 15.0);
    add_cube_vertices(q, 3.0 / 40.0);
  } else if (order <= 7) {
    q.order = 7;
    add_octahedron_vertices(q, 1.0 / 21.0);
    add_edge_midpoints(q, 4.0 / 105.0);
    add_cube_vertices(q, 27.0 / 840.0);
  } else {
    throw std::invalid_argument("angular quadrature order above 7 not available");
  }
  return q;
}

Eigen::Matrix3d random_rotation(RngStream& rng) {
  // Shoemake quaternion method
  const double u1 = rng.uniform();
  const double u2 = rng.uniform();
  const double u3 = rng.uniform();
  const double two_pi = 2.0 * M_PI;
  const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
  Eigen::Quaterniond quat(a * std::sin(two_pi * u2), a * std::cos(two_pi * u2),
                          b * std::sin(two_pi * u3), b * std::cos(two_pi * u3));
  return quat.toRotationMatrix();
}

double legendre_pl(int l, double x) {
  switch (l) {
    case 0: return 1.0;
    case 1: return x;
    case 2: return 0.5 * (3.0 * x * x - 1.0);
    case 3: return 0.5 * (5.0 * x * x * x - 3.0 * x);
    default: throw std::invalid_argument("legendre_pl: l must be <= 3");
  }
}

}  // namespace qmcdip
