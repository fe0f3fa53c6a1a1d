#include "qmcdip/orbitals.hpp"

#include <cmath>
#include <stdexcept>

namespace qmcdip {

namespace {

inline double ipow(double x, int n) {
  if (n < 0) return 1.0 / ipow(x, -n);
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

// d/dx of x^l e^{-a x^2} family handled per dimension; negative powers drop.
void add_gaussian(const GaussianPrimitive& p, const Vec3& d, double r2, OrbitalEval& out) {
  const double g = p.coeff * std::exp(-p.alpha * r2);
  const int l[3] = {p.lx, p.ly, p.lz};
  double mono[3];
  for (int k = 0; k < 3; ++k) mono[k] = ipow(d[k], l[k]);
  const double value = mono[0] * mono[1] * mono[2] * g;
  out.value += value;

  double lap = 0.0;
  for (int k = 0; k < 3; ++k) {
    const double others = mono[(k + 1) % 3] * mono[(k + 2) % 3];
    const double dk = d[k];
    const int lk = l[k];
    // first derivative along k
    double d1 = -2.0 * p.alpha * ipow(dk, lk + 1);
    if (lk >= 1) d1 += lk * ipow(dk, lk - 1);
    out.gradient[k] += d1 * others * g;
    // second derivative along k
    double d2 = 4.0 * p.alpha * p.alpha * ipow(dk, lk + 2) - 2.0 * p.alpha * (2 * lk + 1) * ipow(dk, lk);
    if (lk >= 2) d2 += lk * (lk - 1) * ipow(dk, lk - 2);
    lap += d2 * others;
  }
  out.laplacian += lap * g;
}

void add_slater(const SlaterPrimitive& p, const Vec3& d, double r, OrbitalEval& out) {
  // Guard the removable 1/r factors; electrons exactly on a Slater center are
  // a probability-zero event excluded by the evaluate() precondition.
  const double rr = std::max(r, 1e-300);
  const double e = p.coeff * std::exp(-p.zeta * rr);
  if (p.axis < 0) {
    const int k = p.rpow;
    const double rk = ipow(rr, k);
    double fp = -p.zeta * rk;             // radial derivative / e
    if (k >= 1) fp += k * ipow(rr, k - 1);
    fp *= e;
    // f'' + 2 f'/r with the r^{k-2} terms combined; k = 0 keeps only the
    // zeta^2 - 2 zeta / r piece
    double lap;
    if (k == 0) {
      lap = p.zeta * p.zeta - 2.0 * p.zeta / rr;
    } else {
      lap = k * (k + 1) * ipow(rr, k - 2) - 2.0 * p.zeta * (k + 1) * ipow(rr, k - 1) + p.zeta * p.zeta * rk;
    }
    out.value += rk * e;
    out.gradient += (fp / rr) * d;
    out.laplacian += lap * e;
  } else {
    // u * exp(-zeta r), u one of the relative coordinates
    const double u = d[p.axis];
    out.value += u * e;
    for (int k = 0; k < 3; ++k) {
      double g = -p.zeta * u * d[k] / rr;
      if (k == p.axis) g += 1.0;
      out.gradient[k] += g * e;
    }
    out.laplacian += u * (p.zeta * p.zeta - 4.0 * p.zeta / rr) * e;
  }
}

}  // namespace

OrbitalEval evaluate_orbital(const Orbital& orbital, const Geometry& geometry, const Vec3& r) {
  OrbitalEval out;
  for (const auto& p : orbital.gaussians) {
    const Vec3 d = r - geometry.nuclei[p.center].position;
    add_gaussian(p, d, d.squaredNorm(), out);
  }
  for (const auto& p : orbital.slaters) {
    const Vec3 d = r - geometry.nuclei[p.center].position;
    add_slater(p, d, d.norm(), out);
  }
  return out;
}

OrbitalEval OrbitalSet::evaluate(const Geometry& geometry, int orbital_index, const Vec3& r) const {
  return evaluate_orbital(orbitals.at(orbital_index), geometry, r);
}

void OrbitalSet::validate(const Geometry& geometry) const {
  const int ncenters = geometry.n_nuclei();
  for (const auto& orb : orbitals) {
    if (orb.gaussians.empty() && orb.slaters.empty()) {
      throw std::invalid_argument("orbital '" + orb.label + "' has no primitives");
    }
    for (const auto& p : orb.gaussians) {
      if (!(p.alpha > 0.0)) throw std::invalid_argument("gaussian exponent must be > 0");
      if (p.lx < 0 || p.ly < 0 || p.lz < 0 || p.lx + p.ly + p.lz > 2) {
        throw std::invalid_argument("gaussian angular momentum must be <= d");
      }
      if (p.center < 0 || p.center >= ncenters) {
        throw std::invalid_argument("gaussian primitive references missing center");
      }
    }
    for (const auto& p : orb.slaters) {
      if (!(p.zeta > 0.0)) throw std::invalid_argument("slater exponent must be > 0");
      if (p.rpow < 0 || p.rpow > 2) throw std::invalid_argument("slater radial power must be in {0,1,2}");
      if (p.axis > 2) throw std::invalid_argument("slater axis must be x, y or z");
      if (p.axis >= 0 && p.rpow != 0) throw std::invalid_argument("p-type slater primitive requires rpow = 0");
      if (p.center < 0 || p.center >= ncenters) {
        throw std::invalid_argument("slater primitive references missing center");
      }
    }
  }
}

}  // namespace qmcdip
