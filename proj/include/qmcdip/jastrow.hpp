#ifndef QMCDIP_JASTROW_HPP
#define QMCDIP_JASTROW_HPP

#include <vector>

#include "qmcdip/geometry.hpp"

namespace qmcdip {

// Radial function value and its first/second derivative with respect to r.
struct RadialDeriv {
  double v = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

// One two-body channel
//   u(r) = b1 r / (1 + b2 r) + sum_k p_k (r/L)^k (1 - r/L)^3   (k >= 2, r < L)
// The polynomial corrections vanish smoothly (value and two derivatives) at
// the cutoff L and leave the r -> 0 slope alone, so u'(0) = b1 carries the
// cusp.
struct PadePolyTerm {
  double b1 = 0.0;
  double b2 = 1.0;
  std::vector<double> poly;  // p_2, p_3, ...
  double cutoff = 0.0;       // L; required > 0 when poly is non-empty

  bool is_zero() const { return b1 == 0.0 && poly.empty(); }
  RadialDeriv eval(double r) const;
};

// Symmetrized electron-electron-nucleus coupling for a nucleus of the given
// species:
//   f = c [P_m(r_ia) P_n(r_ja) + P_m(r_ja) P_n(r_ia)] (r_ij/L)^o
// with P_m(r) = (r/L)^m (1 - r/L)^3 inside the cutoff, zero outside.
struct ThreeBodyTerm {
  int species = 0;
  int m = 2, n = 2, o = 0;
  double coeff = 0.0;
  double cutoff = 1.0;
};

struct JastrowParams {
  std::vector<PadePolyTerm> en;  // indexed by nuclear species
  PadePolyTerm ee_anti;
  PadePolyTerm ee_para;
  std::vector<ThreeBodyTerm> een;
  bool enforce_ee_cusps = false;

  bool is_identity() const;

  // When cusp enforcement is on, pins ee_anti.b1 = 1/2 and ee_para.b1 = 1/4.
  void apply_cusp_conditions();

  // Flat view of the variational parameters (b2, polynomial and three-body
  // coefficients always; the b1 slopes only when cusps are not enforced).
  std::vector<double> variational_parameters() const;
  void set_variational_parameters(const std::vector<double>& p);
  std::vector<std::pair<double, double>> parameter_bounds() const;

  void validate(int n_species) const;  // throws std::invalid_argument
};

// Evaluation engine bound to a geometry (nuclear positions and species map
// are snapshotted; both are immutable after construction).
class Jastrow {
 public:
  Jastrow() = default;
  Jastrow(JastrowParams params, const Geometry& geometry);

  const JastrowParams& params() const { return params_; }

  double value(const std::vector<Vec3>& positions) const;

  // Per-electron gradient and laplacian contributions of J itself:
  // grad[i] = grad_i J, lap[i] = lap_i J.
  void derivatives(const std::vector<Vec3>& positions, std::vector<Vec3>& grad,
                   std::vector<double>& lap) const;

  // J(positions with electron i at r_new) - J(positions); only terms
  // involving electron i are touched.
  double delta_single_move(const std::vector<Vec3>& positions, int electron, const Vec3& r_new) const;

  // grad_i J with electron i placed at r_i (other electrons as given).
  Vec3 gradient_of_electron(const std::vector<Vec3>& positions, int electron, const Vec3& r_i) const;

 private:
  JastrowParams params_;
  std::vector<Vec3> centers_;
  std::vector<int> species_;
  int n_up_ = 0;

  const PadePolyTerm* en_term(int species) const;
  const PadePolyTerm& ee_term(int i, int j) const;
  double pair_terms_of_electron(const std::vector<Vec3>& positions, int electron, const Vec3& ri) const;
};

}  // namespace qmcdip

#endif
