#ifndef QMCDIP_HAMILTONIAN_HPP
#define QMCDIP_HAMILTONIAN_HPP

#include <optional>

#include "qmcdip/ecp.hpp"
#include "qmcdip/geometry.hpp"
#include "qmcdip/quadrature.hpp"
#include "qmcdip/wavefunction.hpp"

namespace qmcdip {

struct LocalEnergyBreakdown {
  double kinetic = 0.0;
  double electron_nucleus = 0.0;
  double electron_electron = 0.0;
  double nucleus_nucleus = 0.0;
  double ecp_local = 0.0;
  double ecp_nonlocal = 0.0;
  double total = 0.0;
};

// Kinetic + Coulomb + optional semilocal ECP with the localization
// approximation.  Stateless given the immutable inputs; safe to call
// concurrently from independent walkers, each supplying its own
// random-rotation stream.
class Hamiltonian {
 public:
  explicit Hamiltonian(Geometry geometry, EcpTable ecps = {}, int ecp_quad_order = 5);

  const Geometry& geometry() const { return geometry_; }
  const EcpTable& ecps() const { return ecps_; }
  bool has_nonlocal_ecp() const { return has_nonlocal_; }
  double nucleus_nucleus_energy() const { return nn_energy_; }

  // Fast path through the walker's caches.  rng drives the random rotation of
  // the ECP quadrature frame; it may be null when no nonlocal channels exist.
  LocalEnergyBreakdown local_energy(Walker& walker, RngStream* rng = nullptr) const;

  // From-scratch path used by tests and oracles.
  LocalEnergyBreakdown local_energy(const TrialWavefunction& psi, const std::vector<Vec3>& positions,
                                    RngStream* rng = nullptr) const;

  // Localized nonlocal ECP contribution
  //   sum_l (2l+1) v_l(r) sum_q w_q P_l(cos theta_q) Psi(r -> r') / Psi(R)
  // over all electrons and ECP-carrying nuclei, with a freshly rotated
  // quadrature frame per electron-nucleus pair.
  double ecp_nonlocal_energy(const Walker& walker, const AngularQuadrature& quadrature,
                             RngStream& rng) const;

 private:
  Geometry geometry_;
  EcpTable ecps_;
  AngularQuadrature quadrature_;
  double nn_energy_ = 0.0;
  bool has_nonlocal_ = false;
  std::vector<const SemilocalECP*> nucleus_ecp_;  // nullptr when bare
  std::vector<double> ecp_reach_;                 // radius beyond which channels vanish
};

// d(R) = sum_a Z_a R_a - sum_i r_i, atomic units.
Vec3 dipole_local(const Geometry& geometry, const std::vector<Vec3>& positions);

}  // namespace qmcdip

#endif
