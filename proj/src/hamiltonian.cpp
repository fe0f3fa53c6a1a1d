#include "qmcdip/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace qmcdip {

Hamiltonian::Hamiltonian(Geometry geometry, EcpTable ecps, int ecp_quad_order)
    : geometry_(std::move(geometry)), ecps_(std::move(ecps)) {
  geometry_.validate();
  for (auto& [name, ecp] : ecps_) ecp.validate();

  nn_energy_ = 0.0;
  for (int a = 0; a < geometry_.n_nuclei(); ++a) {
    for (int b = a + 1; b < geometry_.n_nuclei(); ++b) {
      nn_energy_ += geometry_.nuclei[a].charge * geometry_.nuclei[b].charge /
                    (geometry_.nuclei[a].position - geometry_.nuclei[b].position).norm();
    }
  }

  int lmax = -1;
  nucleus_ecp_.assign(geometry_.n_nuclei(), nullptr);
  ecp_reach_.assign(geometry_.n_nuclei(), 0.0);
  for (int a = 0; a < geometry_.n_nuclei(); ++a) {
    const auto& id = geometry_.nuclei[a].ecp_id;
    if (!id) continue;
    auto it = ecps_.find(*id);
    if (it == ecps_.end()) throw std::invalid_argument("nucleus references unknown ECP '" + *id + "'");
    nucleus_ecp_[a] = &it->second;
    lmax = std::max(lmax, it->second.max_l());
    // channels are Gaussian-damped; scan outward for the radius where they
    // all drop below noise
    double reach = 0.0;
    for (double r = 0.05; r <= 40.0; r += 0.05) {
      double mag = 0.0;
      for (const auto& ch : it->second.nonlocal) mag = std::max(mag, std::abs(ecp_radial_value(ch.terms, r)));
      if (mag > 1e-12) reach = r + 0.05;
    }
    ecp_reach_[a] = reach;
    if (!it->second.nonlocal.empty()) has_nonlocal_ = true;
  }

  if (lmax >= 0) {
    if (ecp_quad_order < 2 * lmax + 1) {
      throw std::invalid_argument("ECP quadrature order " + std::to_string(ecp_quad_order) +
                                  " below required 2*l_max+1 = " + std::to_string(2 * lmax + 1));
    }
    quadrature_ = make_lebedev_quadrature(ecp_quad_order);
  }
}

double Hamiltonian::ecp_nonlocal_energy(const Walker& walker, const AngularQuadrature& quadrature,
                                        RngStream& rng) const {
  const auto& positions = walker.positions();
  double energy = 0.0;
  for (int a = 0; a < geometry_.n_nuclei(); ++a) {
    const SemilocalECP* ecp = nucleus_ecp_[a];
    if (!ecp || ecp->nonlocal.empty()) continue;
    const Vec3 center = geometry_.nuclei[a].position;
    for (int i = 0; i < geometry_.n_electrons(); ++i) {
      const Vec3 d = positions[i] - center;
      const double r = d.norm();
      if (r >= ecp_reach_[a] || r == 0.0) continue;

      // radial channel values; skip the quadrature when they all vanish
      double vmax = 0.0;
      std::vector<double> vl(ecp->nonlocal.size());
      for (std::size_t c = 0; c < ecp->nonlocal.size(); ++c) {
        vl[c] = ecp->channel_value(static_cast<int>(c), r);
        vmax = std::max(vmax, std::abs(vl[c]));
      }
      if (vmax < 1e-14) continue;

      const Eigen::Matrix3d rot = random_rotation(rng);
      const Vec3 rhat = d / r;
      for (int q = 0; q < quadrature.size(); ++q) {
        const Vec3 n = rot * quadrature.nodes[q];
        const Vec3 r_prime = center + r * n;
        const MoveRatio mv = walker.propose_move(i, r_prime);
        const double ratio = mv.sign * std::exp(mv.log_abs);
        if (ratio == 0.0) continue;
        const double cos_theta = n.dot(rhat);
        for (std::size_t c = 0; c < ecp->nonlocal.size(); ++c) {
          const int l = ecp->nonlocal[c].l;
          energy += (2 * l + 1) * vl[c] * quadrature.weights[q] * legendre_pl(l, cos_theta) * ratio;
        }
      }
    }
  }
  return energy;
}

LocalEnergyBreakdown Hamiltonian::local_energy(Walker& walker, RngStream* rng) const {
  const auto& positions = walker.positions();
  LocalEnergyBreakdown e;
  e.kinetic = -0.5 * walker.value().laplacian_ratio;
  e.nucleus_nucleus = nn_energy_;

  for (int i = 0; i < geometry_.n_electrons(); ++i) {
    for (int a = 0; a < geometry_.n_nuclei(); ++a) {
      const double r = (positions[i] - geometry_.nuclei[a].position).norm();
      e.electron_nucleus -= geometry_.nuclei[a].charge / r;
      if (const SemilocalECP* ecp = nucleus_ecp_[a]; ecp && !ecp->local.empty()) {
        e.ecp_local += ecp->local_value(r);
      }
    }
    for (int j = i + 1; j < geometry_.n_electrons(); ++j) {
      e.electron_electron += 1.0 / (positions[i] - positions[j]).norm();
    }
  }

  if (has_nonlocal_) {
    if (!rng) throw std::invalid_argument("nonlocal ECP evaluation requires a random-rotation stream");
    e.ecp_nonlocal = ecp_nonlocal_energy(walker, quadrature_, *rng);
  }

  e.total = e.kinetic + e.electron_nucleus + e.electron_electron + e.nucleus_nucleus + e.ecp_local +
            e.ecp_nonlocal;
  return e;
}

LocalEnergyBreakdown Hamiltonian::local_energy(const TrialWavefunction& psi,
                                               const std::vector<Vec3>& positions, RngStream* rng) const {
  Walker scratch(psi, positions);
  return local_energy(scratch, rng);
}

Vec3 dipole_local(const Geometry& geometry, const std::vector<Vec3>& positions) {
  Vec3 d = nuclear_dipole(geometry);
  for (const auto& r : positions) d -= r;
  return d;
}

}  // namespace qmcdip
