#ifndef QMCDIP_GEOMETRY_HPP
#define QMCDIP_GEOMETRY_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace qmcdip {

using Vec3 = Eigen::Vector3d;

struct Nucleus {
  double charge = 0.0;               // effective nuclear charge Z_eff
  Vec3 position = Vec3::Zero();      // bohr
  std::optional<std::string> ecp_id; // name into the ECP table, if any
  std::optional<double> z_full;      // full nuclear charge, when stated in the input
};

// Nuclear frame plus electron counts.  Immutable after validation; shared
// read-only across walkers.
struct Geometry {
  std::vector<Nucleus> nuclei;
  int n_up = 0;
  int n_down = 0;

  int n_electrons() const { return n_up + n_down; }
  int n_nuclei() const { return static_cast<int>(nuclei.size()); }

  // 0 for electrons [0, n_up), 1 for [n_up, n_up+n_down)
  int spin_of(int electron) const { return electron < n_up ? 0 : 1; }

  double total_nuclear_charge() const;

  // species index per nucleus: nuclei with identical (charge, ecp_id) share a
  // species, numbered in order of first appearance.  Used by the per-species
  // Jastrow terms.
  std::vector<int> species_indices() const;
  int n_species() const;

  // Unit vector from the first to the second nucleus; +z for single atoms.
  // Defines the sign convention of the reported bond-axis dipole component.
  Vec3 bond_axis() const;

  // Throws std::invalid_argument if any invariant is violated.
  void validate() const;
};

// Sum_a Z_a R_a, atomic units (e*bohr).
Vec3 nuclear_dipole(const Geometry& geometry);

}  // namespace qmcdip

#endif
