#include "qmcdip/geometry.hpp"

#include <stdexcept>

namespace qmcdip {

double Geometry::total_nuclear_charge() const {
  double q = 0.0;
  for (const auto& n : nuclei) q += n.charge;
  return q;
}

std::vector<int> Geometry::species_indices() const {
  std::vector<int> idx(nuclei.size(), -1);
  std::vector<std::pair<double, std::string>> seen;
  for (std::size_t a = 0; a < nuclei.size(); ++a) {
    std::pair<double, std::string> key{nuclei[a].charge, nuclei[a].ecp_id.value_or("")};
    int found = -1;
    for (std::size_t s = 0; s < seen.size(); ++s) {
      if (seen[s] == key) {
        found = static_cast<int>(s);
        break;
      }
    }
    if (found < 0) {
      seen.push_back(key);
      found = static_cast<int>(seen.size()) - 1;
    }
    idx[a] = found;
  }
  return idx;
}

int Geometry::n_species() const {
  const auto idx = species_indices();
  int n = 0;
  for (int i : idx) n = std::max(n, i + 1);
  return n;
}

Vec3 Geometry::bond_axis() const {
  if (nuclei.size() < 2) return Vec3(0, 0, 1);
  Vec3 d = nuclei[1].position - nuclei[0].position;
  const double norm = d.norm();
  if (norm == 0.0) return Vec3(0, 0, 1);
  return d / norm;
}

void Geometry::validate() const {
  if (nuclei.empty()) throw std::invalid_argument("geometry has no nuclei");
  for (const auto& n : nuclei) {
    if (!(n.charge > 0.0)) throw std::invalid_argument("nuclear charge must be > 0");
  }
  if (n_down < 0 || n_up < n_down) throw std::invalid_argument("electron counts must satisfy n_up >= n_down >= 0");
  if (n_up + n_down < 1) throw std::invalid_argument("at least one electron required");
  for (std::size_t a = 0; a < nuclei.size(); ++a) {
    for (std::size_t b = a + 1; b < nuclei.size(); ++b) {
      if ((nuclei[a].position - nuclei[b].position).norm() == 0.0) {
        throw std::invalid_argument("two nuclei at identical positions");
      }
    }
  }
}

Vec3 nuclear_dipole(const Geometry& geometry) {
  Vec3 d = Vec3::Zero();
  for (const auto& n : geometry.nuclei) d += n.charge * n.position;
  return d;
}

}  // namespace qmcdip
