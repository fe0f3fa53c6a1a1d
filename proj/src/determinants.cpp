#include "qmcdip/determinants.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qmcdip {

void DeterminantExpansion::validate(int n_up, int n_down, int n_orbitals) const {
  if (csfs.empty()) throw std::invalid_argument("determinant expansion is empty");
  if (reference < 0 || reference >= size()) throw std::invalid_argument("reference CSF index out of range");
  double max_c = 0.0;
  for (const auto& c : csfs) {
    max_c = std::max(max_c, std::abs(c.coeff));
    if (static_cast<int>(c.up.size()) != n_up || static_cast<int>(c.down.size()) != n_down) {
      throw std::invalid_argument("occupation list length does not match electron counts");
    }
    for (const auto* occ : {&c.up, &c.down}) {
      std::set<int> seen;
      for (int idx : *occ) {
        if (idx < 0 || idx >= n_orbitals) {
          throw std::invalid_argument("occupation references orbital " + std::to_string(idx) +
                                      " but only " + std::to_string(n_orbitals) + " orbitals are defined");
        }
        if (!seen.insert(idx).second) throw std::invalid_argument("repeated orbital in occupation list");
      }
    }
  }
  if (max_c == 0.0) throw std::invalid_argument("all CSF coefficients are zero");
}

DeterminantExpansion truncate_expansion(const DeterminantExpansion& expansion, double cutoff) {
  if (cutoff < 0.0 || cutoff >= 1.0) throw std::invalid_argument("cutoff must be in [0, 1)");
  double max_c = 0.0;
  for (const auto& c : expansion.csfs) max_c = std::max(max_c, std::abs(c.coeff));

  DeterminantExpansion out;
  for (int k = 0; k < expansion.size(); ++k) {
    const auto& c = expansion.csfs[k];
    if (k == expansion.reference || std::abs(c.coeff) >= cutoff * max_c) {
      if (k == expansion.reference) out.reference = out.size();
      out.csfs.push_back(c);
    }
  }
  double norm2 = 0.0;
  for (const auto& c : out.csfs) norm2 += c.coeff * c.coeff;
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : out.csfs) c.coeff *= scale;
  return out;
}

}  // namespace qmcdip
