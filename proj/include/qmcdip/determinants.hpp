#ifndef QMCDIP_DETERMINANTS_HPP
#define QMCDIP_DETERMINANTS_HPP

#include <vector>

namespace qmcdip {

// One determinant product of the CI expansion.  Spin-adapted configuration
// state functions are expanded to these products at load time; occupation
// lists hold 0-based orbital indices.
struct Csf {
  double coeff = 0.0;
  std::vector<int> up;
  std::vector<int> down;
};

struct DeterminantExpansion {
  std::vector<Csf> csfs;
  int reference = 0;  // index of the HF configuration

  int size() const { return static_cast<int>(csfs.size()); }

  // Throws std::invalid_argument on violated invariants (empty expansion,
  // all-zero coefficients, repeated orbitals, occupation length mismatch,
  // orbital index out of range).
  void validate(int n_up, int n_down, int n_orbitals) const;
};

// Keeps CSFs with |c_k| / max_j |c_j| >= cutoff; the reference CSF is always
// kept; coefficients renormalized to unit sum of squares.  Idempotent at
// fixed cutoff.
DeterminantExpansion truncate_expansion(const DeterminantExpansion& expansion, double cutoff);

}  // namespace qmcdip

#endif
