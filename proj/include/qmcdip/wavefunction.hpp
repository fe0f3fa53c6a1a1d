#ifndef QMCDIP_WAVEFUNCTION_HPP
#define QMCDIP_WAVEFUNCTION_HPP

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "qmcdip/determinants.hpp"
#include "qmcdip/geometry.hpp"
#include "qmcdip/jastrow.hpp"
#include "qmcdip/orbitals.hpp"
#include "qmcdip/rng.hpp"

namespace qmcdip {

// Everything an estimator needs at one configuration.  gradient[i] is
// grad_i ln|Psi|; laplacian_ratio is sum_i lap_i Psi / Psi.
struct WavefunctionValue {
  double log_magnitude = 0.0;
  double sign = 1.0;  // +-1, or 0 exactly at a node
  std::vector<Vec3> gradient;
  double laplacian_ratio = 0.0;
};

// Slater-Jastrow trial function Psi = (sum_k c_k D_k^up D_k^down) e^J.
// Immutable after build(); shared read-only across walkers.
class TrialWavefunction {
 public:
  static TrialWavefunction build(Geometry geometry, OrbitalSet orbitals,
                                 DeterminantExpansion expansion, JastrowParams jastrow);

  const Geometry& geometry() const { return geometry_; }
  const OrbitalSet& orbitals() const { return orbitals_; }
  const DeterminantExpansion& expansion() const { return expansion_; }
  const Jastrow& jastrow() const { return jastrow_; }

  int n_electrons() const { return geometry_.n_electrons(); }
  int n_csfs() const { return expansion_.size(); }

  // orbitals referenced by at least one determinant, and the per-CSF
  // occupations translated to slots in that list
  const std::vector<int>& used_orbitals() const { return used_; }
  int n_used() const { return static_cast<int>(used_.size()); }
  const std::vector<int>& occupied_slots(int csf, int spin) const {
    return spin == 0 ? up_slots_[csf] : down_slots_[csf];
  }

  // Full evaluation from scratch (no incremental updates involved).
  WavefunctionValue evaluate(const std::vector<Vec3>& positions) const;

 private:
  Geometry geometry_;
  OrbitalSet orbitals_;
  DeterminantExpansion expansion_;
  Jastrow jastrow_;
  std::vector<int> used_;
  std::vector<std::vector<int>> up_slots_;
  std::vector<std::vector<int>> down_slots_;
};

// Ratio and per-determinant bookkeeping for a proposed single-electron move.
struct MoveRatio {
  double sign = 0.0;      // sign of Psi_new / Psi_old
  double log_abs = 0.0;   // ln |Psi_new / Psi_old|
  double det_part = 0.0;  // antisymmetric-part ratio, plain arithmetic
  double jastrow_delta = 0.0;

  double abs_ratio() const { return std::exp(log_abs); }

  // internals consumed by Walker::accept_move
  int electron = -1;
  std::vector<OrbitalEval> new_row;
  struct DetUpdate {
    double q = 0.0;      // Sherman-Morrison ratio
    bool fresh = false;  // true when the determinant was re-evaluated from scratch
    double fresh_sign = 0.0;
    double fresh_log = 0.0;
  };
  std::vector<DetUpdate> det_updates;
};

// One 3N-dimensional electron configuration with cached wavefunction data.
// The determinant caches are advanced with rank-1 (Sherman-Morrison) inverse
// updates on accepted moves and rebuilt from scratch periodically and on
// near-singular updates.
class Walker {
 public:
  Walker(const TrialWavefunction& psi, std::vector<Vec3> positions);

  const std::vector<Vec3>& positions() const { return positions_; }
  const TrialWavefunction& psi() const { return *psi_; }

  bool at_node() const { return det_sign_ == 0.0; }

  // Psi(positions with electron moved) / Psi(positions); no state change.
  MoveRatio propose_move(int electron, const Vec3& r_new) const;
  void accept_move(const Vec3& r_new, const MoveRatio& ratio);

  Vec3 gradient_ln_psi(int electron) const;
  // grad ln|Psi| of the moved electron at the proposed position, evaluated
  // without committing the move (reverse drift for the DMC Green's function).
  Vec3 gradient_after_move(const MoveRatio& mv, const Vec3& r_new) const;
  const WavefunctionValue& value() const;  // cached, lazily assembled

  void recompute_all();  // full rebuild from positions

  double weight = 1.0;
  int age = 0;  // steps since last accepted move

  std::optional<double> cached_local_energy;  // set by the samplers

 private:
  struct DetState {
    Eigen::MatrixXd inv;
    double sign = 1.0;
    double log_abs = 0.0;
  };

  const TrialWavefunction* psi_ = nullptr;
  std::vector<Vec3> positions_;
  std::vector<std::vector<OrbitalEval>> orb_cache_;  // [electron][used-orbital slot]
  std::vector<DetState> dets_up_;
  std::vector<DetState> dets_down_;
  std::vector<double> csf_sign_;  // combined sign incl. coefficient, per CSF
  std::vector<double> csf_log_;   // ln|c_k| + ln|D_up| + ln|D_down|
  std::vector<double> csf_weight_;
  double det_sign_ = 1.0;   // sign of the antisymmetric part
  double det_log_ = 0.0;    // ln|sum_k c_k D D|
  double jastrow_value_ = 0.0;
  std::vector<Vec3> jastrow_grad_;
  std::vector<double> jastrow_lap_;
  int moves_since_rebuild_ = 0;

  mutable std::optional<WavefunctionValue> value_cache_;

  void rebuild_determinant(int csf, int spin);
  void combine_csfs();
  void refresh_jastrow();
  DetState evaluate_det_with_row(int csf, int spin, int row,
                                 const std::vector<OrbitalEval>& new_row, bool want_inverse) const;
  Vec3 det_gradient(int electron) const;
};

std::vector<Vec3> initial_positions(const Geometry& geometry, RngStream& rng);

// Cusp diagnostics: numerically extrapolated logarithmic derivatives at
// electron-nucleus and electron-electron coalescence points.
struct CuspReport {
  struct Entry {
    std::string kind;      // "e-n", "e-e anti", "e-e para"
    int species = -1;      // nuclear species for e-n entries
    double measured = 0.0;
    double expected = 0.0;
    bool pass = false;
  };
  std::vector<Entry> entries;
  bool all_pass = true;
};

CuspReport check_cusps(const TrialWavefunction& psi, double tolerance = 1e-3);

}  // namespace qmcdip

#endif
