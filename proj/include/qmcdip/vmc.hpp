#ifndef QMCDIP_VMC_HPP
#define QMCDIP_VMC_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "qmcdip/hamiltonian.hpp"
#include "qmcdip/stats.hpp"
#include "qmcdip/table.hpp"
#include "qmcdip/wavefunction.hpp"

namespace qmcdip {

struct VmcConfig {
  int steps_per_block = 200;  // one step = one attempted move per electron
  int n_blocks = 40;          // measured blocks; >= 20 enforced for error bars
  int warmup_blocks = 8;      // discarded; also drives the width auto-tune
  double move_width = 0.0;    // bohr; 0 = auto-tune toward ~50% acceptance
  int n_walkers = 4;
  std::uint64_t seed = 1;
  int n_threads = 1;

  void validate() const;  // throws ConfigError
};

// Blocked statistics for energy, variance and the dipole vector.
struct EstimatorAccumulator {
  BlockSeries energy;
  BlockSeries energy_sq;
  std::array<BlockSeries, 3> dipole;
  BlockSeries acceptance;
  std::vector<RunningStats> per_block;  // local-energy scatter within each block
  RunningStats samples;                 // all post-warmup samples (Welford)
  std::int64_t n_samples = 0;
  std::int64_t n_nonfinite = 0;
  double move_width = 0.0;

  ValueWithError energy_result() const { return {energy.mean(), energy.error()}; }
  double energy_variance() const { return samples.variance(); }
  std::array<ValueWithError, 3> dipole_result() const;
  double acceptance_ratio() const { return acceptance.mean(); }

  // columns: block, E_mean, E_var, d_x, d_y, d_z, acceptance
  Table to_table() const;
};

// One Gaussian single-electron proposal, accepted with min(1, |ratio|^2);
// proposals into the opposite nodal pocket or onto singular points get
// |ratio| = 0 and auto-reject.
bool metropolis_step(Walker& walker, int electron, double move_width, RngStream& rng);

// One attempted move per electron; returns the number of accepted moves.
int metropolis_sweep(Walker& walker, double move_width, RngStream& rng);

// Samples |Psi|^2 and accumulates <E>, Var(E_L) and <d> with blocked error
// bars.  Deterministic for fixed seed and config at any thread count.  Aborts
// with StageError if more than 1% of post-warmup samples have a non-finite
// local energy.  final_walkers, when non-null, receives the walker set at the
// end of the run (used to start DMC and the optimizer sample).
EstimatorAccumulator run_vmc(const TrialWavefunction& psi, const Hamiltonian& hamiltonian,
                             const VmcConfig& config, std::vector<Walker>* final_walkers = nullptr);

}  // namespace qmcdip

#endif
