#include "qmcdip/vmc.hpp"

#include <algorithm>
#include <cmath>

#include "qmcdip/errors.hpp"
#include "qmcdip/parallel.hpp"

namespace qmcdip {

void VmcConfig::validate() const {
  if (steps_per_block < 1 || n_blocks < 1 || warmup_blocks < 0 || n_walkers < 1) {
    throw ConfigError("vmc: all counts must be >= 1");
  }
  if (n_blocks < 20) throw ConfigError("vmc: at least 20 blocks required for blocking error bars");
  if (move_width < 0.0) throw ConfigError("vmc: move width must be > 0 (or 0 for auto-tune)");
  if (n_threads < 1) throw ConfigError("vmc: thread count must be >= 1");
}

std::array<ValueWithError, 3> EstimatorAccumulator::dipole_result() const {
  return {ValueWithError{dipole[0].mean(), dipole[0].error()},
          ValueWithError{dipole[1].mean(), dipole[1].error()},
          ValueWithError{dipole[2].mean(), dipole[2].error()}};
}

Table EstimatorAccumulator::to_table() const {
  Table t;
  t.columns = {"block", "E_mean", "E_var", "d_x", "d_y", "d_z", "acceptance"};
  for (int b = 0; b < energy.n_blocks(); ++b) {
    t.add_row({static_cast<double>(b), energy.block_means[b], per_block[b].variance(),
               dipole[0].block_means[b], dipole[1].block_means[b], dipole[2].block_means[b],
               acceptance.block_means[b]});
  }
  return t;
}

bool metropolis_step(Walker& walker, int electron, double move_width, RngStream& rng) {
  const Vec3 displacement(move_width * rng.gaussian(), move_width * rng.gaussian(),
                          move_width * rng.gaussian());
  const Vec3 r_new = walker.positions()[electron] + displacement;
  const MoveRatio mv = walker.propose_move(electron, r_new);
  const double log_p = 2.0 * mv.log_abs;  // symmetric proposal
  bool accept;
  if (mv.sign == 0.0 || !std::isfinite(mv.log_abs)) {
    accept = mv.log_abs > 0.0;  // +inf cannot happen for finite orbitals; reject nodes
  } else {
    accept = log_p >= 0.0 || rng.uniform() < std::exp(log_p);
  }
  if (accept) {
    walker.accept_move(r_new, mv);
  } else {
    ++walker.age;
  }
  return accept;
}

int metropolis_sweep(Walker& walker, double move_width, RngStream& rng) {
  int accepted = 0;
  for (int i = 0; i < walker.psi().n_electrons(); ++i) {
    if (metropolis_step(walker, i, move_width, rng)) ++accepted;
  }
  return accepted;
}

namespace {

struct BlockSlot {
  double e_sum = 0.0;
  double e2_sum = 0.0;
  Vec3 d_sum = Vec3::Zero();
  std::int64_t n_valid = 0;
  std::int64_t n_nonfinite = 0;
  std::int64_t accepted = 0;
  std::int64_t proposed = 0;
  RunningStats stats;
};

Walker make_initial_walker(const TrialWavefunction& psi, RngStream& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Walker w(psi, initial_positions(psi.geometry(), rng));
    if (!w.at_node()) return w;
  }
  throw StageError("vmc: failed to draw an initial configuration off the nodal surface");
}

}  // namespace

EstimatorAccumulator run_vmc(const TrialWavefunction& psi, const Hamiltonian& hamiltonian,
                             const VmcConfig& config, std::vector<Walker>* final_walkers) {
  config.validate();
  const int n_electrons = psi.n_electrons();

  std::vector<Walker> walkers;
  std::vector<RngStream> streams;
  walkers.reserve(config.n_walkers);
  for (int w = 0; w < config.n_walkers; ++w) {
    streams.emplace_back(derive_seed(config.seed, hash_tag("vmc-walker"), w));
    walkers.push_back(make_initial_walker(psi, streams.back()));
  }

  double width = config.move_width > 0.0 ? config.move_width : 1.0;
  const bool tune = config.move_width == 0.0;

  EstimatorAccumulator acc;
  const int total_blocks = config.warmup_blocks + config.n_blocks;
  for (int block = 0; block < total_blocks; ++block) {
    const bool warm = block < config.warmup_blocks;
    std::vector<BlockSlot> slots(config.n_walkers);
    parallel_for(config.n_walkers, config.n_threads, [&](int w) {
      Walker& walker = walkers[w];
      RngStream& rng = streams[w];
      BlockSlot& slot = slots[w];
      for (int step = 0; step < config.steps_per_block; ++step) {
        slot.accepted += metropolis_sweep(walker, width, rng);
        slot.proposed += n_electrons;
        const LocalEnergyBreakdown e = hamiltonian.local_energy(walker, &rng);
        walker.cached_local_energy = e.total;
        if (std::isfinite(e.total)) {
          slot.e_sum += e.total;
          slot.e2_sum += e.total * e.total;
          slot.d_sum += dipole_local(psi.geometry(), walker.positions());
          slot.stats.add(e.total);
          ++slot.n_valid;
        } else {
          ++slot.n_nonfinite;
        }
      }
    });

    // fixed-order reduction keeps results identical at any thread count
    BlockSlot total;
    for (const auto& slot : slots) {
      total.e_sum += slot.e_sum;
      total.e2_sum += slot.e2_sum;
      total.d_sum += slot.d_sum;
      total.n_valid += slot.n_valid;
      total.n_nonfinite += slot.n_nonfinite;
      total.accepted += slot.accepted;
      total.proposed += slot.proposed;
      total.stats.merge(slot.stats);
    }
    const double acc_ratio = static_cast<double>(total.accepted) / total.proposed;

    if (warm) {
      if (tune) {
        // multiplicative steering toward ~50% acceptance
        width *= std::clamp(acc_ratio / 0.5, 0.5, 2.0);
        width = std::clamp(width, 1e-3, 10.0);
      }
      continue;
    }
    if (total.n_valid == 0) throw StageError("vmc: block with no finite local energies");
    acc.energy.push(total.e_sum / total.n_valid);
    acc.energy_sq.push(total.e2_sum / total.n_valid);
    for (int k = 0; k < 3; ++k) acc.dipole[k].push(total.d_sum[k] / total.n_valid);
    acc.acceptance.push(acc_ratio);
    acc.per_block.push_back(total.stats);
    acc.samples.merge(total.stats);
    acc.n_samples += total.n_valid + total.n_nonfinite;
    acc.n_nonfinite += total.n_nonfinite;
  }
  acc.move_width = width;

  if (acc.n_nonfinite > 0.01 * acc.n_samples) {
    throw StageError("vmc: " + std::to_string(acc.n_nonfinite) + " of " + std::to_string(acc.n_samples) +
                     " samples had non-finite local energy (singular trial function?)");
  }
  if (final_walkers) *final_walkers = std::move(walkers);
  return acc;
}

}  // namespace qmcdip
