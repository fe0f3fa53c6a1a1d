#include "qmcdip/wavefunction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmcdip {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// below this log-weight a CSF's Sherman-Morrison ratio is numerically
// meaningless and the determinant is re-evaluated from scratch instead
constexpr double kRelativeLogFloor = -300.0;

constexpr int kRebuildInterval = 256;

int spin_of(const Geometry& g, int electron) { return g.spin_of(electron); }
int row_of(const Geometry& g, int electron) { return electron < g.n_up ? electron : electron - g.n_up; }

}  // namespace

TrialWavefunction TrialWavefunction::build(Geometry geometry, OrbitalSet orbitals,
                                           DeterminantExpansion expansion, JastrowParams jastrow) {
  geometry.validate();
  orbitals.validate(geometry);
  expansion.validate(geometry.n_up, geometry.n_down, orbitals.size());

  TrialWavefunction psi;
  psi.geometry_ = std::move(geometry);
  psi.orbitals_ = std::move(orbitals);
  psi.expansion_ = std::move(expansion);
  psi.jastrow_ = Jastrow(std::move(jastrow), psi.geometry_);

  std::vector<int> slot(psi.orbitals_.size(), -1);
  auto intern = [&](int orbital) {
    if (slot[orbital] < 0) {
      slot[orbital] = static_cast<int>(psi.used_.size());
      psi.used_.push_back(orbital);
    }
    return slot[orbital];
  };
  for (const auto& csf : psi.expansion_.csfs) {
    std::vector<int> up, down;
    for (int o : csf.up) up.push_back(intern(o));
    for (int o : csf.down) down.push_back(intern(o));
    psi.up_slots_.push_back(std::move(up));
    psi.down_slots_.push_back(std::move(down));
  }
  return psi;
}

WavefunctionValue TrialWavefunction::evaluate(const std::vector<Vec3>& positions) const {
  Walker scratch(*this, positions);
  return scratch.value();
}

// ---------------------------------------------------------------------------
// Walker

Walker::Walker(const TrialWavefunction& psi, std::vector<Vec3> positions)
    : psi_(&psi), positions_(std::move(positions)) {
  if (static_cast<int>(positions_.size()) != psi.n_electrons()) {
    throw std::invalid_argument("walker position count does not match electron count");
  }
  recompute_all();
}

void Walker::recompute_all() {
  const int nel = psi_->n_electrons();
  const int nused = psi_->n_used();
  orb_cache_.assign(nel, std::vector<OrbitalEval>(nused));
  for (int i = 0; i < nel; ++i) {
    for (int s = 0; s < nused; ++s) {
      orb_cache_[i][s] = psi_->orbitals().evaluate(psi_->geometry(), psi_->used_orbitals()[s], positions_[i]);
    }
  }
  const int ncsf = psi_->n_csfs();
  dets_up_.assign(ncsf, {});
  dets_down_.assign(ncsf, {});
  for (int k = 0; k < ncsf; ++k) {
    rebuild_determinant(k, 0);
    rebuild_determinant(k, 1);
  }
  combine_csfs();
  refresh_jastrow();
  moves_since_rebuild_ = 0;
  value_cache_.reset();
  cached_local_energy.reset();
}

Walker::DetState Walker::evaluate_det_with_row(int csf, int spin, int row,
                                               const std::vector<OrbitalEval>& new_row,
                                               bool want_inverse) const {
  const auto& slots = psi_->occupied_slots(csf, spin);
  const int n = static_cast<int>(slots.size());
  DetState st;
  if (n == 0) {
    st.inv.resize(0, 0);
    return st;  // empty determinant == 1
  }
  const int base = spin == 0 ? 0 : psi_->geometry().n_up;
  Eigen::MatrixXd m(n, n);
  for (int r = 0; r < n; ++r) {
    const std::vector<OrbitalEval>& vals = (r == row) ? new_row : orb_cache_[base + r];
    for (int c = 0; c < n; ++c) m(r, c) = vals[slots[c]].value;
  }
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(m);
  double sign = lu.permutationP().determinant() > 0 ? 1.0 : -1.0;
  double log_abs = 0.0;
  for (int d = 0; d < n; ++d) {
    const double u = lu.matrixLU()(d, d);
    if (u == 0.0 || !std::isfinite(u)) {
      st.sign = 0.0;
      st.log_abs = kNegInf;
      st.inv.setZero(n, n);
      return st;
    }
    log_abs += std::log(std::abs(u));
    if (u < 0.0) sign = -sign;
  }
  st.sign = sign;
  st.log_abs = log_abs;
  if (want_inverse) st.inv = lu.inverse();
  return st;
}

void Walker::rebuild_determinant(int csf, int spin) {
  DetState st = evaluate_det_with_row(csf, spin, -1, {}, true);
  (spin == 0 ? dets_up_ : dets_down_)[csf] = std::move(st);
}

void Walker::combine_csfs() {
  const int ncsf = psi_->n_csfs();
  csf_sign_.assign(ncsf, 0.0);
  csf_log_.assign(ncsf, kNegInf);
  csf_weight_.assign(ncsf, 0.0);
  double max_log = kNegInf;
  for (int k = 0; k < ncsf; ++k) {
    const double c = psi_->expansion().csfs[k].coeff;
    if (c == 0.0) continue;
    const double s = (c > 0 ? 1.0 : -1.0) * dets_up_[k].sign * dets_down_[k].sign;
    if (s == 0.0) continue;
    csf_sign_[k] = s;
    csf_log_[k] = std::log(std::abs(c)) + dets_up_[k].log_abs + dets_down_[k].log_abs;
    max_log = std::max(max_log, csf_log_[k]);
  }
  if (max_log == kNegInf) {
    det_sign_ = 0.0;
    det_log_ = kNegInf;
    return;
  }
  double acc = 0.0;
  for (int k = 0; k < ncsf; ++k) {
    if (csf_sign_[k] != 0.0) acc += csf_sign_[k] * std::exp(csf_log_[k] - max_log);
  }
  if (acc == 0.0) {
    det_sign_ = 0.0;
    det_log_ = kNegInf;
    return;
  }
  det_sign_ = acc > 0 ? 1.0 : -1.0;
  det_log_ = max_log + std::log(std::abs(acc));
  for (int k = 0; k < ncsf; ++k) {
    csf_weight_[k] = csf_sign_[k] == 0.0
                         ? 0.0
                         : csf_sign_[k] * det_sign_ * std::exp(csf_log_[k] - det_log_);
  }
}

void Walker::refresh_jastrow() {
  jastrow_value_ = psi_->jastrow().value(positions_);
  psi_->jastrow().derivatives(positions_, jastrow_grad_, jastrow_lap_);
}

MoveRatio Walker::propose_move(int electron, const Vec3& r_new) const {
  if (at_node()) throw std::logic_error("propose_move from a walker exactly at a node");
  const Geometry& g = psi_->geometry();
  const int spin = spin_of(g, electron);
  const int row = row_of(g, electron);
  const auto& dets = spin == 0 ? dets_up_ : dets_down_;

  MoveRatio mv;
  mv.electron = electron;
  const int nused = psi_->n_used();
  mv.new_row.resize(nused);
  for (int s = 0; s < nused; ++s) {
    mv.new_row[s] = psi_->orbitals().evaluate(g, psi_->used_orbitals()[s], r_new);
  }

  const int ncsf = psi_->n_csfs();
  mv.det_updates.resize(ncsf);
  double det_part = 0.0;
  for (int k = 0; k < ncsf; ++k) {
    auto& upd = mv.det_updates[k];
    const auto& slots = psi_->occupied_slots(k, spin);
    if (slots.empty()) {  // no electron of this spin in the determinant
      upd.q = 1.0;
      det_part += csf_weight_[k];
      continue;
    }
    const bool usable = csf_sign_[k] != 0.0 && dets[k].sign != 0.0 &&
                        (csf_log_[k] - det_log_) > kRelativeLogFloor;
    if (usable) {
      double q = 0.0;
      for (std::size_t c = 0; c < slots.size(); ++c) {
        q += mv.new_row[slots[c]].value * dets[k].inv(static_cast<int>(c), row);
      }
      upd.q = q;
      det_part += csf_weight_[k] * q;
    } else {
      // contribution from a vanishing/negligible determinant: evaluate the
      // moved determinant from scratch
      DetState fresh = evaluate_det_with_row(k, spin, row, mv.new_row, false);
      upd.fresh = true;
      upd.fresh_sign = fresh.sign;
      upd.fresh_log = fresh.log_abs;
      if (fresh.sign != 0.0) {
        const double c = psi_->expansion().csfs[k].coeff;
        const auto& other = (spin == 0 ? dets_down_ : dets_up_)[k];
        if (other.sign != 0.0) {
          const double s = (c > 0 ? 1.0 : -1.0) * fresh.sign * other.sign * det_sign_;
          det_part += s * std::exp(std::log(std::abs(c)) + fresh.log_abs + other.log_abs - det_log_);
        }
      }
    }
  }

  mv.det_part = det_part;
  mv.jastrow_delta = psi_->jastrow().delta_single_move(positions_, electron, r_new);
  if (det_part == 0.0 || !std::isfinite(det_part)) {
    mv.sign = 0.0;
    mv.log_abs = kNegInf;
  } else {
    mv.sign = det_part > 0 ? 1.0 : -1.0;
    mv.log_abs = std::log(std::abs(det_part)) + mv.jastrow_delta;
  }
  return mv;
}

void Walker::accept_move(const Vec3& r_new, const MoveRatio& mv) {
  const int electron = mv.electron;
  const Geometry& g = psi_->geometry();
  const int spin = spin_of(g, electron);
  const int row = row_of(g, electron);
  auto& dets = spin == 0 ? dets_up_ : dets_down_;

  positions_[electron] = r_new;
  orb_cache_[electron] = mv.new_row;

  const int ncsf = psi_->n_csfs();
  for (int k = 0; k < ncsf; ++k) {
    const auto& slots = psi_->occupied_slots(k, spin);
    if (slots.empty()) continue;
    const auto& upd = mv.det_updates[k];
    const bool sm_ok = !upd.fresh && std::isfinite(upd.q) && std::abs(upd.q) > 1e-8;
    if (!sm_ok) {
      rebuild_determinant(k, spin);
      continue;
    }
    // rank-1 row-replacement update of the inverse
    DetState& st = dets[k];
    const int n = static_cast<int>(slots.size());
    Eigen::VectorXd v(n);
    for (int c = 0; c < n; ++c) v(c) = mv.new_row[slots[c]].value;
    Eigen::RowVectorXd vA = v.transpose() * st.inv;  // v^T M^-1
    vA(row) -= 1.0;
    const Eigen::VectorXd col = st.inv.col(row);
    st.inv.noalias() -= col * (vA / upd.q);
    st.log_abs += std::log(std::abs(upd.q));
    if (upd.q < 0.0) st.sign = -st.sign;
  }

  combine_csfs();
  refresh_jastrow();
  age = 0;
  value_cache_.reset();
  cached_local_energy.reset();

  if (++moves_since_rebuild_ >= kRebuildInterval) recompute_all();
}

Vec3 Walker::det_gradient(int electron) const {
  const Geometry& g = psi_->geometry();
  const int spin = spin_of(g, electron);
  const int row = row_of(g, electron);
  const auto& dets = spin == 0 ? dets_up_ : dets_down_;
  Vec3 grad = Vec3::Zero();
  for (int k = 0; k < psi_->n_csfs(); ++k) {
    if (csf_weight_[k] == 0.0) continue;
    const auto& slots = psi_->occupied_slots(k, spin);
    if (slots.empty()) continue;
    Vec3 gk = Vec3::Zero();
    for (std::size_t c = 0; c < slots.size(); ++c) {
      gk += dets[k].inv(static_cast<int>(c), row) * orb_cache_[electron][slots[c]].gradient;
    }
    grad += csf_weight_[k] * gk;
  }
  return grad;
}

Vec3 Walker::gradient_ln_psi(int electron) const {
  return det_gradient(electron) + jastrow_grad_[electron];
}

Vec3 Walker::gradient_after_move(const MoveRatio& mv, const Vec3& r_new) const {
  const int electron = mv.electron;
  const Geometry& g = psi_->geometry();
  const int spin = spin_of(g, electron);
  const int row = row_of(g, electron);
  const auto& dets = spin == 0 ? dets_up_ : dets_down_;

  bool any_fresh = false;
  for (const auto& upd : mv.det_updates) any_fresh = any_fresh || upd.fresh;
  if (any_fresh || mv.det_part == 0.0) {
    // rare path near another determinant's node: evaluate from scratch
    std::vector<Vec3> moved = positions_;
    moved[electron] = r_new;
    return psi_->evaluate(moved).gradient[electron];
  }

  // with w'_k = w_k q_k / R and grad'_k = (1/q_k) sum_c grad phi_c (M^-1)_c,row
  // the q_k cancel, leaving sum_k (w_k / R) sum_c grad phi_c (M^-1)_c,row
  Vec3 grad = Vec3::Zero();
  for (int k = 0; k < psi_->n_csfs(); ++k) {
    if (csf_weight_[k] == 0.0) continue;
    const auto& slots = psi_->occupied_slots(k, spin);
    if (slots.empty()) continue;
    Vec3 gk = Vec3::Zero();
    for (std::size_t c = 0; c < slots.size(); ++c) {
      gk += dets[k].inv(static_cast<int>(c), row) * mv.new_row[slots[c]].gradient;
    }
    grad += (csf_weight_[k] / mv.det_part) * gk;
  }
  return grad + psi_->jastrow().gradient_of_electron(positions_, electron, r_new);
}

const WavefunctionValue& Walker::value() const {
  if (value_cache_) return *value_cache_;
  const int nel = psi_->n_electrons();
  WavefunctionValue v;
  v.sign = det_sign_;
  v.log_magnitude = det_log_ + jastrow_value_;
  v.gradient.assign(nel, Vec3::Zero());
  v.laplacian_ratio = 0.0;
  if (det_sign_ == 0.0) {
    value_cache_ = std::move(v);
    return *value_cache_;
  }
  const Geometry& g = psi_->geometry();
  for (int i = 0; i < nel; ++i) {
    const int spin = spin_of(g, i);
    const int row = row_of(g, i);
    const auto& dets = spin == 0 ? dets_up_ : dets_down_;
    Vec3 fdet = Vec3::Zero();
    double ldet = 0.0;
    for (int k = 0; k < psi_->n_csfs(); ++k) {
      if (csf_weight_[k] == 0.0) continue;
      const auto& slots = psi_->occupied_slots(k, spin);
      if (slots.empty()) continue;
      Vec3 gk = Vec3::Zero();
      double lk = 0.0;
      for (std::size_t c = 0; c < slots.size(); ++c) {
        const auto& oe = orb_cache_[i][slots[c]];
        const double a = dets[k].inv(static_cast<int>(c), row);
        gk += a * oe.gradient;
        lk += a * oe.laplacian;
      }
      fdet += csf_weight_[k] * gk;
      ldet += csf_weight_[k] * lk;
    }
    v.gradient[i] = fdet + jastrow_grad_[i];
    v.laplacian_ratio += ldet + 2.0 * fdet.dot(jastrow_grad_[i]) + jastrow_lap_[i] +
                         jastrow_grad_[i].squaredNorm();
  }
  value_cache_ = std::move(v);
  return *value_cache_;
}

std::vector<Vec3> initial_positions(const Geometry& geometry, RngStream& rng) {
  // electrons dealt round-robin over nuclei (weighted toward higher charge),
  // then jittered; redraws if the configuration starts on a node are the
  // sampler's job
  std::vector<Vec3> pos(geometry.n_electrons());
  std::vector<double> cum;
  double total = 0.0;
  for (const auto& n : geometry.nuclei) {
    total += n.charge;
    cum.push_back(total);
  }
  for (int i = 0; i < geometry.n_electrons(); ++i) {
    const double pick = rng.uniform() * total;
    std::size_t a = 0;
    while (a + 1 < cum.size() && pick > cum[a]) ++a;
    const Vec3 c = geometry.nuclei[a].position;
    pos[i] = c + Vec3(rng.gaussian(), rng.gaussian(), rng.gaussian());
  }
  return pos;
}

// ---------------------------------------------------------------------------
// Cusp diagnostics

namespace {

// antisymmetrized directional derivative of ln|Psi| at distance eps on both
// sides of the coalescence point, Richardson-extrapolated in eps^2
double radial_log_derivative(const TrialWavefunction& psi, std::vector<Vec3> positions, int electron,
                             const Vec3& center, const Vec3& direction, double eps) {
  positions[electron] = center + eps * direction;
  const Vec3 gp = psi.evaluate(positions).gradient[electron];
  positions[electron] = center - eps * direction;
  const Vec3 gm = psi.evaluate(positions).gradient[electron];
  return 0.5 * direction.dot(gp - gm);
}

double extrapolated_cusp(const TrialWavefunction& psi, const std::vector<Vec3>& positions, int electron,
                         const Vec3& center, const Vec3& direction) {
  const double e1 = 2e-3, e2 = 1e-3;
  const double c1 = radial_log_derivative(psi, positions, electron, center, direction, e1);
  const double c2 = radial_log_derivative(psi, positions, electron, center, direction, e2);
  return (4.0 * c2 - c1) / 3.0;  // leading error is O(eps^2)
}

// background configuration that keeps the untouched electrons away from
// nuclei and from each other
std::vector<Vec3> background_positions(const Geometry& g) {
  std::vector<Vec3> pos(g.n_electrons());
  for (int i = 0; i < g.n_electrons(); ++i) {
    const double phi = 2.399963 * (i + 1);  // golden-angle spread
    const double z = -0.8 + 1.6 * (i + 0.5) / g.n_electrons();
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    pos[i] = 1.7 * Vec3(rho * std::cos(phi), rho * std::sin(phi), z) + Vec3(0.11, -0.07, 0.05);
  }
  return pos;
}

}  // namespace

CuspReport check_cusps(const TrialWavefunction& psi, double tolerance) {
  CuspReport report;
  const Geometry& g = psi.geometry();
  const std::vector<int> species = g.species_indices();
  const Vec3 dir = Vec3(0.3, -0.2, 0.93).normalized();

  // electron-nucleus: move electron 0 through the first nucleus of each
  // species; expected slope is -Z for bare-Coulomb nuclei
  std::vector<int> seen;
  for (int a = 0; a < g.n_nuclei(); ++a) {
    if (std::find(seen.begin(), seen.end(), species[a]) != seen.end()) continue;
    seen.push_back(species[a]);
    if (g.nuclei[a].ecp_id) continue;  // no coalescence condition without bare Coulomb
    CuspReport::Entry e;
    e.kind = "e-n";
    e.species = species[a];
    e.expected = -g.nuclei[a].charge;
    e.measured = extrapolated_cusp(psi, background_positions(g), 0, g.nuclei[a].position, dir);
    e.pass = std::abs(e.measured - e.expected) <= tolerance;
    report.entries.push_back(e);
  }

  // electron-electron antiparallel: full-wavefunction measurement when an
  // antiparallel pair exists
  if (g.n_up >= 1 && g.n_down >= 1) {
    auto pos = background_positions(g);
    const int i = 0, j = g.n_up;
    CuspReport::Entry e;
    e.kind = "e-e anti";
    e.expected = 0.5;
    e.measured = extrapolated_cusp(psi, pos, i, pos[j], dir);
    e.pass = std::abs(e.measured - e.expected) <= tolerance;
    report.entries.push_back(e);
  }

  // electron-electron parallel: the determinant vanishes at coincidence, so
  // the slope is read off the Jastrow pair term alone
  {
    const PadePolyTerm& u = psi.jastrow().params().ee_para;
    const double e1 = 2e-3, e2 = 1e-3, h = 1e-4;
    auto slope = [&](double r) { return (u.eval(r + h).v - u.eval(r - h).v) / (2.0 * h); };
    const double c1 = slope(e1), c2 = slope(e2);
    CuspReport::Entry e;
    e.kind = "e-e para";
    e.expected = 0.25;
    e.measured = (4.0 * c2 - c1) / 3.0;
    e.pass = std::abs(e.measured - e.expected) <= tolerance;
    report.entries.push_back(e);
  }

  report.all_pass = true;
  for (const auto& e : report.entries) report.all_pass = report.all_pass && e.pass;
  return report;
}

}  // namespace qmcdip
