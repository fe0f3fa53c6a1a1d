#include "qmcdip/jastrow.hpp"

#include <cmath>
#include <stdexcept>

namespace qmcdip {

namespace {

// (r/L)^k (1 - r/L)^3 and derivatives wrt r; zero (to C^2) beyond L.
RadialDeriv cutoff_poly(int k, double r, double L) {
  RadialDeriv out;
  const double t = r / L;
  if (t >= 1.0) return out;
  double tk = 1.0, tk1 = 0.0, tk2 = 0.0;  // t^k, t^{k-1}, t^{k-2}
  for (int i = 0; i < k; ++i) {
    tk2 = tk1;
    tk1 = tk;
    tk *= t;
  }
  const double om = 1.0 - t;
  const double om2 = om * om;
  const double om3 = om2 * om;
  out.v = tk * om3;
  const double dt = k * tk1 * om3 - 3.0 * tk * om2;
  const double dtt = k * (k - 1) * tk2 * om3 - 6.0 * k * tk1 * om2 + 6.0 * tk * om;
  out.d1 = dt / L;
  out.d2 = dtt / (L * L);
  return out;
}

// (r/L)^o and derivatives wrt r.
RadialDeriv scaled_power(int o, double r, double L) {
  RadialDeriv out;
  if (o == 0) {
    out.v = 1.0;
    return out;
  }
  const double t = r / L;
  double to = 1.0, to1 = 0.0, to2 = 0.0;
  for (int i = 0; i < o; ++i) {
    to2 = to1;
    to1 = to;
    to *= t;
  }
  out.v = to;
  out.d1 = o * to1 / L;
  out.d2 = o * (o - 1) * to2 / (L * L);
  return out;
}

}  // namespace

RadialDeriv PadePolyTerm::eval(double r) const {
  RadialDeriv out;
  if (b1 != 0.0) {
    const double den = 1.0 + b2 * r;
    out.v = b1 * r / den;
    out.d1 = b1 / (den * den);
    out.d2 = -2.0 * b1 * b2 / (den * den * den);
  }
  if (!poly.empty() && r < cutoff) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const RadialDeriv p = cutoff_poly(static_cast<int>(i) + 2, r, cutoff);
      out.v += poly[i] * p.v;
      out.d1 += poly[i] * p.d1;
      out.d2 += poly[i] * p.d2;
    }
  }
  return out;
}

bool JastrowParams::is_identity() const {
  for (const auto& t : en)
    if (!t.is_zero()) return false;
  if (!ee_anti.is_zero() || !ee_para.is_zero()) return false;
  for (const auto& t : een)
    if (t.coeff != 0.0) return false;
  return true;
}

void JastrowParams::apply_cusp_conditions() {
  if (!enforce_ee_cusps) return;
  ee_anti.b1 = 0.5;
  ee_para.b1 = 0.25;
}

std::vector<double> JastrowParams::variational_parameters() const {
  std::vector<double> p;
  auto push_term = [&](const PadePolyTerm& t, bool include_b1) {
    if (include_b1) p.push_back(t.b1);
    p.push_back(t.b2);
    for (double c : t.poly) p.push_back(c);
  };
  for (const auto& t : en) push_term(t, !enforce_ee_cusps);
  push_term(ee_anti, !enforce_ee_cusps);
  push_term(ee_para, !enforce_ee_cusps);
  for (const auto& t : een) p.push_back(t.coeff);
  return p;
}

void JastrowParams::set_variational_parameters(const std::vector<double>& p) {
  std::size_t pos = 0;
  auto pull_term = [&](PadePolyTerm& t, bool include_b1) {
    if (include_b1) t.b1 = p.at(pos++);
    t.b2 = p.at(pos++);
    for (double& c : t.poly) c = p.at(pos++);
  };
  for (auto& t : en) pull_term(t, !enforce_ee_cusps);
  pull_term(ee_anti, !enforce_ee_cusps);
  pull_term(ee_para, !enforce_ee_cusps);
  for (auto& t : een) t.coeff = p.at(pos++);
  if (pos != p.size()) throw std::invalid_argument("parameter vector length mismatch");
}

std::vector<std::pair<double, double>> JastrowParams::parameter_bounds() const {
  std::vector<std::pair<double, double>> b;
  auto push_term = [&](const PadePolyTerm& t, bool include_b1) {
    if (include_b1) b.emplace_back(-10.0, 10.0);   // b1
    b.emplace_back(0.05, 50.0);                    // b2 kept positive: poles in the Pade otherwise
    for (std::size_t i = 0; i < t.poly.size(); ++i) b.emplace_back(-10.0, 10.0);
  };
  for (const auto& t : en) push_term(t, !enforce_ee_cusps);
  push_term(ee_anti, !enforce_ee_cusps);
  push_term(ee_para, !enforce_ee_cusps);
  for (std::size_t i = 0; i < een.size(); ++i) b.emplace_back(-10.0, 10.0);
  return b;
}

void JastrowParams::validate(int n_species) const {
  auto check_term = [](const PadePolyTerm& t, const char* what) {
    if (!(t.b2 > 0.0)) throw std::invalid_argument(std::string(what) + ": b2 must be > 0");
    if (!t.poly.empty() && !(t.cutoff > 0.0)) {
      throw std::invalid_argument(std::string(what) + ": polynomial corrections require a cutoff > 0");
    }
  };
  if (static_cast<int>(en.size()) > n_species) {
    throw std::invalid_argument("jastrow e-n term references species beyond the geometry's species list");
  }
  for (const auto& t : en) check_term(t, "jastrow e-n term");
  check_term(ee_anti, "jastrow e-e anti term");
  check_term(ee_para, "jastrow e-e para term");
  for (const auto& t : een) {
    if (t.species < 0 || t.species >= n_species) {
      throw std::invalid_argument("jastrow e-e-n term references unknown species");
    }
    if (!(t.cutoff > 0.0)) throw std::invalid_argument("jastrow e-e-n term requires cutoff > 0");
    if (t.m < 0 || t.n < 0 || t.o < 0) throw std::invalid_argument("jastrow e-e-n powers must be >= 0");
    if (enforce_ee_cusps) {
      // keep the enforced cusps intact: o = 1 would shift the e-e slope at
      // coalescence, m or n = 1 the e-n slope at the nucleus
      if (t.o == 1) throw std::invalid_argument("jastrow e-e-n term with o = 1 breaks the enforced e-e cusp");
      if (t.m == 1 || t.n == 1) {
        throw std::invalid_argument("jastrow e-e-n term with m or n = 1 perturbs the e-n cusp");
      }
    }
  }
}

Jastrow::Jastrow(JastrowParams params, const Geometry& geometry)
    : params_(std::move(params)), n_up_(geometry.n_up) {
  params_.apply_cusp_conditions();
  params_.validate(geometry.n_species());
  centers_.reserve(geometry.nuclei.size());
  for (const auto& n : geometry.nuclei) centers_.push_back(n.position);
  species_ = geometry.species_indices();
}

const PadePolyTerm* Jastrow::en_term(int species) const {
  if (species < 0 || species >= static_cast<int>(params_.en.size())) return nullptr;
  const auto& t = params_.en[species];
  return t.is_zero() ? nullptr : &t;
}

const PadePolyTerm& Jastrow::ee_term(int i, int j) const {
  const bool same_spin = (i < n_up_) == (j < n_up_);
  return same_spin ? params_.ee_para : params_.ee_anti;
}

double Jastrow::value(const std::vector<Vec3>& positions) const {
  const int nel = static_cast<int>(positions.size());
  const int nnuc = static_cast<int>(centers_.size());
  double j = 0.0;
  for (int i = 0; i < nel; ++i) {
    for (int a = 0; a < nnuc; ++a) {
      if (const PadePolyTerm* t = en_term(species_[a])) {
        j += t->eval((positions[i] - centers_[a]).norm()).v;
      }
    }
  }
  for (int i = 0; i < nel; ++i) {
    for (int k = i + 1; k < nel; ++k) {
      const PadePolyTerm& t = ee_term(i, k);
      if (!t.is_zero()) j += t.eval((positions[i] - positions[k]).norm()).v;
    }
  }
  for (const auto& t : params_.een) {
    if (t.coeff == 0.0) continue;
    for (int a = 0; a < nnuc; ++a) {
      if (species_[a] != t.species) continue;
      for (int i = 0; i < nel; ++i) {
        const double u = (positions[i] - centers_[a]).norm();
        const RadialDeriv pm_u = cutoff_poly(t.m, u, t.cutoff);
        const RadialDeriv pn_u = cutoff_poly(t.n, u, t.cutoff);
        if (pm_u.v == 0.0 && pn_u.v == 0.0) continue;
        for (int k = i + 1; k < nel; ++k) {
          const double v = (positions[k] - centers_[a]).norm();
          const RadialDeriv pm_v = cutoff_poly(t.m, v, t.cutoff);
          const RadialDeriv pn_v = cutoff_poly(t.n, v, t.cutoff);
          const double w = (positions[i] - positions[k]).norm();
          const RadialDeriv s = scaled_power(t.o, w, t.cutoff);
          j += t.coeff * (pm_u.v * pn_v.v + pm_v.v * pn_u.v) * s.v;
        }
      }
    }
  }
  return j;
}

void Jastrow::derivatives(const std::vector<Vec3>& positions, std::vector<Vec3>& grad,
                          std::vector<double>& lap) const {
  const int nel = static_cast<int>(positions.size());
  const int nnuc = static_cast<int>(centers_.size());
  grad.assign(nel, Vec3::Zero());
  lap.assign(nel, 0.0);

  for (int i = 0; i < nel; ++i) {
    for (int a = 0; a < nnuc; ++a) {
      if (const PadePolyTerm* t = en_term(species_[a])) {
        const Vec3 d = positions[i] - centers_[a];
        const double r = d.norm();
        const RadialDeriv u = t->eval(r);
        grad[i] += (u.d1 / r) * d;
        lap[i] += u.d2 + 2.0 * u.d1 / r;
      }
    }
  }

  for (int i = 0; i < nel; ++i) {
    for (int k = i + 1; k < nel; ++k) {
      const PadePolyTerm& t = ee_term(i, k);
      if (t.is_zero()) continue;
      const Vec3 d = positions[i] - positions[k];
      const double r = d.norm();
      const RadialDeriv u = t.eval(r);
      const Vec3 g = (u.d1 / r) * d;
      grad[i] += g;
      grad[k] -= g;
      const double l = u.d2 + 2.0 * u.d1 / r;
      lap[i] += l;
      lap[k] += l;
    }
  }

  for (const auto& t : params_.een) {
    if (t.coeff == 0.0) continue;
    for (int a = 0; a < nnuc; ++a) {
      if (species_[a] != t.species) continue;
      for (int i = 0; i < nel; ++i) {
        const Vec3 du = positions[i] - centers_[a];
        const double u = du.norm();
        const RadialDeriv pm_u = cutoff_poly(t.m, u, t.cutoff);
        const RadialDeriv pn_u = cutoff_poly(t.n, u, t.cutoff);
        for (int k = i + 1; k < nel; ++k) {
          const Vec3 dv = positions[k] - centers_[a];
          const double v = dv.norm();
          const RadialDeriv pm_v = cutoff_poly(t.m, v, t.cutoff);
          const RadialDeriv pn_v = cutoff_poly(t.n, v, t.cutoff);
          const Vec3 dw = positions[i] - positions[k];
          const double w = dw.norm();
          const RadialDeriv s = scaled_power(t.o, w, t.cutoff);

          // f = c [P_m(u) P_n(v) + P_m(v) P_n(u)] S(w); partials via products
          const double fu = t.coeff * (pm_u.d1 * pn_v.v + pn_u.d1 * pm_v.v) * s.v;
          const double fv = t.coeff * (pm_u.v * pn_v.d1 + pn_u.v * pm_v.d1) * s.v;
          const double fw = t.coeff * (pm_u.v * pn_v.v + pm_v.v * pn_u.v) * s.d1;
          const double fuu = t.coeff * (pm_u.d2 * pn_v.v + pn_u.d2 * pm_v.v) * s.v;
          const double fvv = t.coeff * (pm_u.v * pn_v.d2 + pn_u.v * pm_v.d2) * s.v;
          const double fww = t.coeff * (pm_u.v * pn_v.v + pm_v.v * pn_u.v) * s.d2;
          const double fuw = t.coeff * (pm_u.d1 * pn_v.v + pn_u.d1 * pm_v.v) * s.d1;
          const double fvw = t.coeff * (pm_u.v * pn_v.d1 + pn_u.v * pm_v.d1) * s.d1;

          const Vec3 uhat = du / u;
          const Vec3 vhat = dv / v;
          const Vec3 what = dw / w;

          grad[i] += fu * uhat + fw * what;
          grad[k] += fv * vhat - fw * what;
          lap[i] += fuu + 2.0 * fu / u + fww + 2.0 * fw / w + 2.0 * uhat.dot(what) * fuw;
          lap[k] += fvv + 2.0 * fv / v + fww + 2.0 * fw / w - 2.0 * vhat.dot(what) * fvw;
        }
      }
    }
  }
}

double Jastrow::pair_terms_of_electron(const std::vector<Vec3>& positions, int electron,
                                       const Vec3& ri) const {
  const int nel = static_cast<int>(positions.size());
  const int nnuc = static_cast<int>(centers_.size());
  double j = 0.0;
  for (int a = 0; a < nnuc; ++a) {
    if (const PadePolyTerm* t = en_term(species_[a])) {
      j += t->eval((ri - centers_[a]).norm()).v;
    }
  }
  for (int k = 0; k < nel; ++k) {
    if (k == electron) continue;
    const PadePolyTerm& t = ee_term(electron, k);
    if (!t.is_zero()) j += t.eval((ri - positions[k]).norm()).v;
  }
  for (const auto& t : params_.een) {
    if (t.coeff == 0.0) continue;
    for (int a = 0; a < nnuc; ++a) {
      if (species_[a] != t.species) continue;
      const double u = (ri - centers_[a]).norm();
      const RadialDeriv pm_u = cutoff_poly(t.m, u, t.cutoff);
      const RadialDeriv pn_u = cutoff_poly(t.n, u, t.cutoff);
      if (pm_u.v == 0.0 && pn_u.v == 0.0) continue;
      for (int k = 0; k < nel; ++k) {
        if (k == electron) continue;
        const double v = (positions[k] - centers_[a]).norm();
        const RadialDeriv pm_v = cutoff_poly(t.m, v, t.cutoff);
        const RadialDeriv pn_v = cutoff_poly(t.n, v, t.cutoff);
        const double w = (ri - positions[k]).norm();
        const RadialDeriv s = scaled_power(t.o, w, t.cutoff);
        j += t.coeff * (pm_u.v * pn_v.v + pm_v.v * pn_u.v) * s.v;
      }
    }
  }
  return j;
}

double Jastrow::delta_single_move(const std::vector<Vec3>& positions, int electron,
                                  const Vec3& r_new) const {
  if (params_.is_identity()) return 0.0;
  return pair_terms_of_electron(positions, electron, r_new) -
         pair_terms_of_electron(positions, electron, positions[electron]);
}

Vec3 Jastrow::gradient_of_electron(const std::vector<Vec3>& positions, int electron,
                                   const Vec3& ri) const {
  const int nel = static_cast<int>(positions.size());
  const int nnuc = static_cast<int>(centers_.size());
  Vec3 g = Vec3::Zero();
  for (int a = 0; a < nnuc; ++a) {
    if (const PadePolyTerm* t = en_term(species_[a])) {
      const Vec3 d = ri - centers_[a];
      const double r = d.norm();
      g += (t->eval(r).d1 / r) * d;
    }
  }
  for (int k = 0; k < nel; ++k) {
    if (k == electron) continue;
    const PadePolyTerm& t = ee_term(electron, k);
    if (t.is_zero()) continue;
    const Vec3 d = ri - positions[k];
    const double r = d.norm();
    g += (t.eval(r).d1 / r) * d;
  }
  for (const auto& t : params_.een) {
    if (t.coeff == 0.0) continue;
    for (int a = 0; a < nnuc; ++a) {
      if (species_[a] != t.species) continue;
      const Vec3 du = ri - centers_[a];
      const double u = du.norm();
      const RadialDeriv pm_u = cutoff_poly(t.m, u, t.cutoff);
      const RadialDeriv pn_u = cutoff_poly(t.n, u, t.cutoff);
      for (int k = 0; k < nel; ++k) {
        if (k == electron) continue;
        const double v = (positions[k] - centers_[a]).norm();
        const RadialDeriv pm_v = cutoff_poly(t.m, v, t.cutoff);
        const RadialDeriv pn_v = cutoff_poly(t.n, v, t.cutoff);
        const Vec3 dw = ri - positions[k];
        const double w = dw.norm();
        const RadialDeriv s = scaled_power(t.o, w, t.cutoff);
        const double fu = t.coeff * (pm_u.d1 * pn_v.v + pn_u.d1 * pm_v.v) * s.v;
        const double fw = t.coeff * (pm_u.v * pn_v.v + pm_v.v * pn_u.v) * s.d1;
        g += (fu / u) * du + (fw / w) * dw;
      }
    }
  }
  return g;
}

}  // namespace qmcdip
