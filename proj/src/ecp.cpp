#include "qmcdip/ecp.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace qmcdip {

double ecp_radial_value(const std::vector<EcpRadialTerm>& terms, double r) {
  double v = 0.0;
  for (const auto& t : terms) {
    double rn;
    switch (t.n) {
      case 0: rn = 1.0 / (r * r); break;
      case 1: rn = 1.0 / r; break;
      default: rn = 1.0; break;
    }
    v += t.coeff * rn * std::exp(-t.alpha * r * r);
  }
  return v;
}

double SemilocalECP::local_value(double r) const { return ecp_radial_value(local, r); }

double SemilocalECP::channel_value(int channel_index, double r) const {
  return ecp_radial_value(nonlocal.at(channel_index).terms, r);
}

int SemilocalECP::max_l() const {
  int lmax = -1;
  for (const auto& c : nonlocal) lmax = std::max(lmax, c.l);
  return lmax;
}

void SemilocalECP::validate() const {
  if (z_core < 0.0) throw std::invalid_argument("ecp '" + name + "': z_core must be >= 0");
  auto check_terms = [this](const std::vector<EcpRadialTerm>& terms) {
    for (const auto& t : terms) {
      if (t.n < 0 || t.n > 2) throw std::invalid_argument("ecp '" + name + "': radial power n must be in {0,1,2}");
      if (!(t.alpha > 0.0)) throw std::invalid_argument("ecp '" + name + "': radial exponent must be > 0");
    }
  };
  check_terms(local);
  std::set<int> ls;
  for (const auto& c : nonlocal) {
    if (c.l < 0 || c.l > 3) throw std::invalid_argument("ecp '" + name + "': channel l must be in [0,3]");
    if (!ls.insert(c.l).second) throw std::invalid_argument("ecp '" + name + "': duplicate channel l");
    check_terms(c.terms);
  }
}

}  // namespace qmcdip
