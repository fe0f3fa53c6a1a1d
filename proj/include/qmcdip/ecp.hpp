#ifndef QMCDIP_ECP_HPP
#define QMCDIP_ECP_HPP

#include <map>
#include <string>
#include <vector>

namespace qmcdip {

// One term of a Gaussian-type ECP radial expansion: c * r^{n-2} * exp(-alpha r^2),
// n in {0,1,2}, following the layout of published ECP tabulations.
struct EcpRadialTerm {
  int n = 2;
  double alpha = 1.0;
  double coeff = 0.0;
};

struct EcpChannel {
  int l = 0;                        // angular momentum, <= 3
  std::vector<EcpRadialTerm> terms;
};

// Semilocal effective core potential.  The -Z_eff/r long-range Coulomb part is
// carried by the ordinary electron-nucleus term (the nucleus stores Z_eff);
// the channels here hold only the short-range corrections.
struct SemilocalECP {
  std::string name;
  double z_core = 0.0;                  // removed core charge
  std::vector<EcpRadialTerm> local;     // local channel
  std::vector<EcpChannel> nonlocal;     // one entry per distinct l

  double local_value(double r) const;
  double channel_value(int channel_index, double r) const;
  int max_l() const;

  void validate() const;  // throws std::invalid_argument
};

using EcpTable = std::map<std::string, SemilocalECP>;

double ecp_radial_value(const std::vector<EcpRadialTerm>& terms, double r);

}  // namespace qmcdip

#endif
