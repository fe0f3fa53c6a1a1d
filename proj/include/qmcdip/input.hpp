#ifndef QMCDIP_INPUT_HPP
#define QMCDIP_INPUT_HPP

#include <map>
#include <string>

#include "qmcdip/determinants.hpp"
#include "qmcdip/ecp.hpp"
#include "qmcdip/errors.hpp"
#include "qmcdip/geometry.hpp"
#include "qmcdip/hamiltonian.hpp"
#include "qmcdip/jastrow.hpp"
#include "qmcdip/orbitals.hpp"
#include "qmcdip/wavefunction.hpp"

namespace qmcdip {

// Parsed contents of a system input file (sections [geometry], [orbitals],
// [ecp], [determinants], [jastrow], [run]; see docs/input_format.md).
struct SystemDescription {
  Geometry geometry;
  OrbitalSet orbitals;
  EcpTable ecps;
  DeterminantExpansion expansion;
  bool has_expansion = false;
  JastrowParams jastrow;
  std::map<std::string, std::string> run;  // free-form [run] settings

  // csf_cutoff > 0 applies truncate_expansion before building.
  TrialWavefunction make_wavefunction(double csf_cutoff = 0.0) const;
  Hamiltonian make_hamiltonian(int ecp_quad_order = 5) const;

  double run_value(const std::string& key, double fallback) const;
};

// Throws ParseError with line/column on syntax errors and with the relevant
// line on semantic errors (missing centers, electron counts exceeding the
// orbital count per spin, ...).
SystemDescription parse_system(const std::string& text);

// Canonical text form; parse_system(serialize_system(s)) reproduces s.
std::string serialize_system(const SystemDescription& s);

// Reads a file, or a built-in fixture when the path is "fixture:<name>".
SystemDescription load_system(const std::string& path_or_fixture);
std::string load_system_text(const std::string& path_or_fixture);

}  // namespace qmcdip

#endif
