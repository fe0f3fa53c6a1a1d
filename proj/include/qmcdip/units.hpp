#ifndef QMCDIP_UNITS_HPP
#define QMCDIP_UNITS_HPP

#include <string>

// All internal quantities are in Hartree atomic units.  Everything that
// leaves or enters the code in other units goes through this header.

namespace qmcdip::units {

inline constexpr double debye_per_au_dipole = 2.5417464;
inline constexpr double wavenumber_per_hartree = 219474.63;
inline constexpr double angstrom_per_bohr = 0.52917721;
inline constexpr double electron_mass_per_amu = 1822.888486;

enum class Unit {
  hartree,
  wavenumber,   // cm^-1
  au_dipole,    // e*bohr
  debye,
  bohr,
  angstrom,
};

Unit parse_unit(const std::string& name);
std::string unit_name(Unit u);

// Exact multiplication by the constants above.  Throws std::invalid_argument
// for unsupported pairs (only hartree<->cm^-1, a.u.<->debye, bohr<->angstrom
// and the identity conversions are defined).
double convert_units(double value, Unit from, Unit to);

}  // namespace qmcdip::units

#endif
