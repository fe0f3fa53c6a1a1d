#include "qmcdip/units.hpp"

#include <stdexcept>

namespace qmcdip::units {

Unit parse_unit(const std::string& name) {
  if (name == "hartree" || name == "Eh") return Unit::hartree;
  if (name == "cm-1" || name == "cm^-1" || name == "wavenumber") return Unit::wavenumber;
  if (name == "au" || name == "au-dipole" || name == "e*bohr") return Unit::au_dipole;
  if (name == "debye" || name == "D") return Unit::debye;
  if (name == "bohr") return Unit::bohr;
  if (name == "angstrom" || name == "A") return Unit::angstrom;
  throw std::invalid_argument("unknown unit: " + name);
}

std::string unit_name(Unit u) {
  switch (u) {
    case Unit::hartree: return "hartree";
    case Unit::wavenumber: return "cm-1";
    case Unit::au_dipole: return "au-dipole";
    case Unit::debye: return "debye";
    case Unit::bohr: return "bohr";
    case Unit::angstrom: return "angstrom";
  }
  return "?";
}

double convert_units(double value, Unit from, Unit to) {
  if (from == to) return value;
  if (from == Unit::hartree && to == Unit::wavenumber) return value * wavenumber_per_hartree;
  if (from == Unit::wavenumber && to == Unit::hartree) return value / wavenumber_per_hartree;
  if (from == Unit::au_dipole && to == Unit::debye) return value * debye_per_au_dipole;
  if (from == Unit::debye && to == Unit::au_dipole) return value / debye_per_au_dipole;
  if (from == Unit::bohr && to == Unit::angstrom) return value * angstrom_per_bohr;
  if (from == Unit::angstrom && to == Unit::bohr) return value / angstrom_per_bohr;
  throw std::invalid_argument("unsupported unit conversion: " + unit_name(from) + " -> " + unit_name(to));
}

}  // namespace qmcdip::units
