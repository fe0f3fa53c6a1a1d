#include "qmcdip/fixtures.hpp"

#include <map>
#include <stdexcept>

namespace qmcdip::fixtures {

namespace {

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> fixtures = {
      {"H", R"([geometry]
nucleus 1 0 0 0
electrons 1 0

[orbitals]
orbital 1s
slater 0 1.0 1.0 0
end

[determinants]
csf 1 up 0 down
reference 0

[run]
description = hydrogen atom with the exact ground-state trial e^-r
)"},
      {"He-product", R"([geometry]
nucleus 2 0 0 0
electrons 1 1

[orbitals]
orbital 1s
slater 0 2.0 1.0 0
end

[determinants]
csf 1 up 0 down 0
reference 0

[run]
description = helium with the bare hydrogenic product trial e^-2r1 e^-2r2
)"},
      {"H2plus", R"([geometry]
nucleus 1 0 0 -1.0
nucleus 1 0 0 1.0
electrons 1 0

[orbitals]
orbital sigma_g
slater 0 1.0 1.0 0
slater 0 1.0 1.0 1
end

[determinants]
csf 1 up 0 down
reference 0

[run]
description = H2+ at bond length 2.0 bohr, LCAO bonding trial (nodeless)
)"},
      {"H2", R"([geometry]
nucleus 1 0 0 -0.7
nucleus 1 0 0 0.7
electrons 1 1

[orbitals]
orbital sigma_g
slater 0 1.0 1.0 0
slater 0 1.0 1.0 1
end

[determinants]
csf 1 up 0 down 0
reference 0

[run]
description = H2 with both electrons in the LCAO bonding orbital
)"},
      {"morse-demo", R"([geometry]
nucleus 3 0 0 0
nucleus 38 0 0 6.8
electrons 1 0

[run]
description = synthetic diatomic curve for the spectroscopy back end
mode = spectro-demo
morse_re_bohr = 6.80
morse_de_cm = 2700
morse_we_cm = 167
mu_amu = 6.49744
dipole_d0_au = -0.0551
dipole_d1_au = 0.02
curve_r_min = 5.6
curve_r_max = 8.6
curve_points = 13
noise_sigma_e = 0.0
)"}};
  return fixtures;
}

}  // namespace

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

bool exists(const std::string& name) { return table().count(name) > 0; }

const std::string& text(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::invalid_argument("unknown fixture '" + name + "'");
  return it->second;
}

}  // namespace qmcdip::fixtures
