#ifndef QMCDIP_FIXTURES_HPP
#define QMCDIP_FIXTURES_HPP

#include <string>
#include <vector>

namespace qmcdip::fixtures {

// Built-in verification systems: "H" (1e, exact trial), "He-product" (2e,
// analytic product trial), "H2plus" (1e, two centers), "H2" (2e, symmetric),
// "morse-demo" (spectroscopy-only synthetic curve).
std::vector<std::string> names();
bool exists(const std::string& name);
const std::string& text(const std::string& name);  // throws std::invalid_argument

}  // namespace qmcdip::fixtures

#endif
