#ifndef QMCDIP_ERRORS_HPP
#define QMCDIP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qmcdip {

// Input-file syntax or semantic problem; carries the 1-based line (and, when
// known, column) at which the problem was detected.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) +
                           (column > 0 ? ":" + std::to_string(column) : "") + ": " + what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

// Bad run configuration (CLI flags, pipeline config, schema violations).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sampling/optimization stage failed at run time (population collapse,
// too many non-finite local energies, unbound fit, ...).
class StageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmcdip

#endif
