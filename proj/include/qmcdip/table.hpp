#ifndef QMCDIP_TABLE_HPP
#define QMCDIP_TABLE_HPP

#include <map>
#include <string>
#include <vector>

namespace qmcdip {

// CSV with a YAML-style '#'-prefixed metadata header; the one output format
// used everywhere (plot-ready and diff-able).
struct Table {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add_row(std::vector<double> row);
  int column_index(const std::string& name) const;  // -1 when absent
  std::vector<double> column(const std::string& name) const;

  std::string to_string() const;
  void write(const std::string& path) const;
  static Table read(const std::string& path);
};

}  // namespace qmcdip

#endif
