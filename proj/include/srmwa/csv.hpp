#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace srmwa::csv {

/// Twelve significant digits, '.' decimal point, no grouping.
std::string format_number(double value);

/// Comma-separated rows with optional leading "# key=value" metadata lines.
class Writer {
 public:
  explicit Writer(std::ostream& out) : out_(out) {}

  void metadata(const std::string& key, const std::string& value);
  void metadata(const std::string& key, double value) { metadata(key, format_number(value)); }
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

 private:
  std::ostream& out_;
  std::size_t columns_ = 0;
};

struct Table {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;
  const std::string& cell(std::size_t row, const std::string& name) const;
  double number(std::size_t row, const std::string& name) const;
};

/// Reads what Writer produces. Throws srmwa::Error on ragged rows or a missing header.
Table read(std::istream& in);
Table read_file(const std::string& path);

}  // namespace srmwa::csv
