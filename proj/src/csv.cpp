#include "srmwa/csv.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "srmwa/model.hpp"

namespace srmwa::csv {
namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.emplace_back();
  return cells;
}

}  // namespace

std::string format_number(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

void Writer::metadata(const std::string& key, const std::string& value) {
  out_ << "# " << key << '=' << value << '\n';
}

void Writer::header(const std::vector<std::string>& columns) {
  columns_ = columns.size();
  row(columns);
}

void Writer::row(const std::vector<std::string>& cells) {
  if (columns_ != 0 && cells.size() != columns_) {
    throw Error(ErrorCode::InvalidArgument, "csv row width differs from header");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << cells[i];
  }
  out_ << '\n';
}

std::size_t Table::column(const std::string& name) const {
  const auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw Error(ErrorCode::InvalidArgument, "csv has no column '" + name + "'");
  return static_cast<std::size_t>(it - columns.begin());
}

const std::string& Table::cell(std::size_t row, const std::string& name) const {
  return rows.at(row).at(column(name));
}

double Table::number(std::size_t row, const std::string& name) const {
  const std::string& text = cell(row, name);
  std::size_t used = 0;
  const double value = std::stod(text, &used);
  if (used != text.size()) throw Error(ErrorCode::InvalidArgument, "csv cell '" + text + "' is not a number");
  return value;
}

Table read(std::istream& in) {
  Table table;
  std::string line;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = line.substr(line.find_first_not_of("# "));
      const auto eq = body.find('=');
      if (eq != std::string::npos) table.metadata[body.substr(0, eq)] = body.substr(eq + 1);
      continue;
    }
    auto cells = split(line);
    if (!have_header) {
      table.columns = std::move(cells);
      have_header = true;
      continue;
    }
    if (cells.size() != table.columns.size()) {
      throw Error(ErrorCode::InvalidArgument, "csv row has " + std::to_string(cells.size()) + " cells, header has " +
                                                  std::to_string(table.columns.size()));
    }
    table.rows.push_back(std::move(cells));
  }
  if (!have_header) throw Error(ErrorCode::InvalidArgument, "csv has no header row");
  return table;
}

Table read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
  return read(in);
}

}  // namespace srmwa::csv
