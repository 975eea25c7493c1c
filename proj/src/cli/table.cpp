#include "promptpricing/cli/table.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace promptpricing::cli {

std::size_t Table::column(const std::string& name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  throw std::out_of_range("no column '" + name + "'");
}

std::string format_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) {
    char buf[32];
    // Normalise negative zero so output does not depend on rounding paths.
    std::snprintf(buf, sizeof buf, "%.12g", *d == 0.0 ? 0.0 : *d);
    return buf;
  }
  if (const auto* i = std::get_if<std::int64_t>(&cell)) return std::to_string(*i);
  return std::get<std::string>(cell);
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_cell(row[i]);
    out << '\n';
  }
}

void write_json(std::ostream& out, const Table& table) {
  // ordered_json keeps columns in header order.
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) {
      const auto& name = table.header[i];
      if (const auto* d = std::get_if<double>(&row[i])) {
        // Same rounding as the CSV so the two files agree value for value.
        obj[name] = std::stod(format_cell(*d));
      } else if (const auto* n = std::get_if<std::int64_t>(&row[i])) {
        obj[name] = *n;
      } else {
        obj[name] = std::get<std::string>(row[i]);
      }
    }
    rows.push_back(std::move(obj));
  }
  out << rows.dump(2) << '\n';
}

namespace {

template <class Writer>
void write_file(const std::filesystem::path& path, const Table& table, Writer writer) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  writer(out, table);
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace

void write_csv_file(const std::filesystem::path& path, const Table& table) {
  write_file(path, table, write_csv);
}

void write_json_file(const std::filesystem::path& path, const Table& table) {
  write_file(path, table, write_json);
}

}  // namespace promptpricing::cli
