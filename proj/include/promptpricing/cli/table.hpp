#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace promptpricing::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Command output: fixed header plus rows in sweep order.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;

  /// Index of a header column; throws std::out_of_range if absent.
  std::size_t column(const std::string& name) const;
};

/// Reals use 12 significant digits ("%.12g").
std::string format_cell(const Cell& cell);

void write_csv(std::ostream& out, const Table& table);
/// Array of objects keyed by header name, same values as the CSV.
void write_json(std::ostream& out, const Table& table);

void write_csv_file(const std::filesystem::path& path, const Table& table);
void write_json_file(const std::filesystem::path& path, const Table& table);

}  // namespace promptpricing::cli
