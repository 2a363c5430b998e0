#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace uniperf::csv {

struct Row {
  std::size_t line = 0;  // 1-based line in the source file
  std::vector<std::string> fields;
};

// Comma-separated, RFC 4180 quoting, mandatory header row.
class Table {
 public:
  static Table parse(std::istream& in, std::string source_name);
  static Table read(const std::filesystem::path& path);

  const std::string& source() const { return source_; }
  const std::vector<std::string>& header() const { return header_; }
  const std::vector<Row>& rows() const { return rows_; }

  // Case-insensitive lookup over a list of accepted column names.
  std::optional<std::size_t> find_column(
      std::initializer_list<std::string_view> names) const;
  std::size_t require_column(std::initializer_list<std::string_view> names) const;

  // "file:line: message" for data errors.
  std::string where(const Row& row) const;

 private:
  std::string source_;
  std::vector<std::string> header_;
  std::vector<Row> rows_;
};

double parse_double(const Table& table, const Row& row, std::size_t col);
int parse_int(const Table& table, const Row& row, std::size_t col);
std::vector<std::string> split(std::string_view text, char sep);

// Quotes the field when it holds a comma, quote or line break.
std::string escape(std::string_view field);
void write_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace uniperf::csv
