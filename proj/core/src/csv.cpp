#include "uniperf/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "uniperf/error.hpp"

namespace uniperf::csv {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

Table Table::parse(std::istream& in, std::string source_name) {
  Table table;
  table.source_ = std::move(source_name);

  std::vector<Row> records;
  Row current;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  std::size_t line = 1;
  current.line = line;

  auto end_field = [&] {
    current.fields.push_back(field);
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    const bool blank = current.fields.size() == 1 && current.fields[0].empty();
    if (!blank) records.push_back(std::move(current));
    current = Row{};
    current.line = line;
  };

  char c;
  while (in.get(c)) {
    if (in_quotes) {
      if (c == '"') {
        if (in.peek() == '"') {
          in.get(c);
          field.push_back('"');
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (field_started && !field.empty()) {
          throw DataError(table.source_ + ":" + std::to_string(line) +
                          ": stray quote inside unquoted field");
        }
        in_quotes = true;
        field_started = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        ++line;
        end_record();
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
  }
  if (in_quotes) {
    throw DataError(table.source_ + ":" + std::to_string(line) +
                    ": unterminated quoted field");
  }
  if (field_started || !current.fields.empty()) end_record();

  if (records.empty()) {
    throw DataError(table.source_ + ": missing header row");
  }
  table.header_ = std::move(records.front().fields);
  if (!table.header_.empty() && table.header_[0].rfind("\xEF\xBB\xBF", 0) == 0) {
    table.header_[0].erase(0, 3);
  }
  for (auto& h : table.header_) h = std::string(trim(h));
  for (std::size_t i = 1; i < records.size(); ++i) {
    if (records[i].fields.size() != table.header_.size()) {
      throw DataError(table.source_ + ":" + std::to_string(records[i].line) +
                      ": expected " + std::to_string(table.header_.size()) +
                      " fields, found " + std::to_string(records[i].fields.size()));
    }
    table.rows_.push_back(std::move(records[i]));
  }
  return table;
}

Table Table::read(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return parse(in, path.string());
}

std::optional<std::size_t> Table::find_column(
    std::initializer_list<std::string_view> names) const {
  for (auto name : names) {
    const auto want = lower(name);
    for (std::size_t i = 0; i < header_.size(); ++i) {
      if (lower(header_[i]) == want) return i;
    }
  }
  return std::nullopt;
}

std::size_t Table::require_column(
    std::initializer_list<std::string_view> names) const {
  if (auto col = find_column(names)) return *col;
  throw DataError(source_ + ":1: missing column '" + std::string(*names.begin()) +
                  "'");
}

std::string Table::where(const Row& row) const {
  return source_ + ":" + std::to_string(row.line);
}

double parse_double(const Table& table, const Row& row, std::size_t col) {
  const auto text = trim(row.fields[col]);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DataError(table.where(row) + ": column '" + table.header()[col] +
                    "': not a number: '" + std::string(text) + "'");
  }
  return value;
}

int parse_int(const Table& table, const Row& row, std::size_t col) {
  const auto text = trim(row.fields[col]);
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw DataError(table.where(row) + ": column '" + table.header()[col] +
                    "': not an integer: '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    out.emplace_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << escape(fields[i]);
  }
  out << '\n';
}

}  // namespace uniperf::csv
