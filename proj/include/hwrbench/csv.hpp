#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hwrbench::csv {

struct Row {
  std::vector<std::string> fields;
  std::size_t line = 0;  // 1-based line number in the source
};

struct Table {
  std::vector<std::string> header;
  std::vector<Row> rows;

  // Index of a header column, or nullopt.
  std::optional<std::size_t> column(std::string_view name) const;
};

// Reads comma-separated text with one header row. Fields are trimmed;
// double-quoted fields may contain commas and "" escapes. Blank lines and
// lines starting with '#' are skipped. Every row must have exactly as many
// fields as the header.
Table read(std::istream& in, std::string_view source_name);
Table read_file(const std::string& path);

// Quotes a field only when it contains a comma, quote or newline.
std::string escape(std::string_view field);

std::string_view trim(std::string_view s);

// Strict full-string parse; rejects empty input, trailing junk and non-finite
// values.
std::optional<double> parse_double(std::string_view text);

}  // namespace hwrbench::csv

namespace hwrbench::csv {

// Non-negative integral count; accepts scientific notation ("2e8") as long
// as the value is a whole number that fits in 64 bits.
std::optional<std::uint64_t> parse_count(std::string_view text);

}  // namespace hwrbench::csv
