#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace nodesense::csv {

/// A parsed comma-separated table: the header fields and one string
/// vector per data row, with the 1-based source line of each row kept
/// for error reporting.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::size_t> line_numbers;
};

/// Reads a table with the exact header `expected_header`. Fields are
/// comma-separated with no quoting; surrounding ASCII whitespace is
/// trimmed; blank lines are ignored; every data row must have exactly
/// as many fields as the header. Any malformed row aborts with its line
/// number (code malformed_csv).
Table read_table(std::istream& in, const std::vector<std::string>& expected_header);

/// Locale-independent numeric field parsers; `line` feeds the error
/// message on failure.
double parse_double(const std::string& field, std::size_t line);
std::uint64_t parse_uint(const std::string& field, std::size_t line);

}  // namespace nodesense::csv
