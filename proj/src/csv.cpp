#include "nodesense/csv.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "nodesense/errors.hpp"

namespace nodesense::csv {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
    return s.substr(begin, end - begin);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

std::string join(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    return out;
}

}  // namespace

Table read_table(std::istream& in, const std::vector<std::string>& expected_header) {
    Table table;
    std::string line;
    std::size_t line_number = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_number;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        auto fields = split_fields(line);
        if (!have_header) {
            if (fields != expected_header)
                throw DomainError("malformed_csv",
                                  "line " + std::to_string(line_number) + ": expected header '" +
                                      join(expected_header) + "', got '" + join(fields) + "'");
            table.header = std::move(fields);
            have_header = true;
            continue;
        }
        if (fields.size() != expected_header.size())
            throw DomainError("malformed_csv",
                              "line " + std::to_string(line_number) + ": expected " +
                                  std::to_string(expected_header.size()) + " fields, got " +
                                  std::to_string(fields.size()));
        table.rows.push_back(std::move(fields));
        table.line_numbers.push_back(line_number);
    }
    if (!have_header)
        throw DomainError("malformed_csv", "missing header row '" + join(expected_header) + "'");
    return table;
}

double parse_double(const std::string& field, std::size_t line) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value))
        throw DomainError("malformed_csv", "line " + std::to_string(line) +
                                               ": expected a finite number, got '" + field + "'");
    return value;
}

std::uint64_t parse_uint(const std::string& field, std::size_t line) {
    std::uint64_t value = 0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw DomainError("malformed_csv", "line " + std::to_string(line) +
                                               ": expected an unsigned integer, got '" + field +
                                               "'");
    return value;
}

}  // namespace nodesense::csv
