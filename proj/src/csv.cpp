#include "csv.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdint>
#include <cstdlib>

#include "error.hpp"

namespace trajcluster::csv {

std::string trim(const std::string& text) {
    std::size_t begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return {};
    std::size_t end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& line, char delimiter) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = line.find(delimiter, start);
        if (pos == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return fields;
}

namespace {

bool next_content_line(std::istream& in, std::string& line, std::size_t& line_number) {
    while (std::getline(in, line)) {
        ++line_number;
        std::string trimmed = trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        line = std::move(trimmed);
        return true;
    }
    return false;
}

std::vector<Row> read_rows(std::istream& in, std::size_t expected_fields,
                           std::size_t header_line, const std::string& what) {
    std::vector<Row> rows;
    std::string line;
    std::size_t line_number = header_line;
    while (next_content_line(in, line, line_number)) {
        Row row;
        row.line_number = line_number;
        for (auto& field : split(line, ',')) row.fields.push_back(trim(field));
        if (row.fields.size() != expected_fields) {
            fail(Status::parse_error,
                 what + ": line " + std::to_string(line_number) + ": expected " +
                     std::to_string(expected_fields) + " fields, got " +
                     std::to_string(row.fields.size()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

std::vector<Row> read_table(std::istream& in, const std::vector<std::string>& expected_header,
                            const std::string& what) {
    std::string line;
    std::size_t line_number = 0;
    if (!next_content_line(in, line, line_number)) {
        fail(Status::parse_error, what + ": missing header line");
    }
    std::vector<std::string> header;
    for (auto& field : split(line, ',')) header.push_back(trim(field));
    if (header != expected_header) {
        std::string expected;
        for (std::size_t i = 0; i < expected_header.size(); ++i) {
            if (i) expected += ',';
            expected += expected_header[i];
        }
        fail(Status::parse_error, what + ": line " + std::to_string(line_number) +
                                      ": header must be `" + expected + "`, got `" + line + "`");
    }
    return read_rows(in, expected_header.size(), line_number, what);
}

std::vector<Row> read_two_column_table(std::istream& in, const std::string& what) {
    std::string line;
    std::size_t line_number = 0;
    if (!next_content_line(in, line, line_number)) {
        fail(Status::parse_error, what + ": missing header line");
    }
    if (split(line, ',').size() != 2) {
        fail(Status::parse_error,
             what + ": line " + std::to_string(line_number) + ": expected a two-column header");
    }
    return read_rows(in, 2, line_number, what);
}

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

double parse_double(const std::string& text, std::size_t line_number, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    double value = std::strtod(text.c_str(), &end);
    if (errno != 0 || end == text.c_str() || *end != '\0') {
        fail(Status::parse_error,
             what + ": line " + std::to_string(line_number) + ": not a number: `" + text + "`");
    }
    return value;
}

std::uint64_t parse_u64(const std::string& text, std::size_t line_number, const std::string& what) {
    errno = 0;
    char* end = nullptr;
    unsigned long long value = std::strtoull(text.c_str(), &end, 10);
    if (errno != 0 || end == text.c_str() || *end != '\0') {
        fail(Status::parse_error, what + ": line " + std::to_string(line_number) +
                                      ": not a nonnegative integer: `" + text + "`");
    }
    return static_cast<std::uint64_t>(value);
}

} // namespace trajcluster::csv
