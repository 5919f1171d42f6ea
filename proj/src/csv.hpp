#ifndef TRAJCLUSTER_CSV_HPP
#define TRAJCLUSTER_CSV_HPP

#include <cstddef>
#include <functional>
#include <istream>
#include <string>
#include <vector>

namespace trajcluster::csv {

struct Row {
    std::size_t line_number = 0; // 1-based line in the source stream
    std::vector<std::string> fields;
};

/// Reads a headered CSV: the first non-comment, non-blank line must equal
/// `expected_header` (whitespace-trimmed per field). Lines starting with '#'
/// and blank lines are skipped. Every data row must have exactly
/// expected_header.size() fields.
std::vector<Row> read_table(std::istream& in, const std::vector<std::string>& expected_header,
                            const std::string& what);

/// Same, but accepts any two-column header (used where several headered
/// formats share the entity,label structure).
std::vector<Row> read_two_column_table(std::istream& in, const std::string& what);

std::vector<std::string> split(const std::string& line, char delimiter);
std::string trim(const std::string& text);

/// Fixed 12-significant-digit rendering used for every numeric value we emit.
std::string format_double(double value);

double parse_double(const std::string& text, std::size_t line_number, const std::string& what);
std::uint64_t parse_u64(const std::string& text, std::size_t line_number, const std::string& what);

} // namespace trajcluster::csv

#endif
