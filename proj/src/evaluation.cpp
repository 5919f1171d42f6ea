#include "evaluation.hpp"

#include <algorithm>
#include <unordered_map>

#include "csv.hpp"
#include "error.hpp"

namespace trajcluster {

LabeledPartition::LabeledPartition(std::vector<std::pair<std::string, std::string>> rows)
    : rows_(std::move(rows)) {
    std::sort(rows_.begin(), rows_.end());
    for (std::size_t i = 1; i < rows_.size(); ++i) {
        if (rows_[i - 1].first == rows_[i].first) {
            fail(Status::validation_error, "entity `" + rows_[i].first + "` labeled twice");
        }
    }
}

LabeledPartition LabeledPartition::read_csv(std::istream& in) {
    auto table = csv::read_two_column_table(in, "partition CSV");
    std::vector<std::pair<std::string, std::string>> rows;
    rows.reserve(table.size());
    for (const auto& row : table) {
        if (row.fields[0].empty() || row.fields[1].empty()) {
            fail(Status::parse_error, "partition CSV: line " + std::to_string(row.line_number) +
                                          ": empty entity id or label");
        }
        rows.emplace_back(row.fields[0], row.fields[1]);
    }
    return LabeledPartition(std::move(rows));
}

void LabeledPartition::write_csv(std::ostream& out, const std::string& id_header,
                                 const std::string& label_header) const {
    out << id_header << ',' << label_header << '\n';
    for (const auto& [entity, label] : rows_) out << entity << ',' << label << '\n';
}

std::size_t LabeledPartition::cluster_count() const {
    std::map<std::string, std::size_t> sizes = cluster_sizes();
    return sizes.size();
}

std::map<std::string, std::size_t> LabeledPartition::cluster_sizes() const {
    std::map<std::string, std::size_t> sizes;
    for (const auto& [entity, label] : rows_) {
        (void)entity;
        ++sizes[label];
    }
    return sizes;
}

double adjusted_rand_index(const LabeledPartition& p, const LabeledPartition& q) {
    if (p.entity_count() != q.entity_count()) {
        fail(Status::validation_error, "partitions cover different entity counts (" +
                                           std::to_string(p.entity_count()) + " vs " +
                                           std::to_string(q.entity_count()) + ")");
    }
    const auto& rows_p = p.rows();
    const auto& rows_q = q.rows();
    const std::size_t n = rows_p.size();
    // both row lists are sorted by entity id, so walk them in lockstep
    std::unordered_map<std::string, std::uint32_t> label_p, label_q;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> assignment(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows_p[i].first != rows_q[i].first) {
            fail(Status::validation_error,
                 "partitions cover different entities (`" + rows_p[i].first + "` vs `" +
                     rows_q[i].first + "`)");
        }
        auto ip = label_p.emplace(rows_p[i].second, static_cast<std::uint32_t>(label_p.size()));
        auto iq = label_q.emplace(rows_q[i].second, static_cast<std::uint32_t>(label_q.size()));
        assignment[i] = {ip.first->second, iq.first->second};
    }
    if (n == 0) return 1.0;

    const std::size_t kp = label_p.size();
    const std::size_t kq = label_q.size();
    // degenerate agreement: both trivial in the same way
    if ((kp == 1 && kq == 1) || (kp == n && kq == n)) return 1.0;

    std::vector<std::uint64_t> count_p(kp, 0), count_q(kq, 0);
    std::unordered_map<std::uint64_t, std::uint64_t> cells;
    for (const auto& [a, b] : assignment) {
        ++count_p[a];
        ++count_q[b];
        ++cells[(static_cast<std::uint64_t>(a) << 32) | b];
    }
    auto pairs2 = [](std::uint64_t c) -> long double {
        return static_cast<long double>(c) * static_cast<long double>(c - 1) / 2.0L;
    };
    long double index = 0.0L;
    for (const auto& [cell, count] : cells) {
        (void)cell;
        index += pairs2(count);
    }
    long double sum_p = 0.0L, sum_q = 0.0L;
    for (std::uint64_t c : count_p) sum_p += pairs2(c);
    for (std::uint64_t c : count_q) sum_q += pairs2(c);
    long double total = pairs2(n);
    long double expected = sum_p * sum_q / total;
    long double maximum = (sum_p + sum_q) / 2.0L;
    if (maximum == expected) return index == expected ? 1.0 : 0.0; // degenerate denominator
    return static_cast<double>((index - expected) / (maximum - expected));
}

} // namespace trajcluster
