#ifndef TRAJCLUSTER_EVALUATION_HPP
#define TRAJCLUSTER_EVALUATION_HPP

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace trajcluster {

/// Entity-to-label assignment as it appears in flat-cut, baseline and
/// ground-truth CSVs. Labels are opaque strings; rows are kept sorted by
/// entity id.
class LabeledPartition {
public:
    LabeledPartition() = default;
    explicit LabeledPartition(std::vector<std::pair<std::string, std::string>> rows);

    static LabeledPartition read_csv(std::istream& in);
    void write_csv(std::ostream& out, const std::string& id_header,
                   const std::string& label_header) const;

    std::size_t entity_count() const { return rows_.size(); }
    std::size_t cluster_count() const;
    const std::vector<std::pair<std::string, std::string>>& rows() const { return rows_; }

    /// Cluster sizes keyed by label, deterministic order.
    std::map<std::string, std::size_t> cluster_sizes() const;

private:
    std::vector<std::pair<std::string, std::string>> rows_; // sorted by entity
};

/// Chance-corrected pair-counting agreement; 1 for identical partitions.
/// Fails unless both partitions cover the same entity set.
double adjusted_rand_index(const LabeledPartition& p, const LabeledPartition& q);

} // namespace trajcluster

#endif
