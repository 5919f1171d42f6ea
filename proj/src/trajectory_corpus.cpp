#include "trajectory_corpus.hpp"

#include <algorithm>
#include <map>

#include "csv.hpp"
#include "error.hpp"

namespace trajcluster {

Corpus::Corpus(std::shared_ptr<const RoadNetwork> network, std::vector<Trajectory> trajectories)
    : network_(std::move(network)), trajectories_(std::move(trajectories)) {
    if (!network_) fail(Status::invalid_argument, "corpus requires a network");

    const std::size_t segment_count = network_->segment_count();
    per_trajectory_counts_.resize(trajectories_.size());
    postings_.resize(segment_count);
    occurrence_totals_.assign(segment_count, 0);
    length_weighted_totals_.assign(trajectories_.size(), 0.0);

    for (std::uint32_t t = 0; t < trajectories_.size(); ++t) {
        const Trajectory& trajectory = trajectories_[t];
        if (trajectory.id.empty()) fail(Status::validation_error, "empty trajectory id");
        if (!trajectory_index_.emplace(trajectory.id, t).second) {
            fail(Status::validation_error, "duplicate trajectory id `" + trajectory.id + "`");
        }
        if (trajectory.segments.empty()) {
            fail(Status::validation_error, "trajectory `" + trajectory.id + "` is empty");
        }
        std::map<std::uint32_t, std::uint32_t> counts;
        for (std::size_t i = 0; i < trajectory.segments.size(); ++i) {
            std::uint32_t seg = trajectory.segments[i];
            if (seg >= segment_count) {
                fail(Status::internal_error, "segment index out of range in trajectory `" +
                                                 trajectory.id + "`");
            }
            if (i + 1 < trajectory.segments.size()) {
                const Segment& here = network_->segment(seg);
                const Segment& next = network_->segment(trajectory.segments[i + 1]);
                if (here.to != next.from) {
                    fail(Status::validation_error,
                         "trajectory `" + trajectory.id + "`: segments `" + here.id + "` and `" +
                             next.id + "` are not connected head-to-tail");
                }
            }
            ++counts[seg];
        }
        auto& distinct = per_trajectory_counts_[t];
        distinct.assign(counts.begin(), counts.end());
        double weighted = 0.0;
        for (const auto& [seg, count] : distinct) {
            postings_[seg].push_back(Posting{t, count});
            occurrence_totals_[seg] += count;
            weighted += static_cast<double>(count) * network_->segment(seg).length_m;
        }
        length_weighted_totals_[t] = weighted;
    }

    for (std::uint32_t seg = 0; seg < segment_count; ++seg) {
        if (!postings_[seg].empty()) traveled_segments_.push_back(seg);
    }
}

bool Corpus::has_trajectory(const std::string& trajectory_id) const {
    return trajectory_index_.count(trajectory_id) != 0;
}

std::uint32_t Corpus::trajectory_index(const std::string& trajectory_id) const {
    auto it = trajectory_index_.find(trajectory_id);
    if (it == trajectory_index_.end()) {
        fail(Status::not_found, "unknown trajectory id `" + trajectory_id + "`");
    }
    return it->second;
}

std::uint32_t Corpus::occurrences(const std::string& segment_id,
                                  const std::string& trajectory_id) const {
    std::uint32_t t = trajectory_index(trajectory_id);
    if (!network_->has_segment(segment_id)) return 0;
    return occurrences_at(network_->segment_index(segment_id), t);
}

std::uint32_t Corpus::occurrences_at(std::uint32_t segment_index,
                                     std::uint32_t trajectory_index) const {
    const auto& counts = per_trajectory_counts_[trajectory_index];
    auto it = std::lower_bound(counts.begin(), counts.end(),
                               std::make_pair(segment_index, std::uint32_t{0}),
                               [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    if (it == counts.end() || it->first != segment_index) return 0;
    return it->second;
}

void Corpus::write_csv(std::ostream& out) const {
    out << "trajectory_id,segment_ids\n";
    for (const auto& trajectory : trajectories_) {
        out << trajectory.id << ',';
        for (std::size_t i = 0; i < trajectory.segments.size(); ++i) {
            if (i) out << ';';
            out << network_->segment(trajectory.segments[i]).id;
        }
        out << '\n';
    }
}

Corpus load_trajectories(std::istream& in, std::shared_ptr<const RoadNetwork> network) {
    if (!network) fail(Status::invalid_argument, "load_trajectories requires a network");
    auto rows = csv::read_table(in, {"trajectory_id", "segment_ids"}, "trajectory CSV");
    std::vector<Trajectory> trajectories;
    trajectories.reserve(rows.size());
    std::unordered_map<std::string, std::size_t> seen;
    for (const auto& row : rows) {
        Trajectory trajectory;
        trajectory.id = row.fields[0];
        if (trajectory.id.empty()) {
            fail(Status::parse_error, "trajectory CSV: line " + std::to_string(row.line_number) +
                                          ": empty trajectory id");
        }
        auto [it, inserted] = seen.emplace(trajectory.id, row.line_number);
        if (!inserted) {
            fail(Status::validation_error,
                 "trajectory CSV: line " + std::to_string(row.line_number) +
                     ": duplicate trajectory id `" + trajectory.id + "` (first seen on line " +
                     std::to_string(it->second) + ")");
        }
        if (csv::trim(row.fields[1]).empty()) {
            fail(Status::validation_error, "trajectory CSV: line " +
                                               std::to_string(row.line_number) + ": trajectory `" +
                                               trajectory.id + "` has no segments");
        }
        for (const auto& token : csv::split(row.fields[1], ';')) {
            std::string segment_id = csv::trim(token);
            if (segment_id.empty()) {
                fail(Status::parse_error, "trajectory CSV: line " +
                                              std::to_string(row.line_number) +
                                              ": empty segment id in trajectory `" +
                                              trajectory.id + "`");
            }
            if (!network->has_segment(segment_id)) {
                fail(Status::validation_error,
                     "trajectory CSV: line " + std::to_string(row.line_number) + ": trajectory `" +
                         trajectory.id + "` references unknown segment `" + segment_id + "`");
            }
            trajectory.segments.push_back(network->segment_index(segment_id));
        }
        for (std::size_t i = 0; i + 1 < trajectory.segments.size(); ++i) {
            const Segment& here = network->segment(trajectory.segments[i]);
            const Segment& next = network->segment(trajectory.segments[i + 1]);
            if (here.to != next.from) {
                fail(Status::validation_error,
                     "trajectory CSV: line " + std::to_string(row.line_number) + ": trajectory `" +
                         trajectory.id + "`: segments `" + here.id + "` and `" + next.id +
                         "` are not connected head-to-tail");
            }
        }
        trajectories.push_back(std::move(trajectory));
    }
    return Corpus(std::move(network), std::move(trajectories));
}

} // namespace trajcluster
