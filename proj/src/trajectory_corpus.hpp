#ifndef TRAJCLUSTER_TRAJECTORY_CORPUS_HPP
#define TRAJCLUSTER_TRAJECTORY_CORPUS_HPP

#include <cstdint>
#include <istream>
#include <memory>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "road_network.hpp"

namespace trajcluster {

/// A network-constrained trajectory: an ordered sequence of segment indices,
/// connected head-to-tail on the owning network.
struct Trajectory {
    std::string id;
    std::vector<std::uint32_t> segments; // ordered, may revisit a segment
};

struct Posting {
    std::uint32_t trajectory = 0; // dense trajectory index
    std::uint32_t count = 0;      // n_{e,T}
};

/// Immutable trajectory set plus the occurrence statistics both weighting
/// schemes share: n_{e,T}, df(e), per-segment occurrence totals and
/// per-trajectory distinct-segment counts.
class Corpus {
public:
    Corpus(std::shared_ptr<const RoadNetwork> network, std::vector<Trajectory> trajectories);

    const RoadNetwork& network() const { return *network_; }
    std::shared_ptr<const RoadNetwork> network_ptr() const { return network_; }

    std::size_t size() const { return trajectories_.size(); }
    const std::vector<Trajectory>& trajectories() const { return trajectories_; }
    const Trajectory& trajectory(std::uint32_t index) const { return trajectories_[index]; }

    bool has_trajectory(const std::string& trajectory_id) const;
    std::uint32_t trajectory_index(const std::string& trajectory_id) const;

    /// n_{e,T}; 0 when e is absent from T (including segment ids the network
    /// does not know). Unknown trajectory ids fail.
    std::uint32_t occurrences(const std::string& segment_id,
                              const std::string& trajectory_id) const;
    std::uint32_t occurrences_at(std::uint32_t segment_index, std::uint32_t trajectory_index) const;

    /// Number of distinct trajectories containing the segment.
    std::uint32_t document_frequency(std::uint32_t segment_index) const {
        return static_cast<std::uint32_t>(postings_[segment_index].size());
    }
    /// Sum of n_{e,T} over all trajectories.
    std::uint64_t occurrence_total(std::uint32_t segment_index) const {
        return occurrence_totals_[segment_index];
    }
    /// Distinct segments of one trajectory.
    std::uint32_t distinct_segment_count(std::uint32_t trajectory_index) const {
        return static_cast<std::uint32_t>(per_trajectory_counts_[trajectory_index].size());
    }
    /// Denominator of ssf: sum over the trajectory of n_{e,T} * length(e).
    double length_weighted_total(std::uint32_t trajectory_index) const {
        return length_weighted_totals_[trajectory_index];
    }

    /// (segment index, n_{e,T}) pairs of one trajectory, sorted by segment index.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>&
    trajectory_counts(std::uint32_t trajectory_index) const {
        return per_trajectory_counts_[trajectory_index];
    }

    /// Trajectories containing a segment, sorted by trajectory index.
    const std::vector<Posting>& postings(std::uint32_t segment_index) const {
        return postings_[segment_index];
    }

    /// Segment indices traveled by at least one trajectory, ascending.
    const std::vector<std::uint32_t>& traveled_segments() const { return traveled_segments_; }

    void write_csv(std::ostream& out) const;

private:
    std::shared_ptr<const RoadNetwork> network_;
    std::vector<Trajectory> trajectories_;
    std::unordered_map<std::string, std::uint32_t> trajectory_index_;

    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> per_trajectory_counts_;
    std::vector<std::vector<Posting>> postings_;       // indexed by segment
    std::vector<std::uint64_t> occurrence_totals_;     // indexed by segment
    std::vector<double> length_weighted_totals_;       // indexed by trajectory
    std::vector<std::uint32_t> traveled_segments_;
};

/// Parses the trajectory CSV (`trajectory_id,segment_ids` with a
/// `;`-separated ordered segment list) and validates every trajectory
/// against the network. Error messages name the trajectory and, for
/// connectivity violations, the offending adjacent pair.
Corpus load_trajectories(std::istream& in, std::shared_ptr<const RoadNetwork> network);

} // namespace trajcluster

#endif
