#ifndef TRAJCLUSTER_ROAD_NETWORK_HPP
#define TRAJCLUSTER_ROAD_NETWORK_HPP

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

namespace trajcluster {

/// A directed road segment. `from`/`to` are dense node indices into the
/// owning RoadNetwork; `length_m` is strictly positive.
struct Segment {
    std::string id;
    std::uint32_t from = 0;
    std::uint32_t to = 0;
    double length_m = 0.0;
};

/// Directed road graph. Immutable once built; the node set is the union of
/// all segment endpoints.
class RoadNetwork {
public:
    RoadNetwork() = default;

    /// Adds a segment, interning unseen endpoint node ids. Rejects duplicate
    /// segment ids and non-positive lengths (line 0 means "not from a file").
    void add_segment(const std::string& segment_id, const std::string& from_node,
                     const std::string& to_node, double length_m, std::size_t line_number = 0);

    std::size_t node_count() const { return node_ids_.size(); }
    std::size_t segment_count() const { return segments_.size(); }

    const std::vector<Segment>& segments() const { return segments_; }
    const Segment& segment(std::uint32_t index) const { return segments_[index]; }
    const std::string& node_id(std::uint32_t index) const { return node_ids_[index]; }

    bool has_segment(const std::string& segment_id) const;
    /// Dense index of a segment id; fails with not_found for unknown ids.
    std::uint32_t segment_index(const std::string& segment_id) const;
    bool has_node(const std::string& node_id) const;
    std::uint32_t node_index(const std::string& node_id) const;

    /// Outgoing segment indices of a node, kept sorted by segment id.
    const std::vector<std::uint32_t>& outgoing(std::uint32_t node_index) const {
        return outgoing_[node_index];
    }

    /// Segment ids of self-loop roads (from == to); loading keeps them but
    /// callers may want to surface a warning.
    std::vector<std::string> self_loop_warnings() const;

    void write_csv(std::ostream& out) const;

private:
    std::uint32_t intern_node(const std::string& node_id);

    std::vector<std::string> node_ids_;
    std::unordered_map<std::string, std::uint32_t> node_index_;
    std::vector<Segment> segments_;
    std::unordered_map<std::string, std::uint32_t> segment_index_;
    std::vector<std::vector<std::uint32_t>> outgoing_;
};

/// Parses the network CSV (`segment_id,from_node,to_node,length_m`).
/// Errors carry the offending line number.
RoadNetwork load_network(std::istream& in);

/// Endpoint-sharing connectivity: true iff a.to == b.from or b.to == a.from.
bool are_connected(const Segment& a, const Segment& b);

} // namespace trajcluster

#endif
