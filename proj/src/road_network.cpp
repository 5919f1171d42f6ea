#include "road_network.hpp"

#include <algorithm>

#include "csv.hpp"
#include "error.hpp"

namespace trajcluster {

std::uint32_t RoadNetwork::intern_node(const std::string& node_id) {
    auto it = node_index_.find(node_id);
    if (it != node_index_.end()) return it->second;
    std::uint32_t index = static_cast<std::uint32_t>(node_ids_.size());
    node_ids_.push_back(node_id);
    node_index_.emplace(node_id, index);
    outgoing_.emplace_back();
    return index;
}

void RoadNetwork::add_segment(const std::string& segment_id, const std::string& from_node,
                              const std::string& to_node, double length_m,
                              std::size_t line_number) {
    auto where = [line_number] {
        return line_number ? " (line " + std::to_string(line_number) + ")" : std::string{};
    };
    if (segment_id.empty()) {
        fail(Status::validation_error, "empty segment id" + where());
    }
    if (segment_index_.count(segment_id)) {
        fail(Status::validation_error, "duplicate segment id `" + segment_id + "`" + where());
    }
    if (!(length_m > 0.0)) {
        fail(Status::validation_error, "segment `" + segment_id + "` has non-positive length " +
                                           csv::format_double(length_m) + where());
    }
    Segment segment;
    segment.id = segment_id;
    segment.from = intern_node(from_node);
    segment.to = intern_node(to_node);
    segment.length_m = length_m;

    std::uint32_t index = static_cast<std::uint32_t>(segments_.size());
    segments_.push_back(std::move(segment));
    segment_index_.emplace(segment_id, index);

    auto& out = outgoing_[segments_[index].from];
    auto pos = std::lower_bound(out.begin(), out.end(), index,
                                [this](std::uint32_t lhs, std::uint32_t rhs) {
                                    return segments_[lhs].id < segments_[rhs].id;
                                });
    out.insert(pos, index);
}

bool RoadNetwork::has_segment(const std::string& segment_id) const {
    return segment_index_.count(segment_id) != 0;
}

std::uint32_t RoadNetwork::segment_index(const std::string& segment_id) const {
    auto it = segment_index_.find(segment_id);
    if (it == segment_index_.end()) {
        fail(Status::not_found, "unknown segment id `" + segment_id + "`");
    }
    return it->second;
}

bool RoadNetwork::has_node(const std::string& node_id) const {
    return node_index_.count(node_id) != 0;
}

std::uint32_t RoadNetwork::node_index(const std::string& node_id) const {
    auto it = node_index_.find(node_id);
    if (it == node_index_.end()) {
        fail(Status::not_found, "unknown node id `" + node_id + "`");
    }
    return it->second;
}

std::vector<std::string> RoadNetwork::self_loop_warnings() const {
    std::vector<std::string> loops;
    for (const auto& segment : segments_) {
        if (segment.from == segment.to) loops.push_back(segment.id);
    }
    return loops;
}

void RoadNetwork::write_csv(std::ostream& out) const {
    out << "segment_id,from_node,to_node,length_m\n";
    for (const auto& segment : segments_) {
        out << segment.id << ',' << node_ids_[segment.from] << ',' << node_ids_[segment.to] << ','
            << csv::format_double(segment.length_m) << '\n';
    }
}

RoadNetwork load_network(std::istream& in) {
    auto rows = csv::read_table(in, {"segment_id", "from_node", "to_node", "length_m"},
                                "network CSV");
    RoadNetwork network;
    for (const auto& row : rows) {
        double length = csv::parse_double(row.fields[3], row.line_number, "network CSV");
        network.add_segment(row.fields[0], row.fields[1], row.fields[2], length, row.line_number);
    }
    return network;
}

bool are_connected(const Segment& a, const Segment& b) {
    return a.to == b.from || b.to == a.from;
}

} // namespace trajcluster
