#include "datagen.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <queue>

#include "csv.hpp"
#include "error.hpp"
#include "rng.hpp"

namespace trajcluster {

namespace {

constexpr std::uint64_t kNetworkStream = 0x6e6574U;  // network lengths
constexpr std::uint64_t kCorpusStream = 0x636f7270U; // trajectory draws

std::string grid_node(std::uint32_t x, std::uint32_t y) {
    return "n" + std::to_string(x) + "_" + std::to_string(y);
}

std::string grid_segment(const std::string& from, const std::string& to) {
    // "e" + from + "__" + to, with the node prefix dropped from both ends
    return "e" + from.substr(1) + "__" + to.substr(1);
}

/// Deterministic Dijkstra over segment lengths; equal-distance fronts are
/// processed in node-index order. Returns the segment sequence or fails.
std::vector<std::uint32_t> shortest_segment_path(const RoadNetwork& network,
                                                 std::uint32_t origin,
                                                 std::uint32_t destination) {
    const std::size_t n = network.node_count();
    std::vector<double> dist(n, std::numeric_limits<double>::infinity());
    std::vector<std::uint32_t> pred_segment(n, UINT32_MAX);
    std::vector<bool> settled(n, false);

    using Entry = std::pair<double, std::uint32_t>; // (distance, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
    dist[origin] = 0.0;
    queue.emplace(0.0, origin);
    while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (settled[u]) continue;
        settled[u] = true;
        if (u == destination) break;
        for (std::uint32_t s : network.outgoing(u)) {
            const Segment& segment = network.segment(s);
            double candidate = d + segment.length_m;
            if (candidate < dist[segment.to]) {
                dist[segment.to] = candidate;
                pred_segment[segment.to] = s;
                queue.emplace(candidate, segment.to);
            }
        }
    }
    if (!settled[destination]) {
        fail(Status::validation_error, "no path from `" + network.node_id(origin) + "` to `" +
                                           network.node_id(destination) + "`");
    }
    std::vector<std::uint32_t> path;
    std::uint32_t node = destination;
    while (node != origin) {
        std::uint32_t s = pred_segment[node];
        path.push_back(s);
        node = network.segment(s).from;
    }
    std::reverse(path.begin(), path.end());
    return path;
}

struct Detour {
    std::uint32_t first, second, third; // segment indices u->a, a->b, b->v
};

/// All 3-hop deviations replacing the single hop u->v, enumerated in
/// segment-id order (on a grid these are the two square detours).
std::vector<Detour> detour_candidates(const RoadNetwork& network, std::uint32_t hop_segment) {
    const Segment& hop = network.segment(hop_segment);
    std::vector<Detour> candidates;
    for (std::uint32_t s1 : network.outgoing(hop.from)) {
        std::uint32_t a = network.segment(s1).to;
        if (a == hop.from || a == hop.to) continue;
        for (std::uint32_t s2 : network.outgoing(a)) {
            std::uint32_t b = network.segment(s2).to;
            if (b == hop.from || b == hop.to || b == a) continue;
            for (std::uint32_t s3 : network.outgoing(b)) {
                if (network.segment(s3).to == hop.to) {
                    candidates.push_back(Detour{s1, s2, s3});
                    break; // outgoing() is id-sorted, keep the first
                }
            }
        }
    }
    return candidates;
}

} // namespace

void validate(const GenerationSpec& spec) {
    if (spec.grid_width < 2 || spec.grid_height < 2) {
        fail(Status::invalid_argument, "grid must be at least 2x2");
    }
    if (!(spec.segment_length_m > 0.0)) {
        fail(Status::invalid_argument, "segment length must be positive");
    }
    if (!(spec.length_jitter >= 0.0 && spec.length_jitter < 1.0)) {
        fail(Status::invalid_argument, "length jitter must lie in [0, 1)");
    }
    for (const auto& group : spec.groups) {
        if (group.trajectory_count < 1) {
            fail(Status::invalid_argument, "group trajectory count must be at least 1");
        }
        if (!(group.detour_probability >= 0.0 && group.detour_probability < 1.0)) {
            fail(Status::invalid_argument, "detour probability must lie in [0, 1)");
        }
    }
}

RoadNetwork generate_network(const GenerationSpec& spec) {
    validate(spec);
    Rng rng(derive_seed(spec.seed, kNetworkStream));
    RoadNetwork network;
    auto add_bidirectional = [&](std::uint32_t x1, std::uint32_t y1, std::uint32_t x2,
                                 std::uint32_t y2) {
        double unit = 2.0 * rng.next_double() - 1.0; // one draw per road
        double length = spec.segment_length_m * (1.0 + spec.length_jitter * unit);
        std::string a = grid_node(x1, y1);
        std::string b = grid_node(x2, y2);
        network.add_segment(grid_segment(a, b), a, b, length);
        network.add_segment(grid_segment(b, a), b, a, length);
    };
    for (std::uint32_t y = 0; y < spec.grid_height; ++y) {
        for (std::uint32_t x = 0; x < spec.grid_width; ++x) {
            if (x + 1 < spec.grid_width) add_bidirectional(x, y, x + 1, y);
            if (y + 1 < spec.grid_height) add_bidirectional(x, y, x, y + 1);
        }
    }
    return network;
}

GeneratedCorpus generate_corpus(const GenerationSpec& spec,
                                std::shared_ptr<const RoadNetwork> network) {
    validate(spec);
    if (!network) fail(Status::invalid_argument, "generate_corpus requires a network");
    Rng rng(derive_seed(spec.seed, kCorpusStream));

    std::vector<Trajectory> trajectories;
    std::vector<std::pair<std::string, std::string>> truth_rows;
    for (std::size_t g = 0; g < spec.groups.size(); ++g) {
        const GroupSpec& group = spec.groups[g];
        if (!network->has_node(group.origin) || !network->has_node(group.destination)) {
            fail(Status::validation_error, "corridor endpoints `" + group.origin + "` -> `" +
                                               group.destination + "` are not in the network");
        }
        std::uint32_t origin = network->node_index(group.origin);
        std::uint32_t destination = network->node_index(group.destination);
        if (origin == destination) {
            fail(Status::invalid_argument, "corridor origin and destination coincide");
        }
        std::vector<std::uint32_t> corridor =
            shortest_segment_path(*network, origin, destination);

        std::string label = "g" + std::to_string(g);
        for (std::uint32_t t = 0; t < group.trajectory_count; ++t) {
            Trajectory trajectory;
            trajectory.id = label + "_t" + std::to_string(t);
            for (std::uint32_t hop : corridor) {
                bool deviate = group.detour_probability > 0.0 &&
                               rng.next_double() < group.detour_probability;
                if (deviate) {
                    auto candidates = detour_candidates(*network, hop);
                    if (!candidates.empty()) {
                        const Detour& detour =
                            candidates[static_cast<std::size_t>(rng.next_below(candidates.size()))];
                        trajectory.segments.push_back(detour.first);
                        trajectory.segments.push_back(detour.second);
                        trajectory.segments.push_back(detour.third);
                        continue;
                    }
                }
                trajectory.segments.push_back(hop);
            }
            truth_rows.emplace_back(trajectory.id, label);
            trajectories.push_back(std::move(trajectory));
        }
    }
    return GeneratedCorpus{Corpus(std::move(network), std::move(trajectories)),
                           LabeledPartition(std::move(truth_rows))};
}

std::vector<GroupSpec> load_groups_csv(std::istream& in) {
    auto rows = csv::read_table(in, {"origin", "destination", "count", "detour_prob"},
                                "groups CSV");
    std::vector<GroupSpec> groups;
    groups.reserve(rows.size());
    for (const auto& row : rows) {
        GroupSpec group;
        group.origin = row.fields[0];
        group.destination = row.fields[1];
        group.trajectory_count =
            static_cast<std::uint32_t>(csv::parse_u64(row.fields[2], row.line_number, "groups CSV"));
        group.detour_probability = csv::parse_double(row.fields[3], row.line_number, "groups CSV");
        groups.push_back(std::move(group));
    }
    return groups;
}

std::vector<std::filesystem::path> export_dataset(const Corpus& corpus,
                                                  const LabeledPartition& truth,
                                                  const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    if (ec) {
        fail(Status::io_error, "cannot create directory `" + directory.string() + "`: " +
                                   ec.message());
    }
    auto open = [](const std::filesystem::path& path) {
        std::ofstream out(path, std::ios::binary);
        if (!out) fail(Status::io_error, "cannot write `" + path.string() + "`");
        return out;
    };
    std::vector<std::filesystem::path> written;
    {
        auto path = directory / "network.csv";
        auto out = open(path);
        corpus.network().write_csv(out);
        written.push_back(path);
    }
    {
        auto path = directory / "trajectories.csv";
        auto out = open(path);
        corpus.write_csv(out);
        written.push_back(path);
    }
    {
        auto path = directory / "truth.csv";
        auto out = open(path);
        truth.write_csv(out, "trajectory_id", "group_label");
        written.push_back(path);
    }
    return written;
}

} // namespace trajcluster
