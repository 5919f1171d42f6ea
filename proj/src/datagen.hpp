#ifndef TRAJCLUSTER_DATAGEN_HPP
#define TRAJCLUSTER_DATAGEN_HPP

#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "evaluation.hpp"
#include "trajectory_corpus.hpp"

namespace trajcluster {

/// One planted group: `trajectory_count` trips along the shortest corridor
/// from origin to destination, each hop independently replaced by a local
/// deviation with the given probability.
struct GroupSpec {
    std::string origin;
    std::string destination;
    std::uint32_t trajectory_count = 0;
    double detour_probability = 0.0;
};

struct GenerationSpec {
    std::uint32_t grid_width = 8;
    std::uint32_t grid_height = 8;
    double segment_length_m = 100.0;
    double length_jitter = 0.1; // fraction of the base length, in [0, 1)
    std::vector<GroupSpec> groups;
    std::uint64_t seed = 42;
};

void validate(const GenerationSpec& spec);

/// Grid road network: nodes n<x>_<y>, both directed segments per undirected
/// adjacency, lengths jittered around the base. (spec, seed) fully
/// determines the output.
RoadNetwork generate_network(const GenerationSpec& spec);

struct GeneratedCorpus {
    Corpus corpus;
    LabeledPartition truth; // trajectory id -> group label g<index>
};

/// Corridor-following trajectories with seeded per-hop detours that leave
/// and rejoin the corridor through adjacent nodes. Fails when a corridor's
/// endpoints are unknown or unreachable.
GeneratedCorpus generate_corpus(const GenerationSpec& spec,
                                std::shared_ptr<const RoadNetwork> network);

/// Parses the groups CSV (`origin,destination,count,detour_prob`).
std::vector<GroupSpec> load_groups_csv(std::istream& in);

/// Writes network.csv, trajectories.csv and truth.csv into the directory
/// (created if needed); returns the paths written.
std::vector<std::filesystem::path> export_dataset(const Corpus& corpus,
                                                  const LabeledPartition& truth,
                                                  const std::filesystem::path& directory);

} // namespace trajcluster

#endif
