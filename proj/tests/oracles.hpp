#ifndef TRAJCLUSTER_TEST_ORACLES_HPP
#define TRAJCLUSTER_TEST_ORACLES_HPP

// Independent reference implementations used to pin expected values. These
// recompute everything from raw inputs on every call and share no code with
// the library paths they check.

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace oracle {

struct RawCorpus {
    // (trajectory id, ordered segment ids); order of this list is file order
    std::vector<std::pair<std::string, std::vector<std::string>>> trajectories;
    std::map<std::string, double> lengths; // segment id -> length in meters
    std::size_t network_segment_count = 0; // |E| of the network
};

double ssf(const RawCorpus& corpus, const std::string& segment, const std::string& trajectory);
double itf(const RawCorpus& corpus, const std::string& segment);
std::map<std::string, double> trajectory_vector(const RawCorpus& corpus,
                                                const std::string& trajectory);
double segment_weight(const RawCorpus& corpus, const std::string& trajectory,
                      const std::string& segment);
std::map<std::string, double> segment_vector(const RawCorpus& corpus,
                                             const std::string& segment);
double cosine(const std::map<std::string, double>& u, const std::map<std::string, double>& v);

// ---- modularity ----------------------------------------------------------

struct RawGraph {
    std::size_t node_count = 0;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, double>> edges; // a, b, weight
};

/// Literal double loop over ordered node pairs within each cluster.
double modularity(const RawGraph& graph, const std::vector<std::uint32_t>& labels);

/// Exhaustive search over all set partitions (restricted growth strings);
/// practical for node counts up to ~10.
double best_partition_modularity(const RawGraph& graph);

} // namespace oracle

#endif
