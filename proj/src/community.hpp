#ifndef TRAJCLUSTER_COMMUNITY_HPP
#define TRAJCLUSTER_COMMUNITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "similarity_graph.hpp"

namespace trajcluster {

/// Node-to-cluster assignment with contiguous labels 0..K-1. Canonical form
/// orders clusters by their smallest member index.
struct Partition {
    std::vector<std::uint32_t> labels;
    std::uint32_t cluster_count = 0;
};

/// Relabels arbitrary cluster ids into canonical contiguous form.
Partition canonicalize(std::vector<std::uint32_t> raw_labels);

/// Newman modularity over ordered intra-cluster pairs (i = j included with
/// zero self-weight). Fails on edgeless graphs.
double modularity(const SimilarityGraph& graph, const Partition& partition);

struct OptimizeResult {
    Partition partition;
    double q = 0.0;
};

/// Greedy agglomerative merging from singletons followed by single-node
/// refinement sweeps, iterated to a fixed point. The result never scores
/// below the all-in-one partition (Q = 0) and no single-node move to a
/// neighboring or empty cluster can improve it. Deterministic per seed.
/// Fails on edgeless graphs.
OptimizeResult optimize_partition(const SimilarityGraph& graph, std::uint64_t seed);

/// Degree-preserving null model: double-edge swaps (10x edge count
/// attempts) with the original edge-weight multiset permuted onto the
/// rewired topology.
SimilarityGraph rewire_null_model(const SimilarityGraph& graph, std::uint64_t seed);

struct NullModelConfig {
    std::uint32_t samples = 30;
    double quantile = 0.95;
    std::uint64_t seed = 42;
    unsigned threads = 1;
};

struct SignificanceResult {
    bool significant = false;
    std::uint32_t samples = 0; // 0 when the graph was too small to rewire
    double null_mean = 0.0;
    double null_stddev = 0.0;
    double threshold = 0.0; // quantile-order statistic of the null optima
    double observed_q = 0.0;
};

/// Runs optimize_partition on `samples` rewired graphs and declares the
/// observed modularity significant iff it exceeds the configured quantile of
/// the null optima. Graphs with fewer than two edges are never significant.
SignificanceResult significance_test(const SimilarityGraph& graph, double observed_q,
                                     const NullModelConfig& config);

enum class NodeVerdict { significant, not_significant, single_community, edgeless };

const char* to_string(NodeVerdict verdict);

struct HierarchyNode {
    std::string id;      // "0" for the root, then "<parent>.<child index>"
    std::uint32_t depth = 0;
    std::vector<std::string> members; // sorted entity ids
    NodeVerdict verdict = NodeVerdict::edgeless;
    std::optional<double> observed_q;               // present when the optimizer ran
    std::optional<SignificanceResult> significance; // present when the test ran
    std::vector<std::size_t> children;              // indices into the node array
};

/// Tree of nested partitions; root first, parents before their children.
class ClusterHierarchy {
public:
    explicit ClusterHierarchy(std::vector<HierarchyNode> nodes) : nodes_(std::move(nodes)) {}

    const std::vector<HierarchyNode>& nodes() const { return nodes_; }
    const HierarchyNode& root() const { return nodes_.front(); }
    std::size_t max_depth() const;

    /// Flat cut: every entity labeled by the hierarchy node containing it at
    /// `depth` (leaves shallower than the cut keep their leaf). Labels are
    /// contiguous in DFS order.
    std::vector<std::pair<std::string, std::uint32_t>> cut_at_depth(std::uint32_t depth) const;

private:
    std::vector<HierarchyNode> nodes_;
};

/// Recursive significance-tested clustering: optimize, test, recurse on each
/// cluster's internal-edge subgraph until splits stop being significant.
ClusterHierarchy hierarchical_cluster(const SimilarityGraph& graph,
                                      const NullModelConfig& config);

} // namespace trajcluster

#endif
