#ifndef TRAJCLUSTER_HAC_HPP
#define TRAJCLUSTER_HAC_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "evaluation.hpp"
#include "similarity_graph.hpp"

namespace trajcluster {

struct MergeRecord {
    std::uint32_t cluster_a = 0; // cluster ids: 0..n-1 leaves, then n, n+1, ...
    std::uint32_t cluster_b = 0;
    double linkage = 0.0;        // average inter-cluster similarity at merge time
    std::uint32_t merged_id = 0;
    std::uint32_t size = 0;      // members in the merged cluster
};

/// Agglomeration trace: merges recorded until the target cluster count was
/// reached (leaf_count - k merges).
struct Dendrogram {
    std::size_t leaf_count = 0;
    std::vector<MergeRecord> merges;

    void write_csv(std::ostream& out) const;
};

struct HacResult {
    Dendrogram dendrogram;
    LabeledPartition partition; // flat cut at k clusters
};

/// Average-linkage agglomerative clustering on similarities: repeatedly
/// merges the pair of clusters with the highest average similarity (absent
/// edges count as 0) until k clusters remain. Equal linkages resolve to the
/// smallest cluster-id pair.
HacResult hac_average_linkage(const SimilarityGraph& graph, std::size_t k);

} // namespace trajcluster

#endif
