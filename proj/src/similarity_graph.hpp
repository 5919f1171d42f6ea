#ifndef TRAJCLUSTER_SIMILARITY_GRAPH_HPP
#define TRAJCLUSTER_SIMILARITY_GRAPH_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trajectory_corpus.hpp"

namespace trajcluster {

/// Similarities below this are floating-point dust and create no edge.
inline constexpr double kSimilarityEpsilon = 1e-12;

struct WeightedEdge {
    std::uint32_t a = 0; // a < b, node indices
    std::uint32_t b = 0;
    double weight = 0.0;
};

/// Undirected weighted graph over entities (trajectories or segments).
/// Nodes are kept in sorted-id order and adjacency lists sorted by neighbor,
/// so identical inputs produce byte-identical exports regardless of input
/// row order.
class SimilarityGraph {
public:
    SimilarityGraph() = default;

    /// Node ids are sorted internally; edges reference the given ids.
    static SimilarityGraph from_id_edges(
        std::vector<std::string> node_ids,
        const std::vector<std::tuple<std::string, std::string, double>>& edges);

    /// Same node universe, edges in index space (used by the null model and
    /// scaling utilities). Node order is preserved as given.
    static SimilarityGraph from_index_edges(std::vector<std::string> node_ids,
                                            const std::vector<WeightedEdge>& edges);

    std::size_t node_count() const { return node_ids_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::string& node_id(std::uint32_t index) const { return node_ids_[index]; }
    const std::vector<std::string>& node_ids() const { return node_ids_; }
    std::uint32_t node_index(const std::string& node_id) const;
    bool has_node(const std::string& node_id) const;

    /// Neighbors of a node as (neighbor index, weight), sorted by neighbor.
    const std::vector<std::pair<std::uint32_t, double>>& adjacency(std::uint32_t index) const {
        return adjacency_[index];
    }

    /// Weighted degree d_i.
    double degree(std::uint32_t index) const { return degrees_[index]; }
    /// Total edge weight m = (1/2) sum of degrees.
    double total_weight() const { return total_weight_; }

    /// Edges with a < b, sorted by (a, b).
    const std::vector<WeightedEdge>& edges() const { return edges_; }

    /// Subgraph on `members` keeping only edges with both endpoints inside;
    /// degrees are recomputed. Fails on unknown member ids.
    SimilarityGraph induced_subgraph(const std::vector<std::string>& members) const;
    SimilarityGraph induced_subgraph_by_index(const std::vector<std::uint32_t>& members) const;

    void write_edge_csv(std::ostream& out) const;
    void write_dot(std::ostream& out) const;

private:
    void build_adjacency();

    std::vector<std::string> node_ids_;
    std::unordered_map<std::string, std::uint32_t> node_index_;
    std::vector<WeightedEdge> edges_;
    std::vector<std::vector<std::pair<std::uint32_t, double>>> adjacency_;
    std::vector<double> degrees_;
    double total_weight_ = 0.0;
};

enum class SegmentGraphMode { loose, strict };
enum class EntityKind { trajectory, segment };

/// One node per trajectory (isolated ones included); an edge wherever the
/// cosine similarity of the trajectory vectors is positive.
SimilarityGraph build_trajectory_graph(const Corpus& corpus, unsigned threads = 1);

/// One node per traveled segment. Loose mode links positive-similarity
/// pairs; strict mode additionally requires the segments to share an
/// endpoint node, so its edge set is a subset of the loose one.
SimilarityGraph build_segment_graph(const Corpus& corpus, SegmentGraphMode mode,
                                    unsigned threads = 1);

/// Inverted-index pruning: exactly the unordered entity pairs sharing at
/// least one feature (a superset of all positive-similarity pairs), each
/// yielded once, sorted by id pair.
std::vector<std::pair<std::string, std::string>> candidate_pairs(const Corpus& corpus,
                                                                 EntityKind kind);

} // namespace trajcluster

#endif
