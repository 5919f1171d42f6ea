#include "similarity_graph.hpp"

#include <algorithm>
#include <tuple>

#include "csv.hpp"
#include "error.hpp"
#include "parallel.hpp"
#include "vectorizer.hpp"

namespace trajcluster {

namespace {

void validate_edge(const std::vector<std::string>& node_ids, const WeightedEdge& edge) {
    if (edge.a >= node_ids.size() || edge.b >= node_ids.size()) {
        fail(Status::invalid_argument, "edge endpoint out of range");
    }
    if (edge.a == edge.b) {
        fail(Status::invalid_argument, "self-loop on node `" + node_ids[edge.a] + "`");
    }
    if (!(edge.weight > 0.0)) {
        fail(Status::invalid_argument, "non-positive edge weight between `" + node_ids[edge.a] +
                                           "` and `" + node_ids[edge.b] + "`");
    }
}

} // namespace

void SimilarityGraph::build_adjacency() {
    node_index_.clear();
    for (std::uint32_t i = 0; i < node_ids_.size(); ++i) node_index_.emplace(node_ids_[i], i);

    for (auto& edge : edges_) {
        if (edge.a > edge.b) std::swap(edge.a, edge.b);
        validate_edge(node_ids_, edge);
    }
    std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& lhs, const WeightedEdge& rhs) {
        return std::tie(lhs.a, lhs.b) < std::tie(rhs.a, rhs.b);
    });
    for (std::size_t i = 1; i < edges_.size(); ++i) {
        if (edges_[i - 1].a == edges_[i].a && edges_[i - 1].b == edges_[i].b) {
            fail(Status::invalid_argument, "duplicate edge between `" + node_ids_[edges_[i].a] +
                                               "` and `" + node_ids_[edges_[i].b] + "`");
        }
    }

    adjacency_.assign(node_ids_.size(), {});
    for (const auto& edge : edges_) {
        adjacency_[edge.a].emplace_back(edge.b, edge.weight);
        adjacency_[edge.b].emplace_back(edge.a, edge.weight);
    }
    for (auto& neighbors : adjacency_) {
        std::sort(neighbors.begin(), neighbors.end(),
                  [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    }

    degrees_.assign(node_ids_.size(), 0.0);
    for (std::uint32_t i = 0; i < node_ids_.size(); ++i) {
        double degree = 0.0;
        for (const auto& [neighbor, weight] : adjacency_[i]) {
            (void)neighbor;
            degree += weight;
        }
        degrees_[i] = degree;
    }
    double degree_sum = 0.0;
    for (double degree : degrees_) degree_sum += degree;
    total_weight_ = degree_sum / 2.0; // 2m == sum of degrees exactly
}

SimilarityGraph SimilarityGraph::from_id_edges(
    std::vector<std::string> node_ids,
    const std::vector<std::tuple<std::string, std::string, double>>& edges) {
    SimilarityGraph graph;
    std::sort(node_ids.begin(), node_ids.end());
    if (std::adjacent_find(node_ids.begin(), node_ids.end()) != node_ids.end()) {
        fail(Status::invalid_argument, "duplicate node id");
    }
    graph.node_ids_ = std::move(node_ids);
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < graph.node_ids_.size(); ++i) {
        index.emplace(graph.node_ids_[i], i);
    }
    graph.edges_.reserve(edges.size());
    for (const auto& [a, b, weight] : edges) {
        auto ia = index.find(a);
        auto ib = index.find(b);
        if (ia == index.end() || ib == index.end()) {
            fail(Status::invalid_argument, "edge references unknown node");
        }
        graph.edges_.push_back(WeightedEdge{ia->second, ib->second, weight});
    }
    graph.build_adjacency();
    return graph;
}

SimilarityGraph SimilarityGraph::from_index_edges(std::vector<std::string> node_ids,
                                                  const std::vector<WeightedEdge>& edges) {
    SimilarityGraph graph;
    graph.node_ids_ = std::move(node_ids);
    graph.edges_ = edges;
    graph.build_adjacency();
    return graph;
}

std::uint32_t SimilarityGraph::node_index(const std::string& node_id) const {
    auto it = node_index_.find(node_id);
    if (it == node_index_.end()) fail(Status::not_found, "unknown graph node `" + node_id + "`");
    return it->second;
}

bool SimilarityGraph::has_node(const std::string& node_id) const {
    return node_index_.count(node_id) != 0;
}

SimilarityGraph SimilarityGraph::induced_subgraph(const std::vector<std::string>& members) const {
    std::vector<std::uint32_t> indices;
    indices.reserve(members.size());
    for (const auto& member : members) indices.push_back(node_index(member));
    return induced_subgraph_by_index(indices);
}

SimilarityGraph SimilarityGraph::induced_subgraph_by_index(
    const std::vector<std::uint32_t>& members) const {
    std::vector<std::uint32_t> sorted = members;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        fail(Status::invalid_argument, "duplicate member in induced subgraph");
    }
    std::vector<std::uint32_t> remap(node_ids_.size(), UINT32_MAX);
    std::vector<std::string> member_ids;
    member_ids.reserve(sorted.size());
    for (std::uint32_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= node_ids_.size()) {
            fail(Status::not_found, "induced subgraph member out of range");
        }
        remap[sorted[i]] = i;
        member_ids.push_back(node_ids_[sorted[i]]);
    }
    std::vector<WeightedEdge> kept;
    for (const auto& edge : edges_) {
        std::uint32_t a = remap[edge.a];
        std::uint32_t b = remap[edge.b];
        if (a != UINT32_MAX && b != UINT32_MAX) {
            kept.push_back(WeightedEdge{a, b, edge.weight});
        }
    }
    return from_index_edges(std::move(member_ids), kept);
}

void SimilarityGraph::write_edge_csv(std::ostream& out) const {
    out << "node_a,node_b,weight\n";
    for (const auto& edge : edges_) {
        out << node_ids_[edge.a] << ',' << node_ids_[edge.b] << ','
            << csv::format_double(edge.weight) << '\n';
    }
}

void SimilarityGraph::write_dot(std::ostream& out) const {
    out << "graph similarity {\n";
    for (const auto& id : node_ids_) out << "  \"" << id << "\";\n";
    for (const auto& edge : edges_) {
        out << "  \"" << node_ids_[edge.a] << "\" -- \"" << node_ids_[edge.b] << "\" [weight="
            << csv::format_double(edge.weight) << "];\n";
    }
    out << "}\n";
}

namespace {

/// Unordered pairs (i, j), i < j in entity-index space, sharing at least one
/// feature. `feature_lists` maps each entity to its sorted feature indices;
/// `posting_lists` maps each feature back to its sorted entity indices.
std::vector<std::pair<std::uint32_t, std::uint32_t>> shared_feature_pairs(
    std::size_t entity_count,
    const std::vector<std::vector<std::uint32_t>>& feature_lists,
    const std::vector<std::vector<std::uint32_t>>& posting_lists) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    std::vector<std::uint32_t> stamp(entity_count, UINT32_MAX);
    std::vector<std::uint32_t> partners;
    for (std::uint32_t i = 0; i < entity_count; ++i) {
        partners.clear();
        for (std::uint32_t feature : feature_lists[i]) {
            const auto& posting = posting_lists[feature];
            auto start = std::upper_bound(posting.begin(), posting.end(), i);
            for (auto it = start; it != posting.end(); ++it) {
                if (stamp[*it] != i) {
                    stamp[*it] = i;
                    partners.push_back(*it);
                }
            }
        }
        std::sort(partners.begin(), partners.end());
        for (std::uint32_t j : partners) pairs.emplace_back(i, j);
    }
    return pairs;
}

struct EntityModel {
    std::vector<std::string> ids;                          // entity index -> id
    std::vector<std::vector<std::uint32_t>> features;      // entity -> sorted features
    std::vector<std::vector<std::uint32_t>> postings;      // feature -> sorted entities
    std::vector<WeightVector> vectors;                     // entity -> weight vector
};

EntityModel trajectory_model(const Corpus& corpus, unsigned threads) {
    EntityModel model;
    model.ids.reserve(corpus.size());
    for (const auto& trajectory : corpus.trajectories()) model.ids.push_back(trajectory.id);

    model.features.resize(corpus.size());
    for (std::uint32_t t = 0; t < corpus.size(); ++t) {
        for (const auto& [segment, count] : corpus.trajectory_counts(t)) {
            (void)count;
            model.features[t].push_back(segment);
        }
    }
    model.postings.resize(corpus.network().segment_count());
    for (std::uint32_t segment : corpus.traveled_segments()) {
        for (const Posting& posting : corpus.postings(segment)) {
            model.postings[segment].push_back(posting.trajectory);
        }
    }
    model.vectors = all_trajectory_vectors(corpus, threads);
    return model;
}

EntityModel segment_model(const Corpus& corpus, unsigned threads) {
    EntityModel model;
    const auto& traveled = corpus.traveled_segments();
    std::vector<std::uint32_t> position(corpus.network().segment_count(), UINT32_MAX);
    model.ids.reserve(traveled.size());
    for (std::uint32_t p = 0; p < traveled.size(); ++p) {
        position[traveled[p]] = p;
        model.ids.push_back(corpus.network().segment(traveled[p]).id);
    }
    // features of a segment are the trajectories traveling it
    model.features.resize(traveled.size());
    for (std::uint32_t p = 0; p < traveled.size(); ++p) {
        for (const Posting& posting : corpus.postings(traveled[p])) {
            model.features[p].push_back(posting.trajectory);
        }
    }
    model.postings.resize(corpus.size());
    for (std::uint32_t t = 0; t < corpus.size(); ++t) {
        for (const auto& [segment, count] : corpus.trajectory_counts(t)) {
            (void)count;
            model.postings[t].push_back(position[segment]);
        }
    }
    model.vectors = all_segment_vectors(corpus, threads);
    return model;
}

SimilarityGraph build_graph(const EntityModel& model,
                            const std::function<bool(std::uint32_t, std::uint32_t)>& pair_filter,
                            unsigned threads) {
    auto pairs = shared_feature_pairs(model.ids.size(), model.features, model.postings);
    if (pair_filter) {
        std::erase_if(pairs, [&](const auto& pair) {
            return !pair_filter(pair.first, pair.second);
        });
    }
    std::vector<double> weights(pairs.size(), 0.0);
    parallel_for(pairs.size(), threads, [&](std::size_t k) {
        weights[k] = cosine(model.vectors[pairs[k].first], model.vectors[pairs[k].second]);
    });

    // remap to sorted-id node order
    std::vector<std::uint32_t> order(model.ids.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::uint32_t lhs, std::uint32_t rhs) {
        return model.ids[lhs] < model.ids[rhs];
    });
    std::vector<std::uint32_t> rank(order.size());
    std::vector<std::string> sorted_ids(order.size());
    for (std::uint32_t r = 0; r < order.size(); ++r) {
        rank[order[r]] = r;
        sorted_ids[r] = model.ids[order[r]];
    }

    std::vector<WeightedEdge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (weights[k] > kSimilarityEpsilon) {
            edges.push_back(WeightedEdge{rank[pairs[k].first], rank[pairs[k].second], weights[k]});
        }
    }
    return SimilarityGraph::from_index_edges(std::move(sorted_ids), edges);
}

} // namespace

SimilarityGraph build_trajectory_graph(const Corpus& corpus, unsigned threads) {
    if (corpus.size() == 0) fail(Status::invalid_argument, "empty corpus");
    return build_graph(trajectory_model(corpus, threads), nullptr, threads);
}

SimilarityGraph build_segment_graph(const Corpus& corpus, SegmentGraphMode mode,
                                    unsigned threads) {
    if (corpus.size() == 0) fail(Status::invalid_argument, "empty corpus");
    EntityModel model = segment_model(corpus, threads);
    std::function<bool(std::uint32_t, std::uint32_t)> filter;
    if (mode == SegmentGraphMode::strict) {
        const auto& traveled = corpus.traveled_segments();
        const RoadNetwork& network = corpus.network();
        filter = [&traveled, &network](std::uint32_t p, std::uint32_t q) {
            return are_connected(network.segment(traveled[p]), network.segment(traveled[q]));
        };
    }
    return build_graph(model, filter, threads);
}

std::vector<std::pair<std::string, std::string>> candidate_pairs(const Corpus& corpus,
                                                                 EntityKind kind) {
    EntityModel model = kind == EntityKind::trajectory ? trajectory_model(corpus, 1)
                                                       : segment_model(corpus, 1);
    auto pairs = shared_feature_pairs(model.ids.size(), model.features, model.postings);
    std::vector<std::pair<std::string, std::string>> result;
    result.reserve(pairs.size());
    for (const auto& [i, j] : pairs) {
        std::string a = model.ids[i];
        std::string b = model.ids[j];
        if (b < a) std::swap(a, b);
        result.emplace_back(std::move(a), std::move(b));
    }
    std::sort(result.begin(), result.end());
    return result;
}

} // namespace trajcluster
