#include "community.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"
#include "parallel.hpp"
#include "rng.hpp"

namespace trajcluster {

namespace {

constexpr double kGainEpsilon = 1e-12;
constexpr int kMaxOuterRounds = 64;
constexpr int kMaxRefineSweeps = 256;

// sub-seed streams
constexpr std::uint64_t kOptimizerStream = 0x6f7074U; // node-level optimizer
constexpr std::uint64_t kNullStream = 0x6e756c6cU;    // significance sampling
constexpr std::uint64_t kRefineStream = 0x726566U;    // refinement sweeps

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

Partition canonicalize(std::vector<std::uint32_t> raw_labels) {
    Partition partition;
    partition.labels.assign(raw_labels.size(), 0);
    std::unordered_map<std::uint32_t, std::uint32_t> remap;
    std::uint32_t next = 0;
    for (std::size_t i = 0; i < raw_labels.size(); ++i) {
        auto [it, inserted] = remap.emplace(raw_labels[i], next);
        if (inserted) ++next;
        partition.labels[i] = it->second;
    }
    partition.cluster_count = next;
    return partition;
}

double modularity(const SimilarityGraph& graph, const Partition& partition) {
    if (graph.total_weight() <= 0.0) {
        fail(Status::domain_error, "modularity undefined on an edgeless graph");
    }
    if (partition.labels.size() != graph.node_count()) {
        fail(Status::invalid_argument, "partition does not cover the graph nodes");
    }
    const std::uint32_t k = partition.cluster_count;
    for (std::uint32_t label : partition.labels) {
        if (label >= k) fail(Status::invalid_argument, "partition labels are not contiguous");
    }
    const double two_m = 2.0 * graph.total_weight();
    std::vector<double> intra(k, 0.0);  // ordered intra-cluster weight
    std::vector<double> degree(k, 0.0); // summed degrees per cluster
    for (const auto& edge : graph.edges()) {
        if (partition.labels[edge.a] == partition.labels[edge.b]) {
            intra[partition.labels[edge.a]] += 2.0 * edge.weight;
        }
    }
    for (std::uint32_t i = 0; i < graph.node_count(); ++i) {
        degree[partition.labels[i]] += graph.degree(i);
    }
    double q = 0.0;
    for (std::uint32_t c = 0; c < k; ++c) {
        q += intra[c] / two_m - (degree[c] / two_m) * (degree[c] / two_m);
    }
    return q;
}

namespace {

/// Greedy pairwise merging of connected clusters by largest positive
/// modularity gain; equal gains resolve to the smallest label pair.
/// Rewrites `labels` in place and reports whether anything merged.
bool merge_phase(const SimilarityGraph& graph, std::vector<std::uint32_t>& labels) {
    const double m = graph.total_weight();
    const double two_m = 2.0 * m;
    const std::size_t n = graph.node_count();

    std::vector<double> cluster_degree(n, 0.0);
    std::vector<bool> alive(n, false);
    for (std::uint32_t i = 0; i < n; ++i) {
        cluster_degree[labels[i]] += graph.degree(i);
        alive[labels[i]] = true;
    }
    // inter-cluster weights, symmetric; std::map keeps folds deterministic
    std::vector<std::map<std::uint32_t, double>> between(n);
    for (const auto& edge : graph.edges()) {
        std::uint32_t a = labels[edge.a];
        std::uint32_t b = labels[edge.b];
        if (a == b) continue;
        between[a][b] += edge.weight;
        between[b][a] += edge.weight;
    }

    auto gain = [&](std::uint32_t a, std::uint32_t b, double weight_ab) {
        return (weight_ab - cluster_degree[a] * cluster_degree[b] / two_m) / m;
    };

    struct Candidate {
        double gain;
        std::uint32_t a, b;
        std::uint64_t version;
    };
    struct Worse {
        bool operator()(const Candidate& lhs, const Candidate& rhs) const {
            if (lhs.gain != rhs.gain) return lhs.gain < rhs.gain;
            if (lhs.a != rhs.a) return lhs.a > rhs.a;
            return lhs.b > rhs.b;
        }
    };
    std::priority_queue<Candidate, std::vector<Candidate>, Worse> heap;
    std::unordered_map<std::uint64_t, std::uint64_t> versions;

    auto push_pair = [&](std::uint32_t a, std::uint32_t b) {
        if (a > b) std::swap(a, b);
        std::uint64_t version = ++versions[pair_key(a, b)];
        heap.push(Candidate{gain(a, b, between[a].at(b)), a, b, version});
    };

    for (std::uint32_t a = 0; a < n; ++a) {
        for (const auto& [b, weight] : between[a]) {
            (void)weight;
            if (a < b) push_pair(a, b);
        }
    }

    std::vector<std::uint32_t> merged_into(n);
    for (std::uint32_t c = 0; c < n; ++c) merged_into[c] = c;
    auto find_root = [&merged_into](std::uint32_t c) {
        while (merged_into[c] != c) {
            merged_into[c] = merged_into[merged_into[c]];
            c = merged_into[c];
        }
        return c;
    };

    bool merged_any = false;
    while (!heap.empty()) {
        Candidate top = heap.top();
        heap.pop();
        if (!alive[top.a] || !alive[top.b]) continue;
        auto vit = versions.find(pair_key(top.a, top.b));
        if (vit == versions.end() || vit->second != top.version) continue;
        if (top.gain <= kGainEpsilon) break; // the valid maximum is non-positive

        const std::uint32_t winner = top.a; // top.a < top.b by construction
        const std::uint32_t loser = top.b;
        merged_any = true;
        alive[loser] = false;
        merged_into[loser] = winner;
        cluster_degree[winner] += cluster_degree[loser];

        between[winner].erase(loser);
        for (const auto& [c, weight] : between[loser]) {
            if (c == winner) continue;
            between[winner][c] += weight;
            between[c].erase(loser);
            between[c][winner] = between[winner][c];
        }
        between[loser].clear();

        // the winner's degree changed: refresh every pair involving it
        for (const auto& [c, weight] : between[winner]) {
            (void)weight;
            push_pair(winner, c);
        }
    }

    if (merged_any) {
        for (auto& label : labels) label = find_root(label);
    }
    return merged_any;
}

/// Single-node refinement: repeatedly move nodes to the neighboring (or a
/// fresh empty) cluster with the largest positive gain until a full sweep
/// makes no move. Visit order is reshuffled per sweep from the seed.
bool refine_phase(const SimilarityGraph& graph, std::vector<std::uint32_t>& labels, Rng& rng) {
    const double m = graph.total_weight();
    const double two_m_sq = 2.0 * m * m;
    const std::size_t n = graph.node_count();

    bool changed_any = false;
    std::vector<std::uint32_t> order(n);
    for (std::uint32_t i = 0; i < n; ++i) order[i] = i;

    for (int sweep = 0; sweep < kMaxRefineSweeps; ++sweep) {
        // per-sweep recompute keeps incremental drift out of the gains
        std::uint32_t max_label = 0;
        for (std::uint32_t label : labels) max_label = std::max(max_label, label);
        std::vector<double> cluster_degree(max_label + 2, 0.0);
        std::vector<std::uint32_t> cluster_size(max_label + 2, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            cluster_degree[labels[i]] += graph.degree(i);
            ++cluster_size[labels[i]];
        }
        std::uint32_t empty_label = max_label + 1; // one spare target per move

        rng.shuffle(order);
        bool moved = false;
        for (std::uint32_t v : order) {
            const std::uint32_t from = labels[v];
            const double d_v = graph.degree(v);
            if (graph.adjacency(v).empty()) continue; // isolated: every move gains 0

            // weight from v to each adjacent cluster, deterministic order
            std::map<std::uint32_t, double> link;
            for (const auto& [neighbor, weight] : graph.adjacency(v)) {
                link[labels[neighbor]] += weight;
            }
            double w_from = 0.0;
            if (auto it = link.find(from); it != link.end()) w_from = it->second;

            double best_gain = 0.0;
            std::uint32_t best_target = from;
            auto consider = [&](std::uint32_t target, double w_target) {
                if (target == from) return;
                double gain =
                    (w_target - w_from) / m -
                    d_v * (cluster_degree[target] - cluster_degree[from] + d_v) / two_m_sq;
                if (gain <= kGainEpsilon) return;
                if (gain > best_gain || (gain == best_gain && target < best_target)) {
                    best_gain = gain;
                    best_target = target;
                }
            };
            for (const auto& [target, weight] : link) consider(target, weight);
            if (cluster_size[from] > 1) consider(empty_label, 0.0);

            if (best_target != from) {
                moved = true;
                changed_any = true;
                cluster_degree[from] -= d_v;
                --cluster_size[from];
                if (best_target == empty_label) {
                    cluster_degree.push_back(0.0);
                    cluster_size.push_back(0);
                    ++empty_label;
                }
                cluster_degree[best_target] += d_v;
                ++cluster_size[best_target];
                labels[v] = best_target;
            }
        }
        if (!moved) break;
    }
    return changed_any;
}

} // namespace

OptimizeResult optimize_partition(const SimilarityGraph& graph, std::uint64_t seed) {
    if (graph.total_weight() <= 0.0) {
        fail(Status::domain_error, "optimize_partition requires at least one edge");
    }
    const std::size_t n = graph.node_count();
    std::vector<std::uint32_t> labels(n);
    for (std::uint32_t i = 0; i < n; ++i) labels[i] = i;

    Rng refine_rng(derive_seed(seed, kRefineStream));
    for (int round = 0; round < kMaxOuterRounds; ++round) {
        // refinement may open new profitable merges, so iterate to a fixpoint
        std::vector<std::uint32_t> compact = canonicalize(labels).labels;
        bool merged = merge_phase(graph, compact);
        bool refined = refine_phase(graph, compact, refine_rng);
        labels = std::move(compact);
        if (!merged && !refined) break;
    }

    Partition partition = canonicalize(std::move(labels));
    double q = modularity(graph, partition);
    if (q < 0.0) {
        // never rank below the trivial all-in-one partition (Q = 0)
        partition.labels.assign(n, 0);
        partition.cluster_count = n ? 1 : 0;
        q = modularity(graph, partition);
    }
    return OptimizeResult{std::move(partition), q};
}

SimilarityGraph rewire_null_model(const SimilarityGraph& graph, std::uint64_t seed) {
    std::vector<WeightedEdge> edges = graph.edges();
    Rng rng(seed);
    if (edges.size() >= 2) {
        std::unordered_set<std::uint64_t> present;
        present.reserve(edges.size() * 2);
        for (const auto& edge : edges) present.insert(pair_key(edge.a, edge.b));

        auto norm_key = [](std::uint32_t a, std::uint32_t b) {
            return a < b ? pair_key(a, b) : pair_key(b, a);
        };
        const std::size_t attempts = 10 * edges.size();
        for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
            std::size_t i = static_cast<std::size_t>(rng.next_below(edges.size()));
            std::size_t j = static_cast<std::size_t>(rng.next_below(edges.size()));
            if (i == j) continue;
            std::uint32_t a = edges[i].a, b = edges[i].b;
            std::uint32_t c = edges[j].a, d = edges[j].b;
            if (rng.next_bool()) std::swap(c, d);
            // proposed replacement: (a,d) and (c,b)
            if (a == d || c == b) continue;
            std::uint64_t old1 = norm_key(a, b), old2 = norm_key(c, d);
            std::uint64_t new1 = norm_key(a, d), new2 = norm_key(c, b);
            if (new1 == new2) continue;
            present.erase(old1);
            present.erase(old2);
            if (present.count(new1) || present.count(new2)) {
                present.insert(old1);
                present.insert(old2);
                continue;
            }
            present.insert(new1);
            present.insert(new2);
            edges[i].a = std::min(a, d);
            edges[i].b = std::max(a, d);
            edges[j].a = std::min(c, b);
            edges[j].b = std::max(c, b);
        }
    }
    std::vector<double> weights;
    weights.reserve(edges.size());
    for (const auto& edge : graph.edges()) weights.push_back(edge.weight);
    rng.shuffle(weights);
    for (std::size_t e = 0; e < edges.size(); ++e) edges[e].weight = weights[e];
    return SimilarityGraph::from_index_edges(graph.node_ids(), edges);
}

SignificanceResult significance_test(const SimilarityGraph& graph, double observed_q,
                                     const NullModelConfig& config) {
    SignificanceResult result;
    result.observed_q = observed_q;
    if (graph.edge_count() < 2 || config.samples == 0) {
        result.significant = false;
        result.samples = 0;
        return result;
    }
    if (!(config.quantile > 0.0 && config.quantile < 1.0)) {
        fail(Status::invalid_argument, "significance quantile must lie in (0, 1)");
    }

    std::vector<double> null_qs(config.samples, 0.0);
    parallel_for(config.samples, config.threads, [&](std::size_t r) {
        std::uint64_t rewire_seed = derive_seed(config.seed, 2 * r);
        std::uint64_t optimizer_seed = derive_seed(config.seed, 2 * r + 1);
        SimilarityGraph null_graph = rewire_null_model(graph, rewire_seed);
        null_qs[r] = optimize_partition(null_graph, optimizer_seed).q;
    });

    double mean = 0.0;
    for (double q : null_qs) mean += q;
    mean /= static_cast<double>(null_qs.size());
    double variance = 0.0;
    for (double q : null_qs) variance += (q - mean) * (q - mean);
    result.null_stddev =
        null_qs.size() > 1 ? std::sqrt(variance / static_cast<double>(null_qs.size() - 1)) : 0.0;
    result.null_mean = mean;

    std::vector<double> sorted = null_qs;
    std::sort(sorted.begin(), sorted.end());
    double rank = std::ceil(config.quantile * static_cast<double>(sorted.size()));
    std::size_t index = static_cast<std::size_t>(std::max(1.0, rank)) - 1;
    index = std::min(index, sorted.size() - 1);
    result.threshold = sorted[index];
    result.samples = config.samples;
    result.significant = observed_q > result.threshold;
    return result;
}

const char* to_string(NodeVerdict verdict) {
    switch (verdict) {
        case NodeVerdict::significant: return "significant";
        case NodeVerdict::not_significant: return "not_significant";
        case NodeVerdict::single_community: return "single_community";
        case NodeVerdict::edgeless: return "edgeless";
    }
    return "unknown";
}

std::size_t ClusterHierarchy::max_depth() const {
    std::size_t depth = 0;
    for (const auto& node : nodes_) depth = std::max(depth, static_cast<std::size_t>(node.depth));
    return depth;
}

std::vector<std::pair<std::string, std::uint32_t>> ClusterHierarchy::cut_at_depth(
    std::uint32_t depth) const {
    std::vector<std::pair<std::string, std::uint32_t>> assignment;
    std::uint32_t next_label = 0;
    // DFS from the root, taking nodes at the cut depth and leaves above it
    std::vector<std::size_t> stack{0};
    std::vector<std::size_t> order;
    while (!stack.empty()) {
        std::size_t index = stack.back();
        stack.pop_back();
        const HierarchyNode& node = nodes_[index];
        if (node.depth == depth || node.children.empty()) {
            order.push_back(index);
            continue;
        }
        for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    for (std::size_t index : order) {
        for (const auto& member : nodes_[index].members) {
            assignment.emplace_back(member, next_label);
        }
        ++next_label;
    }
    std::sort(assignment.begin(), assignment.end());
    return assignment;
}

ClusterHierarchy hierarchical_cluster(const SimilarityGraph& graph,
                                      const NullModelConfig& config) {
    std::vector<HierarchyNode> nodes;

    struct Frame {
        std::size_t node_index;
        SimilarityGraph subgraph;
        std::uint64_t seed;
    };

    auto make_node = [&nodes](std::string id, std::uint32_t depth,
                              std::vector<std::string> members) {
        HierarchyNode node;
        node.id = std::move(id);
        node.depth = depth;
        node.members = std::move(members);
        nodes.push_back(std::move(node));
        return nodes.size() - 1;
    };

    std::size_t root = make_node("0", 0, graph.node_ids());

    std::vector<Frame> stack;
    stack.push_back(Frame{root, graph, config.seed});
    while (!stack.empty()) {
        Frame frame = std::move(stack.back());
        stack.pop_back();

        if (frame.subgraph.edge_count() == 0) {
            nodes[frame.node_index].verdict = NodeVerdict::edgeless;
            continue;
        }
        OptimizeResult optimum =
            optimize_partition(frame.subgraph, derive_seed(frame.seed, kOptimizerStream));
        nodes[frame.node_index].observed_q = optimum.q;
        if (optimum.partition.cluster_count <= 1) {
            nodes[frame.node_index].verdict = NodeVerdict::single_community;
            continue;
        }
        NullModelConfig local = config;
        local.seed = derive_seed(frame.seed, kNullStream);
        SignificanceResult verdict = significance_test(frame.subgraph, optimum.q, local);
        nodes[frame.node_index].significance = verdict;
        if (!verdict.significant) {
            nodes[frame.node_index].verdict = NodeVerdict::not_significant;
            continue;
        }
        nodes[frame.node_index].verdict = NodeVerdict::significant;

        std::vector<std::vector<std::uint32_t>> clusters(optimum.partition.cluster_count);
        for (std::uint32_t i = 0; i < frame.subgraph.node_count(); ++i) {
            clusters[optimum.partition.labels[i]].push_back(i);
        }
        std::vector<Frame> child_frames;
        for (std::uint32_t c = 0; c < clusters.size(); ++c) {
            std::vector<std::string> members;
            members.reserve(clusters[c].size());
            for (std::uint32_t i : clusters[c]) members.push_back(frame.subgraph.node_id(i));
            std::size_t child = make_node(nodes[frame.node_index].id + "." + std::to_string(c),
                                          nodes[frame.node_index].depth + 1, std::move(members));
            nodes[frame.node_index].children.push_back(child);
            child_frames.push_back(Frame{child,
                                         frame.subgraph.induced_subgraph_by_index(clusters[c]),
                                         derive_seed(frame.seed, c + 1)});
        }
        // push in reverse so children are processed in label order (pure DFS)
        for (auto it = child_frames.rbegin(); it != child_frames.rend(); ++it) {
            stack.push_back(std::move(*it));
        }
    }
    return ClusterHierarchy(std::move(nodes));
}

} // namespace trajcluster
