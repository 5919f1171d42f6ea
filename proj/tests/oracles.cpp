#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace oracle {

namespace {

const std::vector<std::string>& find_trajectory(const RawCorpus& corpus,
                                                const std::string& trajectory) {
    for (const auto& [id, segments] : corpus.trajectories) {
        if (id == trajectory) return segments;
    }
    throw std::runtime_error("oracle: unknown trajectory " + trajectory);
}

std::size_t count_occurrences(const std::vector<std::string>& segments,
                              const std::string& segment) {
    return static_cast<std::size_t>(std::count(segments.begin(), segments.end(), segment));
}

} // namespace

double ssf(const RawCorpus& corpus, const std::string& segment, const std::string& trajectory) {
    const auto& segments = find_trajectory(corpus, trajectory);
    std::size_t n = count_occurrences(segments, segment);
    if (n == 0) return 0.0;
    double denominator = 0.0;
    std::set<std::string> distinct(segments.begin(), segments.end());
    for (const auto& e : distinct) {
        denominator += static_cast<double>(count_occurrences(segments, e)) * corpus.lengths.at(e);
    }
    return static_cast<double>(n) * corpus.lengths.at(segment) / denominator;
}

double itf(const RawCorpus& corpus, const std::string& segment) {
    std::size_t df = 0;
    for (const auto& [id, segments] : corpus.trajectories) {
        (void)id;
        if (count_occurrences(segments, segment) > 0) ++df;
    }
    if (df == 0) throw std::runtime_error("oracle: itf undefined for " + segment);
    return std::log(static_cast<double>(corpus.trajectories.size()) / static_cast<double>(df));
}

std::map<std::string, double> trajectory_vector(const RawCorpus& corpus,
                                                const std::string& trajectory) {
    const auto& segments = find_trajectory(corpus, trajectory);
    std::map<std::string, double> vector;
    std::set<std::string> distinct(segments.begin(), segments.end());
    for (const auto& e : distinct) vector[e] = ssf(corpus, e, trajectory) * itf(corpus, e);
    return vector;
}

double segment_weight(const RawCorpus& corpus, const std::string& trajectory,
                      const std::string& segment) {
    const auto& segments = find_trajectory(corpus, trajectory);
    std::size_t n = count_occurrences(segments, segment);
    std::size_t total = 0;
    for (const auto& [id, other] : corpus.trajectories) {
        (void)id;
        total += count_occurrences(other, segment);
    }
    if (total == 0) throw std::runtime_error("oracle: weight undefined for " + segment);
    if (n == 0) return 0.0;
    std::set<std::string> distinct(segments.begin(), segments.end());
    return static_cast<double>(n) / static_cast<double>(total) *
           std::log(static_cast<double>(corpus.network_segment_count) /
                    static_cast<double>(distinct.size()));
}

std::map<std::string, double> segment_vector(const RawCorpus& corpus,
                                             const std::string& segment) {
    std::map<std::string, double> vector;
    bool traveled = false;
    for (const auto& [id, segments] : corpus.trajectories) {
        if (count_occurrences(segments, segment) > 0) {
            traveled = true;
            vector[id] = segment_weight(corpus, id, segment);
        }
    }
    if (!traveled) throw std::runtime_error("oracle: segment " + segment + " never traveled");
    return vector;
}

double cosine(const std::map<std::string, double>& u, const std::map<std::string, double>& v) {
    double dot = 0.0, norm_u = 0.0, norm_v = 0.0;
    for (const auto& [key, value] : u) {
        norm_u += value * value;
        auto it = v.find(key);
        if (it != v.end()) dot += value * it->second;
    }
    for (const auto& [key, value] : v) {
        (void)key;
        norm_v += value * value;
    }
    if (norm_u == 0.0 || norm_v == 0.0) return 0.0;
    return dot / (std::sqrt(norm_u) * std::sqrt(norm_v));
}

double modularity(const RawGraph& graph, const std::vector<std::uint32_t>& labels) {
    const std::size_t n = graph.node_count;
    std::vector<std::vector<double>> w(n, std::vector<double>(n, 0.0));
    for (const auto& [a, b, weight] : graph.edges) {
        w[a][b] = weight;
        w[b][a] = weight;
    }
    std::vector<double> degree(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) degree[i] += w[i][j];
        }
    }
    double two_m = 0.0;
    for (double d : degree) two_m += d;
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (labels[i] != labels[j]) continue;
            q += w[i][j] - degree[i] * degree[j] / two_m;
        }
    }
    return q / two_m;
}

double best_partition_modularity(const RawGraph& graph) {
    const std::size_t n = graph.node_count;
    if (n == 0) throw std::runtime_error("oracle: empty graph");
    std::vector<std::uint32_t> labels(n, 0);
    double best = modularity(graph, labels);
    // enumerate every set partition as a restricted growth string
    auto recurse = [&](auto&& self, std::size_t i, std::uint32_t max_used) -> void {
        if (i == n) {
            best = std::max(best, modularity(graph, labels));
            return;
        }
        for (std::uint32_t c = 0; c <= max_used + 1; ++c) {
            labels[i] = c;
            self(self, i + 1, std::max(max_used, c));
        }
    };
    recurse(recurse, 1, 0);
    return best;
}

} // namespace oracle
