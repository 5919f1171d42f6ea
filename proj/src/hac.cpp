#include "hac.hpp"

#include <algorithm>

#include "csv.hpp"
#include "error.hpp"

namespace trajcluster {

void Dendrogram::write_csv(std::ostream& out) const {
    out << "merge_index,cluster_a,cluster_b,linkage,merged_id,size\n";
    for (std::size_t i = 0; i < merges.size(); ++i) {
        const MergeRecord& record = merges[i];
        out << i << ',' << record.cluster_a << ',' << record.cluster_b << ','
            << csv::format_double(record.linkage) << ',' << record.merged_id << ',' << record.size
            << '\n';
    }
}

HacResult hac_average_linkage(const SimilarityGraph& graph, std::size_t k) {
    const std::size_t n = graph.node_count();
    if (k < 1 || k > n) {
        fail(Status::invalid_argument, "cluster count k must lie in [1, " + std::to_string(n) +
                                           "], got " + std::to_string(k));
    }

    // total similarity between live clusters; average = total / (|A| * |B|)
    std::vector<std::vector<double>> total(n, std::vector<double>(n, 0.0));
    for (const auto& edge : graph.edges()) {
        total[edge.a][edge.b] = edge.weight;
        total[edge.b][edge.a] = edge.weight;
    }

    std::vector<std::uint32_t> cluster_id(n);   // slot -> current cluster id
    std::vector<std::uint32_t> cluster_size(n, 1);
    std::vector<bool> alive(n, true);
    for (std::uint32_t i = 0; i < n; ++i) cluster_id[i] = i;

    std::vector<std::uint32_t> membership(n); // node -> slot
    for (std::uint32_t i = 0; i < n; ++i) membership[i] = i;

    HacResult result;
    result.dendrogram.leaf_count = n;
    std::uint32_t next_id = static_cast<std::uint32_t>(n);

    std::size_t live = n;
    while (live > k) {
        // best pair by average similarity; ties to the smallest id pair
        double best_average = -1.0;
        std::uint32_t best_i = UINT32_MAX, best_j = UINT32_MAX;
        std::pair<std::uint32_t, std::uint32_t> best_ids{0, 0};
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!alive[i]) continue;
            for (std::uint32_t j = i + 1; j < n; ++j) {
                if (!alive[j]) continue;
                double average = total[i][j] / (static_cast<double>(cluster_size[i]) *
                                                static_cast<double>(cluster_size[j]));
                std::pair<std::uint32_t, std::uint32_t> ids{
                    std::min(cluster_id[i], cluster_id[j]),
                    std::max(cluster_id[i], cluster_id[j])};
                if (best_i == UINT32_MAX || average > best_average ||
                    (average == best_average && ids < best_ids)) {
                    best_average = average;
                    best_i = i;
                    best_j = j;
                    best_ids = ids;
                }
            }
        }

        MergeRecord record;
        record.cluster_a = std::min(cluster_id[best_i], cluster_id[best_j]);
        record.cluster_b = std::max(cluster_id[best_i], cluster_id[best_j]);
        record.linkage = best_average;
        record.merged_id = next_id;
        record.size = cluster_size[best_i] + cluster_size[best_j];
        result.dendrogram.merges.push_back(record);

        // fold cluster j into slot i (Lance-Williams for average linkage is
        // just summing pairwise totals)
        for (std::uint32_t c = 0; c < n; ++c) {
            if (!alive[c] || c == best_i || c == best_j) continue;
            total[best_i][c] += total[best_j][c];
            total[c][best_i] = total[best_i][c];
        }
        cluster_size[best_i] += cluster_size[best_j];
        cluster_id[best_i] = next_id++;
        alive[best_j] = false;
        for (std::uint32_t v = 0; v < n; ++v) {
            if (membership[v] == best_j) membership[v] = best_i;
        }
        --live;
    }

    // flat labels: contiguous, ordered by smallest member node index
    std::vector<std::int64_t> slot_label(n, -1);
    std::uint32_t next_label = 0;
    std::vector<std::pair<std::string, std::string>> rows;
    rows.reserve(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        std::uint32_t slot = membership[v];
        if (slot_label[slot] < 0) slot_label[slot] = next_label++;
        rows.emplace_back(graph.node_id(v), std::to_string(slot_label[slot]));
    }
    result.partition = LabeledPartition(std::move(rows));
    return result;
}

} // namespace trajcluster
