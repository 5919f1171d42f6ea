#include "export.hpp"

#include <json.hpp>

#include "csv.hpp"
#include "version.hpp"

namespace trajcluster {

namespace {

/// All exported numerics are capped at 12 significant digits.
nlohmann::json json_number(double value) {
    return nlohmann::json(std::strtod(csv::format_double(value).c_str(), nullptr));
}

} // namespace

void write_hierarchy_json(const ClusterHierarchy& hierarchy, const HierarchyExportInfo& info,
                          std::ostream& out) {
    nlohmann::json doc;
    doc["artifact"] = "trajcluster";
    doc["version"] = kVersion;
    doc["itf_log_base"] = "e";
    doc["config"] = {
        {"null_samples", info.config.samples},
        {"significance_quantile", json_number(info.config.quantile)},
        {"seed", info.config.seed},
    };
    doc["graph"] = {
        {"nodes", info.graph_nodes},
        {"edges", info.graph_edges},
        {"total_weight", json_number(info.graph_total_weight)},
    };
    doc["max_depth"] = hierarchy.max_depth();

    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& node : hierarchy.nodes()) {
        nlohmann::json record;
        record["id"] = node.id;
        record["depth"] = node.depth;
        record["verdict"] = to_string(node.verdict);
        record["member_count"] = node.members.size();
        record["members"] = node.members;
        record["observed_q"] =
            node.observed_q ? json_number(*node.observed_q) : nlohmann::json(nullptr);
        if (node.significance && node.significance->samples > 0) {
            const SignificanceResult& sig = *node.significance;
            record["null"] = {
                {"samples", sig.samples},
                {"mean", json_number(sig.null_mean)},
                {"stddev", json_number(sig.null_stddev)},
                {"threshold", json_number(sig.threshold)},
            };
        } else {
            record["null"] = nullptr;
        }
        nlohmann::json children = nlohmann::json::array();
        for (std::size_t child : node.children) {
            children.push_back(hierarchy.nodes()[child].id);
        }
        record["children"] = std::move(children);
        nodes.push_back(std::move(record));
    }
    doc["nodes"] = std::move(nodes);
    out << doc.dump(2) << '\n';
}

void write_cut_csv(const ClusterHierarchy& hierarchy, std::uint32_t depth, std::ostream& out) {
    out << "entity_id,cluster_label\n";
    for (const auto& [entity, label] : hierarchy.cut_at_depth(depth)) {
        out << entity << ',' << label << '\n';
    }
}

} // namespace trajcluster
