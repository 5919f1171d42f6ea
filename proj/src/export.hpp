#ifndef TRAJCLUSTER_EXPORT_HPP
#define TRAJCLUSTER_EXPORT_HPP

#include <cstddef>
#include <ostream>

#include "community.hpp"

namespace trajcluster {

struct HierarchyExportInfo {
    std::size_t graph_nodes = 0;
    std::size_t graph_edges = 0;
    double graph_total_weight = 0.0;
    NullModelConfig config;
};

/// Structured hierarchy document: one record per node with members, observed
/// modularity, null-model statistics and the significance verdict.
void write_hierarchy_json(const ClusterHierarchy& hierarchy, const HierarchyExportInfo& info,
                          std::ostream& out);

/// Flat `entity_id,cluster_label` cut at the requested depth.
void write_cut_csv(const ClusterHierarchy& hierarchy, std::uint32_t depth, std::ostream& out);

} // namespace trajcluster

#endif
