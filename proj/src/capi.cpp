#include "trajcluster.h"

#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "community.hpp"
#include "datagen.hpp"
#include "error.hpp"
#include "evaluation.hpp"
#include "export.hpp"
#include "hac.hpp"
#include "road_network.hpp"
#include "similarity_graph.hpp"
#include "trajectory_corpus.hpp"
#include "vectorizer.hpp"
#include "version.hpp"

struct tc_network {
    std::shared_ptr<const trajcluster::RoadNetwork> impl;
};
struct tc_corpus {
    std::shared_ptr<const trajcluster::Corpus> impl;
};
struct tc_graph {
    trajcluster::SimilarityGraph impl;
};
struct tc_hierarchy {
    trajcluster::ClusterHierarchy impl;
    trajcluster::HierarchyExportInfo info;
};
struct tc_partition {
    trajcluster::LabeledPartition impl;
};
struct tc_hac_result {
    trajcluster::HacResult impl;
};
struct tc_genspec {
    trajcluster::GenerationSpec impl;
};

namespace {

thread_local std::string g_last_error;

tc_status map_status(trajcluster::Status status) {
    using trajcluster::Status;
    switch (status) {
        case Status::ok: return TC_OK;
        case Status::io_error: return TC_ERROR_IO;
        case Status::parse_error: return TC_ERROR_PARSE;
        case Status::validation_error: return TC_ERROR_VALIDATION;
        case Status::invalid_argument: return TC_ERROR_INVALID_ARGUMENT;
        case Status::domain_error: return TC_ERROR_DOMAIN;
        case Status::not_found: return TC_ERROR_NOT_FOUND;
        case Status::internal_error: return TC_ERROR_INTERNAL;
    }
    return TC_ERROR_INTERNAL;
}

template <typename Fn>
tc_status guarded(Fn&& fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return TC_OK;
    } catch (const trajcluster::Error& error) {
        g_last_error = error.what();
        return map_status(error.status());
    } catch (const std::exception& error) {
        g_last_error = error.what();
        return TC_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return TC_ERROR_INTERNAL;
    }
}

void require(bool condition, const char* message) {
    if (!condition) trajcluster::fail(trajcluster::Status::invalid_argument, message);
}

std::ifstream open_input(const char* path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) trajcluster::fail(trajcluster::Status::io_error,
                               std::string("cannot open `") + path + "`");
    return in;
}

std::ofstream open_output(const char* path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) trajcluster::fail(trajcluster::Status::io_error,
                                std::string("cannot write `") + path + "`");
    return out;
}

} // namespace

extern "C" {

const char* tc_version(void) { return trajcluster::kVersion; }

const char* tc_last_error(void) { return g_last_error.c_str(); }

/* ---- road network ------------------------------------------------------ */

tc_status tc_network_load_file(const char* path, tc_network** out) {
    return guarded([&] {
        require(path && out, "null argument");
        auto in = open_input(path);
        auto network = std::make_shared<trajcluster::RoadNetwork>(trajcluster::load_network(in));
        *out = new tc_network{std::move(network)};
    });
}

tc_status tc_network_load_string(const char* text, tc_network** out) {
    return guarded([&] {
        require(text && out, "null argument");
        std::istringstream in{std::string(text)};
        auto network = std::make_shared<trajcluster::RoadNetwork>(trajcluster::load_network(in));
        *out = new tc_network{std::move(network)};
    });
}

tc_status tc_network_write_csv(const tc_network* network, const char* path) {
    return guarded([&] {
        require(network && path, "null argument");
        auto out = open_output(path);
        network->impl->write_csv(out);
    });
}

size_t tc_network_node_count(const tc_network* network) {
    return network ? network->impl->node_count() : 0;
}

size_t tc_network_segment_count(const tc_network* network) {
    return network ? network->impl->segment_count() : 0;
}

tc_status tc_network_segments_connected(const tc_network* network, const char* segment_a,
                                        const char* segment_b, int* out) {
    return guarded([&] {
        require(network && segment_a && segment_b && out, "null argument");
        const auto& net = *network->impl;
        const auto& a = net.segment(net.segment_index(segment_a));
        const auto& b = net.segment(net.segment_index(segment_b));
        *out = trajcluster::are_connected(a, b) ? 1 : 0;
    });
}

void tc_network_free(tc_network* network) { delete network; }

/* ---- trajectory corpus -------------------------------------------------- */

tc_status tc_corpus_load_file(const tc_network* network, const char* path, tc_corpus** out) {
    return guarded([&] {
        require(network && path && out, "null argument");
        auto in = open_input(path);
        auto corpus = std::make_shared<trajcluster::Corpus>(
            trajcluster::load_trajectories(in, network->impl));
        *out = new tc_corpus{std::move(corpus)};
    });
}

tc_status tc_corpus_load_string(const tc_network* network, const char* text, tc_corpus** out) {
    return guarded([&] {
        require(network && text && out, "null argument");
        std::istringstream in{std::string(text)};
        auto corpus = std::make_shared<trajcluster::Corpus>(
            trajcluster::load_trajectories(in, network->impl));
        *out = new tc_corpus{std::move(corpus)};
    });
}

tc_status tc_corpus_write_csv(const tc_corpus* corpus, const char* path) {
    return guarded([&] {
        require(corpus && path, "null argument");
        auto out = open_output(path);
        corpus->impl->write_csv(out);
    });
}

size_t tc_corpus_trajectory_count(const tc_corpus* corpus) {
    return corpus ? corpus->impl->size() : 0;
}

tc_status tc_corpus_occurrences(const tc_corpus* corpus, const char* segment_id,
                                const char* trajectory_id, size_t* out) {
    return guarded([&] {
        require(corpus && segment_id && trajectory_id && out, "null argument");
        *out = corpus->impl->occurrences(segment_id, trajectory_id);
    });
}

tc_status tc_corpus_ssf(const tc_corpus* corpus, const char* segment_id,
                        const char* trajectory_id, double* out) {
    return guarded([&] {
        require(corpus && segment_id && trajectory_id && out, "null argument");
        *out = trajcluster::ssf(*corpus->impl, segment_id, trajectory_id);
    });
}

tc_status tc_corpus_itf(const tc_corpus* corpus, const char* segment_id, double* out) {
    return guarded([&] {
        require(corpus && segment_id && out, "null argument");
        *out = trajcluster::itf(*corpus->impl, segment_id);
    });
}

tc_status tc_corpus_trajectory_cosine(const tc_corpus* corpus, const char* trajectory_a,
                                      const char* trajectory_b, double* out) {
    return guarded([&] {
        require(corpus && trajectory_a && trajectory_b && out, "null argument");
        *out = trajcluster::cosine(trajcluster::trajectory_vector(*corpus->impl, trajectory_a),
                                   trajcluster::trajectory_vector(*corpus->impl, trajectory_b));
    });
}

tc_status tc_corpus_segment_cosine(const tc_corpus* corpus, const char* segment_a,
                                   const char* segment_b, double* out) {
    return guarded([&] {
        require(corpus && segment_a && segment_b && out, "null argument");
        *out = trajcluster::cosine(trajcluster::segment_vector(*corpus->impl, segment_a),
                                   trajcluster::segment_vector(*corpus->impl, segment_b));
    });
}

void tc_corpus_free(tc_corpus* corpus) { delete corpus; }

/* ---- similarity graphs -------------------------------------------------- */

tc_status tc_graph_build_trajectory(const tc_corpus* corpus, unsigned threads, tc_graph** out) {
    return guarded([&] {
        require(corpus && out, "null argument");
        *out = new tc_graph{
            trajcluster::build_trajectory_graph(*corpus->impl, threads)};
    });
}

tc_status tc_graph_build_segment(const tc_corpus* corpus, tc_segment_mode mode, unsigned threads,
                                 tc_graph** out) {
    return guarded([&] {
        require(corpus && out, "null argument");
        require(mode == TC_SEGMENT_LOOSE || mode == TC_SEGMENT_STRICT, "invalid segment mode");
        auto cpp_mode = mode == TC_SEGMENT_LOOSE ? trajcluster::SegmentGraphMode::loose
                                                 : trajcluster::SegmentGraphMode::strict;
        *out = new tc_graph{trajcluster::build_segment_graph(*corpus->impl, cpp_mode,
                                                             threads)};
    });
}

size_t tc_graph_node_count(const tc_graph* graph) {
    return graph ? graph->impl.node_count() : 0;
}

size_t tc_graph_edge_count(const tc_graph* graph) {
    return graph ? graph->impl.edge_count() : 0;
}

tc_status tc_graph_write_edge_csv(const tc_graph* graph, const char* path) {
    return guarded([&] {
        require(graph && path, "null argument");
        auto out = open_output(path);
        graph->impl.write_edge_csv(out);
    });
}

tc_status tc_graph_write_dot(const tc_graph* graph, const char* path) {
    return guarded([&] {
        require(graph && path, "null argument");
        auto out = open_output(path);
        graph->impl.write_dot(out);
    });
}

void tc_graph_free(tc_graph* graph) { delete graph; }

/* ---- hierarchical community detection ------------------------------------ */

void tc_cluster_options_init(tc_cluster_options* options) {
    if (!options) return;
    options->null_samples = 30;
    options->significance_quantile = 0.95;
    options->seed = 42;
    options->threads = 1;
}

tc_status tc_hierarchy_build(const tc_graph* graph, const tc_cluster_options* options,
                             tc_hierarchy** out) {
    return guarded([&] {
        require(graph && out, "null argument");
        tc_cluster_options defaults;
        tc_cluster_options_init(&defaults);
        const tc_cluster_options& opts = options ? *options : defaults;
        trajcluster::NullModelConfig config;
        config.samples = opts.null_samples;
        config.quantile = opts.significance_quantile;
        config.seed = opts.seed;
        config.threads = opts.threads;

        trajcluster::HierarchyExportInfo info;
        info.graph_nodes = graph->impl.node_count();
        info.graph_edges = graph->impl.edge_count();
        info.graph_total_weight = graph->impl.total_weight();
        info.config = config;
        *out = new tc_hierarchy{trajcluster::hierarchical_cluster(graph->impl, config), info};
    });
}

size_t tc_hierarchy_node_count(const tc_hierarchy* hierarchy) {
    return hierarchy ? hierarchy->impl.nodes().size() : 0;
}

size_t tc_hierarchy_max_depth(const tc_hierarchy* hierarchy) {
    return hierarchy ? hierarchy->impl.max_depth() : 0;
}

tc_status tc_hierarchy_write_json(const tc_hierarchy* hierarchy, const char* path) {
    return guarded([&] {
        require(hierarchy && path, "null argument");
        auto out = open_output(path);
        trajcluster::write_hierarchy_json(hierarchy->impl, hierarchy->info, out);
    });
}

tc_status tc_hierarchy_cut(const tc_hierarchy* hierarchy, uint32_t depth, tc_partition** out) {
    return guarded([&] {
        require(hierarchy && out, "null argument");
        std::vector<std::pair<std::string, std::string>> rows;
        for (const auto& [entity, label] : hierarchy->impl.cut_at_depth(depth)) {
            rows.emplace_back(entity, std::to_string(label));
        }
        *out = new tc_partition{trajcluster::LabeledPartition(std::move(rows))};
    });
}

void tc_hierarchy_free(tc_hierarchy* hierarchy) { delete hierarchy; }

/* ---- partitions and evaluation ------------------------------------------- */

tc_status tc_partition_read_csv(const char* path, tc_partition** out) {
    return guarded([&] {
        require(path && out, "null argument");
        auto in = open_input(path);
        *out = new tc_partition{trajcluster::LabeledPartition::read_csv(in)};
    });
}

tc_status tc_partition_write_csv(const tc_partition* partition, const char* path,
                                 const char* id_header, const char* label_header) {
    return guarded([&] {
        require(partition && path, "null argument");
        auto out = open_output(path);
        partition->impl.write_csv(out, id_header ? id_header : "entity_id",
                                  label_header ? label_header : "cluster_label");
    });
}

size_t tc_partition_entity_count(const tc_partition* partition) {
    return partition ? partition->impl.entity_count() : 0;
}

size_t tc_partition_cluster_count(const tc_partition* partition) {
    return partition ? partition->impl.cluster_count() : 0;
}

tc_status tc_partition_cluster_sizes(const tc_partition* partition, size_t* sizes,
                                     size_t capacity, size_t* written) {
    return guarded([&] {
        require(partition && sizes && written, "null argument");
        size_t index = 0;
        for (const auto& [label, size] : partition->impl.cluster_sizes()) {
            (void)label;
            if (index >= capacity) break;
            sizes[index++] = size;
        }
        *written = index;
    });
}

tc_status tc_partition_adjusted_rand_index(const tc_partition* a, const tc_partition* b,
                                           double* out) {
    return guarded([&] {
        require(a && b && out, "null argument");
        *out = trajcluster::adjusted_rand_index(a->impl, b->impl);
    });
}

void tc_partition_free(tc_partition* partition) { delete partition; }

/* ---- HAC baseline --------------------------------------------------------- */

tc_status tc_hac_average_linkage(const tc_graph* graph, size_t k, tc_hac_result** out) {
    return guarded([&] {
        require(graph && out, "null argument");
        *out = new tc_hac_result{trajcluster::hac_average_linkage(graph->impl, k)};
    });
}

tc_status tc_hac_write_dendrogram_csv(const tc_hac_result* result, const char* path) {
    return guarded([&] {
        require(result && path, "null argument");
        auto out = open_output(path);
        result->impl.dendrogram.write_csv(out);
    });
}

tc_status tc_hac_partition(const tc_hac_result* result, tc_partition** out) {
    return guarded([&] {
        require(result && out, "null argument");
        *out = new tc_partition{result->impl.partition};
    });
}

void tc_hac_result_free(tc_hac_result* result) { delete result; }

/* ---- synthetic data generation -------------------------------------------- */

tc_status tc_genspec_create(uint32_t grid_width, uint32_t grid_height, double segment_length_m,
                            double length_jitter, uint64_t seed, tc_genspec** out) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        trajcluster::GenerationSpec spec;
        spec.grid_width = grid_width;
        spec.grid_height = grid_height;
        spec.segment_length_m = segment_length_m;
        spec.length_jitter = length_jitter;
        spec.seed = seed;
        trajcluster::validate(spec);
        *out = new tc_genspec{std::move(spec)};
    });
}

tc_status tc_genspec_add_group(tc_genspec* spec, const char* origin_node,
                               const char* destination_node, uint32_t trajectory_count,
                               double detour_probability) {
    return guarded([&] {
        require(spec && origin_node && destination_node, "null argument");
        trajcluster::GroupSpec group;
        group.origin = origin_node;
        group.destination = destination_node;
        group.trajectory_count = trajectory_count;
        group.detour_probability = detour_probability;
        spec->impl.groups.push_back(std::move(group));
        trajcluster::validate(spec->impl);
    });
}

tc_status tc_genspec_load_groups_csv(tc_genspec* spec, const char* path) {
    return guarded([&] {
        require(spec && path, "null argument");
        auto in = open_input(path);
        auto groups = trajcluster::load_groups_csv(in);
        for (auto& group : groups) spec->impl.groups.push_back(std::move(group));
        trajcluster::validate(spec->impl);
    });
}

tc_status tc_generate_network(const tc_genspec* spec, tc_network** out) {
    return guarded([&] {
        require(spec && out, "null argument");
        auto network = std::make_shared<trajcluster::RoadNetwork>(
            trajcluster::generate_network(spec->impl));
        *out = new tc_network{std::move(network)};
    });
}

tc_status tc_generate_corpus(const tc_genspec* spec, const tc_network* network,
                             tc_corpus** corpus_out, tc_partition** truth_out) {
    return guarded([&] {
        require(spec && network && corpus_out && truth_out, "null argument");
        auto generated = trajcluster::generate_corpus(spec->impl, network->impl);
        auto corpus = std::make_shared<trajcluster::Corpus>(std::move(generated.corpus));
        std::unique_ptr<tc_corpus> corpus_handle(new tc_corpus{std::move(corpus)});
        std::unique_ptr<tc_partition> truth_handle(
            new tc_partition{std::move(generated.truth)});
        *corpus_out = corpus_handle.release();
        *truth_out = truth_handle.release();
    });
}

tc_status tc_dataset_export(const tc_corpus* corpus, const tc_partition* truth,
                            const char* directory) {
    return guarded([&] {
        require(corpus && truth && directory, "null argument");
        trajcluster::export_dataset(*corpus->impl, truth->impl, directory);
    });
}

void tc_genspec_free(tc_genspec* spec) { delete spec; }

} // extern "C"
