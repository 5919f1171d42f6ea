/* trajcluster - clustering of network-constrained trajectories and road
 * segments via TF-IDF cosine similarity graphs and recursive,
 * significance-tested modularity optimization.
 *
 * C interface of the shared library. All functions returning tc_status
 * report TC_OK on success; on failure the out-parameters are untouched and
 * tc_last_error() describes the problem for the calling thread. Every
 * handle must be released with its matching *_free function.
 */
#ifndef TRAJCLUSTER_H
#define TRAJCLUSTER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define TC_API __declspec(dllexport)
#else
#define TC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tc_status {
    TC_OK = 0,
    TC_ERROR_IO = 1,
    TC_ERROR_PARSE = 2,
    TC_ERROR_VALIDATION = 3,
    TC_ERROR_INVALID_ARGUMENT = 4,
    TC_ERROR_DOMAIN = 5,
    TC_ERROR_NOT_FOUND = 6,
    TC_ERROR_INTERNAL = 7
} tc_status;

TC_API const char* tc_version(void);
/* Message of the last failure on the calling thread; empty if none. */
TC_API const char* tc_last_error(void);

typedef struct tc_network tc_network;
typedef struct tc_corpus tc_corpus;
typedef struct tc_graph tc_graph;
typedef struct tc_hierarchy tc_hierarchy;
typedef struct tc_partition tc_partition;
typedef struct tc_hac_result tc_hac_result;
typedef struct tc_genspec tc_genspec;

/* ---- road network ------------------------------------------------------ */

/* CSV format: header `segment_id,from_node,to_node,length_m`; `#` comments
 * allowed. */
TC_API tc_status tc_network_load_file(const char* path, tc_network** out);
TC_API tc_status tc_network_load_string(const char* text, tc_network** out);
TC_API tc_status tc_network_write_csv(const tc_network* network, const char* path);
TC_API size_t tc_network_node_count(const tc_network* network);
TC_API size_t tc_network_segment_count(const tc_network* network);
/* *out = 1 if the segments share an endpoint head-to-tail in either order. */
TC_API tc_status tc_network_segments_connected(const tc_network* network, const char* segment_a,
                                               const char* segment_b, int* out);
TC_API void tc_network_free(tc_network* network);

/* ---- trajectory corpus -------------------------------------------------- */

/* CSV format: header `trajectory_id,segment_ids`; the second column is a
 * `;`-separated ordered segment list. The network handle must stay valid
 * only for the duration of the call (the corpus keeps its own reference). */
TC_API tc_status tc_corpus_load_file(const tc_network* network, const char* path,
                                     tc_corpus** out);
TC_API tc_status tc_corpus_load_string(const tc_network* network, const char* text,
                                       tc_corpus** out);
TC_API tc_status tc_corpus_write_csv(const tc_corpus* corpus, const char* path);
TC_API size_t tc_corpus_trajectory_count(const tc_corpus* corpus);
TC_API tc_status tc_corpus_occurrences(const tc_corpus* corpus, const char* segment_id,
                                       const char* trajectory_id, size_t* out);
TC_API tc_status tc_corpus_ssf(const tc_corpus* corpus, const char* segment_id,
                               const char* trajectory_id, double* out);
TC_API tc_status tc_corpus_itf(const tc_corpus* corpus, const char* segment_id, double* out);
TC_API tc_status tc_corpus_trajectory_cosine(const tc_corpus* corpus, const char* trajectory_a,
                                             const char* trajectory_b, double* out);
TC_API tc_status tc_corpus_segment_cosine(const tc_corpus* corpus, const char* segment_a,
                                          const char* segment_b, double* out);
TC_API void tc_corpus_free(tc_corpus* corpus);

/* ---- similarity graphs -------------------------------------------------- */

typedef enum tc_segment_mode { TC_SEGMENT_LOOSE = 0, TC_SEGMENT_STRICT = 1 } tc_segment_mode;

/* threads: worker cap for pair evaluation; 0 = auto. */
TC_API tc_status tc_graph_build_trajectory(const tc_corpus* corpus, unsigned threads,
                                           tc_graph** out);
TC_API tc_status tc_graph_build_segment(const tc_corpus* corpus, tc_segment_mode mode,
                                        unsigned threads, tc_graph** out);
TC_API size_t tc_graph_node_count(const tc_graph* graph);
TC_API size_t tc_graph_edge_count(const tc_graph* graph);
/* Edge list CSV `node_a,node_b,weight`, rows sorted. */
TC_API tc_status tc_graph_write_edge_csv(const tc_graph* graph, const char* path);
/* Graphviz DOT rendering of the same graph. */
TC_API tc_status tc_graph_write_dot(const tc_graph* graph, const char* path);
TC_API void tc_graph_free(tc_graph* graph);

/* ---- hierarchical community detection ------------------------------------ */

typedef struct tc_cluster_options {
    uint32_t null_samples;         /* randomized graphs per significance test */
    double significance_quantile;  /* observed Q must beat this null quantile */
    uint64_t seed;
    unsigned threads;              /* 0 = auto */
} tc_cluster_options;

/* Defaults: 30 samples, 0.95 quantile, seed 42, single-threaded. */
TC_API void tc_cluster_options_init(tc_cluster_options* options);

TC_API tc_status tc_hierarchy_build(const tc_graph* graph, const tc_cluster_options* options,
                                    tc_hierarchy** out);
TC_API size_t tc_hierarchy_node_count(const tc_hierarchy* hierarchy);
TC_API size_t tc_hierarchy_max_depth(const tc_hierarchy* hierarchy);
TC_API tc_status tc_hierarchy_write_json(const tc_hierarchy* hierarchy, const char* path);
/* Flat cut at a depth as a partition handle (labels "0".."K-1"). */
TC_API tc_status tc_hierarchy_cut(const tc_hierarchy* hierarchy, uint32_t depth,
                                  tc_partition** out);
TC_API void tc_hierarchy_free(tc_hierarchy* hierarchy);

/* ---- partitions and evaluation ------------------------------------------- */

/* Accepts any two-column headered CSV (entity id, cluster label). */
TC_API tc_status tc_partition_read_csv(const char* path, tc_partition** out);
/* NULL headers default to `entity_id,cluster_label`. */
TC_API tc_status tc_partition_write_csv(const tc_partition* partition, const char* path,
                                        const char* id_header, const char* label_header);
TC_API size_t tc_partition_entity_count(const tc_partition* partition);
TC_API size_t tc_partition_cluster_count(const tc_partition* partition);
/* Fills up to capacity cluster sizes (deterministic label order); *written
 * reports how many were stored. */
TC_API tc_status tc_partition_cluster_sizes(const tc_partition* partition, size_t* sizes,
                                            size_t capacity, size_t* written);
TC_API tc_status tc_partition_adjusted_rand_index(const tc_partition* a, const tc_partition* b,
                                                  double* out);
TC_API void tc_partition_free(tc_partition* partition);

/* ---- HAC baseline --------------------------------------------------------- */

TC_API tc_status tc_hac_average_linkage(const tc_graph* graph, size_t k, tc_hac_result** out);
TC_API tc_status tc_hac_write_dendrogram_csv(const tc_hac_result* result, const char* path);
TC_API tc_status tc_hac_partition(const tc_hac_result* result, tc_partition** out);
TC_API void tc_hac_result_free(tc_hac_result* result);

/* ---- synthetic data generation -------------------------------------------- */

TC_API tc_status tc_genspec_create(uint32_t grid_width, uint32_t grid_height,
                                   double segment_length_m, double length_jitter, uint64_t seed,
                                   tc_genspec** out);
TC_API tc_status tc_genspec_add_group(tc_genspec* spec, const char* origin_node,
                                      const char* destination_node, uint32_t trajectory_count,
                                      double detour_probability);
/* CSV format: header `origin,destination,count,detour_prob`. */
TC_API tc_status tc_genspec_load_groups_csv(tc_genspec* spec, const char* path);
TC_API tc_status tc_generate_network(const tc_genspec* spec, tc_network** out);
/* Generates the corpus on the given network and returns the planted
 * ground-truth labels as a partition handle. */
TC_API tc_status tc_generate_corpus(const tc_genspec* spec, const tc_network* network,
                                    tc_corpus** corpus_out, tc_partition** truth_out);
/* Writes network.csv, trajectories.csv and truth.csv into the directory. */
TC_API tc_status tc_dataset_export(const tc_corpus* corpus, const tc_partition* truth,
                                   const char* directory);
TC_API void tc_genspec_free(tc_genspec* spec);

#ifdef __cplusplus
}
#endif

#endif /* TRAJCLUSTER_H */
