#ifndef TRAJCLUSTER_VECTORIZER_HPP
#define TRAJCLUSTER_VECTORIZER_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "trajectory_corpus.hpp"

namespace trajcluster {

/// Sparse nonnegative feature vector. For trajectories the features are
/// segment indices; for segments they are trajectory indices. Entries are
/// sorted by feature and may include explicit zeros (ubiquitous segments).
struct WeightVector {
    std::string owner;
    std::vector<std::pair<std::uint32_t, double>> entries;
    double norm = 0.0;
};

/// Spatial segment frequency: n_{e,T} * length(e) / sum over T of the same.
/// Returns 0 when the segment is absent from the trajectory.
double ssf(const Corpus& corpus, const std::string& segment_id, const std::string& trajectory_id);
double ssf_at(const Corpus& corpus, std::uint32_t segment_index, std::uint32_t trajectory_index);

/// Inverse trajectory frequency: ln(|corpus| / df(e)). Natural log is the
/// normative base for this artifact. Fails for segments no trajectory uses.
double itf(const Corpus& corpus, const std::string& segment_id);
double itf_at(const Corpus& corpus, std::uint32_t segment_index);

/// Per-trajectory weight vector over segments: ssf * itf for each distinct
/// segment of the trajectory.
WeightVector trajectory_vector(const Corpus& corpus, const std::string& trajectory_id);
WeightVector trajectory_vector_at(const Corpus& corpus, std::uint32_t trajectory_index);

/// Trajectory-to-segment weight: (n_{e,T} / total occurrences of e) *
/// ln(|E| / distinct segments of T). Fails for untraveled segments.
double segment_weight(const Corpus& corpus, const std::string& trajectory_id,
                      const std::string& segment_id);
double segment_weight_at(const Corpus& corpus, std::uint32_t trajectory_index,
                         std::uint32_t segment_index);

/// Per-segment weight vector over the trajectories that travel it.
WeightVector segment_vector(const Corpus& corpus, const std::string& segment_id);
WeightVector segment_vector_at(const Corpus& corpus, std::uint32_t segment_index);

/// Cosine similarity in [0, 1]; 0 when either vector has zero norm.
double cosine(const WeightVector& u, const WeightVector& v);

/// Pre-populated vector caches used by the graph builders; entry i of the
/// segment variant corresponds to corpus.traveled_segments()[i].
std::vector<WeightVector> all_trajectory_vectors(const Corpus& corpus, unsigned threads = 1);
std::vector<WeightVector> all_segment_vectors(const Corpus& corpus, unsigned threads = 1);

} // namespace trajcluster

#endif
