#include "vectorizer.hpp"

#include <algorithm>
#include <cmath>

#include "error.hpp"
#include "parallel.hpp"

namespace trajcluster {

namespace {

double finish_norm(WeightVector& vector) {
    double sum_squares = 0.0;
    for (const auto& [feature, weight] : vector.entries) {
        (void)feature;
        sum_squares += weight * weight;
    }
    vector.norm = std::sqrt(sum_squares);
    return vector.norm;
}

} // namespace

double ssf_at(const Corpus& corpus, std::uint32_t segment_index, std::uint32_t trajectory_index) {
    std::uint32_t count = corpus.occurrences_at(segment_index, trajectory_index);
    if (count == 0) return 0.0;
    double length = corpus.network().segment(segment_index).length_m;
    return static_cast<double>(count) * length / corpus.length_weighted_total(trajectory_index);
}

double ssf(const Corpus& corpus, const std::string& segment_id, const std::string& trajectory_id) {
    std::uint32_t t = corpus.trajectory_index(trajectory_id);
    if (!corpus.network().has_segment(segment_id)) return 0.0;
    return ssf_at(corpus, corpus.network().segment_index(segment_id), t);
}

double itf_at(const Corpus& corpus, std::uint32_t segment_index) {
    std::uint32_t df = corpus.document_frequency(segment_index);
    if (df == 0) {
        fail(Status::domain_error, "itf undefined: segment `" +
                                       corpus.network().segment(segment_index).id +
                                       "` is never traveled");
    }
    return std::log(static_cast<double>(corpus.size()) / static_cast<double>(df));
}

double itf(const Corpus& corpus, const std::string& segment_id) {
    return itf_at(corpus, corpus.network().segment_index(segment_id));
}

WeightVector trajectory_vector_at(const Corpus& corpus, std::uint32_t trajectory_index) {
    WeightVector vector;
    vector.owner = corpus.trajectory(trajectory_index).id;
    const auto& counts = corpus.trajectory_counts(trajectory_index);
    vector.entries.reserve(counts.size());
    const double denominator = corpus.length_weighted_total(trajectory_index);
    for (const auto& [segment, count] : counts) {
        double frequency =
            static_cast<double>(count) * corpus.network().segment(segment).length_m / denominator;
        vector.entries.emplace_back(segment, frequency * itf_at(corpus, segment));
    }
    finish_norm(vector);
    return vector;
}

WeightVector trajectory_vector(const Corpus& corpus, const std::string& trajectory_id) {
    return trajectory_vector_at(corpus, corpus.trajectory_index(trajectory_id));
}

double segment_weight_at(const Corpus& corpus, std::uint32_t trajectory_index,
                         std::uint32_t segment_index) {
    std::uint64_t total = corpus.occurrence_total(segment_index);
    if (total == 0) {
        fail(Status::domain_error, "segment weight undefined: segment `" +
                                       corpus.network().segment(segment_index).id +
                                       "` is never traveled");
    }
    std::uint32_t count = corpus.occurrences_at(segment_index, trajectory_index);
    if (count == 0) return 0.0;
    double importance = std::log(static_cast<double>(corpus.network().segment_count()) /
                                 static_cast<double>(corpus.distinct_segment_count(trajectory_index)));
    return static_cast<double>(count) / static_cast<double>(total) * importance;
}

double segment_weight(const Corpus& corpus, const std::string& trajectory_id,
                      const std::string& segment_id) {
    std::uint32_t t = corpus.trajectory_index(trajectory_id);
    return segment_weight_at(corpus, t, corpus.network().segment_index(segment_id));
}

WeightVector segment_vector_at(const Corpus& corpus, std::uint32_t segment_index) {
    const auto& postings = corpus.postings(segment_index);
    if (postings.empty()) {
        fail(Status::domain_error, "segment vector undefined: segment `" +
                                       corpus.network().segment(segment_index).id +
                                       "` is never traveled");
    }
    WeightVector vector;
    vector.owner = corpus.network().segment(segment_index).id;
    vector.entries.reserve(postings.size());
    for (const Posting& posting : postings) {
        vector.entries.emplace_back(posting.trajectory,
                                    segment_weight_at(corpus, posting.trajectory, segment_index));
    }
    finish_norm(vector);
    return vector;
}

WeightVector segment_vector(const Corpus& corpus, const std::string& segment_id) {
    return segment_vector_at(corpus, corpus.network().segment_index(segment_id));
}

double cosine(const WeightVector& u, const WeightVector& v) {
    if (u.norm == 0.0 || v.norm == 0.0) return 0.0;
    double dot = 0.0;
    auto it = u.entries.begin();
    auto jt = v.entries.begin();
    while (it != u.entries.end() && jt != v.entries.end()) {
        if (it->first < jt->first) {
            ++it;
        } else if (jt->first < it->first) {
            ++jt;
        } else {
            dot += it->second * jt->second;
            ++it;
            ++jt;
        }
    }
    return std::min(dot / (u.norm * v.norm), 1.0);
}

std::vector<WeightVector> all_trajectory_vectors(const Corpus& corpus, unsigned threads) {
    std::vector<WeightVector> vectors(corpus.size());
    parallel_for(corpus.size(), threads, [&](std::size_t i) {
        vectors[i] = trajectory_vector_at(corpus, static_cast<std::uint32_t>(i));
    });
    return vectors;
}

std::vector<WeightVector> all_segment_vectors(const Corpus& corpus, unsigned threads) {
    const auto& traveled = corpus.traveled_segments();
    std::vector<WeightVector> vectors(traveled.size());
    parallel_for(traveled.size(), threads, [&](std::size_t i) {
        vectors[i] = segment_vector_at(corpus, traveled[i]);
    });
    return vectors;
}

} // namespace trajcluster
