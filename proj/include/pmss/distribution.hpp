#ifndef PMSS_DISTRIBUTION_HPP
#define PMSS_DISTRIBUTION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmss/core.hpp"

namespace pmss {

// Content deviation from uniform above which a sequence counts as biased
// toward a symbol.
inline constexpr double kBiasThreshold = 0.05;

struct FeatureVector {
    std::vector<double> values;
    int window = 0;
};

// Sliding-window motif features: one content block of q values per window
// position, (len - w + 1) blocks in total.  Throws ShortSequenceError when
// the sequence is shorter than the window.
FeatureVector extract_features(const Sequence& seq, const Alphabet& alphabet, int w);

// Features for a whole pool with a fixed common dimension.  When all
// sequences have equal length >= w this is extract_features for each.
// Mixed lengths are padded to (P+1) blocks of q, with P the smallest motif
// count among sequences of length >= w: long sequences contribute their
// first P motif blocks plus a whole-sequence content block, short ones
// repeat their whole-sequence content in every block.
std::vector<FeatureVector> batch_features(std::span<const Sequence> seqs,
                                          const Alphabet& alphabet, int w);

struct ClusteringOutcome {
    std::vector<int> assignment;
    double log_likelihood = 0.0;
    double per_point_log_likelihood = 0.0;
    int iterations = 0;
    bool degenerate_fallback = false;
};

// Gaussian mixture with diagonal covariances fitted by EM.  Deterministic
// given the seed: means start from a farthest-point sweep, iteration stops
// when the total log-likelihood moves by less than 1e-6 or after 100
// rounds, and variances are floored at 1e-8.  A pool with no variance at
// all skips EM and falls back to round-robin assignment.
ClusteringOutcome em_cluster(const std::vector<FeatureVector>& features,
                             std::size_t num_clusters, std::uint64_t seed);

// Rebalance cluster assignment to respect capacity N.  Over-full clusters
// evict the members whose removal shrinks the cluster's majority-merge step
// count the most; under-full clusters then pull from that pool the
// candidates whose insertion grows their step count the least.  Each batch
// is scored against the cluster state at the start of the phase, so every
// sequence moves at most once.
Partition balance_clusters(const ClusteringOutcome& clustering,
                           std::span<const Sequence> seqs, const Alphabet& alphabet,
                           std::size_t num_sets, std::size_t capacity);

// Content-guided distribution.  Sets are seeded round-robin from per-symbol
// candidate lists (set i draws sequences over-represented in symbol
// i mod q, most biased first); everything left joins the set with the
// nearest pooled content by L1 distance.  With bias_symbols, candidate
// lists key on the combined content of that symbol group and its
// complement instead of single symbols.
Partition distribute_by_content(std::span<const Sequence> seqs, const Alphabet& alphabet,
                                std::size_t num_sets, std::size_t capacity,
                                const std::optional<std::string>& bias_symbols = std::nullopt);

Partition dda_distribute(std::span<const Sequence> seqs, const Alphabet& alphabet,
                         std::size_t num_sets, std::size_t capacity,
                         const std::optional<std::string>& bias_symbols = std::nullopt);

// Feature extraction + EM clustering + capacity balancing.  w <= 0 selects
// the default window, the alphabet size.
Partition dda_star_distribute(std::span<const Sequence> seqs, const Alphabet& alphabet,
                              std::size_t num_sets, std::size_t capacity,
                              int w, std::uint64_t seed);

} // namespace pmss

#endif
