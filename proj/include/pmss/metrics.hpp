#ifndef PMSS_METRICS_HPP
#define PMSS_METRICS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pmss/core.hpp"
#include "pmss/deposition.hpp"
#include "pmss/exact.hpp"

namespace pmss {

// Σ steps · set size: every sequence of a set waits for the set's full
// process sequence.
std::uint64_t cost_mm(std::span<const DepositionResult> results);

// Σ completion steps over all sequences of all sets.
std::uint64_t cost_sc(std::span<const DepositionResult> results);

// cost / (q·K·M·N): fraction of the trivial full-deposition budget.
double performance_ratio(double cost, std::size_t q, std::size_t K, std::size_t M,
                         std::size_t N);

enum class Algo {
    Alphabet,
    ShSingle,
    LapSingle,
    GreedyA,
    GreedyD,
    DdaSh,
    DdaLap,
    DdaStarSh,
    DdaStarLap,
    ExactMm,
    ExactSc,
};

std::string algo_name(Algo a);
std::optional<Algo> algo_from_name(std::string_view name);
std::vector<Algo> default_algos();

struct CompareConfig {
    std::size_t num_sets = 1;
    std::size_t capacity = 1;
    LookAheadParams lookahead;
    int window = 0; // <= 0: alphabet size
    std::optional<std::string> bias_symbols;
    std::uint64_t seed = 0;
    std::uint64_t state_budget = kDefaultStateBudget;
    std::uint64_t partition_budget = kDefaultPartitionBudget;
    unsigned threads = 1;
    bool with_lower_bound = true;
};

struct CostReport {
    std::string algorithm;
    std::uint64_t cost_mm = 0;
    std::uint64_t cost_sc = 0;
    double ratio_mm = 0.0;
    double ratio_sc = 0.0;
    std::vector<std::size_t> per_set_steps;
    std::uint64_t lower_bound = 0;
    double wall_ms = 0.0;
    Partition partition;
    std::vector<DepositionResult> per_set;
};

// One report per algorithm on the same dataset and seed.  Single-set rows
// (alphabet-free deposition baselines) use M=1, N=|dataset| so every row
// shares the q·K·M·N denominator.
std::vector<CostReport> compare(const std::vector<Algo>& algorithms, const Dataset& dataset,
                                const CompareConfig& config);

// Fixed column order; ratios to 6 decimals.  wall_ms is emitted only when
// timing is requested so default output is byte-stable across runs.
void write_tsv(std::ostream& out, std::span<const CostReport> reports, bool timing = false);

} // namespace pmss

#endif
