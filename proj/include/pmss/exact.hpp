#ifndef PMSS_EXACT_HPP
#define PMSS_EXACT_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "pmss/core.hpp"

namespace pmss {

inline constexpr std::uint64_t kDefaultStateBudget = 20'000'000;
inline constexpr std::uint64_t kDefaultPartitionBudget = 1'000'000;

struct ScsResult {
    std::size_t length = 0;
    std::vector<SymbolIndex> witness;
};

// Exact shortest common supersequence over the product state lattice.
// Duplicate sequences collapse first.  The witness resolves ties by taking
// the lexicographically smallest next symbol.  Throws BudgetError when the
// lattice would exceed state_budget states.
ScsResult scs_dp(std::span<const Sequence> seqs,
                 std::uint64_t state_budget = kDefaultStateBudget);

struct ScsScheduleResult {
    std::size_t length = 0;
    std::uint64_t completion_sum = 0;
    std::vector<SymbolIndex> witness;
};

// Minimum total completion step over all supersequences of DP-optimal
// length: same lattice, second value function.  completion_sum counts every
// input sequence (duplicates included) at its greedy completion step in the
// returned witness.
ScsScheduleResult scs_min_completion(std::span<const Sequence> seqs,
                                     std::uint64_t state_budget = kDefaultStateBudget);

enum class CostKind { MM, SC };

struct ExactResult {
    Partition optimal_partition;
    std::vector<std::size_t> per_set_lengths;
    std::uint64_t cost = 0;
};

// Enumerates every unordered partition into num_sets sets of exactly
// `capacity` sequences and returns the cost-minimizing one (first found on
// ties).  Cost MM is capacity times the sum of per-set SCS lengths; cost SC
// sums per-set minimum completion schedules over DP-optimal-length
// witnesses, a documented bound rather than a proven SC optimum.
ExactResult exhaustive_optimal(std::span<const Sequence> seqs, const Alphabet& alphabet,
                               std::size_t num_sets, std::size_t capacity, CostKind kind,
                               std::uint64_t partition_budget = kDefaultPartitionBudget,
                               std::uint64_t state_budget = kDefaultStateBudget);

// Paper-style reported bound: for each symbol take the sequence richest in
// it, SCS the deduplicated picks, multiply by the set count.  Not
// guaranteed below heuristic costs; reported alongside them.
std::uint64_t lower_bound(std::span<const Sequence> seqs, const Alphabet& alphabet,
                          std::size_t num_sets,
                          std::uint64_t state_budget = kDefaultStateBudget);

} // namespace pmss

#endif
