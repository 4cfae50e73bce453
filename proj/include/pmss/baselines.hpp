#ifndef PMSS_BASELINES_HPP
#define PMSS_BASELINES_HPP

#include <span>
#include <vector>

#include "pmss/core.hpp"
#include "pmss/deposition.hpp"

namespace pmss {

// Largest pool greedy_a accepts; pairwise agglomeration is quadratic and
// becomes unreasonable beyond this.
inline constexpr std::size_t kGreedyAMaxSequences = 2000;

struct BaselineResult {
    Partition partition;
    std::vector<DepositionResult> per_set;
};

// Exact shortest common supersequence of two symbol strings via the LCS
// dynamic program; traceback ties prefer the symbol of a.
std::vector<SymbolIndex> pairwise_scs(std::span<const SymbolIndex> a,
                                      std::span<const SymbolIndex> b);

// Agglomerative baseline: repeatedly merge the pool pair with the shortest
// pairwise SCS (ties: smallest combined member count, then oldest nodes);
// once a node reaches N members its first N (input order) become the next
// set and any excess returns to the pool as singletons.  Per-set process
// sequences are the node supersequences trimmed by lap_reduce.
BaselineResult greedy_a(std::span<const Sequence> seqs, const Alphabet& alphabet,
                        std::size_t num_sets, std::size_t capacity);

// Peeling baseline: majority-merge the whole remaining pool, cut the N
// earliest-completing sequences (ties: input order) as the next set, and
// repeat on the rest.  Emitted sets are re-deposited independently.
BaselineResult greedy_d(std::span<const Sequence> seqs, const Alphabet& alphabet,
                        std::size_t num_sets, std::size_t capacity);

} // namespace pmss

#endif
