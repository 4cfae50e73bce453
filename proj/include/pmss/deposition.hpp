#ifndef PMSS_DEPOSITION_HPP
#define PMSS_DEPOSITION_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "pmss/core.hpp"

namespace pmss {

// Result of depositing one set.  completion[k] is the 1-based step at which
// the k-th sequence of the input set was fully embedded (its completion
// count C).  steps() is the total number of deposition steps L.
struct DepositionResult {
    std::vector<SymbolIndex> process_sequence;
    std::vector<int> completion;

    std::size_t steps() const { return process_sequence.size(); }
    std::map<std::string, int> completion_by_id(const SequencesSet& set) const;
};

struct LookAheadParams {
    int m = 3;
    int l = 1;
};

// True when every sequence of the set embeds as a subsequence of t.
// Greedy left-to-right matching, which is exact for this question.
bool is_common_supersequence(std::span<const SymbolIndex> t, const SequencesSet& set);

// 1-based completion step of each sequence under greedy embedding into t.
// Throws NotASupersequenceError if some sequence does not embed.
std::vector<int> greedy_completion(std::span<const SymbolIndex> t, const SequencesSet& set);

// Periodic baseline: deposit the alphabet in order, K times over, truncated
// at the step where the last sequence completes.
DepositionResult alphabet_deposit(const SequencesSet& set, const Alphabet& alphabet);

// Majority merge: each step deposits the symbol matching the most sequence
// frontiers; ties go to the lowest alphabet index.
DepositionResult sh_deposit(const SequencesSet& set, const Alphabet& alphabet);

// Look-ahead majority merge: each round scores candidate extensions up to m
// symbols ahead by total frontier characters consumed, then commits the
// first l symbols of the best candidate.  (m=1, l=1) reproduces sh_deposit
// exactly.  For alphabets larger than 8 symbols, m >= 3 is reduced to 2.
DepositionResult la_sh_deposit(const SequencesSet& set, const Alphabet& alphabet,
                               LookAheadParams params);

// Iterated single-symbol reduction: repeatedly remove the first removable
// symbol (scanning left to right) whose removal keeps t a common
// supersequence, until no single removal is possible.
std::vector<SymbolIndex> lap_reduce(std::span<const SymbolIndex> t, const SequencesSet& set);

// la_sh_deposit followed by lap_reduce, completions recomputed against the
// reduced process sequence.
DepositionResult lap_deposit(const SequencesSet& set, const Alphabet& alphabet,
                             LookAheadParams params = {});

namespace detail {

// Majority-merge step count over a group of sequences given by pointer,
// without building a SequencesSet.  Used by cluster balancing probes.
std::size_t sh_steps(const std::vector<const Sequence*>& seqs, std::size_t q);

} // namespace detail

} // namespace pmss

#endif
