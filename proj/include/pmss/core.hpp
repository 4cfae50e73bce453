#ifndef PMSS_CORE_HPP
#define PMSS_CORE_HPP

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "pmss/errors.hpp"

namespace pmss {

using SymbolIndex = std::uint8_t;

// Ordered finite alphabet.  Symbol order is fixed at construction and is the
// tie-break order used throughout: "lowest alphabet index" always refers to
// this ordering.
class Alphabet {
public:
    Alphabet() = default; // empty; only valid as a placeholder for empty datasets

    explicit Alphabet(std::string_view symbols) : symbols_(symbols) {
        if (symbols_.empty())
            throw ParameterError("alphabet must contain at least one symbol");
        if (symbols_.size() > 256)
            throw ParameterError("alphabet larger than 256 symbols is not supported");
        index_.fill(-1);
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            unsigned char c = static_cast<unsigned char>(symbols_[i]);
            if (index_[c] >= 0)
                throw ParameterError(std::string("duplicate alphabet symbol '") + symbols_[i] + "'");
            index_[c] = static_cast<std::int16_t>(i);
        }
    }

    std::size_t size() const { return symbols_.size(); }
    const std::string& symbols() const { return symbols_; }

    char symbol(SymbolIndex i) const { return symbols_.at(i); }

    bool contains(char c) const {
        return index_[static_cast<unsigned char>(c)] >= 0;
    }

    SymbolIndex index_of(char c) const {
        std::int16_t i = index_[static_cast<unsigned char>(c)];
        if (i < 0)
            throw InvalidSymbolError(std::string("symbol '") + c + "' is not in alphabet \"" + symbols_ + "\"");
        return static_cast<SymbolIndex>(i);
    }

    bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
    std::string symbols_;
    std::array<std::int16_t, 256> index_{};
};

// A sequence over an alphabet, stored as symbol indices.
struct Sequence {
    std::string id;
    std::vector<SymbolIndex> symbols;

    std::size_t length() const { return symbols.size(); }
};

Sequence make_sequence(const Alphabet& alphabet, std::string id, std::string_view text);
std::string to_text(const Alphabet& alphabet, const Sequence& seq);

// One set of a partition.  capacity is the bound N; the set may hold fewer
// sequences while a partition is being assembled.
struct SequencesSet {
    std::vector<Sequence> sequences;
    std::size_t capacity = 0;

    std::size_t size() const { return sequences.size(); }
};

struct MultiSequencesSets {
    Alphabet alphabet;
    std::vector<SequencesSet> sets;

    std::size_t num_sets() const { return sets.size(); }
};

// A dataset: the flat pool of sequences before (or independent of) any
// partitioning.  max_length is K, the dataset-level length bound used in
// ratio denominators.
struct Dataset {
    Alphabet alphabet;
    std::vector<Sequence> sequences;
    std::size_t max_length = 0;

    std::size_t size() const { return sequences.size(); }
};

Dataset make_dataset(const Alphabet& alphabet, const std::vector<std::string>& texts);

// Assignment of dataset positions to sets: set_of[i] is the set index of
// sequences[i].  Kept position-parallel so the same dataset order can be
// recovered inside every set.
struct Partition {
    std::vector<std::uint32_t> set_of;
    std::uint32_t num_sets = 0;
};

// Chunks of N in dataset order: set i holds positions [i*N, (i+1)*N).
Partition identity_partition(std::size_t count, std::size_t num_sets, std::size_t capacity);

void validate_partition(const Partition& partition, std::size_t count,
                        std::size_t num_sets, std::size_t capacity);

MultiSequencesSets materialize(const Dataset& dataset, const Partition& partition,
                               std::size_t capacity);

// Fraction of positions of seq holding the given symbol.  Empty sequences
// have content 0 for every symbol.
double alphabet_content(const Sequence& seq, SymbolIndex symbol);
double alphabet_content(const Alphabet& alphabet, const Sequence& seq, char symbol);

// Per-symbol content vector of one sequence (q entries, sums to 1 for
// nonempty sequences).
std::vector<double> content_vector(const Sequence& seq, std::size_t q);

// Content of the concatenation of all sequences in the set (pooled counts,
// not a mean of per-sequence fractions).
std::vector<double> pooled_content(const SequencesSet& set, std::size_t q);
double set_alphabet_content(const Alphabet& alphabet, const SequencesSet& set, char symbol);

// Combined content of a group of symbols, e.g. GC fraction.
double subset_content(const Alphabet& alphabet, const Sequence& seq, std::string_view symbols);

} // namespace pmss

#endif
