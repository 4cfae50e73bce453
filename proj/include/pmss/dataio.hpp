#ifndef PMSS_DATAIO_HPP
#define PMSS_DATAIO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pmss/core.hpp"
#include "pmss/deposition.hpp"

namespace pmss {

struct GeneratorSpec {
    std::size_t count = 0;
    std::size_t len_min = 0;
    std::size_t len_max = 0;
    std::string alphabet_symbols;
    // Per-symbol target fractions; uniform when absent.
    std::optional<std::vector<double>> content_profile;
    // Subset-content target: each sequence draws a fraction in [lo, hi] for
    // the symbol group, e.g. GC content between 0.2 and 0.8.
    struct SubsetTarget {
        std::string symbols;
        double lo = 0.0;
        double hi = 1.0;
    };
    std::optional<SubsetTarget> subset_target;
    std::uint64_t seed = 0;
};

// I.i.d. symbols per position, deterministic given the seed (per-sequence
// derived streams, so generation order never matters).
Dataset generate(const GeneratorSpec& spec);

// '>'-header records.  With a declared alphabet, symbols outside it fail
// naming the record; otherwise the alphabet is inferred (sorted distinct
// characters).
Dataset load_fasta(const std::filesystem::path& path,
                   const std::optional<Alphabet>& alphabet = std::nullopt);

// One sequence per line; ids are 0-based line numbers. Blank lines are
// skipped but keep their line number.
Dataset load_lines(const std::filesystem::path& path,
                   const std::optional<Alphabet>& alphabet = std::nullopt);

// Partition file: header `MSS v1 q=<q> M=<M> N=<N>`, then per set a
// `SET <i>` line, `id<TAB>sequence` rows, and an optional `PS <string>`
// process-sequence line.
struct PartitionFile {
    std::size_t q = 0;
    std::size_t num_sets = 0;
    std::size_t capacity = 0;
    struct Entry {
        std::string id;
        std::string text;
    };
    std::vector<std::vector<Entry>> sets;
    std::vector<std::string> process; // one per set, empty when absent
};

void save_partition(const Dataset& dataset, const Partition& partition, std::size_t capacity,
                    const std::vector<DepositionResult>* results,
                    const std::filesystem::path& path);

PartitionFile load_partition(const std::filesystem::path& path);

// Flattens a partition file into a dataset (sets concatenated in order) and
// the corresponding Partition.  The alphabet is inferred from the texts.
std::pair<Dataset, Partition> dataset_from_partition(const PartitionFile& file);

} // namespace pmss

#endif
