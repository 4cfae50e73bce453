#include "pmss/core.hpp"

#include <algorithm>

namespace pmss {

Sequence make_sequence(const Alphabet& alphabet, std::string id, std::string_view text) {
    Sequence seq;
    seq.id = std::move(id);
    seq.symbols.reserve(text.size());
    for (char c : text) seq.symbols.push_back(alphabet.index_of(c));
    return seq;
}

std::string to_text(const Alphabet& alphabet, const Sequence& seq) {
    std::string out;
    out.reserve(seq.symbols.size());
    for (SymbolIndex s : seq.symbols) out.push_back(alphabet.symbol(s));
    return out;
}

Dataset make_dataset(const Alphabet& alphabet, const std::vector<std::string>& texts) {
    Dataset d;
    d.alphabet = alphabet;
    d.sequences.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i) {
        d.sequences.push_back(make_sequence(alphabet, std::to_string(i), texts[i]));
        d.max_length = std::max(d.max_length, texts[i].size());
    }
    return d;
}

Partition identity_partition(std::size_t count, std::size_t num_sets, std::size_t capacity) {
    if (num_sets == 0) throw ParameterError("partition needs at least one set");
    if (count > num_sets * capacity)
        throw CapacityError("cannot place " + std::to_string(count) + " sequences into " +
                            std::to_string(num_sets) + " sets of capacity " + std::to_string(capacity));
    Partition p;
    p.num_sets = static_cast<std::uint32_t>(num_sets);
    p.set_of.resize(count);
    for (std::size_t i = 0; i < count; ++i)
        p.set_of[i] = static_cast<std::uint32_t>(i / capacity);
    return p;
}

void validate_partition(const Partition& partition, std::size_t count,
                        std::size_t num_sets, std::size_t capacity) {
    if (partition.num_sets != num_sets)
        throw CapacityError("partition has " + std::to_string(partition.num_sets) +
                            " sets, expected " + std::to_string(num_sets));
    if (partition.set_of.size() != count)
        throw CapacityError("partition covers " + std::to_string(partition.set_of.size()) +
                            " sequences, expected " + std::to_string(count));
    std::vector<std::size_t> sizes(num_sets, 0);
    for (std::uint32_t s : partition.set_of) {
        if (s >= num_sets) throw CapacityError("set index " + std::to_string(s) + " out of range");
        ++sizes[s];
    }
    for (std::size_t i = 0; i < num_sets; ++i)
        if (sizes[i] > capacity)
            throw CapacityError("set " + std::to_string(i) + " holds " + std::to_string(sizes[i]) +
                                " sequences, capacity is " + std::to_string(capacity));
}

MultiSequencesSets materialize(const Dataset& dataset, const Partition& partition,
                               std::size_t capacity) {
    validate_partition(partition, dataset.sequences.size(), partition.num_sets, capacity);
    MultiSequencesSets mss;
    mss.alphabet = dataset.alphabet;
    mss.sets.resize(partition.num_sets);
    for (auto& set : mss.sets) set.capacity = capacity;
    for (std::size_t i = 0; i < dataset.sequences.size(); ++i)
        mss.sets[partition.set_of[i]].sequences.push_back(dataset.sequences[i]);
    return mss;
}

double alphabet_content(const Sequence& seq, SymbolIndex symbol) {
    if (seq.symbols.empty()) return 0.0;
    std::size_t count = 0;
    for (SymbolIndex s : seq.symbols) count += (s == symbol);
    return static_cast<double>(count) / static_cast<double>(seq.symbols.size());
}

double alphabet_content(const Alphabet& alphabet, const Sequence& seq, char symbol) {
    return alphabet_content(seq, alphabet.index_of(symbol));
}

std::vector<double> content_vector(const Sequence& seq, std::size_t q) {
    std::vector<double> v(q, 0.0);
    if (seq.symbols.empty()) return v;
    for (SymbolIndex s : seq.symbols) v[s] += 1.0;
    for (double& x : v) x /= static_cast<double>(seq.symbols.size());
    return v;
}

std::vector<double> pooled_content(const SequencesSet& set, std::size_t q) {
    std::vector<double> v(q, 0.0);
    std::size_t total = 0;
    for (const Sequence& seq : set.sequences) {
        for (SymbolIndex s : seq.symbols) v[s] += 1.0;
        total += seq.symbols.size();
    }
    if (total == 0) return v;
    for (double& x : v) x /= static_cast<double>(total);
    return v;
}

double set_alphabet_content(const Alphabet& alphabet, const SequencesSet& set, char symbol) {
    return pooled_content(set, alphabet.size())[alphabet.index_of(symbol)];
}

double subset_content(const Alphabet& alphabet, const Sequence& seq, std::string_view symbols) {
    if (symbols.empty()) throw ParameterError("symbol subset must not be empty");
    std::vector<bool> in_subset(alphabet.size(), false);
    for (char c : symbols) in_subset[alphabet.index_of(c)] = true;
    if (seq.symbols.empty()) return 0.0;
    std::size_t count = 0;
    for (SymbolIndex s : seq.symbols) count += in_subset[s];
    return static_cast<double>(count) / static_cast<double>(seq.symbols.size());
}

} // namespace pmss
