#include "pmss/dataio.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "pmss/rng.hpp"

namespace pmss {

namespace {

void validate_spec(const GeneratorSpec& spec) {
    if (spec.alphabet_symbols.empty())
        throw ParameterError("generator needs an alphabet");
    if (spec.len_min == 0 || spec.len_min > spec.len_max)
        throw ParameterError("generator needs 1 <= min length <= max length");
    if (spec.content_profile) {
        const auto& p = *spec.content_profile;
        if (p.size() != spec.alphabet_symbols.size())
            throw ParameterError("content profile must give one fraction per symbol");
        double sum = 0.0;
        for (double x : p) {
            if (x < 0.0) throw ParameterError("content profile fractions must be nonnegative");
            sum += x;
        }
        if (std::abs(sum - 1.0) > 1e-9)
            throw ParameterError("content profile fractions must sum to 1");
    }
    if (spec.subset_target) {
        const auto& t = *spec.subset_target;
        if (t.symbols.empty()) throw ParameterError("subset target needs symbols");
        if (t.lo < 0.0 || t.hi > 1.0 || t.lo > t.hi)
            throw ParameterError("subset target needs 0 <= lo <= hi <= 1");
    }
}

} // namespace

Dataset generate(const GeneratorSpec& spec) {
    validate_spec(spec);
    Alphabet alphabet(spec.alphabet_symbols);
    const std::size_t q = alphabet.size();

    std::vector<double> cumulative;
    if (spec.content_profile) {
        cumulative.resize(q);
        double acc = 0.0;
        for (std::size_t s = 0; s < q; ++s) {
            acc += (*spec.content_profile)[s];
            cumulative[s] = acc;
        }
        cumulative[q - 1] = 1.0;
    }

    std::vector<SymbolIndex> subset, complement;
    if (spec.subset_target) {
        std::vector<bool> in_subset(q, false);
        for (char c : spec.subset_target->symbols) in_subset[alphabet.index_of(c)] = true;
        for (std::size_t s = 0; s < q; ++s)
            (in_subset[s] ? subset : complement).push_back(static_cast<SymbolIndex>(s));
    }

    Dataset dataset;
    dataset.alphabet = alphabet;
    dataset.sequences.reserve(spec.count);
    for (std::size_t i = 0; i < spec.count; ++i) {
        SplitMix64 rng(derive_seed(spec.seed, RngStream::generate, i));
        std::size_t len = spec.len_min;
        if (spec.len_max > spec.len_min)
            len += static_cast<std::size_t>(rng.bounded(spec.len_max - spec.len_min + 1));
        Sequence seq;
        seq.id = std::to_string(i);
        seq.symbols.reserve(len);
        if (spec.subset_target) {
            const auto& t = *spec.subset_target;
            double g = t.lo + (t.hi - t.lo) * rng.next_double();
            for (std::size_t j = 0; j < len; ++j) {
                bool inside = complement.empty() || rng.next_double() < g;
                const auto& side = inside ? subset : complement;
                seq.symbols.push_back(side[rng.bounded(side.size())]);
            }
        } else if (spec.content_profile) {
            for (std::size_t j = 0; j < len; ++j) {
                double u = rng.next_double();
                std::size_t s = 0;
                while (s + 1 < q && u >= cumulative[s]) ++s;
                seq.symbols.push_back(static_cast<SymbolIndex>(s));
            }
        } else {
            for (std::size_t j = 0; j < len; ++j)
                seq.symbols.push_back(static_cast<SymbolIndex>(rng.bounded(q)));
        }
        dataset.max_length = std::max(dataset.max_length, seq.symbols.size());
        dataset.sequences.push_back(std::move(seq));
    }
    return dataset;
}

namespace {

std::vector<std::string> read_all_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

Alphabet infer_alphabet(const std::vector<std::pair<std::string, std::string>>& records) {
    std::set<char> chars;
    for (const auto& [id, text] : records)
        for (char c : text) chars.insert(c);
    if (chars.empty()) return Alphabet();
    return Alphabet(std::string(chars.begin(), chars.end()));
}

Dataset dataset_from_records(std::vector<std::pair<std::string, std::string>> records,
                             const std::optional<Alphabet>& declared) {
    Dataset dataset;
    dataset.alphabet = declared ? *declared : infer_alphabet(records);
    for (auto& [id, text] : records) {
        try {
            dataset.sequences.push_back(make_sequence(dataset.alphabet, id, text));
        } catch (const InvalidSymbolError& e) {
            throw InvalidSymbolError("record " + id + ": " + e.what());
        }
        dataset.max_length = std::max(dataset.max_length, text.size());
    }
    return dataset;
}

} // namespace

Dataset load_fasta(const std::filesystem::path& path,
                   const std::optional<Alphabet>& alphabet) {
    std::vector<std::string> lines = read_all_lines(path);
    std::vector<std::pair<std::string, std::string>> records;
    bool in_record = false;
    for (const std::string& line : lines) {
        if (line.empty()) continue;
        if (line[0] == '>') {
            std::string header = line.substr(1);
            std::size_t cut = header.find_first_of(" \t");
            if (cut != std::string::npos) header.resize(cut);
            if (header.empty())
                throw SchemaError(path.string() + ": record with empty header");
            records.emplace_back(header, "");
            in_record = true;
        } else {
            if (!in_record)
                throw SchemaError(path.string() + ": sequence data before any '>' header");
            records.back().second += line;
        }
    }
    return dataset_from_records(std::move(records), alphabet);
}

Dataset load_lines(const std::filesystem::path& path,
                   const std::optional<Alphabet>& alphabet) {
    std::vector<std::string> lines = read_all_lines(path);
    std::vector<std::pair<std::string, std::string>> records;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].empty()) continue;
        records.emplace_back(std::to_string(i), lines[i]);
    }
    return dataset_from_records(std::move(records), alphabet);
}

void save_partition(const Dataset& dataset, const Partition& partition, std::size_t capacity,
                    const std::vector<DepositionResult>* results,
                    const std::filesystem::path& path) {
    validate_partition(partition, dataset.sequences.size(), partition.num_sets, capacity);
    if (results && results->size() != partition.num_sets)
        throw ParameterError("need one deposition result per set");
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << "MSS v1 q=" << dataset.alphabet.size() << " M=" << partition.num_sets
        << " N=" << capacity << "\n";
    for (std::uint32_t s = 0; s < partition.num_sets; ++s) {
        out << "SET " << s << "\n";
        for (std::size_t i = 0; i < dataset.sequences.size(); ++i)
            if (partition.set_of[i] == s)
                out << dataset.sequences[i].id << '\t'
                    << to_text(dataset.alphabet, dataset.sequences[i]) << "\n";
        if (results) {
            const auto& process = (*results)[s].process_sequence;
            if (!process.empty()) {
                Sequence tmp{"", process};
                out << "PS " << to_text(dataset.alphabet, tmp) << "\n";
            }
        }
    }
    if (!out) throw IoError("failed writing " + path.string());
}

PartitionFile load_partition(const std::filesystem::path& path) {
    std::vector<std::string> lines = read_all_lines(path);
    if (lines.empty()) throw SchemaError(path.string() + ": empty partition file");

    PartitionFile file;
    {
        std::istringstream header(lines[0]);
        std::string magic, version, qf, mf, nf;
        header >> magic >> version >> qf >> mf >> nf;
        auto field = [&](const std::string& text, const char* name) -> std::size_t {
            std::string prefix = std::string(name) + "=";
            if (text.rfind(prefix, 0) != 0)
                throw SchemaError(path.string() + ": malformed header field, expected " +
                                  prefix + "<number>");
            try {
                return static_cast<std::size_t>(std::stoull(text.substr(prefix.size())));
            } catch (const std::exception&) {
                throw SchemaError(path.string() + ": malformed header number in " + text);
            }
        };
        if (magic != "MSS" || version != "v1")
            throw SchemaError(path.string() + ": expected header 'MSS v1 q=.. M=.. N=..'");
        file.q = field(qf, "q");
        file.num_sets = field(mf, "M");
        file.capacity = field(nf, "N");
    }
    if (file.num_sets == 0) throw SchemaError(path.string() + ": M must be positive");

    std::set<std::string> seen_ids;
    std::set<char> chars;
    for (std::size_t ln = 1; ln < lines.size(); ++ln) {
        const std::string& line = lines[ln];
        if (line.empty()) continue;
        if (line.rfind("SET ", 0) == 0) {
            std::size_t index;
            try {
                index = static_cast<std::size_t>(std::stoull(line.substr(4)));
            } catch (const std::exception&) {
                throw SchemaError(path.string() + ": malformed SET line " + std::to_string(ln + 1));
            }
            if (index != file.sets.size())
                throw SchemaError(path.string() + ": SET " + std::to_string(index) +
                                  " out of order");
            file.sets.emplace_back();
            file.process.emplace_back();
        } else if (line.rfind("PS ", 0) == 0) {
            if (file.sets.empty())
                throw SchemaError(path.string() + ": PS line before any SET");
            if (!file.process.back().empty())
                throw SchemaError(path.string() + ": duplicate PS line in SET " +
                                  std::to_string(file.sets.size() - 1));
            file.process.back() = line.substr(3);
            for (char c : file.process.back()) chars.insert(c);
        } else {
            std::size_t tab = line.find('\t');
            if (tab == std::string::npos || tab == 0)
                throw SchemaError(path.string() + ": line " + std::to_string(ln + 1) +
                                  " is not 'id<TAB>sequence'");
            if (file.sets.empty())
                throw SchemaError(path.string() + ": sequence line before any SET");
            PartitionFile::Entry entry{line.substr(0, tab), line.substr(tab + 1)};
            if (!seen_ids.insert(entry.id).second)
                throw SchemaError(path.string() + ": duplicate sequence id " + entry.id);
            for (char c : entry.text) chars.insert(c);
            file.sets.back().push_back(std::move(entry));
        }
    }
    if (file.sets.size() != file.num_sets)
        throw SchemaError(path.string() + ": header declares M=" + std::to_string(file.num_sets) +
                          " but file has " + std::to_string(file.sets.size()) + " sets");
    for (std::size_t s = 0; s < file.sets.size(); ++s)
        if (file.sets[s].size() > file.capacity)
            throw SchemaError(path.string() + ": SET " + std::to_string(s) + " holds " +
                              std::to_string(file.sets[s].size()) + " sequences, N=" +
                              std::to_string(file.capacity));
    if (chars.size() > file.q)
        throw SchemaError(path.string() + ": " + std::to_string(chars.size()) +
                          " distinct symbols exceed declared q=" + std::to_string(file.q));
    return file;
}

std::pair<Dataset, Partition> dataset_from_partition(const PartitionFile& file) {
    std::vector<std::pair<std::string, std::string>> records;
    Partition partition;
    partition.num_sets = static_cast<std::uint32_t>(file.num_sets);
    for (std::size_t s = 0; s < file.sets.size(); ++s) {
        for (const auto& entry : file.sets[s]) {
            records.emplace_back(entry.id, entry.text);
            partition.set_of.push_back(static_cast<std::uint32_t>(s));
        }
    }
    Dataset dataset = dataset_from_records(std::move(records), std::nullopt);
    return {std::move(dataset), std::move(partition)};
}

} // namespace pmss
