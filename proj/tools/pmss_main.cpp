// pmss: distribute sequence pools into capacity-bounded sets and deposit a
// process sequence per set, reporting multiple-set and sum-completion costs.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "pmss/baselines.hpp"
#include "pmss/core.hpp"
#include "pmss/dataio.hpp"
#include "pmss/deposition.hpp"
#include "pmss/distribution.hpp"
#include "pmss/exact.hpp"
#include "pmss/metrics.hpp"
#include "pmss/rng.hpp"

namespace {

struct InputOptions {
    std::string path;
    std::string format = "lines";
    std::string alphabet;
};

void add_input_flags(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.path, "input file")->required();
    cmd->add_option("--format", in.format, "input format: lines, fasta, or mss")
        ->check(CLI::IsMember({"lines", "fasta", "mss"}));
    cmd->add_option("--alphabet", in.alphabet,
                    "declared alphabet symbols (inferred from the input when omitted)");
}

pmss::Dataset load_dataset(const InputOptions& in) {
    std::optional<pmss::Alphabet> alphabet;
    if (!in.alphabet.empty()) alphabet.emplace(in.alphabet);
    if (in.format == "fasta") return pmss::load_fasta(in.path, alphabet);
    if (in.format == "mss") {
        auto [dataset, partition] = pmss::dataset_from_partition(pmss::load_partition(in.path));
        if (alphabet) {
            // Re-validate against the declared alphabet.
            pmss::Dataset redone;
            redone.alphabet = *alphabet;
            for (const auto& seq : dataset.sequences) {
                redone.sequences.push_back(pmss::make_sequence(
                    *alphabet, seq.id, pmss::to_text(dataset.alphabet, seq)));
                redone.max_length = std::max(redone.max_length, seq.length());
            }
            return redone;
        }
        return dataset;
    }
    return pmss::load_lines(in.path, alphabet);
}

struct RunOptions {
    InputOptions input;
    std::string algos;
    std::size_t num_sets = 1;
    std::size_t capacity = 0;
    int la_m = 3;
    int la_l = 1;
    int window = 0;
    std::string bias;
    std::uint64_t seed = 0;
    std::uint64_t state_budget = pmss::kDefaultStateBudget;
    std::uint64_t partition_budget = pmss::kDefaultPartitionBudget;
    unsigned threads = 0;
    bool timing = false;
    bool no_lower_bound = false;
    std::string save_partition_path;
};

void add_run_flags(CLI::App* cmd, RunOptions& opt, bool multi) {
    add_input_flags(cmd, opt.input);
    if (multi)
        cmd->add_option("--algos", opt.algos,
                        "comma list of algorithms, or 'all' / 'heuristics'")
            ->required();
    else
        cmd->add_option("--algo", opt.algos, "algorithm to run")->required();
    cmd->add_option("--m", opt.num_sets, "number of sets")->required();
    cmd->add_option("--n", opt.capacity, "sequences per set")->required();
    cmd->add_option("--la-m", opt.la_m, "look-ahead depth (default 3)");
    cmd->add_option("--la-l", opt.la_l, "symbols committed per look-ahead round (default 1)");
    cmd->add_option("--window", opt.window,
                    "feature window for dda*; defaults to the alphabet size");
    cmd->add_option("--bias", opt.bias,
                    "bias symbol group for dda content keys (e.g. GC)");
    cmd->add_option("--seed", opt.seed, "root seed for all derived randomness");
    cmd->add_option("--state-budget", opt.state_budget, "max states for exact DP");
    cmd->add_option("--partition-budget", opt.partition_budget,
                    "max partitions for exhaustive search");
    cmd->add_option("--threads", opt.threads, "worker threads (default: machine parallelism)");
    cmd->add_flag("--timing", opt.timing, "append a wall_ms column (not byte-stable)");
    cmd->add_flag("--no-lower-bound", opt.no_lower_bound, "skip the lower bound column");
    cmd->add_option("--save-partition", opt.save_partition_path,
                    "write the last algorithm's partition to this file");
}

std::vector<pmss::Algo> parse_algos(const std::string& text, const std::string& flag) {
    std::vector<pmss::Algo> algos;
    if (text == "all") return pmss::default_algos();
    if (text == "heuristics") {
        for (pmss::Algo a : pmss::default_algos())
            if (a != pmss::Algo::ExactMm && a != pmss::Algo::ExactSc) algos.push_back(a);
        return algos;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string name = text.substr(start, comma == std::string::npos ? comma : comma - start);
        if (!name.empty()) {
            auto algo = pmss::algo_from_name(name);
            if (!algo)
                throw CLI::ValidationError(flag, "unknown algorithm '" + name + "'");
            algos.push_back(*algo);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (algos.empty()) throw CLI::ValidationError(flag, "no algorithm given");
    return algos;
}

int cmd_run(const RunOptions& opt, bool multi) {
    pmss::Dataset dataset = load_dataset(opt.input);
    std::vector<pmss::Algo> algos = parse_algos(opt.algos, multi ? "--algos" : "--algo");
    if (!multi && algos.size() != 1)
        throw CLI::ValidationError("--algo", "run takes exactly one algorithm");

    pmss::CompareConfig config;
    config.num_sets = opt.num_sets;
    config.capacity = opt.capacity;
    config.lookahead = {opt.la_m, opt.la_l};
    config.window = opt.window;
    if (!opt.bias.empty()) config.bias_symbols = opt.bias;
    config.seed = opt.seed;
    config.state_budget = opt.state_budget;
    config.partition_budget = opt.partition_budget;
    config.threads = opt.threads ? opt.threads : std::thread::hardware_concurrency();
    config.with_lower_bound = !opt.no_lower_bound;

    std::vector<pmss::CostReport> reports = pmss::compare(algos, dataset, config);
    pmss::write_tsv(std::cout, reports, opt.timing);

    if (!opt.save_partition_path.empty() && !reports.empty()) {
        const pmss::CostReport& last = reports.back();
        std::size_t capacity = last.partition.num_sets == 1 && opt.num_sets != 1
                                   ? dataset.sequences.size()
                                   : opt.capacity;
        pmss::save_partition(dataset, last.partition, capacity, &last.per_set,
                             opt.save_partition_path);
    }
    return 0;
}

struct GenOptions {
    std::size_t count = 0;
    std::size_t k = 0;
    std::size_t k_min = 0;
    std::size_t k_max = 0;
    std::string alphabet = "ACGT";
    std::vector<double> profile;
    std::string gc;
    std::uint64_t seed = 0;
    std::string out;
    std::string format = "lines";
};

int cmd_gen(const GenOptions& opt) {
    pmss::GeneratorSpec spec;
    spec.count = opt.count;
    spec.len_min = opt.k ? opt.k : opt.k_min;
    spec.len_max = opt.k ? opt.k : opt.k_max;
    spec.alphabet_symbols = opt.alphabet;
    if (!opt.profile.empty()) spec.content_profile = opt.profile;
    if (!opt.gc.empty()) {
        // --gc SYMBOLS:lo:hi, e.g. GC:0.2:0.8
        std::size_t c1 = opt.gc.find(':');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : opt.gc.find(':', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw CLI::ValidationError("--gc", "expected SYMBOLS:lo:hi");
        pmss::GeneratorSpec::SubsetTarget target;
        target.symbols = opt.gc.substr(0, c1);
        target.lo = std::stod(opt.gc.substr(c1 + 1, c2 - c1 - 1));
        target.hi = std::stod(opt.gc.substr(c2 + 1));
        spec.subset_target = target;
    }
    spec.seed = opt.seed;

    pmss::Dataset dataset = pmss::generate(spec);
    std::ofstream out(opt.out);
    if (!out) throw pmss::IoError("cannot write " + opt.out);
    for (const auto& seq : dataset.sequences) {
        if (opt.format == "fasta") out << '>' << seq.id << "\n";
        out << pmss::to_text(dataset.alphabet, seq) << "\n";
    }
    return 0;
}

struct ExactOptions {
    InputOptions input;
    std::size_t num_sets = 1;
    std::size_t capacity = 0;
    std::string cost = "mm";
    std::uint64_t state_budget = pmss::kDefaultStateBudget;
    std::uint64_t partition_budget = pmss::kDefaultPartitionBudget;
    std::string save_partition_path;
};

int cmd_exact(const ExactOptions& opt) {
    pmss::Dataset dataset = load_dataset(opt.input);
    pmss::CostKind kind = opt.cost == "sc" ? pmss::CostKind::SC : pmss::CostKind::MM;
    pmss::ExactResult result =
        pmss::exhaustive_optimal(dataset.sequences, dataset.alphabet, opt.num_sets,
                                 opt.capacity, kind, opt.partition_budget, opt.state_budget);
    std::uint64_t bound = pmss::lower_bound(dataset.sequences, dataset.alphabet, opt.num_sets,
                                            opt.state_budget);
    std::cout << "cost_" << (kind == pmss::CostKind::SC ? "sc" : "mm") << '\t' << result.cost
              << "\nlower_bound\t" << bound << "\nper_set_lengths\t";
    for (std::size_t i = 0; i < result.per_set_lengths.size(); ++i) {
        if (i) std::cout << ',';
        std::cout << result.per_set_lengths[i];
    }
    std::cout << "\n";
    for (std::uint32_t s = 0; s < result.optimal_partition.num_sets; ++s) {
        std::cout << "set " << s << '\t';
        bool first = true;
        for (std::size_t i = 0; i < dataset.sequences.size(); ++i) {
            if (result.optimal_partition.set_of[i] != s) continue;
            if (!first) std::cout << ',';
            std::cout << dataset.sequences[i].id;
            first = false;
        }
        std::cout << "\n";
    }
    if (!opt.save_partition_path.empty())
        pmss::save_partition(dataset, result.optimal_partition, opt.capacity, nullptr,
                             opt.save_partition_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multiple sequences sets distribution and deposition toolkit"};
    app.require_subcommand(1);

    GenOptions gen;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a random dataset");
    gen_cmd->add_option("--count", gen.count, "number of sequences")->required();
    gen_cmd->add_option("--k", gen.k, "fixed sequence length");
    gen_cmd->add_option("--k-min", gen.k_min, "minimum length");
    gen_cmd->add_option("--k-max", gen.k_max, "maximum length");
    gen_cmd->add_option("--alphabet", gen.alphabet, "alphabet symbols (default ACGT)");
    gen_cmd->add_option("--profile", gen.profile, "per-symbol content fractions");
    gen_cmd->add_option("--gc", gen.gc, "subset content target SYMBOLS:lo:hi");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--out", gen.out, "output path")->required();
    gen_cmd->add_option("--format", gen.format, "lines or fasta")
        ->check(CLI::IsMember({"lines", "fasta"}));

    RunOptions run;
    CLI::App* run_cmd = app.add_subcommand("run", "run one algorithm and report costs");
    add_run_flags(run_cmd, run, false);

    RunOptions cmp;
    CLI::App* cmp_cmd = app.add_subcommand("compare", "run several algorithms side by side");
    add_run_flags(cmp_cmd, cmp, true);

    ExactOptions exact;
    CLI::App* exact_cmd = app.add_subcommand("exact", "exhaustive optimal partition");
    add_input_flags(exact_cmd, exact.input);
    exact_cmd->add_option("--m", exact.num_sets, "number of sets")->required();
    exact_cmd->add_option("--n", exact.capacity, "sequences per set")->required();
    exact_cmd->add_option("--cost", exact.cost, "cost kind: mm or sc")
        ->check(CLI::IsMember({"mm", "sc"}));
    exact_cmd->add_option("--state-budget", exact.state_budget, "max states for exact DP");
    exact_cmd->add_option("--partition-budget", exact.partition_budget,
                          "max partitions for exhaustive search");
    exact_cmd->add_option("--save-partition", exact.save_partition_path,
                          "write the optimal partition to this file");

    try {
        app.parse(argc, argv);
        if (gen_cmd->parsed()) return cmd_gen(gen);
        if (run_cmd->parsed()) return cmd_run(run, false);
        if (cmp_cmd->parsed()) return cmd_run(cmp, true);
        if (exact_cmd->parsed()) return cmd_exact(exact);
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const pmss::Error& e) {
        std::cerr << "pmss: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "pmss: unexpected error: " << e.what() << "\n";
        return 2;
    }
}
