#include "pmss/metrics.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>

#include "pmss/baselines.hpp"
#include "pmss/distribution.hpp"
#include "pmss/parallel.hpp"
#include "pmss/rng.hpp"

namespace pmss {

std::uint64_t cost_mm(std::span<const DepositionResult> results) {
    std::uint64_t total = 0;
    for (const DepositionResult& r : results)
        total += static_cast<std::uint64_t>(r.steps()) * r.completion.size();
    return total;
}

std::uint64_t cost_sc(std::span<const DepositionResult> results) {
    std::uint64_t total = 0;
    for (const DepositionResult& r : results)
        for (int c : r.completion) total += static_cast<std::uint64_t>(c);
    return total;
}

double performance_ratio(double cost, std::size_t q, std::size_t K, std::size_t M,
                         std::size_t N) {
    if (q == 0 || K == 0 || M == 0 || N == 0)
        throw ParameterError("performance ratio denominator q*K*M*N must be positive");
    return cost / (static_cast<double>(q) * static_cast<double>(K) *
                   static_cast<double>(M) * static_cast<double>(N));
}

std::string algo_name(Algo a) {
    switch (a) {
        case Algo::Alphabet: return "alphabet";
        case Algo::ShSingle: return "sh-single";
        case Algo::LapSingle: return "lap-single";
        case Algo::GreedyA: return "greedy-a";
        case Algo::GreedyD: return "greedy-d";
        case Algo::DdaSh: return "dda-sh";
        case Algo::DdaLap: return "dda-lap";
        case Algo::DdaStarSh: return "dda*-sh";
        case Algo::DdaStarLap: return "dda*-lap";
        case Algo::ExactMm: return "exact-mm";
        case Algo::ExactSc: return "exact-sc";
    }
    return "?";
}

std::optional<Algo> algo_from_name(std::string_view name) {
    for (Algo a : {Algo::Alphabet, Algo::ShSingle, Algo::LapSingle, Algo::GreedyA,
                   Algo::GreedyD, Algo::DdaSh, Algo::DdaLap, Algo::DdaStarSh,
                   Algo::DdaStarLap, Algo::ExactMm, Algo::ExactSc})
        if (algo_name(a) == name) return a;
    return std::nullopt;
}

std::vector<Algo> default_algos() {
    return {Algo::Alphabet, Algo::ShSingle, Algo::LapSingle, Algo::GreedyA,
            Algo::GreedyD,  Algo::DdaSh,    Algo::DdaLap,    Algo::DdaStarSh,
            Algo::DdaStarLap, Algo::ExactMm, Algo::ExactSc};
}

namespace {

// Deposit every nonempty set of the partition; empty sets (possible when
// the pool does not fill M·N) contribute zero-step results.
std::vector<DepositionResult> deposit_sets(const MultiSequencesSets& mss,
                                           const std::function<DepositionResult(const SequencesSet&)>& deposit,
                                           unsigned threads) {
    std::vector<DepositionResult> results(mss.sets.size());
    parallel_for(mss.sets.size(), threads, [&](std::size_t i) {
        if (!mss.sets[i].sequences.empty()) results[i] = deposit(mss.sets[i]);
    });
    return results;
}

struct AlgoRun {
    Partition partition;
    std::vector<DepositionResult> per_set;
    std::size_t row_sets = 1;
    std::size_t row_capacity = 1;
};

AlgoRun run_algo(Algo algo, const Dataset& dataset, const CompareConfig& cfg) {
    const std::size_t n = dataset.sequences.size();
    const Alphabet& alphabet = dataset.alphabet;
    AlgoRun run;
    run.row_sets = cfg.num_sets;
    run.row_capacity = cfg.capacity;

    auto sh = [&](const SequencesSet& s) { return sh_deposit(s, alphabet); };
    auto lap = [&](const SequencesSet& s) { return lap_deposit(s, alphabet, cfg.lookahead); };
    auto single_set = [&]() {
        SequencesSet all;
        all.capacity = n;
        all.sequences = dataset.sequences;
        return all;
    };

    switch (algo) {
        case Algo::Alphabet: {
            run.partition = identity_partition(n, cfg.num_sets, cfg.capacity);
            run.per_set = deposit_sets(
                materialize(dataset, run.partition, cfg.capacity),
                [&](const SequencesSet& s) { return alphabet_deposit(s, alphabet); },
                cfg.threads);
            break;
        }
        case Algo::ShSingle: {
            run.partition = identity_partition(n, 1, n);
            run.per_set.push_back(sh_deposit(single_set(), alphabet));
            run.row_sets = 1;
            run.row_capacity = n;
            break;
        }
        case Algo::LapSingle: {
            run.partition = identity_partition(n, 1, n);
            run.per_set.push_back(lap_deposit(single_set(), alphabet, cfg.lookahead));
            run.row_sets = 1;
            run.row_capacity = n;
            break;
        }
        case Algo::GreedyA: {
            BaselineResult r = greedy_a(dataset.sequences, alphabet, cfg.num_sets, cfg.capacity);
            run.partition = std::move(r.partition);
            run.per_set = std::move(r.per_set);
            break;
        }
        case Algo::GreedyD: {
            BaselineResult r = greedy_d(dataset.sequences, alphabet, cfg.num_sets, cfg.capacity);
            run.partition = std::move(r.partition);
            run.per_set = std::move(r.per_set);
            break;
        }
        case Algo::DdaSh:
        case Algo::DdaLap: {
            run.partition = dda_distribute(dataset.sequences, alphabet, cfg.num_sets,
                                           cfg.capacity, cfg.bias_symbols);
            run.per_set = deposit_sets(materialize(dataset, run.partition, cfg.capacity),
                                       algo == Algo::DdaSh ? std::function(sh) : std::function(lap),
                                       cfg.threads);
            break;
        }
        case Algo::DdaStarSh:
        case Algo::DdaStarLap: {
            run.partition = dda_star_distribute(dataset.sequences, alphabet, cfg.num_sets,
                                                cfg.capacity, cfg.window,
                                                derive_seed(cfg.seed, RngStream::em_init));
            run.per_set = deposit_sets(materialize(dataset, run.partition, cfg.capacity),
                                       algo == Algo::DdaStarSh ? std::function(sh) : std::function(lap),
                                       cfg.threads);
            break;
        }
        case Algo::ExactMm:
        case Algo::ExactSc: {
            const CostKind kind = algo == Algo::ExactMm ? CostKind::MM : CostKind::SC;
            ExactResult r = exhaustive_optimal(dataset.sequences, alphabet, cfg.num_sets,
                                               cfg.capacity, kind, cfg.partition_budget,
                                               cfg.state_budget);
            run.partition = std::move(r.optimal_partition);
            MultiSequencesSets mss = materialize(dataset, run.partition, cfg.capacity);
            run.per_set.resize(mss.sets.size());
            for (std::size_t i = 0; i < mss.sets.size(); ++i) {
                if (mss.sets[i].sequences.empty()) continue;
                std::vector<SymbolIndex> witness;
                if (kind == CostKind::MM)
                    witness = scs_dp(mss.sets[i].sequences, cfg.state_budget).witness;
                else
                    witness = scs_min_completion(mss.sets[i].sequences, cfg.state_budget).witness;
                run.per_set[i].process_sequence = std::move(witness);
                run.per_set[i].completion =
                    greedy_completion(run.per_set[i].process_sequence, mss.sets[i]);
            }
            break;
        }
    }
    return run;
}

} // namespace

std::vector<CostReport> compare(const std::vector<Algo>& algorithms, const Dataset& dataset,
                                const CompareConfig& config) {
    std::vector<CostReport> reports;
    reports.reserve(algorithms.size());
    const std::size_t q = dataset.alphabet.size();
    const std::size_t K = dataset.max_length;
    std::map<std::size_t, std::uint64_t> bound_by_sets;
    for (Algo algo : algorithms) {
        auto start = std::chrono::steady_clock::now();
        AlgoRun run = run_algo(algo, dataset, config);
        auto stop = std::chrono::steady_clock::now();

        CostReport report;
        report.algorithm = algo_name(algo);
        report.cost_mm = cost_mm(run.per_set);
        report.cost_sc = cost_sc(run.per_set);
        report.ratio_mm = performance_ratio(static_cast<double>(report.cost_mm), q, K,
                                            run.row_sets, run.row_capacity);
        report.ratio_sc = performance_ratio(static_cast<double>(report.cost_sc), q, K,
                                            run.row_sets, run.row_capacity);
        for (const DepositionResult& r : run.per_set) report.per_set_steps.push_back(r.steps());
        if (config.with_lower_bound) {
            auto it = bound_by_sets.find(run.row_sets);
            if (it == bound_by_sets.end())
                it = bound_by_sets
                         .emplace(run.row_sets,
                                  lower_bound(dataset.sequences, dataset.alphabet,
                                              run.row_sets, config.state_budget))
                         .first;
            report.lower_bound = it->second;
        }
        report.wall_ms =
            std::chrono::duration<double, std::milli>(stop - start).count();
        report.partition = std::move(run.partition);
        report.per_set = std::move(run.per_set);
        reports.push_back(std::move(report));
    }
    return reports;
}

void write_tsv(std::ostream& out, std::span<const CostReport> reports, bool timing) {
    out << "algorithm\tcost_mm\tratio_mm\tcost_sc\tratio_sc\tper_set_steps\tlower_bound";
    if (timing) out << "\twall_ms";
    out << "\n";
    for (const CostReport& r : reports) {
        out << r.algorithm << '\t' << r.cost_mm << '\t' << std::fixed << std::setprecision(6)
            << r.ratio_mm << '\t' << r.cost_sc << '\t' << r.ratio_sc << '\t';
        for (std::size_t i = 0; i < r.per_set_steps.size(); ++i) {
            if (i) out << ',';
            out << r.per_set_steps[i];
        }
        out << '\t' << r.lower_bound;
        if (timing) out << '\t' << std::setprecision(3) << r.wall_ms;
        out << "\n";
    }
}

} // namespace pmss
