#include "pmss/exact.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace pmss {

namespace {

// Distinct nonempty sequences with multiplicities, plus the mixed-radix
// layout of the product lattice: state = Σ pos_i · stride_i, where pos_i
// counts symbols of sequence i already covered.
struct Lattice {
    std::vector<std::vector<SymbolIndex>> seqs;
    std::vector<std::uint64_t> weight;
    std::vector<std::uint64_t> stride;
    std::uint64_t states = 1;
    std::size_t symbol_range = 0;

    Lattice(std::span<const Sequence> input, std::uint64_t state_budget) {
        for (const Sequence& s : input) {
            if (s.symbols.empty()) continue;
            bool found = false;
            for (std::size_t i = 0; i < seqs.size(); ++i) {
                if (seqs[i] == s.symbols) {
                    ++weight[i];
                    found = true;
                    break;
                }
            }
            if (!found) {
                seqs.push_back(s.symbols);
                weight.push_back(1);
            }
            for (SymbolIndex c : s.symbols)
                symbol_range = std::max<std::size_t>(symbol_range, c + 1);
        }
        std::uint64_t total_len = 0;
        for (const auto& s : seqs) {
            stride.push_back(states);
            unsigned __int128 next = static_cast<unsigned __int128>(states) * (s.size() + 1);
            if (next > state_budget)
                throw BudgetError("supersequence lattice needs more than " +
                                  std::to_string(state_budget) + " states");
            states = static_cast<std::uint64_t>(next);
            total_len += s.size();
        }
        if (total_len > 65000)
            throw BudgetError("combined sequence length " + std::to_string(total_len) +
                              " exceeds the supported value range");
    }

    std::size_t count() const { return seqs.size(); }
};

// Fills dp[state] = exact SCS length of the uncovered suffixes at state.
std::vector<std::uint16_t> solve_lengths(const Lattice& lat) {
    const std::size_t n = lat.count();
    std::vector<std::uint16_t> dp(lat.states, 0);
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = lat.seqs[i].size();
    std::vector<std::uint64_t> delta(lat.symbol_range, 0);
    std::vector<std::size_t> dirty;
    dirty.reserve(n);
    for (std::uint64_t idx = lat.states - 1; idx-- > 0;) {
        for (std::size_t d = 0;; ++d) {
            if (pos[d] > 0) {
                --pos[d];
                break;
            }
            pos[d] = lat.seqs[d].size();
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (pos[i] < lat.seqs[i].size()) {
                std::size_t s = lat.seqs[i][pos[i]];
                if (delta[s] == 0) dirty.push_back(s);
                delta[s] += lat.stride[i];
            }
        }
        std::uint16_t best = std::numeric_limits<std::uint16_t>::max();
        for (std::size_t s : dirty) best = std::min(best, dp[idx + delta[s]]);
        dp[idx] = static_cast<std::uint16_t>(best + 1);
        for (std::size_t s : dirty) delta[s] = 0;
        dirty.clear();
    }
    return dp;
}

// Per-state symbol advance table for one state, shared by the walkers.
struct StateDeltas {
    std::vector<std::uint64_t> delta;
    std::vector<std::size_t> symbols; // ascending

    explicit StateDeltas(std::size_t range) : delta(range, 0) {}

    void compute(const Lattice& lat, const std::vector<std::size_t>& pos) {
        for (std::size_t s : symbols) delta[s] = 0;
        symbols.clear();
        for (std::size_t i = 0; i < lat.count(); ++i) {
            if (pos[i] < lat.seqs[i].size()) {
                std::size_t s = lat.seqs[i][pos[i]];
                if (delta[s] == 0) symbols.push_back(s);
                delta[s] += lat.stride[i];
            }
        }
        std::sort(symbols.begin(), symbols.end());
    }
};

void advance(const Lattice& lat, std::vector<std::size_t>& pos, std::uint64_t& idx,
             std::size_t symbol, std::uint64_t delta) {
    for (std::size_t i = 0; i < lat.count(); ++i)
        if (pos[i] < lat.seqs[i].size() && lat.seqs[i][pos[i]] == symbol) ++pos[i];
    idx += delta;
}

} // namespace

ScsResult scs_dp(std::span<const Sequence> seqs, std::uint64_t state_budget) {
    Lattice lat(seqs, state_budget);
    ScsResult result;
    if (lat.count() == 0) return result;
    if (lat.count() == 1) {
        result.witness = lat.seqs[0];
        result.length = result.witness.size();
        return result;
    }
    std::vector<std::uint16_t> dp = solve_lengths(lat);
    result.length = dp[0];
    result.witness.reserve(result.length);
    std::vector<std::size_t> pos(lat.count(), 0);
    std::uint64_t idx = 0;
    StateDeltas deltas(lat.symbol_range);
    while (idx != lat.states - 1) {
        deltas.compute(lat, pos);
        for (std::size_t s : deltas.symbols) {
            if (dp[idx + deltas.delta[s]] + 1 == dp[idx]) {
                result.witness.push_back(static_cast<SymbolIndex>(s));
                advance(lat, pos, idx, s, deltas.delta[s]);
                break;
            }
        }
    }
    return result;
}

ScsScheduleResult scs_min_completion(std::span<const Sequence> seqs,
                                     std::uint64_t state_budget) {
    Lattice lat(seqs, state_budget);
    ScsScheduleResult result;
    if (lat.count() == 0) return result;

    std::vector<std::uint16_t> dp = solve_lengths(lat);
    result.length = dp[0];

    // cs[state]: minimum of Σ (weighted completion steps counted from this
    // state) over continuations of DP-optimal length.  Appending a symbol
    // charges one step to every still-incomplete sequence, so
    // cs = incomplete_weight + min over length-preserving moves.
    std::vector<std::uint64_t> cs(lat.states, 0);
    const std::size_t n = lat.count();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[i] = lat.seqs[i].size();
    std::vector<std::uint64_t> delta(lat.symbol_range, 0);
    std::vector<std::size_t> dirty;
    for (std::uint64_t idx = lat.states - 1; idx-- > 0;) {
        for (std::size_t d = 0;; ++d) {
            if (pos[d] > 0) {
                --pos[d];
                break;
            }
            pos[d] = lat.seqs[d].size();
        }
        std::uint64_t incomplete = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (pos[i] < lat.seqs[i].size()) {
                incomplete += lat.weight[i];
                std::size_t s = lat.seqs[i][pos[i]];
                if (delta[s] == 0) dirty.push_back(s);
                delta[s] += lat.stride[i];
            }
        }
        std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
        for (std::size_t s : dirty)
            if (dp[idx + delta[s]] + 1 == dp[idx])
                best = std::min(best, cs[idx + delta[s]]);
        cs[idx] = incomplete + best;
        for (std::size_t s : dirty) delta[s] = 0;
        dirty.clear();
    }
    result.completion_sum = cs[0];

    result.witness.reserve(result.length);
    std::vector<std::size_t> wpos(n, 0);
    std::uint64_t idx = 0;
    StateDeltas deltas(lat.symbol_range);
    while (idx != lat.states - 1) {
        deltas.compute(lat, wpos);
        std::uint64_t incomplete = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (wpos[i] < lat.seqs[i].size()) incomplete += lat.weight[i];
        for (std::size_t s : deltas.symbols) {
            std::uint64_t next = idx + deltas.delta[s];
            if (dp[next] + 1 == dp[idx] && cs[next] + incomplete == cs[idx]) {
                result.witness.push_back(static_cast<SymbolIndex>(s));
                advance(lat, wpos, idx, s, deltas.delta[s]);
                break;
            }
        }
    }
    return result;
}

namespace {

std::uint64_t saturating_partition_count(std::size_t n, std::size_t capacity,
                                         std::uint64_t cap) {
    // Product of C(n-1, capacity-1) · C(n-capacity-1, capacity-1) · ...
    unsigned __int128 total = 1;
    for (std::size_t left = n; left > 0; left -= capacity) {
        unsigned __int128 choose = 1;
        for (std::size_t j = 1; j < capacity; ++j) {
            choose = choose * (left - j) / j; // exact: prefix products of C are integral
            if (choose > cap) return cap + 1;
        }
        total *= choose;
        if (total > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(total);
}

struct PartitionSearch {
    std::span<const Sequence> seqs;
    std::size_t num_sets;
    std::size_t capacity;
    CostKind kind;
    std::uint64_t state_budget;

    std::vector<std::uint32_t> assign;
    std::vector<std::vector<std::uint32_t>> sets;
    std::vector<std::size_t> fill;
    std::size_t open = 0;
    std::uint64_t partial = 0;

    std::uint64_t best_cost = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint32_t> best_assign;

    std::map<std::vector<std::uint32_t>, std::pair<std::uint64_t, std::size_t>> memo;

    PartitionSearch(std::span<const Sequence> s, std::size_t m, std::size_t n,
                    CostKind k, std::uint64_t sb)
        : seqs(s), num_sets(m), capacity(n), kind(k), state_budget(sb),
          assign(s.size(), 0), sets(m), fill(m, 0) {}

    // Cost contribution and SCS length of one full set.
    std::pair<std::uint64_t, std::size_t> evaluate(const std::vector<std::uint32_t>& members) {
        auto it = memo.find(members);
        if (it != memo.end()) return it->second;
        std::vector<Sequence> group;
        group.reserve(members.size());
        for (std::uint32_t i : members) group.push_back(seqs[i]);
        std::pair<std::uint64_t, std::size_t> value;
        if (kind == CostKind::MM) {
            ScsResult r = scs_dp(group, state_budget);
            value = {static_cast<std::uint64_t>(r.length) * members.size(), r.length};
        } else {
            ScsScheduleResult r = scs_min_completion(group, state_budget);
            value = {r.completion_sum, r.length};
        }
        memo.emplace(members, value);
        return value;
    }

    void place(std::size_t item) {
        if (item == seqs.size()) {
            if (partial < best_cost) {
                best_cost = partial;
                best_assign = assign;
            }
            return;
        }
        // Canonical order: an item may join any already-open set with room,
        // or open the next fresh set, so each unordered partition is visited
        // exactly once.
        const std::size_t limit = std::min(open + 1, num_sets);
        for (std::size_t s = 0; s < limit; ++s) {
            if (fill[s] == capacity) continue;
            const bool opens = s == open;
            if (opens) ++open;
            sets[s].push_back(static_cast<std::uint32_t>(item));
            ++fill[s];
            assign[item] = static_cast<std::uint32_t>(s);
            std::uint64_t contribution = 0;
            if (fill[s] == capacity) contribution = evaluate(sets[s]).first;
            partial += contribution;
            if (partial < best_cost) place(item + 1);
            partial -= contribution;
            --fill[s];
            sets[s].pop_back();
            if (opens) --open;
        }
    }
};

} // namespace

ExactResult exhaustive_optimal(std::span<const Sequence> seqs, const Alphabet& alphabet,
                               std::size_t num_sets, std::size_t capacity, CostKind kind,
                               std::uint64_t partition_budget, std::uint64_t state_budget) {
    (void)alphabet;
    const std::size_t n = seqs.size();
    if (num_sets == 0 || capacity == 0)
        throw ParameterError("need at least one set with positive capacity");
    if (n != num_sets * capacity)
        throw CapacityError("exhaustive search expects exactly " +
                            std::to_string(num_sets * capacity) + " sequences, got " +
                            std::to_string(n));
    std::uint64_t count = saturating_partition_count(n, capacity, partition_budget);
    if (count > partition_budget)
        throw BudgetError("instance has more than " + std::to_string(partition_budget) +
                          " partitions");

    PartitionSearch search(seqs, num_sets, capacity, kind, state_budget);
    search.place(0);

    ExactResult result;
    result.cost = search.best_cost;
    result.optimal_partition.num_sets = static_cast<std::uint32_t>(num_sets);
    result.optimal_partition.set_of = search.best_assign;
    std::vector<std::vector<std::uint32_t>> sets(num_sets);
    for (std::size_t i = 0; i < n; ++i)
        sets[search.best_assign[i]].push_back(static_cast<std::uint32_t>(i));
    for (const auto& members : sets)
        result.per_set_lengths.push_back(search.evaluate(members).second);
    return result;
}

std::uint64_t lower_bound(std::span<const Sequence> seqs, const Alphabet& alphabet,
                          std::size_t num_sets, std::uint64_t state_budget) {
    if (seqs.empty()) throw ParameterError("lower bound needs a nonempty pool");
    const std::size_t q = alphabet.size();
    const std::size_t n = seqs.size();
    std::vector<std::vector<std::size_t>> counts(n, std::vector<std::size_t>(q, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (SymbolIndex c : seqs[i].symbols) ++counts[i][c];

    // One pick per symbol: the sequence richest in it (ties: input order).
    // A sequence picked for several symbols is kept once with its best count.
    std::vector<std::size_t> pick_count(n, 0);
    std::vector<std::uint32_t> picks;
    for (std::size_t s = 0; s < q; ++s) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (counts[i][s] > counts[best][s]) best = i;
        if (pick_count[best] == 0) picks.push_back(static_cast<std::uint32_t>(best));
        pick_count[best] = std::max(pick_count[best], counts[best][s]);
    }

    // Shed the weakest picks until the lattice fits the budget.
    auto fits = [&](const std::vector<std::uint32_t>& chosen) {
        unsigned __int128 states = 1;
        for (std::uint32_t i : chosen) {
            states *= seqs[i].symbols.size() + 1;
            if (states > state_budget) return false;
        }
        return true;
    };
    while (picks.size() > 1 && !fits(picks)) {
        std::size_t drop = 0;
        for (std::size_t k = 1; k < picks.size(); ++k)
            if (pick_count[picks[k]] < pick_count[picks[drop]]) drop = k;
        picks.erase(picks.begin() + static_cast<std::ptrdiff_t>(drop));
    }

    std::vector<Sequence> group;
    for (std::uint32_t i : picks) group.push_back(seqs[i]);
    std::size_t scs_length;
    if (picks.size() == 1 || !fits(picks))
        scs_length = group.front().symbols.size();
    else
        scs_length = scs_dp(group, state_budget).length;
    return static_cast<std::uint64_t>(scs_length) * num_sets;
}

} // namespace pmss
