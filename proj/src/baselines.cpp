#include "pmss/baselines.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace pmss {

std::vector<SymbolIndex> pairwise_scs(std::span<const SymbolIndex> a,
                                      std::span<const SymbolIndex> b) {
    const std::size_t la = a.size(), lb = b.size();
    // dp[i][j]: SCS length of a[i:] and b[j:].
    std::vector<std::uint32_t> dp((la + 1) * (lb + 1), 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint32_t& {
        return dp[i * (lb + 1) + j];
    };
    for (std::size_t i = 0; i <= la; ++i) at(i, lb) = static_cast<std::uint32_t>(la - i);
    for (std::size_t j = 0; j <= lb; ++j) at(la, j) = static_cast<std::uint32_t>(lb - j);
    for (std::size_t i = la; i-- > 0;) {
        for (std::size_t j = lb; j-- > 0;) {
            if (a[i] == b[j])
                at(i, j) = 1 + at(i + 1, j + 1);
            else
                at(i, j) = 1 + std::min(at(i + 1, j), at(i, j + 1));
        }
    }
    std::vector<SymbolIndex> out;
    out.reserve(at(0, 0));
    std::size_t i = 0, j = 0;
    while (i < la || j < lb) {
        if (i < la && j < lb && a[i] == b[j]) {
            out.push_back(a[i]);
            ++i;
            ++j;
        } else if (j == lb || (i < la && at(i + 1, j) <= at(i, j + 1))) {
            out.push_back(a[i]);
            ++i;
        } else {
            out.push_back(b[j]);
            ++j;
        }
    }
    return out;
}

namespace {

struct MergeNode {
    std::vector<SymbolIndex> super;
    std::vector<std::uint32_t> members; // ascending dataset positions
    std::uint64_t rank = 0;
};

void require_full_instance(std::size_t n, std::size_t num_sets, std::size_t capacity) {
    if (num_sets == 0 || capacity == 0)
        throw ParameterError("need at least one set with positive capacity");
    if (n != num_sets * capacity)
        throw CapacityError("expected exactly " + std::to_string(num_sets * capacity) +
                            " sequences for " + std::to_string(num_sets) + " sets of " +
                            std::to_string(capacity) + ", got " + std::to_string(n));
}

} // namespace

BaselineResult greedy_a(std::span<const Sequence> seqs, const Alphabet& alphabet,
                        std::size_t num_sets, std::size_t capacity) {
    const std::size_t n = seqs.size();
    require_full_instance(n, num_sets, capacity);
    if (n > kGreedyAMaxSequences)
        throw CapacityError("pairwise agglomeration refuses " + std::to_string(n) +
                            " sequences (limit " + std::to_string(kGreedyAMaxSequences) + ")");

    std::vector<MergeNode> pool;
    pool.reserve(n);
    std::uint64_t next_rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        MergeNode node;
        node.super = seqs[i].symbols;
        node.members = {static_cast<std::uint32_t>(i)};
        node.rank = next_rank++;
        pool.push_back(std::move(node));
    }

    std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> scs_len;
    auto pair_len = [&](const MergeNode& a, const MergeNode& b) {
        auto key = std::make_pair(a.rank, b.rank);
        auto it = scs_len.find(key);
        if (it != scs_len.end()) return it->second;
        std::size_t len = pairwise_scs(a.super, b.super).size();
        scs_len.emplace(key, len);
        return len;
    };

    std::vector<std::vector<std::uint32_t>> emitted_sets;
    std::vector<std::vector<SymbolIndex>> emitted_supers;
    while (emitted_sets.size() < num_sets) {
        // Emit any node that reached capacity, oldest first.
        bool emitted = false;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            if (pool[i].members.size() < capacity) continue;
            MergeNode node = std::move(pool[i]);
            pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
            emitted_sets.emplace_back(node.members.begin(),
                                      node.members.begin() + static_cast<std::ptrdiff_t>(capacity));
            emitted_supers.push_back(node.super);
            for (std::size_t e = capacity; e < node.members.size(); ++e) {
                MergeNode single;
                single.super = seqs[node.members[e]].symbols;
                single.members = {node.members[e]};
                single.rank = next_rank++;
                pool.push_back(std::move(single));
            }
            emitted = true;
            break;
        }
        if (emitted) continue;

        // No node is full: merge the pair with the shortest pairwise SCS,
        // ties to the smallest combined member count, then oldest nodes.
        std::size_t best_i = 0, best_j = 1;
        std::tuple<std::size_t, std::size_t, std::uint64_t, std::uint64_t> best_key{
            SIZE_MAX, SIZE_MAX, 0, 0};
        for (std::size_t i = 0; i < pool.size(); ++i) {
            for (std::size_t j = i + 1; j < pool.size(); ++j) {
                std::tuple<std::size_t, std::size_t, std::uint64_t, std::uint64_t> key{
                    pair_len(pool[i], pool[j]), pool[i].members.size() + pool[j].members.size(),
                    pool[i].rank, pool[j].rank};
                if (key < best_key) {
                    best_key = key;
                    best_i = i;
                    best_j = j;
                }
            }
        }
        MergeNode merged;
        merged.super = pairwise_scs(pool[best_i].super, pool[best_j].super);
        merged.members.resize(pool[best_i].members.size() + pool[best_j].members.size());
        std::merge(pool[best_i].members.begin(), pool[best_i].members.end(),
                   pool[best_j].members.begin(), pool[best_j].members.end(),
                   merged.members.begin());
        merged.rank = next_rank++;
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_j));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_i));
        pool.push_back(std::move(merged));
    }

    BaselineResult result;
    result.partition.num_sets = static_cast<std::uint32_t>(num_sets);
    result.partition.set_of.assign(n, 0);
    for (std::size_t s = 0; s < emitted_sets.size(); ++s)
        for (std::uint32_t i : emitted_sets[s])
            result.partition.set_of[i] = static_cast<std::uint32_t>(s);
    for (std::size_t s = 0; s < emitted_sets.size(); ++s) {
        SequencesSet set;
        set.capacity = capacity;
        for (std::uint32_t i : emitted_sets[s]) set.sequences.push_back(seqs[i]);
        DepositionResult dep;
        dep.process_sequence = lap_reduce(emitted_supers[s], set);
        dep.completion = greedy_completion(dep.process_sequence, set);
        result.per_set.push_back(std::move(dep));
    }
    return result;
}

BaselineResult greedy_d(std::span<const Sequence> seqs, const Alphabet& alphabet,
                        std::size_t num_sets, std::size_t capacity) {
    const std::size_t n = seqs.size();
    require_full_instance(n, num_sets, capacity);

    std::vector<std::uint32_t> remaining(n);
    for (std::size_t i = 0; i < n; ++i) remaining[i] = static_cast<std::uint32_t>(i);

    BaselineResult result;
    result.partition.num_sets = static_cast<std::uint32_t>(num_sets);
    result.partition.set_of.assign(n, 0);
    for (std::size_t round = 0; round < num_sets; ++round) {
        SequencesSet view;
        view.capacity = remaining.size();
        for (std::uint32_t i : remaining) view.sequences.push_back(seqs[i]);
        DepositionResult dep = sh_deposit(view, alphabet);
        std::vector<std::size_t> order(remaining.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return dep.completion[a] < dep.completion[b];
        });
        std::vector<std::uint32_t> taken;
        for (std::size_t k = 0; k < capacity; ++k) taken.push_back(remaining[order[k]]);
        std::sort(taken.begin(), taken.end());
        for (std::uint32_t i : taken) result.partition.set_of[i] = static_cast<std::uint32_t>(round);

        SequencesSet emitted;
        emitted.capacity = capacity;
        for (std::uint32_t i : taken) emitted.sequences.push_back(seqs[i]);
        result.per_set.push_back(sh_deposit(emitted, alphabet));

        std::vector<std::uint32_t> rest;
        rest.reserve(remaining.size() - capacity);
        std::vector<bool> is_taken(remaining.size(), false);
        for (std::size_t k = 0; k < capacity; ++k) is_taken[order[k]] = true;
        for (std::size_t k = 0; k < remaining.size(); ++k)
            if (!is_taken[k]) rest.push_back(remaining[k]);
        remaining = std::move(rest);
    }
    return result;
}

} // namespace pmss
