#include "pmss/deposition.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>

namespace pmss {

namespace {

// Shared frontier state: one cursor per sequence, advanced as the process
// sequence grows.  Sequences are referenced, never copied.
struct Frontiers {
    std::vector<std::span<const SymbolIndex>> seqs;
    std::vector<std::size_t> pos;
    std::size_t incomplete = 0;

    explicit Frontiers(const SequencesSet& set) {
        seqs.reserve(set.sequences.size());
        for (const Sequence& s : set.sequences) seqs.emplace_back(s.symbols);
        init();
    }

    explicit Frontiers(const std::vector<const Sequence*>& group) {
        seqs.reserve(group.size());
        for (const Sequence* s : group) seqs.emplace_back(s->symbols);
        init();
    }

    void init() {
        pos.assign(seqs.size(), 0);
        incomplete = 0;
        for (const auto& s : seqs)
            if (!s.empty()) ++incomplete;
    }

    // Advance every cursor sitting on `symbol`.  Advanced sequence indices
    // are appended to `moved` so the move can be undone.
    void apply(SymbolIndex symbol, std::vector<std::uint32_t>& moved) {
        for (std::size_t i = 0; i < seqs.size(); ++i) {
            if (pos[i] < seqs[i].size() && seqs[i][pos[i]] == symbol) {
                if (++pos[i] == seqs[i].size()) --incomplete;
                moved.push_back(static_cast<std::uint32_t>(i));
            }
        }
    }

    void undo(const std::vector<std::uint32_t>& moved) {
        for (std::uint32_t i : moved) {
            if (pos[i] == seqs[i].size()) ++incomplete;
            --pos[i];
        }
    }
};

void require_nonempty(const SequencesSet& set) {
    if (set.sequences.empty())
        throw EmptySetError("cannot deposit an empty sequences set");
}

// Candidate search for one look-ahead round.  Extensions are enumerated
// depth-first in alphabet order, applying only productive symbols (each
// must advance at least one cursor) and stopping early once every sequence
// is complete.  Skipping unproductive symbols loses nothing: dropping a
// dead symbol from any extension frees a step that can only consume more.
// The first candidate seen with the highest total consumption wins, which
// makes the tie-break "lexicographically smallest" by construction, and
// guarantees every committed symbol consumes at least one character, so
// deposition always terminates.
struct LookAheadSearch {
    Frontiers& front;
    std::size_t q;
    std::size_t depth_limit;
    std::vector<std::vector<std::uint32_t>> scratch;
    std::vector<SymbolIndex> current, best;
    std::size_t best_consumed = 0;
    bool found = false;

    LookAheadSearch(Frontiers& f, std::size_t q_, std::size_t m)
        : front(f), q(q_), depth_limit(m), scratch(m) {}

    void run() { descend(0, 0); }

    void descend(std::size_t depth, std::size_t consumed) {
        if (depth == depth_limit || front.incomplete == 0) {
            if (!found || consumed > best_consumed) {
                found = true;
                best_consumed = consumed;
                best = current;
            }
            return;
        }
        for (std::size_t s = 0; s < q; ++s) {
            auto& moved = scratch[depth];
            moved.clear();
            front.apply(static_cast<SymbolIndex>(s), moved);
            if (moved.empty()) continue;
            current.push_back(static_cast<SymbolIndex>(s));
            descend(depth + 1, consumed + moved.size());
            current.pop_back();
            front.undo(moved);
        }
    }
};

std::atomic<bool> lookahead_reduced_logged{false};

std::size_t effective_lookahead(std::size_t q, int m) {
    if (q > 8 && m >= 3) {
        if (!lookahead_reduced_logged.exchange(true))
            std::cerr << "pmss: look-ahead depth reduced to 2 for alphabet size "
                      << q << "\n";
        return 2;
    }
    return static_cast<std::size_t>(m);
}

} // namespace

std::map<std::string, int> DepositionResult::completion_by_id(const SequencesSet& set) const {
    std::map<std::string, int> out;
    for (std::size_t i = 0; i < set.sequences.size() && i < completion.size(); ++i)
        out[set.sequences[i].id] = completion[i];
    return out;
}

bool is_common_supersequence(std::span<const SymbolIndex> t, const SequencesSet& set) {
    for (const Sequence& s : set.sequences) {
        std::size_t k = 0;
        for (SymbolIndex c : t) {
            if (k < s.symbols.size() && s.symbols[k] == c) ++k;
        }
        if (k < s.symbols.size()) return false;
    }
    return true;
}

std::vector<int> greedy_completion(std::span<const SymbolIndex> t, const SequencesSet& set) {
    std::vector<int> completion(set.sequences.size(), 0);
    for (std::size_t i = 0; i < set.sequences.size(); ++i) {
        const auto& s = set.sequences[i].symbols;
        if (s.empty()) continue;
        std::size_t k = 0;
        int step = 0;
        for (SymbolIndex c : t) {
            ++step;
            if (s[k] == c && ++k == s.size()) {
                completion[i] = step;
                break;
            }
        }
        if (k < s.size())
            throw NotASupersequenceError("sequence " + set.sequences[i].id +
                                         " does not embed into the process sequence");
    }
    return completion;
}

DepositionResult alphabet_deposit(const SequencesSet& set, const Alphabet& alphabet) {
    require_nonempty(set);
    const std::size_t q = alphabet.size();
    Frontiers front(set);
    DepositionResult result;
    result.completion.assign(set.sequences.size(), 0);
    int step = 0;
    while (front.incomplete > 0) {
        SymbolIndex symbol = static_cast<SymbolIndex>(step % q);
        ++step;
        result.process_sequence.push_back(symbol);
        for (std::size_t i = 0; i < front.seqs.size(); ++i) {
            auto& p = front.pos[i];
            if (p < front.seqs[i].size() && front.seqs[i][p] == symbol) {
                if (++p == front.seqs[i].size()) {
                    result.completion[i] = step;
                    --front.incomplete;
                }
            }
        }
    }
    return result;
}

DepositionResult sh_deposit(const SequencesSet& set, const Alphabet& alphabet) {
    require_nonempty(set);
    const std::size_t q = alphabet.size();
    if (q == 0) throw ParameterError("alphabet must not be empty");
    Frontiers front(set);
    DepositionResult result;
    result.completion.assign(set.sequences.size(), 0);
    std::vector<std::uint32_t> freq(q);
    while (front.incomplete > 0) {
        std::fill(freq.begin(), freq.end(), 0);
        for (std::size_t i = 0; i < front.seqs.size(); ++i)
            if (front.pos[i] < front.seqs[i].size()) ++freq[front.seqs[i][front.pos[i]]];
        std::size_t best = 0;
        for (std::size_t s = 1; s < q; ++s)
            if (freq[s] > freq[best]) best = s;
        result.process_sequence.push_back(static_cast<SymbolIndex>(best));
        int step = static_cast<int>(result.process_sequence.size());
        for (std::size_t i = 0; i < front.seqs.size(); ++i) {
            auto& p = front.pos[i];
            if (p < front.seqs[i].size() && front.seqs[i][p] == static_cast<SymbolIndex>(best)) {
                if (++p == front.seqs[i].size()) {
                    result.completion[i] = step;
                    --front.incomplete;
                }
            }
        }
    }
    return result;
}

DepositionResult la_sh_deposit(const SequencesSet& set, const Alphabet& alphabet,
                               LookAheadParams params) {
    require_nonempty(set);
    if (params.m < 1 || params.l < 1 || params.l > params.m)
        throw ParameterError("look-ahead needs 1 <= l <= m, got m=" +
                             std::to_string(params.m) + " l=" + std::to_string(params.l));
    const std::size_t q = alphabet.size();
    if (q == 0) throw ParameterError("alphabet must not be empty");
    const std::size_t m = effective_lookahead(q, params.m);
    const std::size_t l = std::min<std::size_t>(static_cast<std::size_t>(params.l), m);

    Frontiers front(set);
    DepositionResult result;
    result.completion.assign(set.sequences.size(), 0);
    std::vector<std::uint32_t> moved;
    while (front.incomplete > 0) {
        LookAheadSearch search(front, q, m);
        search.run();
        const std::size_t commit = std::min(l, search.best.size());
        for (std::size_t j = 0; j < commit && front.incomplete > 0; ++j) {
            SymbolIndex symbol = search.best[j];
            result.process_sequence.push_back(symbol);
            int step = static_cast<int>(result.process_sequence.size());
            moved.clear();
            front.apply(symbol, moved);
            for (std::uint32_t i : moved)
                if (front.pos[i] == front.seqs[i].size()) result.completion[i] = step;
        }
    }
    return result;
}

std::vector<SymbolIndex> lap_reduce(std::span<const SymbolIndex> t, const SequencesSet& set) {
    if (!is_common_supersequence(t, set))
        throw NotASupersequenceError("reduction input is not a common supersequence of the set");

    std::vector<SymbolIndex> cur(t.begin(), t.end());
    const std::size_t n = set.sequences.size();

    // Position p is removable iff every sequence still embeds into cur with
    // cur[p] skipped.  With fwd[i] = chars matched greedily in cur[0..i) and
    // bwd[i] = chars matched greedily backward in cur[i..L), sequence s
    // survives the removal iff fwd[p] + bwd[p+1] >= |s|.
    std::vector<std::vector<std::uint32_t>> fwd(n), bwd(n);
    while (true) {
        const std::size_t L = cur.size();
        for (std::size_t i = 0; i < n; ++i) {
            const auto& s = set.sequences[i].symbols;
            const std::size_t len = s.size();
            fwd[i].assign(L + 1, 0);
            for (std::size_t j = 0; j < L; ++j) {
                std::uint32_t k = fwd[i][j];
                fwd[i][j + 1] = k + (k < len && s[k] == cur[j]);
            }
            bwd[i].assign(L + 1, 0);
            for (std::size_t j = L; j-- > 0;) {
                std::uint32_t k = bwd[i][j + 1];
                bwd[i][j] = k + (k < len && s[len - 1 - k] == cur[j]);
            }
        }
        std::size_t removable = L;
        for (std::size_t p = 0; p < L && removable == L; ++p) {
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (fwd[i][p] + bwd[i][p + 1] < set.sequences[i].symbols.size()) {
                    ok = false;
                    break;
                }
            }
            if (ok) removable = p;
        }
        if (removable == L) break;
        cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(removable));
    }
    return cur;
}

DepositionResult lap_deposit(const SequencesSet& set, const Alphabet& alphabet,
                             LookAheadParams params) {
    DepositionResult la = la_sh_deposit(set, alphabet, params);
    DepositionResult result;
    result.process_sequence = lap_reduce(la.process_sequence, set);
    result.completion = greedy_completion(result.process_sequence, set);
    return result;
}

namespace detail {

std::size_t sh_steps(const std::vector<const Sequence*>& seqs, std::size_t q) {
    if (seqs.empty()) return 0;
    Frontiers front(seqs);
    std::vector<std::uint32_t> freq(q);
    std::size_t steps = 0;
    while (front.incomplete > 0) {
        std::fill(freq.begin(), freq.end(), 0);
        for (std::size_t i = 0; i < front.seqs.size(); ++i)
            if (front.pos[i] < front.seqs[i].size()) ++freq[front.seqs[i][front.pos[i]]];
        std::size_t best = 0;
        for (std::size_t s = 1; s < q; ++s)
            if (freq[s] > freq[best]) best = s;
        ++steps;
        for (std::size_t i = 0; i < front.seqs.size(); ++i) {
            auto& p = front.pos[i];
            if (p < front.seqs[i].size() && front.seqs[i][p] == static_cast<SymbolIndex>(best)) {
                if (++p == front.seqs[i].size()) --front.incomplete;
            }
        }
    }
    return steps;
}

} // namespace detail

} // namespace pmss
