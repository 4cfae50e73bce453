#include "pmss/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pmss/deposition.hpp"
#include "pmss/rng.hpp"

namespace pmss {

namespace {

std::vector<double> window_block(std::span<const SymbolIndex> window, std::size_t q) {
    std::vector<double> block(q, 0.0);
    for (SymbolIndex s : window) block[s] += 1.0;
    for (double& x : block) x /= static_cast<double>(window.size());
    return block;
}

} // namespace

FeatureVector extract_features(const Sequence& seq, const Alphabet& alphabet, int w) {
    if (w < 1) throw ParameterError("feature window must be positive, got " + std::to_string(w));
    const std::size_t q = alphabet.size();
    const std::size_t len = seq.symbols.size();
    const std::size_t win = static_cast<std::size_t>(w);
    if (len < win)
        throw ShortSequenceError("sequence " + seq.id + " of length " + std::to_string(len) +
                                 " is shorter than feature window " + std::to_string(w));
    FeatureVector fv;
    fv.window = w;
    const std::size_t blocks = len - win + 1;
    fv.values.assign(blocks * q, 0.0);
    // Incremental sliding counts: shift the window one symbol at a time.
    std::vector<double> counts(q, 0.0);
    for (std::size_t j = 0; j < win; ++j) counts[seq.symbols[j]] += 1.0;
    for (std::size_t b = 0;; ++b) {
        for (std::size_t s = 0; s < q; ++s)
            fv.values[b * q + s] = counts[s] / static_cast<double>(win);
        if (b + 1 == blocks) break;
        counts[seq.symbols[b]] -= 1.0;
        counts[seq.symbols[b + win]] += 1.0;
    }
    return fv;
}

std::vector<FeatureVector> batch_features(std::span<const Sequence> seqs,
                                          const Alphabet& alphabet, int w) {
    if (w < 1) throw ParameterError("feature window must be positive, got " + std::to_string(w));
    const std::size_t q = alphabet.size();
    const std::size_t win = static_cast<std::size_t>(w);
    std::vector<FeatureVector> out;
    out.reserve(seqs.size());
    if (seqs.empty()) return out;

    bool uniform = true;
    std::size_t min_long = std::numeric_limits<std::size_t>::max();
    for (const Sequence& s : seqs) {
        if (s.length() != seqs.front().length()) uniform = false;
        if (s.length() >= win) min_long = std::min(min_long, s.length());
    }
    if (uniform && seqs.front().length() >= win) {
        for (const Sequence& s : seqs) out.push_back(extract_features(s, alphabet, w));
        return out;
    }

    // Mixed lengths: pad every vector to (P+1) blocks of q, P being the
    // smallest motif count among sequences long enough for the window.
    const std::size_t P =
        min_long == std::numeric_limits<std::size_t>::max() ? 0 : min_long - win + 1;
    for (const Sequence& s : seqs) {
        FeatureVector fv;
        fv.window = w;
        fv.values.reserve((P + 1) * q);
        std::vector<double> whole(q, 0.0);
        if (!s.symbols.empty()) {
            for (SymbolIndex c : s.symbols) whole[c] += 1.0;
            for (double& x : whole) x /= static_cast<double>(s.symbols.size());
        }
        if (s.length() >= win) {
            FeatureVector motifs = extract_features(s, alphabet, w);
            fv.values.insert(fv.values.end(), motifs.values.begin(),
                             motifs.values.begin() + static_cast<std::ptrdiff_t>(P * q));
            fv.values.insert(fv.values.end(), whole.begin(), whole.end());
        } else {
            for (std::size_t b = 0; b <= P; ++b)
                fv.values.insert(fv.values.end(), whole.begin(), whole.end());
        }
        out.push_back(std::move(fv));
    }
    return out;
}

namespace {

constexpr double kVarianceFloor = 1e-8;
constexpr double kConvergenceTol = 1e-6;
constexpr int kMaxIterations = 100;

double squared_distance(const std::vector<double>& a, const std::vector<double>& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double diff = a[i] - b[i];
        d += diff * diff;
    }
    return d;
}

} // namespace

ClusteringOutcome em_cluster(const std::vector<FeatureVector>& features,
                             std::size_t num_clusters, std::uint64_t seed) {
    const std::size_t n = features.size();
    if (num_clusters == 0) throw ParameterError("clustering needs at least one cluster");
    if (n < num_clusters)
        throw ParameterError("cannot form " + std::to_string(num_clusters) +
                             " clusters from " + std::to_string(n) + " points");
    const std::size_t dim = features.front().values.size();
    for (const FeatureVector& f : features)
        if (f.values.size() != dim)
            throw ParameterError("feature vectors must share one dimension");
    if (dim == 0) throw ParameterError("feature vectors must not be empty");

    ClusteringOutcome outcome;
    outcome.assignment.assign(n, 0);

    // Global per-dimension variance; doubles as the fallback detector and
    // the initial spread of every component.
    std::vector<double> mean0(dim, 0.0), var0(dim, 0.0);
    for (const FeatureVector& f : features)
        for (std::size_t d = 0; d < dim; ++d) mean0[d] += f.values[d];
    for (double& x : mean0) x /= static_cast<double>(n);
    for (const FeatureVector& f : features)
        for (std::size_t d = 0; d < dim; ++d) {
            double diff = f.values[d] - mean0[d];
            var0[d] += diff * diff;
        }
    double max_var = 0.0;
    for (double& x : var0) {
        x /= static_cast<double>(n);
        max_var = std::max(max_var, x);
        x = std::max(x, kVarianceFloor);
    }
    if (max_var < 1e-12) {
        // Identical points: any split is as good as any other.
        for (std::size_t i = 0; i < n; ++i)
            outcome.assignment[i] = static_cast<int>(i % num_clusters);
        outcome.degenerate_fallback = true;
        return outcome;
    }

    const std::size_t K = num_clusters;
    std::vector<std::vector<double>> means(K);
    std::vector<std::vector<double>> vars(K, var0);
    std::vector<double> weights(K, 1.0 / static_cast<double>(K));

    // Farthest-point seeding: a random first mean, then repeatedly the point
    // farthest from its nearest chosen mean.
    SplitMix64 rng(seed);
    std::vector<bool> chosen(n, false);
    std::vector<double> min_dist(n, std::numeric_limits<double>::infinity());
    std::size_t first = static_cast<std::size_t>(rng.bounded(n));
    chosen[first] = true;
    means[0] = features[first].values;
    for (std::size_t k = 1; k < K; ++k) {
        for (std::size_t i = 0; i < n; ++i)
            if (!chosen[i])
                min_dist[i] = std::min(min_dist[i],
                                       squared_distance(features[i].values, means[k - 1]));
        std::size_t best = n;
        double best_d = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (chosen[i]) continue;
            if (min_dist[i] > best_d) {
                best_d = min_dist[i];
                best = i;
            }
        }
        chosen[best] = true;
        means[k] = features[best].values;
    }

    const double log2pi = std::log(2.0 * std::acos(-1.0));
    std::vector<double> resp(n * K, 0.0);
    std::vector<double> log_p(K, 0.0);
    double prev_ll = 0.0;
    int iter = 0;
    while (true) {
        // E-step in the log domain.
        double ll = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto& x = features[i].values;
            double max_lp = -std::numeric_limits<double>::infinity();
            for (std::size_t k = 0; k < K; ++k) {
                double lp = std::log(weights[k]);
                for (std::size_t d = 0; d < dim; ++d) {
                    double diff = x[d] - means[k][d];
                    lp -= 0.5 * (log2pi + std::log(vars[k][d]) + diff * diff / vars[k][d]);
                }
                log_p[k] = lp;
                max_lp = std::max(max_lp, lp);
            }
            double sum = 0.0;
            for (std::size_t k = 0; k < K; ++k) sum += std::exp(log_p[k] - max_lp);
            double lse = max_lp + std::log(sum);
            ll += lse;
            for (std::size_t k = 0; k < K; ++k) resp[i * K + k] = std::exp(log_p[k] - lse);
        }
        if (iter >= kMaxIterations || (iter > 0 && std::abs(ll - prev_ll) < kConvergenceTol)) {
            outcome.log_likelihood = ll;
            break;
        }
        prev_ll = ll;
        ++iter;
        // M-step.
        for (std::size_t k = 0; k < K; ++k) {
            double nk = 0.0;
            for (std::size_t i = 0; i < n; ++i) nk += resp[i * K + k];
            if (nk < 1e-10) {
                weights[k] = 1e-12;
                continue;
            }
            std::vector<double> mu(dim, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                double r = resp[i * K + k];
                const auto& x = features[i].values;
                for (std::size_t d = 0; d < dim; ++d) mu[d] += r * x[d];
            }
            for (double& x : mu) x /= nk;
            std::vector<double> v(dim, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                double r = resp[i * K + k];
                const auto& x = features[i].values;
                for (std::size_t d = 0; d < dim; ++d) {
                    double diff = x[d] - mu[d];
                    v[d] += r * diff * diff;
                }
            }
            for (double& x : v) x = std::max(x / nk, kVarianceFloor);
            means[k] = std::move(mu);
            vars[k] = std::move(v);
            weights[k] = nk / static_cast<double>(n);
        }
        double wsum = std::accumulate(weights.begin(), weights.end(), 0.0);
        for (double& w : weights) w /= wsum;
    }

    outcome.iterations = iter;
    outcome.per_point_log_likelihood = outcome.log_likelihood / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < K; ++k)
            if (resp[i * K + k] > resp[i * K + best]) best = k;
        outcome.assignment[i] = static_cast<int>(best);
    }
    return outcome;
}

namespace {

std::size_t probe_steps(const std::vector<std::uint32_t>& members,
                        std::span<const Sequence> seqs, std::size_t q,
                        std::size_t skip = SIZE_MAX, const Sequence* extra = nullptr) {
    std::vector<const Sequence*> group;
    group.reserve(members.size() + 1);
    for (std::size_t j = 0; j < members.size(); ++j)
        if (j != skip) group.push_back(&seqs[members[j]]);
    if (extra) group.push_back(extra);
    return detail::sh_steps(group, q);
}

} // namespace

Partition balance_clusters(const ClusteringOutcome& clustering,
                           std::span<const Sequence> seqs, const Alphabet& alphabet,
                           std::size_t num_sets, std::size_t capacity) {
    const std::size_t n = seqs.size();
    if (clustering.assignment.size() != n)
        throw ParameterError("cluster assignment does not cover the sequence pool");
    if (num_sets == 0) throw ParameterError("need at least one set");
    if (capacity == 0) throw ParameterError("capacity must be positive");
    if (n > num_sets * capacity)
        throw CapacityError("cannot balance " + std::to_string(n) + " sequences into " +
                            std::to_string(num_sets) + " sets of capacity " +
                            std::to_string(capacity));
    const std::size_t q = alphabet.size();

    std::vector<std::vector<std::uint32_t>> clusters(num_sets);
    for (std::size_t i = 0; i < n; ++i) {
        int c = clustering.assignment[i];
        if (c < 0 || static_cast<std::size_t>(c) >= num_sets)
            throw ParameterError("cluster index " + std::to_string(c) + " out of range");
        clusters[static_cast<std::size_t>(c)].push_back(static_cast<std::uint32_t>(i));
    }

    // Evict from over-full clusters: scoring each member's removal against
    // the cluster as clustered, then dropping the most step-saving batch.
    std::vector<std::uint32_t> pool;
    for (std::size_t c = 0; c < num_sets; ++c) {
        auto& members = clusters[c];
        if (members.size() <= capacity) continue;
        const std::size_t excess = members.size() - capacity;
        std::vector<std::pair<std::size_t, std::size_t>> scored; // (steps without, slot)
        scored.reserve(members.size());
        for (std::size_t j = 0; j < members.size(); ++j)
            scored.emplace_back(probe_steps(members, seqs, q, j), j);
        std::stable_sort(scored.begin(), scored.end());
        std::vector<bool> evict(members.size(), false);
        for (std::size_t e = 0; e < excess; ++e) {
            evict[scored[e].second] = true;
            pool.push_back(members[scored[e].second]);
        }
        std::vector<std::uint32_t> kept;
        kept.reserve(capacity);
        for (std::size_t j = 0; j < members.size(); ++j)
            if (!evict[j]) kept.push_back(members[j]);
        members = std::move(kept);
    }

    // Fill under-full clusters from the pool, cheapest insertions first.
    for (std::size_t c = 0; c < num_sets && !pool.empty(); ++c) {
        auto& members = clusters[c];
        if (members.size() >= capacity) continue;
        const std::size_t need = std::min(capacity - members.size(), pool.size());
        std::vector<std::pair<std::size_t, std::size_t>> scored; // (steps with, pool slot)
        scored.reserve(pool.size());
        for (std::size_t j = 0; j < pool.size(); ++j)
            scored.emplace_back(probe_steps(members, seqs, q, SIZE_MAX, &seqs[pool[j]]), j);
        std::stable_sort(scored.begin(), scored.end());
        std::vector<bool> taken(pool.size(), false);
        for (std::size_t e = 0; e < need; ++e) {
            taken[scored[e].second] = true;
            members.push_back(pool[scored[e].second]);
        }
        std::vector<std::uint32_t> rest;
        rest.reserve(pool.size() - need);
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (!taken[j]) rest.push_back(pool[j]);
        pool = std::move(rest);
    }

    Partition p;
    p.num_sets = static_cast<std::uint32_t>(num_sets);
    p.set_of.assign(n, 0);
    for (std::size_t c = 0; c < num_sets; ++c)
        for (std::uint32_t i : clusters[c]) p.set_of[i] = static_cast<std::uint32_t>(c);
    return p;
}

Partition distribute_by_content(std::span<const Sequence> seqs, const Alphabet& alphabet,
                                std::size_t num_sets, std::size_t capacity,
                                const std::optional<std::string>& bias_symbols) {
    const std::size_t n = seqs.size();
    const std::size_t q = alphabet.size();
    if (num_sets == 0) throw ParameterError("need at least one set");
    if (capacity == 0) throw ParameterError("capacity must be positive");
    if (n > num_sets * capacity)
        throw CapacityError("cannot place " + std::to_string(n) + " sequences into " +
                            std::to_string(num_sets) + " sets of capacity " +
                            std::to_string(capacity));

    std::vector<std::vector<double>> content(n);
    for (std::size_t i = 0; i < n; ++i) content[i] = content_vector(seqs[i], q);

    // Candidate list keys: per-symbol contents, or the two-sided contents of
    // a symbol group (e.g. GC against AT).
    std::size_t num_keys;
    std::vector<std::vector<double>> keys(n);
    std::vector<double> expected;
    if (bias_symbols) {
        std::vector<bool> in_subset(q, false);
        for (char c : *bias_symbols) in_subset[alphabet.index_of(c)] = true;
        std::size_t subset_size = 0;
        for (bool b : in_subset) subset_size += b;
        if (subset_size == 0) throw ParameterError("bias symbol group must not be empty");
        num_keys = 2;
        expected = {static_cast<double>(subset_size) / static_cast<double>(q),
                    static_cast<double>(q - subset_size) / static_cast<double>(q)};
        for (std::size_t i = 0; i < n; ++i) {
            double inside = 0.0;
            for (std::size_t s = 0; s < q; ++s)
                if (in_subset[s]) inside += content[i][s];
            keys[i] = {inside, seqs[i].symbols.empty() ? 0.0 : 1.0 - inside};
        }
    } else {
        num_keys = q;
        expected.assign(q, 1.0 / static_cast<double>(q));
        for (std::size_t i = 0; i < n; ++i) keys[i] = content[i];
    }

    // One list per key: sequences over-represented in that key, most biased
    // first, input order on ties.
    std::vector<std::vector<std::uint32_t>> lists(num_keys);
    for (std::size_t r = 0; r < num_keys; ++r) {
        for (std::size_t i = 0; i < n; ++i)
            if (keys[i][r] > expected[r] + kBiasThreshold)
                lists[r].push_back(static_cast<std::uint32_t>(i));
        std::stable_sort(lists[r].begin(), lists[r].end(),
                         [&](std::uint32_t a, std::uint32_t b) { return keys[a][r] > keys[b][r]; });
    }

    std::vector<std::int64_t> set_of(n, -1);
    std::vector<std::size_t> fill(num_sets, 0);
    std::vector<std::size_t> cursor(num_keys, 0);

    // Round-robin seeding: set i draws from the list of key i mod num_keys.
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < num_sets; ++i) {
            if (fill[i] == capacity) continue;
            auto& list = lists[i % num_keys];
            auto& cur = cursor[i % num_keys];
            while (cur < list.size() && set_of[list[cur]] >= 0) ++cur;
            if (cur == list.size()) continue;
            set_of[list[cur]] = static_cast<std::int64_t>(i);
            ++fill[i];
            ++cur;
            progress = true;
        }
    }

    // Remaining sequences join the open set with the nearest pooled content.
    std::vector<std::vector<double>> pool_counts(num_sets, std::vector<double>(q, 0.0));
    std::vector<double> pool_total(num_sets, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (set_of[i] < 0) continue;
        auto s = static_cast<std::size_t>(set_of[i]);
        for (SymbolIndex c : seqs[i].symbols) pool_counts[s][c] += 1.0;
        pool_total[s] += static_cast<double>(seqs[i].symbols.size());
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (set_of[i] >= 0) continue;
        std::size_t best = num_sets;
        double best_d = std::numeric_limits<double>::infinity();
        for (std::size_t s = 0; s < num_sets; ++s) {
            if (fill[s] == capacity) continue;
            double d = 0.0;
            for (std::size_t c = 0; c < q; ++c) {
                double pooled = pool_total[s] > 0.0 ? pool_counts[s][c] / pool_total[s]
                                                    : 1.0 / static_cast<double>(q);
                d += std::abs(content[i][c] - pooled);
            }
            if (d < best_d) {
                best_d = d;
                best = s;
            }
        }
        set_of[i] = static_cast<std::int64_t>(best);
        ++fill[best];
        for (SymbolIndex c : seqs[i].symbols) pool_counts[best][c] += 1.0;
        pool_total[best] += static_cast<double>(seqs[i].symbols.size());
    }

    Partition p;
    p.num_sets = static_cast<std::uint32_t>(num_sets);
    p.set_of.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) p.set_of[i] = static_cast<std::uint32_t>(set_of[i]);
    return p;
}

Partition dda_distribute(std::span<const Sequence> seqs, const Alphabet& alphabet,
                         std::size_t num_sets, std::size_t capacity,
                         const std::optional<std::string>& bias_symbols) {
    return distribute_by_content(seqs, alphabet, num_sets, capacity, bias_symbols);
}

Partition dda_star_distribute(std::span<const Sequence> seqs, const Alphabet& alphabet,
                              std::size_t num_sets, std::size_t capacity,
                              int w, std::uint64_t seed) {
    const std::size_t n = seqs.size();
    if (num_sets == 0) throw ParameterError("need at least one set");
    if (n > num_sets * capacity)
        throw CapacityError("cannot place " + std::to_string(n) + " sequences into " +
                            std::to_string(num_sets) + " sets of capacity " +
                            std::to_string(capacity));
    Partition empty;
    empty.num_sets = static_cast<std::uint32_t>(num_sets);
    if (n == 0) return empty;

    const int window = w <= 0 ? static_cast<int>(alphabet.size()) : w;
    std::vector<FeatureVector> features = batch_features(seqs, alphabet, window);
    const std::size_t clusters = std::min(num_sets, n);
    ClusteringOutcome outcome = em_cluster(features, clusters, seed);
    return balance_clusters(outcome, seqs, alphabet, num_sets, capacity);
}

} // namespace pmss
