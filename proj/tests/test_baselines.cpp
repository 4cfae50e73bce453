#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pmss/baselines.hpp"
#include "pmss/core.hpp"
#include "pmss/deposition.hpp"
#include "pmss/errors.hpp"
#include "pmss/rng.hpp"

using namespace pmss;

namespace {

const Alphabet kDna("ACGT");

std::vector<SymbolIndex> encode(const std::string& text, const Alphabet& alphabet) {
    std::vector<SymbolIndex> out;
    for (char c : text) out.push_back(alphabet.index_of(c));
    return out;
}

std::string decode(const std::vector<SymbolIndex>& symbols, const Alphabet& alphabet) {
    std::string out;
    for (SymbolIndex s : symbols) out.push_back(alphabet.symbol(s));
    return out;
}

// independent LCS dynamic program for the length cross-check
std::size_t lcs_length(const std::string& a, const std::string& b) {
    std::vector<std::vector<std::size_t>> dp(a.size() + 1,
                                             std::vector<std::size_t>(b.size() + 1, 0));
    for (std::size_t i = 1; i <= a.size(); ++i) {
        for (std::size_t j = 1; j <= b.size(); ++j) {
            dp[i][j] = a[i - 1] == b[j - 1]
                           ? dp[i - 1][j - 1] + 1
                           : std::max(dp[i - 1][j], dp[i][j - 1]);
        }
    }
    return dp[a.size()][b.size()];
}

// check a BaselineResult top to bottom: valid partition, exact set sizes
// implied by it, supersequence property, completion consistency
void check_baseline(const BaselineResult& result, const Dataset& d,
                    std::size_t num_sets, std::size_t capacity) {
    validate_partition(result.partition, d.size(), num_sets, capacity);
    REQUIRE(result.per_set.size() == num_sets);
    MultiSequencesSets mss = materialize(d, result.partition, capacity);
    for (std::size_t i = 0; i < num_sets; ++i) {
        std::vector<std::string> texts;
        for (const auto& s : mss.sets[i].sequences) texts.push_back(to_text(d.alphabet, s));
        std::string process = decode(result.per_set[i].process_sequence, d.alphabet);
        CHECK(ora::is_common_supersequence(process, texts));
        REQUIRE(result.per_set[i].completion.size() == texts.size());
        for (std::size_t k = 0; k < texts.size(); ++k) {
            CHECK(result.per_set[i].completion[k] ==
                  ora::greedy_completion(texts[k], process));
        }
    }
}

std::uint64_t mm_cost(const BaselineResult& result, const Dataset& d,
                      std::size_t capacity) {
    MultiSequencesSets mss = materialize(d, result.partition, capacity);
    std::uint64_t cost = 0;
    for (std::size_t i = 0; i < result.per_set.size(); ++i) {
        cost += result.per_set[i].steps() * mss.sets[i].size();
    }
    return cost;
}

} // namespace

TEST_CASE("pairwise supersequence examples") {
    Alphabet ac("AC");
    CHECK(decode(pairwise_scs(encode("AC", ac), encode("CA", ac)), ac) == "ACA");
    CHECK(decode(pairwise_scs(encode("ACGT", kDna), encode("ACGT", kDna)), kDna) ==
          "ACGT");
    CHECK(pairwise_scs(encode("AAGT", kDna), encode("ACAA", kDna)).size() == 6);
    CHECK(lcs_length("AAGT", "ACAA") == 2);
    CHECK(pairwise_scs({}, encode("AC", kDna)) == encode("AC", kDna));
}

TEST_CASE("pairwise supersequence length equals the LCS identity") {
    SplitMix64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::string symbols = (trial % 2 == 0) ? "ACGT" : "01";
        Alphabet alphabet(symbols);
        std::string a = th::random_text(rng, symbols, rng.bounded(9));
        std::string b = th::random_text(rng, symbols, rng.bounded(9));
        std::vector<SymbolIndex> s = pairwise_scs(encode(a, alphabet), encode(b, alphabet));
        CHECK(s.size() == a.size() + b.size() - lcs_length(a, b));
        std::string text = decode(s, alphabet);
        CHECK(ora::is_subsequence(a, text));
        CHECK(ora::is_subsequence(b, text));
        // the LCS identity length is also the exact two-sequence optimum
        if (a.size() + b.size() <= 12) {
            CHECK(s.size() == ora::scs_brute({a, b}, symbols).length);
        }
    }
}

TEST_CASE("agglomerative baseline groups homogeneous pairs") {
    Dataset d = make_dataset(kDna, {"AAAA", "TTTT", "AAAA", "TTTT"});
    BaselineResult r = greedy_a(d.sequences, kDna, 2, 2);
    check_baseline(r, d, 2, 2);
    CHECK(r.partition.set_of[0] == r.partition.set_of[2]);
    CHECK(r.partition.set_of[1] == r.partition.set_of[3]);
    CHECK(r.partition.set_of[0] != r.partition.set_of[1]);
    for (const auto& set : r.per_set) CHECK(set.steps() == 4);
}

TEST_CASE("agglomerative baseline with one set takes everything") {
    Dataset d = make_dataset(kDna, {"ACGT", "GCAT", "ACAA"});
    BaselineResult r = greedy_a(d.sequences, kDna, 1, 3);
    check_baseline(r, d, 1, 3);
    CHECK(r.per_set[0].steps() >= 4);
}

TEST_CASE("agglomerative baseline validates pool shape") {
    Dataset d = make_dataset(kDna, {"ACGT", "GCAT", "ACAA"});
    CHECK_THROWS_AS(greedy_a(d.sequences, kDna, 2, 2), CapacityError);
    std::vector<std::string> big(kGreedyAMaxSequences + 2, "A");
    Dataset bigd = make_dataset(kDna, big);
    CHECK_THROWS_AS(greedy_a(bigd.sequences, kDna, kGreedyAMaxSequences + 2, 1),
                    CapacityError);
}

TEST_CASE("agglomerative baseline on the example corpus") {
    Dataset d = make_dataset(kDna, th::example12());
    BaselineResult r = greedy_a(d.sequences, kDna, 4, 3);
    check_baseline(r, d, 4, 3);
    CHECK(mm_cost(r, d, 3) <= 192); // ratio bound q*K*M*N
}

TEST_CASE("peeling baseline with one set equals plain majority merge") {
    Dataset d = make_dataset(kDna, th::example12());
    BaselineResult r = greedy_d(d.sequences, kDna, 1, 12);
    check_baseline(r, d, 1, 12);
    SequencesSet all = th::make_set(th::example12(), kDna);
    DepositionResult sh = sh_deposit(all, kDna);
    CHECK(r.per_set[0].process_sequence == sh.process_sequence);
    CHECK(r.per_set[0].completion == sh.completion);
}

TEST_CASE("peeling baseline solves the homogeneous pool optimally") {
    Dataset d = make_dataset(kDna, {"AAAA", "TTTT", "AAAA", "TTTT"});
    BaselineResult r = greedy_d(d.sequences, kDna, 2, 2);
    check_baseline(r, d, 2, 2);
    CHECK(mm_cost(r, d, 2) == 16);
    // the first peel is the two sequences completing earliest under the
    // pooled merge: the A-run finishes before the T-run
    CHECK(r.partition.set_of[0] == r.partition.set_of[2]);
    CHECK(r.partition.set_of[1] == r.partition.set_of[3]);
}

TEST_CASE("peeling baseline cost stays under the periodic budget") {
    Dataset d = make_dataset(kDna, th::example12());
    BaselineResult r = greedy_d(d.sequences, kDna, 4, 3);
    check_baseline(r, d, 4, 3);
    CHECK(mm_cost(r, d, 3) <= 192);

    SplitMix64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        std::string symbols = (trial % 2 == 0) ? "ACGT" : "01";
        Alphabet alphabet(symbols);
        std::size_t M = 1 + rng.bounded(4);
        std::size_t N = 1 + rng.bounded(4);
        std::size_t K = 1 + rng.bounded(8);
        std::vector<std::string> texts;
        std::size_t max_len = 0;
        for (std::size_t i = 0; i < M * N; ++i) {
            std::size_t len = 1 + rng.bounded(K);
            max_len = std::max(max_len, len);
            texts.push_back(th::random_text(rng, symbols, len));
        }
        Dataset rd = make_dataset(alphabet, texts);
        BaselineResult rr = greedy_d(rd.sequences, alphabet, M, N);
        check_baseline(rr, rd, M, N);
        CHECK(mm_cost(rr, rd, N) <= symbols.size() * max_len * M * N);
    }
}

TEST_CASE("peeling baseline validates pool shape") {
    Dataset d = make_dataset(kDna, {"ACGT", "GCAT", "ACAA"});
    CHECK_THROWS_AS(greedy_d(d.sequences, kDna, 2, 2), CapacityError);
}
