#ifndef PMSS_TEST_ORACLES_HPP
#define PMSS_TEST_ORACLES_HPP

// Brute-force reference implementations used to validate the library.
// Everything here works on plain std::string and deliberately shares no
// code with the library: slow, obvious, and independent.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ora {

inline bool is_subsequence(const std::string& needle, const std::string& hay) {
  std::size_t i = 0;
  for (char c : hay) {
    if (i < needle.size() && needle[i] == c) ++i;
  }
  return i == needle.size();
}

inline bool is_common_supersequence(const std::string& sup,
                                    const std::vector<std::string>& set) {
  for (const auto& s : set) {
    if (!is_subsequence(s, sup)) return false;
  }
  return true;
}

// Earliest step (1-based) at which `s` finishes when embedded greedily
// into `sup`. Requires s to be a subsequence of sup.
inline int greedy_completion(const std::string& s, const std::string& sup) {
  std::size_t i = 0;
  for (std::size_t t = 0; t < sup.size(); ++t) {
    if (i < s.size() && s[i] == sup[t]) {
      ++i;
      if (i == s.size()) return static_cast<int>(t + 1);
    }
  }
  return s.empty() ? 0 : -1;
}

// Completion step of `s` inside the infinite periodic string
// alphabet[0], alphabet[1], ..., alphabet[q-1], alphabet[0], ...
inline int periodic_completion(const std::string& s,
                               const std::string& alphabet) {
  int t = 0;
  for (char c : s) {
    // advance one step at a time until the periodic symbol matches
    for (;;) {
      ++t;
      if (alphabet[static_cast<std::size_t>((t - 1) %
                                            static_cast<int>(
                                                alphabet.size()))] == c) {
        break;
      }
    }
  }
  return t;
}

namespace detail {

struct ScsSearch {
  const std::vector<std::string>* seqs = nullptr;
  std::string alphabet;
  std::vector<std::size_t> pos;
  std::string current;
  std::size_t target = 0;
  bool stop_at_first = true;
  bool found = false;
  std::string first_witness;
  // when stop_at_first is false, every optimal witness is reported here
  std::vector<std::string>* all_witnesses = nullptr;

  std::size_t remaining_need() const {
    std::size_t need = 0;
    for (std::size_t k = 0; k < seqs->size(); ++k) {
      need = std::max(need, (*seqs)[k].size() - pos[k]);
    }
    return need;
  }

  void dfs() {
    if (stop_at_first && found) return;
    std::size_t need = remaining_need();
    if (need == 0) {
      if (current.size() == target) {
        if (!found) {
          found = true;
          first_witness = current;
        }
        if (all_witnesses) all_witnesses->push_back(current);
      }
      return;
    }
    if (current.size() + need > target) return;
    for (char c : alphabet) {
      std::vector<std::size_t> advanced;
      for (std::size_t k = 0; k < seqs->size(); ++k) {
        if (pos[k] < (*seqs)[k].size() && (*seqs)[k][pos[k]] == c) {
          advanced.push_back(k);
        }
      }
      // a symbol that consumes nothing can always be deleted, so no
      // minimum-length supersequence contains one
      if (advanced.empty()) continue;
      for (std::size_t k : advanced) ++pos[k];
      current.push_back(c);
      dfs();
      current.pop_back();
      for (std::size_t k : advanced) --pos[k];
      if (stop_at_first && found) return;
    }
  }
};

}  // namespace detail

struct BruteScs {
  std::size_t length = 0;
  std::string witness;  // lexicographically smallest optimal supersequence
};

// Iterative-deepening exhaustive SCS. Only for tiny inputs (total
// length <= ~14).
inline BruteScs scs_brute(const std::vector<std::string>& seqs,
                          const std::string& alphabet) {
  std::vector<std::string> live;
  for (const auto& s : seqs) {
    if (!s.empty()) live.push_back(s);
  }
  if (live.empty()) return {0, ""};
  std::size_t lo = 0;
  for (const auto& s : live) lo = std::max(lo, s.size());
  std::size_t total = 0;
  for (const auto& s : live) total += s.size();
  for (std::size_t target = lo; target <= total; ++target) {
    detail::ScsSearch search;
    search.seqs = &live;
    search.alphabet = alphabet;
    search.pos.assign(live.size(), 0);
    search.target = target;
    search.dfs();
    if (search.found) return {target, search.first_witness};
  }
  return {total, ""};  // unreachable: concatenation always works
}

// Minimum sum of greedy completion steps over every optimal-length
// common supersequence. Exponential; tiny inputs only.
inline std::uint64_t min_completion_over_optimal(
    const std::vector<std::string>& seqs, const std::string& alphabet) {
  BruteScs best = scs_brute(seqs, alphabet);
  std::vector<std::string> live;
  for (const auto& s : seqs) {
    if (!s.empty()) live.push_back(s);
  }
  if (live.empty()) return 0;
  std::vector<std::string> witnesses;
  detail::ScsSearch search;
  search.seqs = &live;
  search.alphabet = alphabet;
  search.pos.assign(live.size(), 0);
  search.target = best.length;
  search.stop_at_first = false;
  search.all_witnesses = &witnesses;
  search.dfs();
  std::uint64_t best_sum = std::numeric_limits<std::uint64_t>::max();
  for (const auto& w : witnesses) {
    std::uint64_t sum = 0;
    for (const auto& s : seqs) {
      sum += static_cast<std::uint64_t>(greedy_completion(s, w));
    }
    best_sum = std::min(best_sum, sum);
  }
  return best_sum;
}

// Plain majority-merge on chars: append the most frequent frontier
// symbol each step (ties to the earliest symbol in `alphabet`).
inline std::string majority_merge(const std::vector<std::string>& seqs,
                                  const std::string& alphabet) {
  std::vector<std::size_t> pos(seqs.size(), 0);
  std::string out;
  for (;;) {
    std::vector<int> count(alphabet.size(), 0);
    bool any = false;
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      if (pos[k] < seqs[k].size()) {
        any = true;
        ++count[alphabet.find(seqs[k][pos[k]])];
      }
    }
    if (!any) break;
    std::size_t pick = 0;
    for (std::size_t a = 1; a < alphabet.size(); ++a) {
      if (count[a] > count[pick]) pick = a;
    }
    char c = alphabet[pick];
    out.push_back(c);
    for (std::size_t k = 0; k < seqs.size(); ++k) {
      if (pos[k] < seqs[k].size() && seqs[k][pos[k]] == c) ++pos[k];
    }
  }
  return out;
}

// True if deleting any single character of `sup` still leaves a common
// supersequence (i.e. sup is NOT 1-irreducible).
inline bool has_removable_char(const std::string& sup,
                               const std::vector<std::string>& set) {
  for (std::size_t p = 0; p < sup.size(); ++p) {
    std::string shorter = sup.substr(0, p) + sup.substr(p + 1);
    if (is_common_supersequence(shorter, set)) return true;
  }
  return false;
}

// All partitions of {0..n-1} into M unordered sets of exactly N
// elements, in canonical order (each new set opened by the smallest
// unassigned index).
inline void enumerate_partitions_rec(
    std::vector<std::vector<int>>& current, std::vector<bool>& used,
    int n, int num_sets, int per_set,
    std::vector<std::vector<std::vector<int>>>& out) {
  int first = -1;
  for (int i = 0; i < n; ++i) {
    if (!used[i]) {
      first = i;
      break;
    }
  }
  if (first < 0) {
    out.push_back(current);
    return;
  }
  if (static_cast<int>(current.size()) == num_sets) return;
  current.emplace_back();
  current.back().push_back(first);
  used[first] = true;
  // fill the rest of this set with combinations of larger indices
  std::vector<int> pool;
  for (int i = first + 1; i < n; ++i) {
    if (!used[i]) pool.push_back(i);
  }
  std::vector<int> comb;
  auto fill = [&](auto&& self, std::size_t start) -> void {
    if (static_cast<int>(comb.size()) == per_set - 1) {
      for (int v : comb) {
        current.back().push_back(v);
        used[v] = true;
      }
      enumerate_partitions_rec(current, used, n, num_sets, per_set, out);
      for (int v : comb) used[v] = false;
      current.back().resize(1);
      return;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
      comb.push_back(pool[i]);
      self(self, i + 1);
      comb.pop_back();
    }
  };
  fill(fill, 0);
  used[first] = false;
  current.pop_back();
}

inline std::vector<std::vector<std::vector<int>>> enumerate_partitions(
    int n, int num_sets, int per_set) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> current;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  enumerate_partitions_rec(current, used, n, num_sets, per_set, out);
  return out;
}

// Best (minimum) cost over all partitions, where cost "mm" is
// sum(L_i * N) and cost "sc" is the minimum completion sum per set
// over all optimal-length supersequences.
inline std::uint64_t best_partition_cost(const std::vector<std::string>& seqs,
                                         const std::string& alphabet,
                                         int num_sets, int per_set,
                                         bool sum_completion) {
  auto parts = enumerate_partitions(static_cast<int>(seqs.size()), num_sets,
                                    per_set);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  for (const auto& part : parts) {
    std::uint64_t cost = 0;
    for (const auto& idxs : part) {
      std::vector<std::string> set;
      for (int i : idxs) set.push_back(seqs[static_cast<std::size_t>(i)]);
      if (sum_completion) {
        cost += min_completion_over_optimal(set, alphabet);
      } else {
        cost += static_cast<std::uint64_t>(scs_brute(set, alphabet).length) *
                static_cast<std::uint64_t>(idxs.size());
      }
    }
    best = std::min(best, cost);
  }
  return best;
}

}  // namespace ora

#endif
