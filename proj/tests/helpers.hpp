#ifndef PMSS_TEST_HELPERS_HPP
#define PMSS_TEST_HELPERS_HPP

// Convenience constructors shared by the test binaries. These wrap the
// library's own types (unlike oracles.hpp, which must stay independent).

#include <string>
#include <vector>

#include "pmss/core.hpp"
#include "pmss/deposition.hpp"
#include "pmss/rng.hpp"

namespace th {

inline std::vector<pmss::Sequence> make_seqs(
    const std::vector<std::string>& texts, const pmss::Alphabet& alphabet) {
  std::vector<pmss::Sequence> out;
  out.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    out.push_back(
        pmss::make_sequence(alphabet, "t" + std::to_string(i), texts[i]));
  }
  return out;
}

inline pmss::SequencesSet make_set(const std::vector<std::string>& texts,
                                   const pmss::Alphabet& alphabet,
                                   std::size_t capacity = 0) {
  pmss::SequencesSet set;
  set.sequences = make_seqs(texts, alphabet);
  set.capacity = capacity == 0 ? texts.size() : capacity;
  return set;
}

inline std::string process_text(const pmss::DepositionResult& result,
                                const pmss::Alphabet& alphabet) {
  std::string out;
  out.reserve(result.process_sequence.size());
  for (auto sym : result.process_sequence) out.push_back(alphabet.symbol(sym));
  return out;
}

inline std::string random_text(pmss::SplitMix64& rng,
                               const std::string& symbols, std::size_t len) {
  std::string out;
  out.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(symbols[rng.bounded(symbols.size())]);
  }
  return out;
}

// The twelve-sequence DNA example used by the fixture files and several
// regression tests (q=4, K=4, 4 sets of 3).
inline const std::vector<std::string>& example12() {
  static const std::vector<std::string> seqs = {
      "ACGT", "GCAT", "ACAA", "AAGT", "TCGA", "ACCC",
      "AAGT", "GACT", "ACAC", "CCAT", "GTCT", "TCAG",
  };
  return seqs;
}

}  // namespace th

#endif
