#pragma once

// Reading and scoring word_TAG corpora.
//
// Corpus format: whitespace-separated tokens, each split at its LAST
// underscore into surface and tag ("a_b_NN" -> ("a_b", "NN")). Newlines are
// plain whitespace.
//
// Lexicon format: one entry per line, "surface<TAB>TAG1,TAG2,...". Blank
// lines are ignored; duplicate surfaces are rejected.

#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "noisyeval/interval_core.hpp"

namespace noisyeval {

struct TaggedToken {
  std::string surface;
  std::string tag;

  friend bool operator==(const TaggedToken&, const TaggedToken&) = default;
};

struct TaggedCorpus {
  std::vector<TaggedToken> tokens;
  std::string source;

  std::size_t size() const noexcept { return tokens.size(); }
  bool empty() const noexcept { return tokens.empty(); }
};

class AmbiguityLexicon {
 public:
  using TagSet = std::set<std::string>;

  /// Throws Error(kMalformedLexicon) on an empty tag set or a duplicate.
  void add(std::string surface, TagSet tags);

  /// nullptr for words not in the lexicon.
  const TagSet* find(std::string_view surface) const;
  /// Lexicon tag-set size, 0 if unknown.
  std::size_t ambiguity(std::string_view surface) const;
  bool is_ambiguous(std::string_view surface) const {
    return ambiguity(surface) >= 2;
  }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<std::string, TagSet, std::less<>>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<std::string, TagSet, std::less<>> entries_;
};

/// How a_measured averages tag-set sizes.
enum class AmbiguityWeighting {
  kToken,  // over ambiguous token occurrences (default)
  kType,   // over distinct ambiguous surfaces
};

struct ScoreReport {
  std::size_t n_total = 0;
  std::size_t n_ambiguous = 0;
  std::size_t agree_total = 0;
  std::size_t agree_ambiguous = 0;
  double k_ambiguous = 0.0;
  double k_overall = 0.0;
  double a_measured = 0.0;
};

TaggedCorpus parse_corpus(std::istream& in, std::string source = "<stream>");
TaggedCorpus parse_corpus(std::string_view text,
                          std::string source = "<string>");
TaggedCorpus read_corpus_file(const std::string& path);

/// Space-separated word_TAG tokens, newline-terminated.
void emit_corpus(const TaggedCorpus& corpus, std::ostream& out);

AmbiguityLexicon parse_lexicon(std::istream& in,
                               std::string_view source = "<stream>");
AmbiguityLexicon read_lexicon_file(const std::string& path);

/// Positional agreement between a reference and a system corpus. Throws
/// Error(kAlignment) at the first length or surface divergence and
/// Error(kNoAmbiguousTokens) when no reference token is lexicon-ambiguous.
ScoreReport score(const TaggedCorpus& reference, const TaggedCorpus& system,
                  const AmbiguityLexicon& lexicon,
                  AmbiguityWeighting weighting = AmbiguityWeighting::kToken);

/// Pairs the measured ambiguous-word accuracy with a supplied corpus error
/// rate. Throws Error(kAssumptionKGreaterC) when c_corpus >= k_ambiguous.
EvalObservation build_observation(const ScoreReport& report, double c_corpus);

}  // namespace noisyeval
