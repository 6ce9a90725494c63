#include "noisyeval/corpus_io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "noisyeval/error.hpp"

namespace noisyeval {
namespace {

bool is_space(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' ||
         ch == '\v';
}

TaggedToken split_token(std::string_view raw, std::string_view source,
                        std::size_t line, std::size_t column) {
  const auto cut = raw.rfind('_');
  if (cut == std::string_view::npos || cut == 0 || cut + 1 == raw.size()) {
    throw Error(ErrorCode::kMalformedToken,
                fmt::format("{}:{}:{}: token '{}' is not of the form word_TAG",
                            source, line, column, raw));
  }
  return {std::string(raw.substr(0, cut)), std::string(raw.substr(cut + 1))};
}

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

}  // namespace

void AmbiguityLexicon::add(std::string surface, TagSet tags) {
  if (surface.empty()) {
    throw Error(ErrorCode::kMalformedLexicon, "lexicon surface is empty");
  }
  if (tags.empty()) {
    throw Error(ErrorCode::kMalformedLexicon,
                fmt::format("lexicon entry '{}' has no tags", surface));
  }
  if (entries_.contains(surface)) {
    throw Error(ErrorCode::kMalformedLexicon,
                fmt::format("duplicate lexicon entry '{}'", surface));
  }
  entries_.emplace(std::move(surface), std::move(tags));
}

const AmbiguityLexicon::TagSet* AmbiguityLexicon::find(
    std::string_view surface) const {
  const auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

std::size_t AmbiguityLexicon::ambiguity(std::string_view surface) const {
  const TagSet* tags = find(surface);
  return tags ? tags->size() : 0;
}

TaggedCorpus parse_corpus(std::istream& in, std::string source) {
  TaggedCorpus corpus;
  corpus.source = std::move(source);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && is_space(line[i])) ++i;
      if (i == line.size()) break;
      const std::size_t start = i;
      while (i < line.size() && !is_space(line[i])) ++i;
      corpus.tokens.push_back(
          split_token(std::string_view(line).substr(start, i - start),
                      corpus.source, line_no, start + 1));
    }
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIo,
                fmt::format("{}: read failure", corpus.source));
  }
  return corpus;
}

TaggedCorpus parse_corpus(std::string_view text, std::string source) {
  std::istringstream in{std::string(text)};
  return parse_corpus(in, std::move(source));
}

TaggedCorpus read_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open corpus '{}'", path));
  }
  return parse_corpus(in, path);
}

void emit_corpus(const TaggedCorpus& corpus, std::ostream& out) {
  bool first = true;
  for (const auto& tok : corpus.tokens) {
    if (!first) out << ' ';
    out << tok.surface << '_' << tok.tag;
    first = false;
  }
  out << '\n';
}

AmbiguityLexicon parse_lexicon(std::istream& in, std::string_view source) {
  AmbiguityLexicon lex;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorCode::kMalformedLexicon,
                  fmt::format("{}:{}: expected 'surface<TAB>TAGS'", source,
                              line_no));
    }
    std::string surface = line.substr(0, tab);
    AmbiguityLexicon::TagSet tags;
    std::string_view rest = std::string_view(line).substr(tab + 1);
    while (true) {
      const auto comma = rest.find(',');
      std::string tag = trim(rest.substr(0, comma));
      if (tag.empty()) {
        throw Error(ErrorCode::kMalformedLexicon,
                    fmt::format("{}:{}: empty tag for '{}'", source, line_no,
                                surface));
      }
      tags.insert(std::move(tag));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    try {
      lex.add(std::move(surface), std::move(tags));
    } catch (const Error& e) {
      throw Error(e.code(), fmt::format("{}:{}: {}", source, line_no, e.what()));
    }
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIo, fmt::format("{}: read failure", source));
  }
  return lex;
}

AmbiguityLexicon read_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open lexicon '{}'", path));
  }
  return parse_lexicon(in, path);
}

ScoreReport score(const TaggedCorpus& reference, const TaggedCorpus& system,
                  const AmbiguityLexicon& lexicon,
                  AmbiguityWeighting weighting) {
  const std::size_t n = std::min(reference.size(), system.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (reference.tokens[i].surface != system.tokens[i].surface) {
      throw Error(ErrorCode::kAlignment,
                  fmt::format("token {} differs: reference '{}' vs system '{}'",
                              i + 1, reference.tokens[i].surface,
                              system.tokens[i].surface));
    }
  }
  if (reference.size() != system.size()) {
    throw Error(ErrorCode::kAlignment,
                fmt::format("length mismatch: reference has {} tokens, system "
                            "has {} (first divergence at token {})",
                            reference.size(), system.size(), n + 1));
  }

  ScoreReport r;
  r.n_total = n;
  std::size_t tag_set_sum = 0;
  std::set<std::string_view> ambiguous_types;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ref = reference.tokens[i];
    const bool agree = ref.tag == system.tokens[i].tag;
    if (agree) ++r.agree_total;
    const std::size_t amb = lexicon.ambiguity(ref.surface);
    if (amb >= 2) {
      ++r.n_ambiguous;
      tag_set_sum += amb;
      ambiguous_types.insert(ref.surface);
      if (agree) ++r.agree_ambiguous;
    }
  }
  if (r.n_ambiguous == 0) {
    throw Error(ErrorCode::kNoAmbiguousTokens,
                fmt::format("{}: no lexicon-ambiguous tokens to score",
                            reference.source));
  }
  r.k_overall = static_cast<double>(r.agree_total) / static_cast<double>(n);
  r.k_ambiguous = static_cast<double>(r.agree_ambiguous) /
                  static_cast<double>(r.n_ambiguous);
  if (weighting == AmbiguityWeighting::kToken) {
    r.a_measured = static_cast<double>(tag_set_sum) /
                   static_cast<double>(r.n_ambiguous);
  } else {
    std::size_t type_sum = 0;
    for (auto surface : ambiguous_types) type_sum += lexicon.ambiguity(surface);
    r.a_measured = static_cast<double>(type_sum) /
                   static_cast<double>(ambiguous_types.size());
  }
  return r;
}

EvalObservation build_observation(const ScoreReport& report, double c_corpus) {
  return EvalObservation::create(report.k_ambiguous, c_corpus);
}

}  // namespace noisyeval
