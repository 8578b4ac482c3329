#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "analytics.hpp"
#include "corpus.hpp"
#include "report.hpp"

namespace emlex {

struct Literal {
  std::string word;  // case-insensitive
};
struct Pos {
  std::string tag;
};
struct Length {
  std::size_t letters;
};
struct PrefixIs {
  std::string prefix;  // letters only
};
struct SuffixIs {
  std::string suffix;
};

using TokenConstraint = std::variant<Literal, Pos, Length, PrefixIs, SuffixIs>;

struct Pattern {
  std::vector<TokenConstraint> items;
};

// Mini-grammar: space-separated items; bare word = Literal; <LETTERS+N> =
// Length; <^str> = PrefixIs; <str$> = SuffixIs; <TAG> = Pos.
Pattern compile_pattern(std::string_view expr);

std::string pattern_to_string(const Pattern& pattern);

struct Match {
  std::size_t first = 0;   // token index
  std::size_t length = 0;  // tokens
};

// Non-overlapping leftmost matches over Word tokens, in token order.
std::vector<Match> locate(const Pattern& pattern,
                          const std::vector<Token>& tokens,
                          const AnnotationIndex* annotations = nullptr);

struct ConcordanceLine {
  std::string left;   // exact source slice up to the key
  std::string key;    // matched surface(s)
  std::string right;  // exact source slice after the key
  std::string document_id;
  std::size_t token_index = 0;
};

ConcordanceLine kwic(const SourceDocument& doc,
                     const std::vector<Token>& tokens, const Match& match,
                     std::size_t width);

std::string trimmed(std::string_view s);

enum class AffixKind { Prefix, Suffix };

struct AffixRow {
  std::string form;  // case-folded
  std::int64_t occurrences = 0;
};

struct AffixReport {
  std::vector<AffixRow> rows;  // descending occurrences, then alphabetical
  std::int64_t distinct_forms = 0;
  std::int64_t total_occurrences = 0;

  Report to_report(const std::string& title,
                   const std::string& provenance) const;
};

AffixReport affix_query(AffixKind kind, std::string_view affix,
                        const std::vector<Token>& tokens);

// Renders matches as KWIC lines. format: "text" (aligned key column),
// "tsv", or "json". Contexts are trimmed and newlines flattened to spaces.
std::string format_kwic_lines(const SourceDocument& doc,
                              const std::vector<Token>& tokens,
                              const std::vector<Match>& matches,
                              std::size_t width, const std::string& format);

}  // namespace emlex
