#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "lexicon.hpp"

namespace emlex {

enum class Confidence { Lexical, RuleValidated, Noise };

const char* confidence_name(Confidence c);

struct RewriteCandidate {
  std::string source;
  std::string result;  // space-separated units for contractions
  std::string rule;    // FuseHyphen, FuseJuxtaposed, InEnSwap,
                       // ContractionDict, ElisionRestore, InflectionEthEst,
                       // DegreeErEst
  bool validated = false;
  Confidence confidence = Confidence::Noise;
};

struct InflectionAnalysis {
  std::string lemma;
  int person = 3;             // 2 for -est/-st, 3 for -eth/-th
  bool tense_ambiguous = true;  // present or preterit; context would decide
};

enum class Degree { Comparative, Superlative };

struct DegreeAnalysis {
  std::string lemma;
  Degree degree = Degree::Comparative;
  bool irregular = false;
};

// Rule toggles plus the irregular-degree exception table. Parsed from a
// key=value config file; serialization feeds the report provenance hash.
struct RuleConfig {
  bool contraction = true;
  bool hyphen = true;
  bool in_en = true;
  bool elision = true;
  bool inflection = true;
  bool degree = true;
  bool juxtaposition = true;
  std::map<std::string, std::pair<std::string, Degree>> irregular_degree = {
      {"worser", {"bad", Degree::Comparative}}};

  static RuleConfig parse(std::string_view content);
  std::string serialize() const;
  std::uint64_t hash() const;
};

std::size_t letter_length(std::string_view form);

// Lexicon recognition used by every rule: direct case-insensitive lookup,
// then regular plural / 3sg / -ed / -ing stripping back to a listed lemma.
bool recognizes(const Lexicon& lex, std::string_view form);

// Candidate lemmas for a regularly inflected form, most specific first.
std::vector<std::string> inflection_roots(std::string_view form);

// Modern form for a surface whose dictionary entry carries EN=..., e.g.
// fantastick -> fantastic.
std::optional<std::string> lexical_modern(const Lexicon& lex,
                                          std::string_view form);

std::optional<RewriteCandidate> fuse_hyphenated(const Token& token,
                                                const Lexicon& lex);

std::optional<RewriteCandidate> fuse_juxtaposed(const Token& left,
                                                const Token& right,
                                                const Lexicon& lex);

std::vector<RewriteCandidate> expand_contraction(const Token& token,
                                                 const Lexicon& contractions,
                                                 const Lexicon& lex);

std::vector<RewriteCandidate> restore_elision(std::string_view form,
                                              const Lexicon& lex);

std::optional<RewriteCandidate> swap_in_en(std::string_view form,
                                           const Lexicon& lex);

std::optional<InflectionAnalysis> analyze_archaic_inflection(
    std::string_view form, const Lexicon& lex);

std::optional<DegreeAnalysis> analyze_degree(
    std::string_view form, const Lexicon& lex,
    const RuleConfig& config = RuleConfig{});

// Single-token pass of the cascade in pipeline order (contraction dictionary,
// hyphen fusion, in/en swap, elision restore). Candidates come back ranked:
// Lexical first, then fewer edits, then alphabetical. Tokens the merged
// lexicon already recognizes yield no candidates.
std::vector<RewriteCandidate> normalize_token(const Token& token,
                                              const Lexicon& merged,
                                              const Lexicon& contractions,
                                              const RuleConfig& config);

}  // namespace emlex
