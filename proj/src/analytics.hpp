#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "corpus.hpp"
#include "lexicon.hpp"
#include "morphology.hpp"
#include "report.hpp"

namespace emlex {

enum class Provenance { Base, XVII, Rule };

struct Analysis {
  std::string lemma;
  std::string pos;
  std::string features;  // serialized +tag form
  Provenance provenance = Provenance::Base;
  std::string rule;  // set when provenance == Rule
};

struct AnnotationIndex {
  std::vector<std::vector<Analysis>> per_token;  // parallel to the tokens
  std::set<std::string> recognized;  // case-folded Word surfaces
  std::set<std::string> unknown;
  // Noise-only suggestions for unknown surfaces, for the unknown-word report.
  std::map<std::string, std::vector<std::string>> suggestions;
};

AnnotationIndex annotate_corpus(const std::vector<Token>& tokens,
                                const Lexicon& base, const Lexicon& overlay,
                                const Lexicon& contractions,
                                const RuleConfig& config);

// Provenance string embedded in every report.
std::string report_provenance(const std::string& corpus_id,
                              const RuleConfig& config);

Report pronoun_census(const std::vector<Token>& tokens,
                      const std::string& provenance);

Report length_distribution(const std::vector<Token>& tokens,
                           std::size_t min_letters,
                           const std::string& provenance);

Report punctuation_census(const SourceDocument& doc,
                          const std::string& provenance);

Report unknown_words(const AnnotationIndex& index,
                     const std::vector<Token>& tokens,
                     const std::string& provenance);

// Default list: the noun suffix pairs of the census table plus the adjective
// suffixes surveyed alongside them.
std::vector<std::string> default_suffix_list();

Report suffix_table(const std::vector<Token>& tokens,
                    const std::vector<std::string>& suffixes,
                    const Lexicon& base, const Lexicon& overlay,
                    const std::string& provenance);

// One row per token: surface, best candidate, rule, confidence.
Report normalization_report(const std::vector<Token>& tokens,
                            const Lexicon& merged, const Lexicon& contractions,
                            const RuleConfig& config,
                            const std::string& provenance);

}  // namespace emlex
