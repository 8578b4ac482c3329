#include "emlex.h"

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "analytics.hpp"
#include "corpus.hpp"
#include "error.hpp"
#include "lexicon.hpp"
#include "morphology.hpp"
#include "pattern.hpp"
#include "report.hpp"
#include "text.hpp"

using namespace emlex;

struct emlex_document {
  SourceDocument doc;
};
struct emlex_tokens {
  std::vector<Token> tokens;
};
struct emlex_lexicon {
  Lexicon lexicon;
};
struct emlex_config {
  RuleConfig config;
};
struct emlex_annotations {
  AnnotationIndex index;
};
struct emlex_report {
  Report report;
};

namespace {

thread_local std::string g_last_error;

emlex_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Usage: return EMLEX_ERR_USAGE;
    case ErrorCode::FileNotFound: return EMLEX_ERR_NOT_FOUND;
    case ErrorCode::DecodeError: return EMLEX_ERR_DECODE;
    case ErrorCode::EmptyDocument: return EMLEX_ERR_EMPTY;
    case ErrorCode::ParseError: return EMLEX_ERR_PARSE;
    case ErrorCode::ValidationError: return EMLEX_ERR_VALIDATION;
    case ErrorCode::ConflictError: return EMLEX_ERR_CONFLICT;
    case ErrorCode::PatternSyntaxError: return EMLEX_ERR_PATTERN;
    case ErrorCode::MissingAnnotations: return EMLEX_ERR_ANNOTATIONS;
    case ErrorCode::InvalidArgument: return EMLEX_ERR_INVALID;
  }
  return EMLEX_ERR_INTERNAL;
}

template <typename Fn>
emlex_status guarded(Fn&& fn) {
  try {
    fn();
    return EMLEX_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return EMLEX_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

emlex_status require(bool ok, const char* what) {
  if (ok) return EMLEX_OK;
  g_last_error = std::string("null argument: ") + what;
  return EMLEX_ERR_INVALID;
}

const RuleConfig& config_or_default(const emlex_config* config) {
  static const RuleConfig defaults;
  return config ? config->config : defaults;
}

}  // namespace

extern "C" {

const char* emlex_version(void) { return "emlex 1.0.0"; }

const char* emlex_last_error(void) { return g_last_error.c_str(); }

void emlex_string_free(char* s) { std::free(s); }

/* documents */

emlex_status emlex_document_load(const char* path, const char* id,
                                 emlex_document** out) {
  if (auto st = require(path && id && out, "document_load")) return st;
  return guarded([&] {
    *out = new emlex_document{load_document(path, id)};
  });
}

emlex_status emlex_document_from_string(const char* text, const char* id,
                                        emlex_document** out) {
  if (auto st = require(text && id && out, "document_from_string")) return st;
  return guarded([&] {
    *out = new emlex_document{document_from_string(text, id)};
  });
}

emlex_status emlex_document_strip_catchwords(const emlex_document* doc,
                                             const char* page_break_marker,
                                             emlex_document** out) {
  if (auto st = require(doc && page_break_marker && out, "strip_catchwords"))
    return st;
  return guarded([&] {
    *out = new emlex_document{strip_catchwords(doc->doc, page_break_marker)};
  });
}

const char* emlex_document_text(const emlex_document* doc) {
  return doc ? doc->doc.text.c_str() : nullptr;
}

const char* emlex_document_meta(const emlex_document* doc, const char* key) {
  if (!doc || !key) return nullptr;
  auto it = doc->doc.meta.find(key);
  return it == doc->doc.meta.end() ? nullptr : it->second.c_str();
}

void emlex_document_free(emlex_document* doc) { delete doc; }

/* tokens */

emlex_status emlex_tokenize(const emlex_document* doc,
                            const emlex_lexicon* contractions,
                            emlex_tokens** out) {
  if (auto st = require(doc && out, "tokenize")) return st;
  return guarded([&] {
    *out = new emlex_tokens{
        tokenize(doc->doc, contractions ? &contractions->lexicon : nullptr)};
  });
}

size_t emlex_tokens_count(const emlex_tokens* tokens) {
  return tokens ? tokens->tokens.size() : 0;
}

emlex_status emlex_tokens_get(const emlex_tokens* tokens, size_t index,
                              emlex_token_info* out) {
  if (auto st = require(tokens && out, "tokens_get")) return st;
  if (index >= tokens->tokens.size()) {
    g_last_error = "token index out of range";
    return EMLEX_ERR_INVALID;
  }
  const Token& t = tokens->tokens[index];
  out->start = t.span.start;
  out->end = t.span.end;
  out->kind = kind_name(t.kind);
  out->flags = t.flags;
  out->surface = t.surface.c_str();
  return EMLEX_OK;
}

emlex_status emlex_flags_format(unsigned flags, char** out) {
  if (auto st = require(out != nullptr, "flags_format")) return st;
  *out = dup_string(flag_names(flags));
  return EMLEX_OK;
}

void emlex_tokens_free(emlex_tokens* tokens) { delete tokens; }

/* lexicons */

emlex_status emlex_lexicon_load(const char* path, const char* origin,
                                emlex_lexicon** out) {
  if (auto st = require(path && origin && out, "lexicon_load")) return st;
  return guarded([&] {
    *out = new emlex_lexicon{Lexicon::load(path, origin)};
  });
}

emlex_status emlex_lexicon_parse(const char* content, const char* origin,
                                 emlex_lexicon** out) {
  if (auto st = require(content && origin && out, "lexicon_parse")) return st;
  return guarded([&] {
    *out = new emlex_lexicon{Lexicon::parse(content, origin)};
  });
}

emlex_status emlex_lexicon_merge(const emlex_lexicon* base,
                                 const emlex_lexicon* overlay,
                                 emlex_lexicon** out) {
  if (auto st = require(base && overlay && out, "lexicon_merge")) return st;
  return guarded([&] {
    *out = new emlex_lexicon{Lexicon::merge(base->lexicon, overlay->lexicon)};
  });
}

size_t emlex_lexicon_size(const emlex_lexicon* lexicon) {
  return lexicon ? lexicon->lexicon.size() : 0;
}

emlex_status emlex_lexicon_format(const emlex_lexicon* lexicon, char** out) {
  if (auto st = require(lexicon && out, "lexicon_format")) return st;
  return guarded([&] { *out = dup_string(lexicon->lexicon.format()); });
}

void emlex_lexicon_free(emlex_lexicon* lexicon) { delete lexicon; }

/* config */

emlex_status emlex_config_default(emlex_config** out) {
  if (auto st = require(out != nullptr, "config_default")) return st;
  *out = new emlex_config{};
  return EMLEX_OK;
}

emlex_status emlex_config_load(const char* path, emlex_config** out) {
  if (auto st = require(path && out, "config_load")) return st;
  return guarded([&] {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw Error(ErrorCode::FileNotFound,
                  std::string("cannot open config: ") + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    *out = new emlex_config{RuleConfig::parse(buf.str())};
  });
}

void emlex_config_free(emlex_config* config) { delete config; }

/* annotation */

emlex_status emlex_annotate(const emlex_tokens* tokens,
                            const emlex_lexicon* base,
                            const emlex_lexicon* overlay,
                            const emlex_lexicon* contractions,
                            const emlex_config* config,
                            emlex_annotations** out) {
  if (auto st = require(tokens && base && out, "annotate")) return st;
  return guarded([&] {
    static const Lexicon empty;
    *out = new emlex_annotations{annotate_corpus(
        tokens->tokens, base->lexicon,
        overlay ? overlay->lexicon : empty,
        contractions ? contractions->lexicon : empty,
        config_or_default(config))};
  });
}

size_t emlex_annotations_unknown_count(const emlex_annotations* annotations) {
  return annotations ? annotations->index.unknown.size() : 0;
}

size_t emlex_annotations_recognized_count(
    const emlex_annotations* annotations) {
  return annotations ? annotations->index.recognized.size() : 0;
}

int emlex_annotations_is_unknown(const emlex_annotations* annotations,
                                 const char* surface) {
  if (!annotations || !surface) return 0;
  return annotations->index.unknown.count(text::fold(surface)) ? 1 : 0;
}

void emlex_annotations_free(emlex_annotations* annotations) {
  delete annotations;
}

/* reports */

emlex_status emlex_report_pronouns(const emlex_tokens* tokens,
                                   const char* corpus_id,
                                   const emlex_config* config,
                                   emlex_report** out) {
  if (auto st = require(tokens && corpus_id && out, "report_pronouns"))
    return st;
  return guarded([&] {
    *out = new emlex_report{pronoun_census(
        tokens->tokens,
        report_provenance(corpus_id, config_or_default(config)))};
  });
}

emlex_status emlex_report_lengths(const emlex_tokens* tokens,
                                  size_t min_letters, const char* corpus_id,
                                  const emlex_config* config,
                                  emlex_report** out) {
  if (auto st = require(tokens && corpus_id && out, "report_lengths"))
    return st;
  return guarded([&] {
    *out = new emlex_report{length_distribution(
        tokens->tokens, min_letters,
        report_provenance(corpus_id, config_or_default(config)))};
  });
}

emlex_status emlex_report_punctuation(const emlex_document* doc,
                                      const emlex_config* config,
                                      emlex_report** out) {
  if (auto st = require(doc && out, "report_punctuation")) return st;
  return guarded([&] {
    *out = new emlex_report{punctuation_census(
        doc->doc, report_provenance(doc->doc.id, config_or_default(config)))};
  });
}

emlex_status emlex_report_unknown(const emlex_annotations* annotations,
                                  const emlex_tokens* tokens,
                                  const char* corpus_id,
                                  const emlex_config* config,
                                  emlex_report** out) {
  if (auto st = require(annotations && tokens && corpus_id && out,
                        "report_unknown"))
    return st;
  return guarded([&] {
    *out = new emlex_report{unknown_words(
        annotations->index, tokens->tokens,
        report_provenance(corpus_id, config_or_default(config)))};
  });
}

emlex_status emlex_report_suffixes(const emlex_tokens* tokens,
                                   const char* suffixes,
                                   const emlex_lexicon* base,
                                   const emlex_lexicon* overlay,
                                   const char* corpus_id,
                                   const emlex_config* config,
                                   emlex_report** out) {
  if (auto st = require(tokens && base && corpus_id && out, "report_suffixes"))
    return st;
  return guarded([&] {
    std::vector<std::string> list;
    if (suffixes && *suffixes) {
      std::string s = suffixes;
      std::size_t start = 0;
      while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(
            start, comma == std::string::npos ? s.size() - start
                                              : comma - start);
        if (!item.empty()) list.push_back(item);
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    } else {
      list = default_suffix_list();
    }
    static const Lexicon empty;
    *out = new emlex_report{suffix_table(
        tokens->tokens, list, base->lexicon,
        overlay ? overlay->lexicon : empty,
        report_provenance(corpus_id, config_or_default(config)))};
  });
}

emlex_status emlex_report_normalize(const emlex_tokens* tokens,
                                    const emlex_lexicon* base,
                                    const emlex_lexicon* overlay,
                                    const emlex_lexicon* contractions,
                                    const char* corpus_id,
                                    const emlex_config* config,
                                    emlex_report** out) {
  if (auto st = require(tokens && base && corpus_id && out,
                        "report_normalize"))
    return st;
  return guarded([&] {
    static const Lexicon empty;
    Lexicon merged = Lexicon::merge(
        base->lexicon, overlay ? overlay->lexicon : empty);
    *out = new emlex_report{normalization_report(
        tokens->tokens, merged,
        contractions ? contractions->lexicon : empty,
        config_or_default(config),
        report_provenance(corpus_id, config_or_default(config)))};
  });
}

emlex_status emlex_report_affix(const emlex_tokens* tokens, const char* kind,
                                const char* affix, const char* corpus_id,
                                const emlex_config* config,
                                emlex_report** out) {
  if (auto st = require(tokens && kind && affix && corpus_id && out,
                        "report_affix"))
    return st;
  return guarded([&] {
    std::string k = kind;
    if (k != "prefix" && k != "suffix")
      throw Error(ErrorCode::InvalidArgument,
                  "affix kind must be 'prefix' or 'suffix'");
    AffixKind ak = k == "prefix" ? AffixKind::Prefix : AffixKind::Suffix;
    *out = new emlex_report{affix_query(ak, affix, tokens->tokens)
                                .to_report(
                                    k + " " + affix,
                                    report_provenance(
                                        corpus_id,
                                        config_or_default(config)))};
  });
}

emlex_status emlex_report_to_tsv(const emlex_report* report, char** out) {
  if (auto st = require(report && out, "report_to_tsv")) return st;
  return guarded([&] { *out = dup_string(report->report.to_tsv()); });
}

emlex_status emlex_report_to_json(const emlex_report* report, char** out) {
  if (auto st = require(report && out, "report_to_json")) return st;
  return guarded([&] { *out = dup_string(report->report.to_json()); });
}

void emlex_report_free(emlex_report* report) { delete report; }

/* locate / concordance */

emlex_status emlex_locate_kwic(const emlex_document* doc,
                               const emlex_tokens* tokens,
                               const emlex_annotations* annotations,
                               const char* pattern, size_t width,
                               const char* format, char** out) {
  if (auto st = require(doc && tokens && pattern && format && out,
                        "locate_kwic"))
    return st;
  return guarded([&] {
    Pattern p = compile_pattern(pattern);
    auto matches = locate(p, tokens->tokens,
                          annotations ? &annotations->index : nullptr);
    *out = dup_string(format_kwic_lines(doc->doc, tokens->tokens, matches,
                                        width, format));
  });
}

emlex_status emlex_locate_count(const emlex_tokens* tokens,
                                const emlex_annotations* annotations,
                                const char* pattern, size_t* out) {
  if (auto st = require(tokens && pattern && out, "locate_count")) return st;
  return guarded([&] {
    Pattern p = compile_pattern(pattern);
    *out = locate(p, tokens->tokens,
                  annotations ? &annotations->index : nullptr)
               .size();
  });
}

}  // extern "C"
