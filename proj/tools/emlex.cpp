// emlex — command-line front end over the emlex C API.

#include <cstdio>
#include <cstdlib>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "emlex.h"

namespace {

constexpr const char* kDataVersion = "xvii-1.0";

int exit_code_for(emlex_status status) {
  switch (status) {
    case EMLEX_OK:
      return 0;
    case EMLEX_ERR_USAGE:
    case EMLEX_ERR_INVALID:
    case EMLEX_ERR_ANNOTATIONS:
      return 1;
    default:
      return 2;
  }
}

[[noreturn]] void die(emlex_status status) {
  std::fprintf(stderr, "emlex: %s\n", emlex_last_error());
  std::exit(exit_code_for(status));
}

void check(emlex_status status) {
  if (status != EMLEX_OK) die(status);
}

// RAII wrappers over the opaque handles.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  explicit Handle(T* p) : ptr(p) {}
  ~Handle() { Free(ptr); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  T** out() { return &ptr; }
  T* get() const { return ptr; }
};
using Document = Handle<emlex_document, emlex_document_free>;
using Tokens = Handle<emlex_tokens, emlex_tokens_free>;
using LexiconH = Handle<emlex_lexicon, emlex_lexicon_free>;
using ConfigH = Handle<emlex_config, emlex_config_free>;
using Annotations = Handle<emlex_annotations, emlex_annotations_free>;
using ReportH = Handle<emlex_report, emlex_report_free>;

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { emlex_string_free(ptr); }
  char** out() { return &ptr; }
};

bool file_exists(const std::string& path) {
  if (std::FILE* f = std::fopen(path.c_str(), "rb")) {
    std::fclose(f);
    return true;
  }
  return false;
}

// Resolve a dictionary name against EMLEX_DICT_PATH, then the bundled data
// directory. Explicit paths (containing '/') are used verbatim.
std::string resolve_dict(const std::string& name) {
  if (name.find('/') != std::string::npos || file_exists(name)) return name;
  if (const char* env = std::getenv("EMLEX_DICT_PATH")) {
    std::string dirs = env;
    std::size_t start = 0;
    while (start <= dirs.size()) {
      std::size_t colon = dirs.find(':', start);
      std::string dir = dirs.substr(
          start, colon == std::string::npos ? std::string::npos : colon - start);
      if (!dir.empty() && file_exists(dir + "/" + name)) return dir + "/" + name;
      if (colon == std::string::npos) break;
      start = colon + 1;
    }
  }
#ifdef EMLEX_DATA_DIR
  if (file_exists(std::string(EMLEX_DATA_DIR) + "/" + name))
    return std::string(EMLEX_DATA_DIR) + "/" + name;
#endif
  return name;
}

struct CommonOpts {
  std::string corpus;
  std::string base = "base_en.dic";
  std::string overlay = "xvii_en.dic";
  std::string contractions = "contractions_en.dic";
  std::string config_path;
  std::string catchword;
  bool no_overlay = false;
  bool json = false;
};

void add_dict_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--dict", opts.base, "base dictionary");
  cmd->add_option("--overlay", opts.overlay, "period overlay dictionary");
  cmd->add_option("--contractions", opts.contractions,
                  "contraction dictionary");
  cmd->add_flag("--no-overlay", opts.no_overlay,
                "disable the period overlay");
  cmd->add_option("--config", opts.config_path, "rule configuration file");
}

void add_output_opts(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_flag("--json", opts.json, "emit JSON instead of TSV");
}

void load_config(const CommonOpts& opts, ConfigH& config) {
  if (opts.config_path.empty())
    check(emlex_config_default(config.out()));
  else
    check(emlex_config_load(opts.config_path.c_str(), config.out()));
}

void load_lexicons(const CommonOpts& opts, LexiconH& base, LexiconH& overlay,
                   LexiconH& contractions) {
  check(emlex_lexicon_load(resolve_dict(opts.base).c_str(), "base",
                           base.out()));
  if (opts.no_overlay)
    check(emlex_lexicon_parse("", "Dic_EN_XVII", overlay.out()));
  else
    check(emlex_lexicon_load(resolve_dict(opts.overlay).c_str(), "Dic_EN_XVII",
                             overlay.out()));
  check(emlex_lexicon_load(resolve_dict(opts.contractions).c_str(),
                           "contractions", contractions.out()));
}

void load_corpus(const CommonOpts& opts, const LexiconH& contractions,
                 Document& doc, Tokens& tokens) {
  Document raw;
  check(emlex_document_load(opts.corpus.c_str(), opts.corpus.c_str(),
                            raw.out()));
  if (!opts.catchword.empty()) {
    check(emlex_document_strip_catchwords(raw.get(), opts.catchword.c_str(),
                                          doc.out()));
  } else {
    check(emlex_document_from_string(emlex_document_text(raw.get()),
                                     opts.corpus.c_str(), doc.out()));
  }
  check(emlex_tokenize(doc.get(), contractions.get(), tokens.out()));
}

void print_report(const ReportH& report, bool json) {
  OwnedString text;
  check(json ? emlex_report_to_json(report.get(), text.out())
             : emlex_report_to_tsv(report.get(), text.out()));
  std::fputs(text.ptr, stdout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lexicographic toolkit for early modern English texts"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(emlex_version()) +
                                        " (data " + kDataVersion + ")");

  CommonOpts opts;

  // tokenize
  auto* tokenize = app.add_subcommand("tokenize", "token stream with spans");
  tokenize->add_option("corpus", opts.corpus, "input text")->required();
  tokenize->add_option("--contractions", opts.contractions,
                       "contraction dictionary");
  tokenize->add_option("--catchword", opts.catchword,
                       "page-break marker; strip repeated catchwords");

  // dict check | merge | fmt
  auto* dict = app.add_subcommand("dict", "dictionary utilities");
  dict->require_subcommand(1);
  std::vector<std::string> dict_files;
  auto* dict_check = dict->add_subcommand("check", "validate a dictionary");
  dict_check->add_option("file", dict_files, "dictionary file")->required();
  auto* dict_merge =
      dict->add_subcommand("merge", "merge dictionaries, canonical output");
  dict_merge->add_option("file", dict_files, "dictionary files")
      ->required()
      ->expected(-2);
  auto* dict_fmt = dict->add_subcommand("fmt", "reprint in canonical form");
  dict_fmt->add_option("file", dict_files, "dictionary file")->required();

  // normalize
  auto* normalize =
      app.add_subcommand("normalize", "archaic-form rewrite candidates");
  normalize->add_option("corpus", opts.corpus, "input text")->required();
  add_dict_opts(normalize, opts);
  add_output_opts(normalize, opts);
  normalize->add_option("--catchword", opts.catchword, "page-break marker");

  // locate
  auto* locate = app.add_subcommand("locate", "KWIC concordance");
  std::string pattern;
  std::size_t kwic_width = 5;
  std::string kwic_format = "text";
  bool count_only = false;
  locate->add_option("corpus", opts.corpus, "input text")->required();
  locate->add_option("--pattern", pattern, "query pattern")->required();
  locate->add_option("--kwic", kwic_width, "context width in tokens");
  locate->add_option("--format", kwic_format, "text | tsv | json");
  locate->add_flag("--count", count_only, "print the match count only");
  add_dict_opts(locate, opts);
  locate->add_option("--catchword", opts.catchword, "page-break marker");

  // affix
  auto* affix = app.add_subcommand("affix", "prefix/suffix inquiry");
  std::string prefix_q, suffix_q;
  affix->add_option("corpus", opts.corpus, "input text")->required();
  auto* po = affix->add_option("--prefix", prefix_q, "prefix to search");
  auto* so = affix->add_option("--suffix", suffix_q, "suffix to search");
  po->excludes(so);
  add_output_opts(affix, opts);

  // stats
  auto* stats = app.add_subcommand("stats", "corpus censuses");
  stats->require_subcommand(1);
  std::size_t min_letters = 7;
  std::string suffix_list;
  auto* st_pronouns = stats->add_subcommand("pronouns", "pronoun census");
  auto* st_lengths = stats->add_subcommand("lengths", "long-word lengths");
  st_lengths->add_option("--min-letters", min_letters, "minimum letters");
  auto* st_punct = stats->add_subcommand("punct", "punctuation census");
  auto* st_suffixes = stats->add_subcommand("suffixes", "suffix table");
  st_suffixes->add_option("--list", suffix_list,
                          "comma-separated suffixes (default census list)");
  auto* st_unknown = stats->add_subcommand("unknown", "unknown-word census");
  for (CLI::App* sub : {st_pronouns, st_lengths, st_punct, st_suffixes,
                        st_unknown}) {
    sub->add_option("corpus", opts.corpus, "input text")->required();
    add_dict_opts(sub, opts);
    add_output_opts(sub, opts);
    sub->add_option("--catchword", opts.catchword, "page-break marker");
  }

  // annotate
  auto* annotate = app.add_subcommand("annotate", "recognition summary");
  annotate->add_option("corpus", opts.corpus, "input text")->required();
  add_dict_opts(annotate, opts);
  annotate->add_option("--catchword", opts.catchword, "page-break marker");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (tokenize->parsed()) {
    LexiconH contractions;
    check(emlex_lexicon_load(resolve_dict(opts.contractions).c_str(),
                             "contractions", contractions.out()));
    Document doc;
    Tokens tokens;
    load_corpus(opts, contractions, doc, tokens);
    std::printf("index\tstart\tend\tkind\tflags\tsurface\n");
    for (std::size_t i = 0; i < emlex_tokens_count(tokens.get()); ++i) {
      emlex_token_info info;
      check(emlex_tokens_get(tokens.get(), i, &info));
      OwnedString flags;
      check(emlex_flags_format(info.flags, flags.out()));
      std::printf("%zu\t%zu\t%zu\t%s\t%s\t%s\n", i, info.start, info.end,
                  info.kind, flags.ptr, info.surface);
    }
    return 0;
  }

  if (dict->parsed()) {
    if (dict_check->parsed()) {
      LexiconH lex;
      check(emlex_lexicon_load(dict_files[0].c_str(), "check", lex.out()));
      std::printf("%s: %zu entries, ok\n", dict_files[0].c_str(),
                  emlex_lexicon_size(lex.get()));
      return 0;
    }
    std::vector<std::unique_ptr<LexiconH>> loaded;
    for (const auto& f : dict_files) {
      auto lex = std::make_unique<LexiconH>();
      check(emlex_lexicon_load(f.c_str(), f.c_str(), lex->out()));
      loaded.push_back(std::move(lex));
    }
    LexiconH merged;
    if (loaded.size() == 1) {
      OwnedString text;
      check(emlex_lexicon_format(loaded[0]->get(), text.out()));
      std::fputs(text.ptr, stdout);
      return 0;
    }
    check(emlex_lexicon_merge(loaded[0]->get(), loaded[1]->get(),
                              merged.out()));
    for (std::size_t i = 2; i < loaded.size(); ++i) {
      LexiconH next;
      check(emlex_lexicon_merge(merged.get(), loaded[i]->get(), next.out()));
      std::swap(merged.ptr, next.ptr);
    }
    OwnedString text;
    check(emlex_lexicon_format(merged.get(), text.out()));
    std::fputs(text.ptr, stdout);
    return 0;
  }

  // every remaining subcommand wants the full dictionary set
  LexiconH base, overlay, contractions;
  ConfigH config;
  load_lexicons(opts, base, overlay, contractions);
  load_config(opts, config);
  Document doc;
  Tokens tokens;
  load_corpus(opts, contractions, doc, tokens);
  const char* corpus_id = opts.corpus.c_str();

  if (normalize->parsed()) {
    ReportH report;
    check(emlex_report_normalize(tokens.get(), base.get(), overlay.get(),
                                 contractions.get(), corpus_id, config.get(),
                                 report.out()));
    print_report(report, opts.json);
    return 0;
  }

  if (locate->parsed()) {
    Annotations annotations;
    // POS constraints need an annotated corpus; build it lazily on demand.
    if (pattern.find('<') != std::string::npos)
      check(emlex_annotate(tokens.get(), base.get(), overlay.get(),
                           contractions.get(), config.get(),
                           annotations.out()));
    if (count_only) {
      std::size_t n = 0;
      check(emlex_locate_count(tokens.get(), annotations.get(),
                               pattern.c_str(), &n));
      std::printf("%zu\n", n);
      return 0;
    }
    OwnedString text;
    check(emlex_locate_kwic(doc.get(), tokens.get(), annotations.get(),
                            pattern.c_str(), kwic_width, kwic_format.c_str(),
                            text.out()));
    std::fputs(text.ptr, stdout);
    return 0;
  }

  if (affix->parsed()) {
    if (prefix_q.empty() && suffix_q.empty()) {
      std::fprintf(stderr, "emlex affix: one of --prefix or --suffix needed\n");
      return 1;
    }
    ReportH report;
    const bool is_prefix = !prefix_q.empty();
    check(emlex_report_affix(tokens.get(), is_prefix ? "prefix" : "suffix",
                             is_prefix ? prefix_q.c_str() : suffix_q.c_str(),
                             corpus_id, config.get(), report.out()));
    print_report(report, opts.json);
    return 0;
  }

  if (stats->parsed()) {
    ReportH report;
    if (st_pronouns->parsed()) {
      check(emlex_report_pronouns(tokens.get(), corpus_id, config.get(),
                                  report.out()));
    } else if (st_lengths->parsed()) {
      check(emlex_report_lengths(tokens.get(), min_letters, corpus_id,
                                 config.get(), report.out()));
    } else if (st_punct->parsed()) {
      check(emlex_report_punctuation(doc.get(), config.get(), report.out()));
    } else if (st_suffixes->parsed()) {
      check(emlex_report_suffixes(
          tokens.get(), suffix_list.empty() ? nullptr : suffix_list.c_str(),
          base.get(), overlay.get(), corpus_id, config.get(), report.out()));
    } else {
      Annotations annotations;
      check(emlex_annotate(tokens.get(), base.get(), overlay.get(),
                           contractions.get(), config.get(),
                           annotations.out()));
      check(emlex_report_unknown(annotations.get(), tokens.get(), corpus_id,
                                 config.get(), report.out()));
    }
    print_report(report, opts.json);
    return 0;
  }

  if (annotate->parsed()) {
    Annotations annotations;
    check(emlex_annotate(tokens.get(), base.get(), overlay.get(),
                         contractions.get(), config.get(), annotations.out()));
    std::printf("recognized\t%zu\nunknown\t%zu\n",
                emlex_annotations_recognized_count(annotations.get()),
                emlex_annotations_unknown_count(annotations.get()));
    return 0;
  }

  return 1;
}
