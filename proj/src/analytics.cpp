#include "analytics.hpp"

#include <algorithm>
#include <cstdio>

#include "text.hpp"

namespace emlex {

namespace {

std::string format_fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

std::size_t word_count(const std::vector<Token>& tokens) {
  return static_cast<std::size_t>(
      std::count_if(tokens.begin(), tokens.end(), [](const Token& t) {
        return t.kind == TokenKind::Word;
      }));
}

}  // namespace

std::string report_provenance(const std::string& corpus_id,
                              const RuleConfig& config) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(config.hash()));
  return "corpus=" + corpus_id + " config=" + buf;
}

AnnotationIndex annotate_corpus(const std::vector<Token>& tokens,
                                const Lexicon& base, const Lexicon& overlay,
                                const Lexicon& contractions,
                                const RuleConfig& config) {
  Lexicon merged = Lexicon::merge(base, overlay);
  AnnotationIndex index;
  index.per_token.resize(tokens.size());

  std::map<std::string, std::vector<Analysis>> cache;
  std::map<std::string, std::vector<std::string>> noise_cache;

  auto analyze_surface = [&](const Token& token) -> std::vector<Analysis> {
    std::string folded = text::fold(token.surface);
    std::vector<Analysis> analyses;

    auto from_entry = [&](const LexEntry& e) {
      std::string feats;
      for (const auto& f : e.features) feats += format_feature(f);
      Provenance prov = e.archaic() ? Provenance::XVII : Provenance::Base;
      analyses.push_back(Analysis{e.expansion.empty() ? e.lemma : e.expanded(),
                                  e.pos, feats, prov, ""});
    };

    for (const auto* e : merged.lookup(folded)) from_entry(*e);
    if (!analyses.empty()) return analyses;

    if (folded.find('\'') != std::string::npos) {
      for (const auto* e : contractions.lookup(folded)) {
        std::string feats;
        for (const auto& f : e->features) feats += format_feature(f);
        analyses.push_back(Analysis{e->expanded(), e->pos, feats,
                                    Provenance::Rule, "ContractionDict"});
      }
      if (!analyses.empty()) return analyses;
    }

    // Regular inflection of a listed lemma still counts as recognized.
    for (const auto& root : inflection_roots(folded)) {
      for (const auto* e : merged.lookup(root)) {
        analyses.push_back(
            Analysis{e->lemma, e->pos, "",
                     e->archaic() ? Provenance::XVII : Provenance::Base, ""});
      }
      if (!analyses.empty()) return analyses;
    }

    for (const auto& c :
         normalize_token(token, merged, contractions, config)) {
      if (c.confidence == Confidence::Noise) {
        noise_cache[folded].push_back(c.result);
        continue;
      }
      analyses.push_back(Analysis{c.result, "", "", Provenance::Rule, c.rule});
    }
    if (config.inflection) {
      if (auto a = analyze_archaic_inflection(folded, merged))
        analyses.push_back(
            Analysis{a->lemma, "V", "", Provenance::Rule, "InflectionEthEst"});
    }
    if (config.degree) {
      if (auto a = analyze_degree(folded, merged, config))
        analyses.push_back(
            Analysis{a->lemma, "A", "", Provenance::Rule, "DegreeErEst"});
    }
    return analyses;
  };

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::Word) continue;
    std::string folded = text::fold(t.surface);
    auto it = cache.find(folded);
    if (it == cache.end())
      it = cache.emplace(folded, analyze_surface(t)).first;
    index.per_token[i] = it->second;
    if (it->second.empty()) {
      index.unknown.insert(folded);
      auto nc = noise_cache.find(folded);
      if (nc != noise_cache.end()) index.suggestions[folded] = nc->second;
    } else {
      index.recognized.insert(folded);
    }
  }
  return index;
}

Report pronoun_census(const std::vector<Token>& tokens,
                      const std::string& provenance) {
  struct Group {
    const char* name;
    std::vector<const char*> forms;  // "my self" marks the bigram
  };
  static const std::vector<Group> groups = {
      {"me/my self/my/I", {"me", "my self", "my", "i"}},
      {"thou/thy/thine", {"thou", "thy", "thine"}},
      {"she/her", {"she", "her"}},
      {"he/him/his", {"he", "him", "his"}},
      {"we/us/our", {"we", "us", "our"}},
      {"you/your", {"you", "your"}},
      {"they/them/their", {"they", "them", "their"}},
  };

  std::map<std::string, std::int64_t> counts;
  std::int64_t my_self = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind != TokenKind::Word) continue;
    std::string folded = text::fold(tokens[i].surface);
    bool bigram = false;
    if (folded == "my" && i + 1 < tokens.size() &&
        tokens[i + 1].kind == TokenKind::Word &&
        text::fold(tokens[i + 1].surface) == "self") {
      ++my_self;
      bigram = true;
    }
    if (!bigram) ++counts[folded];
  }

  Report report;
  report.title = "personal pronouns";
  report.columns = {"group", "form", "occurrences"};
  report.provenance = provenance;
  std::int64_t grand = 0;
  for (const auto& g : groups) {
    std::int64_t group_total = 0;
    for (const char* form : g.forms) {
      std::int64_t n =
          std::string(form) == "my self" ? my_self : counts[form];
      report.add_row({std::string(g.name), std::string(form), n});
      group_total += n;
    }
    report.add_row({std::string(g.name), std::string("(group total)"),
                    group_total});
    grand += group_total;
  }
  report.add_row({std::string("Total"), std::string(""), grand});
  return report;
}

Report length_distribution(const std::vector<Token>& tokens,
                           std::size_t min_letters,
                           const std::string& provenance) {
  std::map<std::size_t, std::set<std::string>> forms;
  std::map<std::size_t, std::int64_t> occurrences;
  std::size_t corpus_words = word_count(tokens);
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::Word) continue;
    std::size_t len = letter_length(t.surface);
    if (len < min_letters) continue;
    forms[len].insert(text::letters_only(t.surface));
    ++occurrences[len];
  }

  Report report;
  report.title = "word length distribution (>=" +
                 std::to_string(min_letters) + " letters)";
  report.columns = {"length", "words", "occurrences", "occ_per_word"};
  report.provenance = provenance;
  std::int64_t total_forms = 0, total_occ = 0;
  if (!forms.empty()) {
    std::size_t max_len = forms.rbegin()->first;
    for (std::size_t len = min_letters; len <= max_len; ++len) {
      std::int64_t f = static_cast<std::int64_t>(forms[len].size());
      std::int64_t o = occurrences[len];
      report.add_row({static_cast<std::int64_t>(len), f, o,
                      f ? format_fixed2(double(o) / double(f))
                        : std::string("0.00")});
      total_forms += f;
      total_occ += o;
    }
  }
  report.add_row({std::string("Total"), total_forms, total_occ,
                  total_forms
                      ? format_fixed2(double(total_occ) / double(total_forms))
                      : std::string("0.00")});
  double share = corpus_words
                     ? 100.0 * double(total_occ) / double(corpus_words)
                     : 0.0;
  report.add_row({std::string("Corpus words"),
                  static_cast<std::int64_t>(corpus_words), total_occ,
                  format_fixed2(share) + "%"});
  return report;
}

Report punctuation_census(const SourceDocument& doc,
                          const std::string& provenance) {
  std::int64_t straight = 0, left_curly = 0, right_curly = 0, stops = 0,
               commas = 0;
  std::size_t i = 0;
  while (i < doc.text.size()) {
    auto [cp, n] = text::decode_utf8(doc.text, i);
    switch (cp) {
      case 0x27: ++straight; break;
      case 0x2018: ++left_curly; break;
      case 0x2019: ++right_curly; break;
      case '.': ++stops; break;
      case ',': ++commas; break;
      default: break;
    }
    i += n;
  }
  Report report;
  report.title = "punctuation census";
  report.columns = {"character", "count"};
  report.provenance = provenance;
  report.add_row({std::string("apostrophe U+0027"), straight});
  report.add_row({std::string("apostrophe U+2018"), left_curly});
  report.add_row({std::string("apostrophe U+2019"), right_curly});
  report.add_row(
      {std::string("apostrophes total"), straight + left_curly + right_curly});
  report.add_row({std::string("full stop"), stops});
  report.add_row({std::string("comma"), commas});
  return report;
}

Report unknown_words(const AnnotationIndex& index,
                     const std::vector<Token>& tokens,
                     const std::string& provenance) {
  std::map<std::string, std::int64_t> counts;
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::Word) continue;
    std::string folded = text::fold(t.surface);
    if (index.unknown.count(folded)) ++counts[folded];
  }
  Report report;
  report.title = "unknown words";
  report.columns = {"surface", "occurrences", "suggestions"};
  report.provenance = provenance;
  for (const auto& [surface, n] : counts) {
    std::string suggestions;
    auto it = index.suggestions.find(surface);
    if (it != index.suggestions.end()) {
      for (const auto& s : it->second) {
        if (!suggestions.empty()) suggestions += ";";
        suggestions += s;
      }
    }
    report.add_row({surface, n, suggestions});
  }
  return report;
}

std::vector<std::string> default_suffix_list() {
  return {"tion", "tions", "ity",   "ities",  "ness", "nesses", "ment",
          "ments", "ence", "ences", "ance",   "ances", "ure",   "ures",
          "ency",  "encies", "sion", "sions", "er",    "ers",   "or",
          "ors",   "acy",  "acies", "ancy",   "ancies", "ive",  "ives",
          "ary",   "aries", "ist",  "ists",   "al",    "als",   "ast",
          "asts",  "yon",  "yons",  "ous",    "able",  "ly",    "ish",
          "ate",   "less", "ick",   "ical",   "ic",    "ose"};
}

Report suffix_table(const std::vector<Token>& tokens,
                    const std::vector<std::string>& suffixes,
                    const Lexicon& base, const Lexicon& overlay,
                    const std::string& provenance) {
  std::map<std::string, std::int64_t> occurrences;
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::Word) continue;
    ++occurrences[text::letters_only(t.surface)];
  }
  Report report;
  report.title = "suffix census";
  report.columns = {"suffix", "forms", "occurrences", "archaic_forms"};
  report.provenance = provenance;
  for (const auto& suffix : suffixes) {
    std::int64_t forms = 0, occ = 0;
    std::string archaic;
    for (const auto& [form, n] : occurrences) {
      if (form.size() <= suffix.size() ||
          form.compare(form.size() - suffix.size(), suffix.size(), suffix) !=
              0)
        continue;
      ++forms;
      occ += n;
      if (!overlay.lookup(form).empty() && base.lookup(form).empty()) {
        if (!archaic.empty()) archaic += ";";
        archaic += form;
      }
    }
    report.add_row({suffix, forms, occ, archaic});
  }
  return report;
}

Report normalization_report(const std::vector<Token>& tokens,
                            const Lexicon& merged, const Lexicon& contractions,
                            const RuleConfig& config,
                            const std::string& provenance) {
  Report report;
  report.title = "normalization";
  report.columns = {"index", "surface", "candidate", "rule", "confidence"};
  report.provenance = provenance;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& t = tokens[i];
    if (t.kind != TokenKind::Word) continue;
    auto candidates = normalize_token(t, merged, contractions, config);
    if (candidates.empty()) {
      report.add_row({static_cast<std::int64_t>(i), t.surface,
                      std::string("-"), std::string("-"), std::string("-")});
    } else {
      const auto& c = candidates.front();
      report.add_row({static_cast<std::int64_t>(i), t.surface, c.result,
                      c.rule, std::string(confidence_name(c.confidence))});
    }
  }
  if (config.juxtaposition) {
    for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
      if (tokens[i].kind != TokenKind::Word ||
          tokens[i + 1].kind != TokenKind::Word)
        continue;
      if (auto c = fuse_juxtaposed(tokens[i], tokens[i + 1], merged)) {
        report.add_row({static_cast<std::int64_t>(i), c->source, c->result,
                        c->rule,
                        std::string(confidence_name(c->confidence))});
      }
    }
  }
  return report;
}

}  // namespace emlex
