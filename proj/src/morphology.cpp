#include "morphology.hpp"

#include <algorithm>
#include <array>

#include "error.hpp"
#include "text.hpp"

namespace emlex {

const char* confidence_name(Confidence c) {
  switch (c) {
    case Confidence::Lexical: return "Lexical";
    case Confidence::RuleValidated: return "RuleValidated";
    case Confidence::Noise: return "Noise";
  }
  return "?";
}

std::size_t letter_length(std::string_view form) {
  return text::letter_count(form);
}

RuleConfig RuleConfig::parse(std::string_view content) {
  RuleConfig config;
  std::size_t start = 0;
  auto as_bool = [](std::string_view v) { return v == "true" || v == "1"; };
  int lineno = 0;
  while (start <= content.size()) {
    std::size_t nl = content.find('\n', start);
    std::string_view line = content.substr(
        start,
        nl == std::string_view::npos ? content.size() - start : nl - start);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line[0] != '#') {
      std::size_t eq = line.find('=');
      if (eq == std::string_view::npos)
        throw Error(ErrorCode::ParseError,
                    "config line " + std::to_string(lineno) + ": missing '='");
      std::string key(line.substr(0, eq));
      std::string value(line.substr(eq + 1));
      if (key == "rule.contraction") config.contraction = as_bool(value);
      else if (key == "rule.hyphen") config.hyphen = as_bool(value);
      else if (key == "rule.in_en") config.in_en = as_bool(value);
      else if (key == "rule.elision") config.elision = as_bool(value);
      else if (key == "rule.inflection") config.inflection = as_bool(value);
      else if (key == "rule.degree") config.degree = as_bool(value);
      else if (key == "rule.juxtaposition")
        config.juxtaposition = as_bool(value);
      else if (key.rfind("irregular.", 0) == 0) {
        std::string form = key.substr(10);
        std::size_t colon = value.find(':');
        std::string lemma = value.substr(0, colon);
        Degree degree = (colon != std::string::npos &&
                         value.substr(colon + 1) == "superlative")
                            ? Degree::Superlative
                            : Degree::Comparative;
        config.irregular_degree[form] = {lemma, degree};
      } else {
        throw Error(ErrorCode::ParseError, "config line " +
                                               std::to_string(lineno) +
                                               ": unknown key '" + key + "'");
      }
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return config;
}

std::string RuleConfig::serialize() const {
  auto b = [](bool v) { return v ? "true" : "false"; };
  std::string out;
  out += std::string("rule.contraction=") + b(contraction) + "\n";
  out += std::string("rule.hyphen=") + b(hyphen) + "\n";
  out += std::string("rule.in_en=") + b(in_en) + "\n";
  out += std::string("rule.elision=") + b(elision) + "\n";
  out += std::string("rule.inflection=") + b(inflection) + "\n";
  out += std::string("rule.degree=") + b(degree) + "\n";
  out += std::string("rule.juxtaposition=") + b(juxtaposition) + "\n";
  for (const auto& [form, entry] : irregular_degree) {
    out += "irregular." + form + "=" + entry.first + ":" +
           (entry.second == Degree::Superlative ? "superlative"
                                                : "comparative") +
           "\n";
  }
  return out;
}

std::uint64_t RuleConfig::hash() const {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : serialize()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

namespace {

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool has_apostrophe(std::string_view s) {
  return text::fold(s).find('\'') != std::string::npos;
}

}  // namespace

std::vector<std::string> inflection_roots(std::string_view form) {
  std::vector<std::string> roots;
  std::string f(form);
  auto stem = [&](std::size_t n) { return f.substr(0, f.size() - n); };
  auto undoubled = [&](std::size_t n) -> std::string {
    std::string r = stem(n);
    if (r.size() >= 2 && r[r.size() - 1] == r[r.size() - 2]) {
      r.pop_back();
      return r;
    }
    return {};
  };
  if (ends_with(f, "ies") && f.size() > 4) roots.push_back(stem(3) + "y");
  if (ends_with(f, "es") && f.size() > 3) roots.push_back(stem(2));
  if (ends_with(f, "s") && f.size() > 2) roots.push_back(stem(1));
  if (ends_with(f, "ied") && f.size() > 4) roots.push_back(stem(3) + "y");
  if (ends_with(f, "ed") && f.size() > 3) {
    // e-final roots take -d, not -ed: improveed would be irregular.
    if (std::string r = stem(2); !r.empty() && r.back() != 'e')
      roots.push_back(r);
    roots.push_back(stem(1));  // e-final lemma: nursed -> nurse
    if (std::string r = undoubled(2); !r.empty()) roots.push_back(r);
  }
  if (ends_with(f, "ing") && f.size() > 4) {
    // e-final roots drop the e: improving, never improveing.
    if (std::string r = stem(3); !r.empty() && r.back() != 'e')
      roots.push_back(r);
    roots.push_back(stem(3) + "e");
    if (std::string r = undoubled(3); !r.empty()) roots.push_back(r);
  }
  return roots;
}

namespace {

int edit_distance(std::string_view a, std::string_view b) {
  std::vector<int> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<int>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      int sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

void rank_candidates(std::vector<RewriteCandidate>& candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const RewriteCandidate& a, const RewriteCandidate& b) {
                     if (a.confidence != b.confidence)
                       return static_cast<int>(a.confidence) <
                              static_cast<int>(b.confidence);
                     int ea = edit_distance(text::fold(a.source), a.result);
                     int eb = edit_distance(text::fold(b.source), b.result);
                     if (ea != eb) return ea < eb;
                     return a.result < b.result;
                   });
}

void dedupe_by_result(std::vector<RewriteCandidate>& candidates) {
  std::vector<RewriteCandidate> out;
  for (auto& c : candidates) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const auto& o) {
      return o.result == c.result;
    });
    if (!seen) out.push_back(std::move(c));
  }
  candidates = std::move(out);
}

}  // namespace

bool recognizes(const Lexicon& lex, std::string_view form) {
  std::string folded = text::fold(form);
  if (lex.contains(folded)) return true;
  if (folded.find('\'') != std::string::npos) return false;
  for (const auto& root : inflection_roots(folded))
    if (lex.contains(root)) return true;
  return false;
}

std::optional<std::string> lexical_modern(const Lexicon& lex,
                                          std::string_view form) {
  for (const auto* e : lex.lookup(text::fold(form)))
    if (auto modern = e->modern_form()) return modern;
  return std::nullopt;
}

namespace {

// Checks one fused spelling against the lexicon, following EN= redirects
// (holy-day fuses to holyday, whose overlay entry points at holiday) and
// modernizing a fused apostrophe form (over-stock'd -> overstocked).
std::optional<RewriteCandidate> check_fused(std::string_view source,
                                            const std::string& fused,
                                            const Lexicon& lex) {
  if (auto modern = lexical_modern(lex, fused))
    return RewriteCandidate{std::string(source), *modern, "FuseHyphen", true,
                            Confidence::Lexical};
  if (recognizes(lex, fused))
    return RewriteCandidate{std::string(source), fused, "FuseHyphen", true,
                            Confidence::RuleValidated};
  if (fused.find('\'') != std::string::npos) {
    for (auto c : restore_elision(fused, lex))
      return RewriteCandidate{std::string(source), c.result, "FuseHyphen",
                              true, Confidence::RuleValidated};
    if (ends_with(fused, "'d") || ends_with(fused, "'t")) {
      std::string past = fused.substr(0, fused.size() - 2) + "ed";
      if (recognizes(lex, past))
        return RewriteCandidate{std::string(source), past, "FuseHyphen", true,
                                Confidence::RuleValidated};
    }
  }
  return std::nullopt;
}

std::string swapped_in_en(std::string_view form) {
  if (starts_with(form, "in")) return "en" + std::string(form.substr(2));
  if (starts_with(form, "en")) return "in" + std::string(form.substr(2));
  return {};
}

}  // namespace

std::optional<RewriteCandidate> fuse_hyphenated(const Token& token,
                                                const Lexicon& lex) {
  if (!token.has(flag::InternalHyphen))
    throw Error(ErrorCode::InvalidArgument,
                "fuse_hyphenated: token '" + token.surface +
                    "' has no internal hyphen");
  std::string folded = text::fold(token.surface);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= folded.size(); ++i) {
    if (i == folded.size() || folded[i] == '-') {
      parts.push_back(folded.substr(start, i - start));
      start = i + 1;
    }
  }
  // Fuse left to right; each pair tries plain concatenation, seam
  // degemination (well-fare -> welfare), and the in/en prefix variation.
  std::string left = parts[0];
  std::optional<RewriteCandidate> last;
  for (std::size_t p = 1; p < parts.size(); ++p) {
    const std::string& right = parts[p];
    std::vector<std::string> attempts;
    attempts.push_back(left + right);
    if (!left.empty() && !right.empty() && left.back() == right.front())
      attempts.push_back(left + right.substr(1));
    if (left.size() >= 2 && left[left.size() - 1] == left[left.size() - 2])
      attempts.push_back(left.substr(0, left.size() - 1) + right);
    std::string right_swapped = swapped_in_en(right);
    if (!right_swapped.empty()) attempts.push_back(left + right_swapped);
    std::string whole_swapped = swapped_in_en(left + right);
    if (!whole_swapped.empty()) attempts.push_back(whole_swapped);

    last.reset();
    for (const auto& attempt : attempts) {
      if (auto c = check_fused(token.surface, attempt, lex)) {
        last = c;
        break;
      }
    }
    if (!last)
      last = RewriteCandidate{token.surface, left + right, "FuseHyphen",
                              false, Confidence::Noise};
    left = last->result;
  }
  return last;
}

namespace {

// Pronoun + self forms and the compounds attested as split spellings.
const std::array<std::pair<const char*, const char*>, 23> kFusionWhitelist = {{
    {"my", "self"},      {"thy", "self"},    {"her", "self"},
    {"him", "self"},     {"it", "self"},     {"your", "self"},
    {"our", "selves"},   {"your", "selves"}, {"them", "selves"},
    {"their", "selves"}, {"one", "self"},    {"ones", "self"},
    {"some", "body"},    {"every", "day"},   {"for", "ever"},
    {"every", "one"},    {"any", "one"},     {"any", "thing"},
    {"often", "times"},  {"like", "wise"},   {"to", "day"},
    {"no", "body"},      {"back", "wardness"},
}};

}  // namespace

std::optional<RewriteCandidate> fuse_juxtaposed(const Token& left,
                                                const Token& right,
                                                const Lexicon& lex) {
  if (left.kind != TokenKind::Word || right.kind != TokenKind::Word)
    return std::nullopt;
  std::string l = text::fold(left.surface);
  std::string r = text::fold(right.surface);
  std::string source = left.surface + " " + right.surface;
  std::string fused = l + r;
  bool whitelisted =
      std::any_of(kFusionWhitelist.begin(), kFusionWhitelist.end(),
                  [&](const auto& p) { return l == p.first && r == p.second; });
  if (whitelisted)
    return RewriteCandidate{source, fused, "FuseJuxtaposed",
                            recognizes(lex, fused), Confidence::Lexical};
  if (!recognizes(lex, fused)) return std::nullopt;
  // Two ordinary words in ordinary adjacency: flag, never auto-apply.
  bool both_common = recognizes(lex, l) && recognizes(lex, r);
  return RewriteCandidate{source, fused, "FuseJuxtaposed", true,
                          both_common ? Confidence::Noise
                                      : Confidence::RuleValidated};
}

std::vector<RewriteCandidate> expand_contraction(const Token& token,
                                                 const Lexicon& contractions,
                                                 const Lexicon& lex) {
  std::string folded = text::fold(token.surface);
  if (folded.find('\'') == std::string::npos)
    throw Error(ErrorCode::InvalidArgument,
                "expand_contraction: token '" + token.surface +
                    "' has no apostrophe");
  std::vector<RewriteCandidate> out;
  auto hits = contractions.lookup(folded);
  for (const auto* e : hits) {
    RewriteCandidate c{token.surface, e->expanded(), "ContractionDict", true,
                       Confidence::Lexical};
    if (e->unambiguous()) return {std::move(c)};
    out.push_back(std::move(c));
  }

  auto push_rule = [&](std::string result) {
    out.push_back(RewriteCandidate{token.surface, std::move(result),
                                   "ContractionDict", true,
                                   Confidence::RuleValidated});
  };
  if (ends_with(folded, "'d")) {
    std::string base = folded.substr(0, folded.size() - 2);
    if (recognizes(lex, base + "ed")) push_rule(base + "ed");
  } else if (ends_with(folded, "'t")) {
    std::string base = folded.substr(0, folded.size() - 2);
    if (recognizes(lex, base + "ed")) push_rule(base + "ed");
    if (recognizes(lex, base)) push_rule(base + " it");
  } else if (ends_with(folded, "'s")) {
    std::string base = folded.substr(0, folded.size() - 2);
    if (recognizes(lex, base)) {
      push_rule(base + " is");
      push_rule(base + " has");
    }
  }
  for (auto& c : restore_elision(folded, lex)) {
    c.source = token.surface;
    out.push_back(std::move(c));
  }
  dedupe_by_result(out);
  rank_candidates(out);
  return out;
}

std::vector<RewriteCandidate> restore_elision(std::string_view form,
                                              const Lexicon& lex) {
  std::string folded = text::fold(form);
  std::vector<RewriteCandidate> out;
  auto push = [&](std::string result) {
    bool seen = std::any_of(out.begin(), out.end(), [&](const auto& c) {
      return c.result == result;
    });
    if (!seen)
      out.push_back(RewriteCandidate{std::string(form), std::move(result),
                                     "ElisionRestore", true,
                                     Confidence::RuleValidated});
  };

  std::vector<std::size_t> sites;
  for (std::size_t i = 0; i < folded.size(); ++i)
    if (folded[i] == '\'') sites.push_back(i);

  if (!sites.empty()) {
    // 'e' first at every apostrophe site, then the other letters.
    for (std::size_t site : sites) {
      std::string cand = folded;
      cand[site] = 'e';
      if (recognizes(lex, cand)) push(cand);
    }
    for (char letter = 'a'; letter <= 'z'; ++letter) {
      if (letter == 'e') continue;
      for (std::size_t site : sites) {
        std::string cand = folded;
        cand[site] = letter;
        if (recognizes(lex, cand)) push(cand);
      }
    }
    return out;
  }

  // No apostrophe: only the mute e comes back, at interior positions
  // (blustring -> blustering).
  for (std::size_t i = 1; i < folded.size(); ++i) {
    std::string cand = folded.substr(0, i) + "e" + folded.substr(i);
    if (recognizes(lex, cand)) push(cand);
  }
  return out;
}

std::optional<RewriteCandidate> swap_in_en(std::string_view form,
                                           const Lexicon& lex) {
  std::string folded = text::fold(form);
  if (folded.size() < 4) return std::nullopt;
  std::string swapped = swapped_in_en(folded);
  if (swapped.empty() || !recognizes(lex, swapped)) return std::nullopt;
  return RewriteCandidate{std::string(form), swapped, "InEnSwap", true,
                          Confidence::RuleValidated};
}

namespace {

const LexEntry* find_with_pos(const Lexicon& lex, std::string_view form,
                              std::initializer_list<const char*> tags) {
  for (const auto* e : lex.lookup(form))
    for (const char* tag : tags)
      if (e->pos == tag) return e;
  return nullptr;
}

}  // namespace

std::optional<InflectionAnalysis> analyze_archaic_inflection(
    std::string_view form, const Lexicon& lex) {
  std::string folded = text::fold(form);
  static constexpr std::pair<const char*, int> suffixes[] = {
      {"eth", 3}, {"est", 2}, {"th", 3}, {"st", 2}};
  for (auto [sfx, person] : suffixes) {
    std::size_t n = std::string_view(sfx).size();
    if (!ends_with(folded, sfx) || folded.size() <= n + 2) continue;
    std::string base = folded.substr(0, folded.size() - n);
    for (const std::string& root : {base, base + "e"}) {
      if (const auto* e = find_with_pos(lex, root, {"V"}))
        return InflectionAnalysis{e->lemma, person, true};
    }
  }
  return std::nullopt;
}

std::optional<DegreeAnalysis> analyze_degree(std::string_view form,
                                             const Lexicon& lex,
                                             const RuleConfig& config) {
  std::string folded = text::fold(form);
  if (auto it = config.irregular_degree.find(folded);
      it != config.irregular_degree.end())
    return DegreeAnalysis{it->second.first, it->second.second, true};
  static constexpr std::pair<const char*, Degree> suffixes[] = {
      {"est", Degree::Superlative}, {"er", Degree::Comparative}};
  for (auto [sfx, degree] : suffixes) {
    std::size_t n = std::string_view(sfx).size();
    if (!ends_with(folded, sfx) || folded.size() <= n) continue;
    std::string base = folded.substr(0, folded.size() - n);
    std::vector<std::string> stems = {base, base + "e"};
    if (base.size() >= 2 && base[base.size() - 1] == base[base.size() - 2])
      stems.push_back(base.substr(0, base.size() - 1));
    if (!base.empty() && base.back() == 'i')
      stems.push_back(base.substr(0, base.size() - 1) + "y");
    for (const auto& stem : stems) {
      if (const auto* e = find_with_pos(lex, stem, {"A", "ADV"}))
        return DegreeAnalysis{e->lemma, degree, false};
    }
  }
  return std::nullopt;
}

std::vector<RewriteCandidate> normalize_token(const Token& token,
                                              const Lexicon& merged,
                                              const Lexicon& contractions,
                                              const RuleConfig& config) {
  if (token.kind != TokenKind::Word) return {};
  std::string folded = text::fold(token.surface);

  if (merged.contains(folded)) {
    // Recognized surface: the only rewrite is a dictionary EN= redirect.
    if (auto modern = lexical_modern(merged, folded); modern &&
        *modern != folded)
      return {RewriteCandidate{token.surface, *modern, "Lexicon", true,
                               Confidence::Lexical}};
    return {};
  }
  if (recognizes(merged, folded)) return {};  // inflected form of a lemma

  std::vector<RewriteCandidate> out;
  if (config.contraction && folded.find('\'') != std::string::npos) {
    auto cands = expand_contraction(token, contractions, merged);
    if (!cands.empty() && cands.front().confidence == Confidence::Lexical &&
        contractions.lookup(folded).size() == 1 &&
        contractions.lookup(folded).front()->unambiguous())
      return {cands.front()};
    out.insert(out.end(), cands.begin(), cands.end());
  }
  if (config.hyphen && token.has(flag::InternalHyphen)) {
    if (auto c = fuse_hyphenated(token, merged)) out.push_back(*c);
  }
  if (config.in_en) {
    if (auto c = swap_in_en(token.surface, merged)) {
      c->source = token.surface;
      out.push_back(*c);
    }
  }
  if (config.elision && folded.find('\'') == std::string::npos) {
    for (auto& c : restore_elision(token.surface, merged)) {
      c.source = token.surface;
      out.push_back(std::move(c));
    }
  }
  dedupe_by_result(out);
  rank_candidates(out);
  return out;
}

}  // namespace emlex
