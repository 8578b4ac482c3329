#include "lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "error.hpp"
#include "text.hpp"

namespace emlex {

bool LexEntry::has_feature(std::string_view name) const {
  return std::any_of(features.begin(), features.end(),
                     [&](const Feature& f) { return f.name == name; });
}

std::optional<std::string> LexEntry::feature_value(
    std::string_view name) const {
  for (const auto& f : features)
    if (f.name == name) return f.value;
  return std::nullopt;
}

std::string LexEntry::expanded() const {
  if (expansion.empty()) return lemma;
  std::string out;
  for (const auto& u : expansion) {
    if (!out.empty()) out += " ";
    out += u.form;
  }
  return out;
}

bool LexEntry::same_analysis(const LexEntry& other) const {
  return lemma == other.lemma && pos == other.pos &&
         features == other.features && expansion == other.expansion;
}

std::string format_feature(const Feature& f) {
  std::string out = "+" + f.name;
  if (f.value) out += "=" + *f.value;
  return out;
}

namespace {

std::string format_tags(const std::vector<Feature>& features) {
  std::string out;
  for (const auto& f : features) out += format_feature(f);
  return out;
}

std::string format_unit(const Unit& u) {
  std::string out = "<" + u.form;
  if (u.lemma && *u.lemma != u.form) out += "," + *u.lemma;
  out += "," + u.pos + format_tags(u.features) + ">";
  return out;
}

}  // namespace

std::string format_entry(const LexEntry& entry) {
  std::string out = entry.surface + ",";
  if (!entry.expansion.empty()) {
    for (std::size_t i = 0; i < entry.expansion.size(); ++i) {
      if (i) out += " ";
      out += format_unit(entry.expansion[i]);
    }
    out += format_tags(entry.features);
    return out;
  }
  if (entry.lemma != entry.surface) out += entry.lemma + ",";
  out += entry.pos + format_tags(entry.features);
  return out;
}

namespace {

struct LineParser {
  std::string_view line;
  std::size_t pos = 0;
  int lineno;

  [[noreturn]] void fail(const std::string& reason) const {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(lineno) + ", col " +
                    std::to_string(pos + 1) + ": " + reason);
  }

  bool done() const { return pos >= line.size(); }
  char peek() const { return done() ? '\0' : line[pos]; }
  void skip_spaces() {
    while (!done() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }

  std::string take_until(std::string_view stops) {
    std::size_t start = pos;
    while (!done() && stops.find(line[pos]) == std::string_view::npos) ++pos;
    return std::string(line.substr(start, pos - start));
  }

  std::vector<Feature> parse_tags(std::string_view extra_stops) {
    std::vector<Feature> tags;
    skip_spaces();
    while (peek() == '+') {
      ++pos;
      std::string stops = "+=";
      stops += extra_stops;
      std::string name = take_until(stops);
      // trim trailing spaces between tags
      while (!name.empty() && (name.back() == ' ' || name.back() == '\t'))
        name.pop_back();
      if (name.empty()) fail("malformed tag: empty name");
      Feature f{name, std::nullopt};
      if (peek() == '=') {
        ++pos;
        std::string value = take_until("+" + std::string(extra_stops));
        while (!value.empty() && (value.back() == ' ' || value.back() == '\t'))
          value.pop_back();
        f.value = value;
      }
      tags.push_back(std::move(f));
      skip_spaces();
    }
    return tags;
  }

  Unit parse_unit() {
    // caller has verified '<'
    ++pos;
    Unit u;
    std::string first = take_until(",>");
    if (peek() != ',') fail("unit needs a POS field");
    ++pos;
    std::string second = take_until(",+>");
    if (done()) fail("unclosed '<'");
    u.form = first;
    if (peek() == ',') {
      ++pos;
      u.lemma = second;
      u.pos = take_until("+>");
    } else {
      u.pos = second;
    }
    if (u.pos.empty()) fail("unit POS is empty");
    u.features = parse_tags(">");
    if (peek() != '>') fail("unclosed '<'");
    ++pos;
    return u;
  }

  LexEntry parse_entry(const std::string& origin) {
    LexEntry e;
    e.origin = origin;
    e.line = lineno;
    e.surface = take_until(",");
    if (e.surface.empty()) fail("empty surface");
    if (done()) fail("expected ',' after surface");
    ++pos;
    skip_spaces();
    if (peek() == '<') {
      while (peek() == '<') {
        e.expansion.push_back(parse_unit());
        skip_spaces();
      }
      e.features = parse_tags("");
      e.lemma = e.surface;
    } else {
      std::string first = take_until(",+");
      if (peek() == ',') {
        ++pos;
        e.lemma = first;
        e.pos = take_until("+");
      } else {
        e.lemma = e.surface;
        e.pos = first;
      }
      while (!e.pos.empty() && (e.pos.back() == ' ' || e.pos.back() == '\t'))
        e.pos.pop_back();
      if (e.pos.empty()) fail("empty POS");
      e.features = parse_tags("");
    }
    skip_spaces();
    if (!done()) fail("trailing characters");
    return e;
  }
};

void validate_entry(const LexEntry& e) {
  if (!e.archaic()) return;
  bool spelling = e.has_feature("spelling");
  bool meaning = e.has_feature("meaning");
  if (spelling == meaning)
    throw Error(ErrorCode::ValidationError,
                "line " + std::to_string(e.line) + ": Dic_EN_XVII entry '" +
                    e.surface + "' needs exactly one of +spelling or +meaning");
  if (!e.modern_form())
    throw Error(ErrorCode::ValidationError,
                "line " + std::to_string(e.line) + ": Dic_EN_XVII entry '" +
                    e.surface + "' lacks +EN=<modern form>");
}

}  // namespace

Lexicon Lexicon::parse(std::string_view content, std::string origin) {
  Lexicon lex;
  lex.name_ = origin;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= content.size()) {
    std::size_t nl = content.find('\n', start);
    std::string_view line = content.substr(
        start, nl == std::string_view::npos ? content.size() - start
                                            : nl - start);
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      LineParser p{line, 0, lineno};
      LexEntry e = p.parse_entry(origin);
      validate_entry(e);
      lex.add(std::move(e));
    }
    if (nl == std::string_view::npos) break;
    start = nl + 1;
  }
  return lex;
}

Lexicon Lexicon::load(const std::string& path, std::string origin) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::FileNotFound, "cannot open dictionary: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), std::move(origin));
}

void Lexicon::add(LexEntry entry) {
  auto& bucket = by_surface_[text::fold(entry.surface)];
  for (const auto& existing : bucket)
    if (existing.surface == entry.surface && existing.same_analysis(entry))
      return;  // exact duplicate
  bucket.push_back(std::move(entry));
  ++count_;
}

Lexicon Lexicon::merge(const Lexicon& base, const Lexicon& overlay) {
  Lexicon out = base;
  out.name_ = base.name_.empty() ? overlay.name_
                                 : base.name_ + "+" + overlay.name_;
  overlay.for_each([&](const LexEntry& e) {
    if (e.unambiguous()) {
      for (const auto* existing : out.lookup(e.surface)) {
        if (existing->unambiguous() && !existing->same_analysis(e) &&
            text::fold(existing->surface) == text::fold(e.surface))
          throw Error(ErrorCode::ConflictError,
                      "conflicting UNAMB analyses for '" + e.surface + "' (" +
                          existing->origin + " vs " + e.origin + ")");
      }
    }
    out.add(e);
  });
  return out;
}

std::vector<const LexEntry*> Lexicon::lookup(std::string_view surface) const {
  auto it = by_surface_.find(text::fold(surface));
  if (it == by_surface_.end()) return {};
  std::vector<const LexEntry*> out;
  for (const auto& e : it->second)
    if (e.unambiguous()) return {&e};
  for (const auto& e : it->second) out.push_back(&e);
  return out;
}

std::string Lexicon::format() const {
  std::string out;
  for_each([&](const LexEntry& e) {
    out += format_entry(e);
    out += "\n";
  });
  return out;
}

}  // namespace emlex
