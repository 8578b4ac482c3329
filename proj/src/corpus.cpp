#include "corpus.hpp"

#include <fstream>
#include <sstream>

#include "error.hpp"
#include "lexicon.hpp"
#include "text.hpp"

namespace emlex {

namespace {

std::string normalize_newlines(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < raw.size() && raw[i + 1] == '\n') ++i;
    } else {
      out.push_back(raw[i]);
    }
  }
  return out;
}

std::string latin1_to_utf8(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw)
    text::append_utf8(out, static_cast<unsigned char>(c));
  return out;
}

}  // namespace

SourceDocument load_document(const std::string& path, const std::string& id) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorCode::FileNotFound, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string raw = buf.str();
  if (raw.empty())
    throw Error(ErrorCode::EmptyDocument, "empty document: " + path);

  SourceDocument doc;
  doc.id = id;
  doc.meta["source"] = path;
  std::size_t bad = text::find_invalid_utf8(raw);
  if (bad != std::string_view::npos) {
    doc.meta["encoding"] =
        "latin-1 fallback (first non-UTF-8 byte at offset " +
        std::to_string(bad) + ")";
    raw = latin1_to_utf8(raw);
  }
  doc.text = normalize_newlines(raw);
  return doc;
}

SourceDocument document_from_string(std::string text, std::string id) {
  SourceDocument doc;
  doc.text = normalize_newlines(text);
  doc.id = std::move(id);
  return doc;
}

namespace {

// Word surface immediately before `pos`, scanning backwards over the gap.
std::string word_before(std::string_view s, std::size_t pos) {
  // step back over non-word material
  std::size_t end = pos;
  while (end > 0) {
    unsigned char b = s[end - 1];
    char32_t cp = b;
    std::size_t start_byte = end - 1;
    if (b >= 0x80) {
      while (start_byte > 0 &&
             (static_cast<unsigned char>(s[start_byte]) & 0xC0) == 0x80)
        --start_byte;
      cp = text::decode_utf8(s, start_byte).cp;
    }
    if (text::is_letter(cp) || text::is_apostrophe(cp)) break;
    end = start_byte;
  }
  if (end == 0) return {};
  std::size_t start = end;
  while (start > 0) {
    std::size_t prev = start - 1;
    while (prev > 0 && (static_cast<unsigned char>(s[prev]) & 0xC0) == 0x80)
      --prev;
    char32_t cp = text::decode_utf8(s, prev).cp;
    if (!text::is_letter(cp) && !text::is_apostrophe(cp) && cp != '-') break;
    start = prev;
  }
  return std::string(s.substr(start, end - start));
}

struct WordAfter {
  std::string surface;
  std::size_t start = 0;
  std::size_t end = 0;
};

WordAfter word_after(std::string_view s, std::size_t pos) {
  std::size_t i = pos;
  while (i < s.size()) {
    auto [cp, n] = text::decode_utf8(s, i);
    if (text::is_letter(cp)) break;
    if (cp != ' ' && cp != '\n' && cp != '\t') return {};
    i += n;
  }
  WordAfter w;
  w.start = i;
  while (i < s.size()) {
    auto [cp, n] = text::decode_utf8(s, i);
    if (!text::is_letter(cp) && !text::is_apostrophe(cp) && cp != '-') break;
    i += n;
  }
  w.end = i;
  w.surface = std::string(s.substr(w.start, w.end - w.start));
  return w;
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

}  // namespace

SourceDocument strip_catchwords(const SourceDocument& doc,
                                const std::string& page_break_marker) {
  if (page_break_marker.empty())
    throw Error(ErrorCode::InvalidArgument, "empty page break marker");
  SourceDocument out;
  out.id = doc.id;
  out.meta = doc.meta;

  const std::string& s = doc.text;
  std::string removed;
  std::string result;
  std::size_t copied = 0;
  std::size_t pos = 0;
  while ((pos = s.find(page_break_marker, pos)) != std::string::npos) {
    std::size_t after = pos + page_break_marker.size();
    std::string prev = text::fold(word_before(s, pos));
    WordAfter next = word_after(s, after);
    std::string next_folded = text::fold(next.surface);
    if (!next_folded.empty() && !prev.empty() &&
        (prev == next_folded || ends_with(prev, next_folded))) {
      std::size_t cut_end = next.end;
      if (cut_end < s.size() && (s[cut_end] == ' ' || s[cut_end] == '\n'))
        ++cut_end;
      result.append(s, copied, next.start - copied);
      copied = cut_end;
      if (!removed.empty()) removed += ";";
      removed += next.surface + "@" + std::to_string(next.start);
      pos = cut_end;
    } else {
      pos = after;
    }
  }
  result.append(s, copied, s.size() - copied);
  out.text = std::move(result);
  if (!removed.empty()) out.meta["catchwords"] = removed;
  return out;
}

const char* kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Word: return "Word";
    case TokenKind::Punct: return "Punct";
    case TokenKind::Number: return "Number";
  }
  return "?";
}

std::string flag_names(unsigned flags) {
  static constexpr std::pair<unsigned, const char*> names[] = {
      {flag::LeadingApostrophe, "LeadingApostrophe"},
      {flag::InternalApostrophe, "InternalApostrophe"},
      {flag::TrailingApostrophe, "TrailingApostrophe"},
      {flag::InternalHyphen, "InternalHyphen"},
      {flag::Capitalized, "Capitalized"},
      {flag::AllCaps, "AllCaps"},
  };
  std::string out;
  for (auto [bit, name] : names) {
    if (flags & bit) {
      if (!out.empty()) out += ",";
      out += name;
    }
  }
  return out.empty() ? "-" : out;
}

namespace {

unsigned compute_flags(std::string_view surface) {
  std::vector<char32_t> cps;
  for (std::size_t i = 0; i < surface.size();) {
    auto [cp, n] = text::decode_utf8(surface, i);
    cps.push_back(cp);
    i += n;
  }
  unsigned flags = 0;
  std::size_t letters = 0, uppers = 0;
  bool first_letter_upper = false, seen_letter = false;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    if (text::is_letter(cp)) {
      ++letters;
      if (text::is_upper(cp)) ++uppers;
      if (!seen_letter) {
        seen_letter = true;
        first_letter_upper = text::is_upper(cp);
      }
    } else if (text::is_apostrophe(cp)) {
      if (i == 0)
        flags |= flag::LeadingApostrophe;
      else if (i + 1 == cps.size())
        flags |= flag::TrailingApostrophe;
      else
        flags |= flag::InternalApostrophe;
    }
  }
  // InternalHyphen iff surface matches letter+ ('-' letter+)+, where runs may
  // carry apostrophes (over-stock'd still counts as hyphenated).
  {
    std::size_t i = 0;
    auto run = [&] {
      std::size_t n = 0;
      while (i < cps.size() &&
             (text::is_letter(cps[i]) || text::is_apostrophe(cps[i]))) {
        if (text::is_letter(cps[i])) ++n;
        ++i;
      }
      return n;
    };
    bool ok = run() > 0;
    std::size_t segments = 1;
    while (ok && i < cps.size() && cps[i] == '-') {
      ++i;
      ok = run() > 0;
      ++segments;
    }
    if (ok && i == cps.size() && segments > 1) flags |= flag::InternalHyphen;
  }
  if (letters >= 2 && uppers == letters)
    flags |= flag::AllCaps;
  else if (first_letter_upper)
    flags |= flag::Capitalized;
  return flags;
}

}  // namespace

std::vector<Token> tokenize(const SourceDocument& doc,
                            const Lexicon* contractions) {
  const std::string& s = doc.text;
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto peek = [&](std::size_t pos) -> char32_t {
    if (pos >= s.size()) return 0;
    return text::decode_utf8(s, pos).cp;
  };
  while (i < s.size()) {
    auto [cp, n] = text::decode_utf8(s, i);
    if (cp == ' ' || cp == '\n' || cp == '\t' || cp == '\f' || cp == '\v' ||
        cp == '\r') {
      i += n;
      continue;
    }
    if (text::is_digit(cp)) {
      std::size_t start = i;
      while (i < s.size()) {
        auto [c, m] = text::decode_utf8(s, i);
        if (!text::is_digit(c)) break;
        i += m;
      }
      Token t;
      t.span = {start, i};
      t.surface = s.substr(start, i - start);
      t.kind = TokenKind::Number;
      tokens.push_back(std::move(t));
      continue;
    }
    bool starts_word =
        text::is_letter(cp) ||
        (text::is_apostrophe(cp) && text::is_letter(peek(i + n)));
    if (starts_word) {
      std::size_t start = i;
      char32_t prev = 0;
      while (i < s.size()) {
        auto [c, m] = text::decode_utf8(s, i);
        if (text::is_letter(c)) {
          i += m;
        } else if (text::is_apostrophe(c)) {
          char32_t nx = peek(i + m);
          bool attach = text::is_letter(prev) || text::is_letter(nx);
          if (!attach) break;
          i += m;
        } else if (c == '-') {
          if (!text::is_letter(prev) || !text::is_letter(peek(i + m))) break;
          i += m;
        } else {
          break;
        }
        prev = c;
      }
      Token t;
      t.span = {start, i};
      t.surface = s.substr(start, i - start);
      t.kind = TokenKind::Word;
      t.flags = compute_flags(t.surface);
      // Known contractions settle leading-apostrophe attachment outright;
      // the adjacency rule above already covers unlisted forms.
      (void)contractions;
      tokens.push_back(std::move(t));
      continue;
    }
    Token t;
    t.span = {i, i + n};
    t.surface = s.substr(i, n);
    t.kind = TokenKind::Punct;
    tokens.push_back(std::move(t));
    i += n;
  }
  return tokens;
}

}  // namespace emlex
