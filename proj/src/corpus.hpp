#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace emlex {

class Lexicon;

struct SourceDocument {
  std::string text;
  std::string id;
  std::map<std::string, std::string> meta;
};

// Reads a file, normalizes line endings to LF, records the source path in
// meta. Falls back to Latin-1 when the content is not valid UTF-8 and marks
// the fallback in meta["encoding"].
SourceDocument load_document(const std::string& path, const std::string& id);

SourceDocument document_from_string(std::string text, std::string id);

// Removes the duplicated catchword (or catch-syllable) after each page break.
// A word right after the marker is dropped when it equals, or is a suffix of,
// the last word before the marker. Removals are listed in meta["catchwords"].
SourceDocument strip_catchwords(const SourceDocument& doc,
                                const std::string& page_break_marker);

enum class TokenKind { Word, Punct, Number };

namespace flag {
inline constexpr unsigned LeadingApostrophe = 1u << 0;
inline constexpr unsigned InternalApostrophe = 1u << 1;
inline constexpr unsigned TrailingApostrophe = 1u << 2;
inline constexpr unsigned InternalHyphen = 1u << 3;
inline constexpr unsigned Capitalized = 1u << 4;
inline constexpr unsigned AllCaps = 1u << 5;
}  // namespace flag

struct Span {
  std::size_t start = 0;
  std::size_t end = 0;
};

struct Token {
  std::string surface;
  Span span;
  TokenKind kind = TokenKind::Word;
  unsigned flags = 0;

  bool has(unsigned f) const { return (flags & f) != 0; }
};

const char* kind_name(TokenKind kind);
std::string flag_names(unsigned flags);  // comma-joined, "-" when empty

// Apostrophes adjacent to a letter stay inside the word; hyphens between
// letters keep the compound in one token. A leading apostrophe is resolved
// through the contraction lexicon first when one is given.
std::vector<Token> tokenize(const SourceDocument& doc,
                            const Lexicon* contractions = nullptr);

}  // namespace emlex
