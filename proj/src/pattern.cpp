#include "pattern.hpp"

#include <algorithm>
#include <map>

#include "error.hpp"
#include "morphology.hpp"
#include "text.hpp"

namespace emlex {

namespace {

[[noreturn]] void syntax_error(std::size_t position, const std::string& what) {
  throw Error(ErrorCode::PatternSyntaxError,
              "pattern position " + std::to_string(position) + ": " + what);
}

TokenConstraint compile_item(std::string_view item, std::size_t position) {
  if (item.front() != '<') return Literal{text::fold(item)};
  if (item.back() != '>') syntax_error(position, "expected closing '>'");
  std::string_view inner = item.substr(1, item.size() - 2);
  if (inner.empty()) syntax_error(position, "empty constraint");
  if (inner.rfind("LETTERS+", 0) == 0) {
    std::string_view digits = inner.substr(8);
    if (digits.empty()) syntax_error(position, "expected a number");
    std::size_t n = 0;
    for (char c : digits) {
      if (c < '0' || c > '9')
        syntax_error(position, "expected a number after LETTERS+");
      n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    return Length{n};
  }
  if (inner.front() == '^') {
    if (inner.size() == 1) syntax_error(position, "empty prefix");
    return PrefixIs{text::fold(inner.substr(1))};
  }
  if (inner.back() == '$') {
    if (inner.size() == 1) syntax_error(position, "empty suffix");
    return SuffixIs{text::fold(inner.substr(0, inner.size() - 1))};
  }
  return Pos{std::string(inner)};
}

}  // namespace

Pattern compile_pattern(std::string_view expr) {
  Pattern pattern;
  std::size_t i = 0;
  while (i < expr.size()) {
    if (expr[i] == ' ' || expr[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < expr.size() && expr[i] != ' ' && expr[i] != '\t') ++i;
    pattern.items.push_back(
        compile_item(expr.substr(start, i - start), start));
  }
  if (pattern.items.empty()) syntax_error(0, "empty pattern");
  return pattern;
}

std::string pattern_to_string(const Pattern& pattern) {
  std::string out;
  for (const auto& item : pattern.items) {
    if (!out.empty()) out += " ";
    std::visit(
        [&](const auto& c) {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, Literal>) out += c.word;
          else if constexpr (std::is_same_v<T, Pos>) out += "<" + c.tag + ">";
          else if constexpr (std::is_same_v<T, Length>)
            out += "<LETTERS+" + std::to_string(c.letters) + ">";
          else if constexpr (std::is_same_v<T, PrefixIs>)
            out += "<^" + c.prefix + ">";
          else
            out += "<" + c.suffix + "$>";
        },
        item);
  }
  return out;
}

namespace {

bool constraint_matches(const TokenConstraint& constraint, const Token& token,
                        const AnnotationIndex* annotations,
                        std::size_t token_index) {
  if (token.kind != TokenKind::Word) return false;
  return std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, Literal>) {
          return text::fold(token.surface) == c.word;
        } else if constexpr (std::is_same_v<T, Pos>) {
          for (const auto& a : annotations->per_token[token_index])
            if (a.pos == c.tag) return true;
          return false;
        } else if constexpr (std::is_same_v<T, Length>) {
          return letter_length(token.surface) == c.letters;
        } else if constexpr (std::is_same_v<T, PrefixIs>) {
          std::string letters = text::letters_only(token.surface);
          return letters.size() >= c.prefix.size() &&
                 letters.compare(0, c.prefix.size(), c.prefix) == 0;
        } else {
          std::string letters = text::letters_only(token.surface);
          return letters.size() >= c.suffix.size() &&
                 letters.compare(letters.size() - c.suffix.size(),
                                 c.suffix.size(), c.suffix) == 0;
        }
      },
      constraint);
}

}  // namespace

std::vector<Match> locate(const Pattern& pattern,
                          const std::vector<Token>& tokens,
                          const AnnotationIndex* annotations) {
  bool needs_annotations =
      std::any_of(pattern.items.begin(), pattern.items.end(),
                  [](const TokenConstraint& c) {
                    return std::holds_alternative<Pos>(c);
                  });
  if (needs_annotations &&
      (!annotations || annotations->per_token.size() != tokens.size()))
    throw Error(ErrorCode::MissingAnnotations,
                "pattern uses a POS constraint but the corpus is not "
                "annotated");

  std::vector<Match> matches;
  std::size_t n = pattern.items.size();
  std::size_t i = 0;
  while (i + n <= tokens.size()) {
    bool ok = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (!constraint_matches(pattern.items[k], tokens[i + k], annotations,
                              i + k)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      matches.push_back(Match{i, n});
      i += n;
    } else {
      ++i;
    }
  }
  return matches;
}

ConcordanceLine kwic(const SourceDocument& doc,
                     const std::vector<Token>& tokens, const Match& match,
                     std::size_t width) {
  ConcordanceLine line;
  line.document_id = doc.id;
  line.token_index = match.first;
  std::size_t last = match.first + match.length - 1;
  std::size_t lstart = match.first >= width ? match.first - width : 0;
  std::size_t rend = std::min(last + width, tokens.size() - 1);
  std::size_t key_begin = tokens[match.first].span.start;
  std::size_t key_end = tokens[last].span.end;
  line.left = doc.text.substr(tokens[lstart].span.start,
                              key_begin - tokens[lstart].span.start);
  line.key = doc.text.substr(key_begin, key_end - key_begin);
  line.right = doc.text.substr(key_end, tokens[rend].span.end - key_end);
  return line;
}

std::string trimmed(std::string_view s) {
  std::size_t b = s.find_first_not_of(" \t\n\r\f\v");
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\n\r\f\v");
  return std::string(s.substr(b, e - b + 1));
}

AffixReport affix_query(AffixKind kind, std::string_view affix,
                        const std::vector<Token>& tokens) {
  std::string folded = text::fold(affix);
  if (folded.empty())
    throw Error(ErrorCode::InvalidArgument, "empty affix");
  for (char c : folded)
    if (!text::is_letter(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::InvalidArgument,
                  "affix must be letters only: " + std::string(affix));

  std::map<std::string, std::int64_t> counts;
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::Word) continue;
    std::string letters = text::letters_only(t.surface);
    bool hit = false;
    if (letters.size() >= folded.size()) {
      if (kind == AffixKind::Prefix)
        hit = letters.compare(0, folded.size(), folded) == 0;
      else
        hit = letters.compare(letters.size() - folded.size(), folded.size(),
                              folded) == 0;
    }
    if (hit) ++counts[text::fold(t.surface)];
  }

  AffixReport report;
  for (const auto& [form, n] : counts)
    report.rows.push_back(AffixRow{form, n});
  std::sort(report.rows.begin(), report.rows.end(),
            [](const AffixRow& a, const AffixRow& b) {
              if (a.occurrences != b.occurrences)
                return a.occurrences > b.occurrences;
              return a.form < b.form;
            });
  report.distinct_forms = static_cast<std::int64_t>(report.rows.size());
  for (const auto& r : report.rows) report.total_occurrences += r.occurrences;
  return report;
}

namespace {

std::string flatten(std::string_view s) {
  std::string out = trimmed(s);
  for (char& c : out)
    if (c == '\n' || c == '\t' || c == '\r') c = ' ';
  return out;
}

}  // namespace

std::string format_kwic_lines(const SourceDocument& doc,
                              const std::vector<Token>& tokens,
                              const std::vector<Match>& matches,
                              std::size_t width, const std::string& format) {
  std::vector<ConcordanceLine> lines;
  lines.reserve(matches.size());
  for (const auto& m : matches) lines.push_back(kwic(doc, tokens, m, width));

  std::string out;
  if (format == "tsv") {
    out += "doc\ttoken\tleft\tkey\tright\n";
    for (const auto& l : lines) {
      out += l.document_id + "\t" + std::to_string(l.token_index) + "\t" +
             flatten(l.left) + "\t" + flatten(l.key) + "\t" +
             flatten(l.right) + "\n";
    }
    return out;
  }
  if (format == "json") {
    out += "[\n";
    auto quote = [](const std::string& s) {
      std::string q = "\"";
      for (char c : s) {
        if (c == '"' || c == '\\') q += '\\';
        q += c;
      }
      return q + "\"";
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const auto& l = lines[i];
      out += "  {\"doc\": " + quote(l.document_id) +
             ", \"token\": " + std::to_string(l.token_index) +
             ", \"left\": " + quote(flatten(l.left)) +
             ", \"key\": " + quote(flatten(l.key)) +
             ", \"right\": " + quote(flatten(l.right)) + "}";
      if (i + 1 < lines.size()) out += ",";
      out += "\n";
    }
    out += "]\n";
    return out;
  }
  // aligned plain text
  std::size_t left_width = 0;
  for (const auto& l : lines)
    left_width = std::max(left_width, flatten(l.left).size());
  for (const auto& l : lines) {
    std::string left = flatten(l.left);
    out += std::string(left_width - left.size(), ' ') + left + "  " +
           flatten(l.key) + "  " + flatten(l.right) + "\n";
  }
  return out;
}

Report AffixReport::to_report(const std::string& title,
                              const std::string& provenance) const {
  Report report;
  report.title = title;
  report.columns = {"form", "occurrences"};
  report.provenance = provenance;
  for (const auto& r : rows) report.add_row({r.form, r.occurrences});
  report.add_row({std::string("(distinct)"), distinct_forms});
  report.add_row({std::string("(total)"), total_occurrences});
  return report;
}

}  // namespace emlex
