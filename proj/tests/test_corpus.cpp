#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "corpus.hpp"
#include "error.hpp"
#include "lexicon.hpp"

using namespace emlex;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

const Token* find_token(const std::vector<Token>& tokens,
                        const std::string& surface) {
  for (const auto& t : tokens)
    if (t.surface == surface) return &t;
  return nullptr;
}

}  // namespace

TEST_CASE("load_document normalizes line endings") {
  auto path = write_temp("emlex_crlf.txt", "one\r\ntwo\rthree\n");
  SourceDocument doc = load_document(path.string(), "t");
  CHECK(doc.text == "one\ntwo\nthree\n");
  CHECK(doc.meta.at("source") == path.string());
}

TEST_CASE("load_document error contract") {
  CHECK_THROWS_AS(load_document("/no/such/file", "t"), Error);
  try {
    load_document("/no/such/file", "t");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FileNotFound);
  }
  auto empty = write_temp("emlex_empty.txt", "");
  try {
    load_document(empty.string(), "t");
    FAIL("expected EmptyDocument");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyDocument);
  }
}

TEST_CASE("load_document falls back to latin-1") {
  auto path = write_temp("emlex_latin1.txt", "caf\xE9 forever");
  SourceDocument doc = load_document(path.string(), "t");
  CHECK(doc.text == "caf\xC3\xA9 forever");
  CHECK(doc.meta.at("encoding").find("latin-1") != std::string::npos);
}

TEST_CASE("strip_catchwords removes the repeated word") {
  SourceDocument doc = document_from_string(
      "a fine shew and home\n[PB] home again the glori-ous\n[PB] ous garden",
      "t");
  SourceDocument stripped = strip_catchwords(doc, "[PB]");
  CHECK(stripped.text.find("home again") == std::string::npos);
  CHECK(stripped.text.find("again the") != std::string::npos);
  // the catch-syllable "ous" matches the tail of "glori-ous"
  CHECK(stripped.text.find("ous garden") == std::string::npos);
  CHECK(stripped.text.find("garden") != std::string::npos);
  CHECK(stripped.meta.at("catchwords").find("home@") != std::string::npos);
}

TEST_CASE("strip_catchwords keeps non-matching words") {
  SourceDocument doc =
      document_from_string("ends with home\n[PB] yet another page", "t");
  SourceDocument stripped = strip_catchwords(doc, "[PB]");
  CHECK(stripped.text == doc.text);
  CHECK(stripped.meta.count("catchwords") == 0);
}

TEST_CASE("tokenize kinds and spans") {
  SourceDocument doc =
      document_from_string("In 1694, Anne wrote: 12 pages.", "t");
  auto tokens = tokenize(doc);
  REQUIRE(tokens.size() == 9);
  CHECK(tokens[0].surface == "In");
  CHECK(tokens[1].kind == TokenKind::Number);
  CHECK(tokens[1].surface == "1694");
  CHECK(tokens[2].kind == TokenKind::Punct);
  CHECK(tokens[2].surface == ",");
  CHECK(tokens[5].surface == ":");
  CHECK(tokens[6].surface == "12");
  CHECK(tokens[8].surface == ".");
}

TEST_CASE("tokenize apostrophe attachment") {
  SourceDocument doc = document_from_string(
      "'tis the Ladies' own fault, 'twou'd appear; said 'hello' aloud", "t");
  auto tokens = tokenize(doc);
  const Token* tis = find_token(tokens, "'tis");
  REQUIRE(tis);
  CHECK(tis->has(flag::LeadingApostrophe));
  const Token* ladies = find_token(tokens, "Ladies'");
  REQUIRE(ladies);
  CHECK(ladies->has(flag::TrailingApostrophe));
  CHECK(ladies->has(flag::Capitalized));
  const Token* twoud = find_token(tokens, "'twou'd");
  REQUIRE(twoud);
  CHECK(twoud->has(flag::LeadingApostrophe));
  CHECK(twoud->has(flag::InternalApostrophe));
  // quoting apostrophes not adjacent to a letter on the inside stay out
  const Token* hello = find_token(tokens, "'hello'");
  CHECK(hello);  // both quotes touch letters, so they attach
  SourceDocument doc2 = document_from_string("said ' hello ' aloud", "t");
  auto tokens2 = tokenize(doc2);
  CHECK(find_token(tokens2, "hello"));
  CHECK(find_token(tokens2, "'") != nullptr);
}

TEST_CASE("tokenize curly apostrophes") {
  SourceDocument doc = document_from_string("’Twou’d be good", "t");
  auto tokens = tokenize(doc);
  const Token* t = find_token(tokens, "’Twou’d");
  REQUIRE(t);
  CHECK(t->has(flag::LeadingApostrophe));
  CHECK(t->has(flag::InternalApostrophe));
  CHECK(t->has(flag::Capitalized));
}

TEST_CASE("tokenize hyphen handling") {
  SourceDocument doc = document_from_string(
      "a Block-head, over-stock'd wares - alone, GOD-like", "t");
  auto tokens = tokenize(doc);
  const Token* bh = find_token(tokens, "Block-head");
  REQUIRE(bh);
  CHECK(bh->has(flag::InternalHyphen));
  CHECK(bh->has(flag::Capitalized));
  const Token* os = find_token(tokens, "over-stock'd");
  REQUIRE(os);
  CHECK(os->has(flag::InternalHyphen));
  CHECK(os->has(flag::InternalApostrophe));
  // a free-standing hyphen splits
  CHECK(find_token(tokens, "wares"));
  CHECK(find_token(tokens, "-"));
  CHECK(find_token(tokens, "alone"));
  const Token* gl = find_token(tokens, "GOD-like");
  REQUIRE(gl);
  CHECK(gl->has(flag::InternalHyphen));
  CHECK(!gl->has(flag::AllCaps));  // mixed case across the hyphen
}

TEST_CASE("tokenize capitalization flags") {
  SourceDocument doc = document_from_string("GOD World the I", "t");
  auto tokens = tokenize(doc);
  CHECK(find_token(tokens, "GOD")->has(flag::AllCaps));
  CHECK(find_token(tokens, "World")->has(flag::Capitalized));
  CHECK(find_token(tokens, "the")->flags == 0);
  // single letters never count as AllCaps
  CHECK(find_token(tokens, "I")->has(flag::Capitalized));
  CHECK(!find_token(tokens, "I")->has(flag::AllCaps));
}

TEST_CASE("flag_names formatting") {
  CHECK(flag_names(0) == "-");
  CHECK(flag_names(flag::LeadingApostrophe | flag::Capitalized) ==
        "LeadingApostrophe,Capitalized");
}

TEST_CASE("token spans reconstruct the source") {
  SourceDocument doc = load_document(std::string(FIXTURES_DIR) + "/excerpt.txt",
                                     "excerpt");
  auto tokens = tokenize(doc);
  REQUIRE(!tokens.empty());
  std::size_t prev_end = 0;
  for (const auto& t : tokens) {
    CHECK(t.span.start >= prev_end);
    CHECK(t.span.end > t.span.start);
    CHECK(doc.text.substr(t.span.start, t.span.end - t.span.start) ==
          t.surface);
    prev_end = t.span.end;
  }
}

TEST_CASE("tokenization is deterministic") {
  SourceDocument doc = load_document(std::string(FIXTURES_DIR) + "/excerpt.txt",
                                     "excerpt");
  auto a = tokenize(doc);
  auto b = tokenize(doc);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].surface == b[i].surface);
    CHECK(a[i].span.start == b[i].span.start);
    CHECK(a[i].flags == b[i].flags);
  }
}

TEST_CASE("random text round-trips through spans") {
  std::mt19937 rng(20260823);
  const std::string alphabet = "abcDE '-.,;9\n’";
  for (int round = 0; round < 50; ++round) {
    std::string s;
    std::uniform_int_distribution<std::size_t> pick(0, 12);
    std::uniform_int_distribution<int> len(1, 200);
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
      // alphabet holds one multi-byte char at the end; index chars directly
      static const char* items[] = {"a", "b", "c",  "D", "E", " ", "'",
                                    "-", ".", ",",  ";", "9", "\n"};
      s += items[pick(rng)];
    }
    SourceDocument doc = document_from_string(s, "rand");
    auto tokens = tokenize(doc);
    std::size_t prev = 0;
    for (const auto& t : tokens) {
      REQUIRE(t.span.start >= prev);
      REQUIRE(doc.text.substr(t.span.start, t.span.end - t.span.start) ==
              t.surface);
      prev = t.span.end;
    }
  }
}
