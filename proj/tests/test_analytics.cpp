#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <map>

#include "analytics.hpp"
#include "corpus.hpp"
#include "lexicon.hpp"
#include "pattern.hpp"

using namespace emlex;

namespace {

struct Fixture {
  Lexicon base = Lexicon::load(std::string(DATA_DIR) + "/base_en.dic", "base");
  Lexicon overlay =
      Lexicon::load(std::string(DATA_DIR) + "/xvii_en.dic", "Dic_EN_XVII");
  Lexicon contractions = Lexicon::load(
      std::string(DATA_DIR) + "/contractions_en.dic", "contractions");
  Lexicon empty_overlay = Lexicon::parse("", "Dic_EN_XVII");
  RuleConfig config;
  SourceDocument excerpt = load_document(
      std::string(FIXTURES_DIR) + "/excerpt.txt", "excerpt");
  std::vector<Token> tokens = tokenize(excerpt);
};

Fixture& fx() {
  static Fixture f;
  return f;
}

// row lookup: first column(s) used as key
const std::vector<Cell>* find_row(const Report& r, const std::string& key,
                                  std::size_t col = 0) {
  for (const auto& row : r.rows)
    if (cell_text(row[col]) == key) return &row;
  return nullptr;
}

std::int64_t int_cell(const std::vector<Cell>& row, std::size_t col) {
  return std::get<std::int64_t>(row[col]);
}

}  // namespace

TEST_CASE("annotation partitions the vocabulary") {
  auto index = annotate_corpus(fx().tokens, fx().base, fx().overlay,
                               fx().contractions, fx().config);
  CHECK(index.per_token.size() == fx().tokens.size());
  // recognized and unknown partition the distinct Word surfaces
  for (const auto& s : index.recognized) CHECK(index.unknown.count(s) == 0);
  std::size_t words = 0;
  for (const auto& t : fx().tokens)
    if (t.kind == TokenKind::Word) ++words;
  CHECK(index.recognized.size() + index.unknown.size() <= words);
  CHECK(index.recognized.size() > 0);
}

TEST_CASE("annotation provenance distinguishes overlay and rules") {
  SourceDocument doc = document_from_string(
      "inforce the dispise and garden", "t");
  auto tokens = tokenize(doc);
  auto index = annotate_corpus(tokens, fx().base, fx().overlay,
                               fx().contractions, fx().config);
  REQUIRE(index.per_token.size() == 5);
  REQUIRE(!index.per_token[0].empty());
  CHECK(index.per_token[0][0].provenance == Provenance::Rule);
  CHECK(index.per_token[0][0].rule == "InEnSwap");
  REQUIRE(!index.per_token[2].empty());
  CHECK(index.per_token[2][0].provenance == Provenance::XVII);
  REQUIRE(!index.per_token[4].empty());
  CHECK(index.per_token[4][0].provenance == Provenance::Base);
}

TEST_CASE("base-only configuration leaves archaic forms unknown") {
  SourceDocument doc = document_from_string(
      "improveable improveing incogitancy incourage inferiour inforce ingage",
      "t");
  auto tokens = tokenize(doc);
  RuleConfig no_rules;
  no_rules.contraction = no_rules.hyphen = no_rules.in_en = no_rules.elision =
      no_rules.inflection = no_rules.degree = no_rules.juxtaposition = false;
  auto index = annotate_corpus(tokens, fx().base, fx().empty_overlay,
                               fx().contractions, no_rules);
  for (const char* w : {"improveable", "improveing", "incogitancy",
                        "incourage", "inferiour", "inforce", "ingage"})
    CHECK(index.unknown.count(w) == 1);
  // the cascade recovers the in/en family; the overlay covers the rest
  auto with_all = annotate_corpus(tokens, fx().base, fx().overlay,
                                  fx().contractions, fx().config);
  CHECK(with_all.unknown.empty());
}

TEST_CASE("the nine residual forms load from the overlay") {
  SourceDocument doc = document_from_string(
      "accrew Aegypt benumb buz cyons meerly mormo shewn viz", "t");
  auto tokens = tokenize(doc);
  auto index = annotate_corpus(tokens, fx().base, fx().overlay,
                               fx().contractions, fx().config);
  CHECK(index.unknown.empty());
  CHECK(index.recognized.size() == 9);
}

TEST_CASE("recognition monotonicity under overlay growth") {
  auto without = annotate_corpus(fx().tokens, fx().base, fx().empty_overlay,
                                 fx().contractions, fx().config);
  auto with = annotate_corpus(fx().tokens, fx().base, fx().overlay,
                              fx().contractions, fx().config);
  CHECK(with.unknown.size() <= without.unknown.size());
  for (const auto& s : with.unknown) CHECK(without.unknown.count(s) == 1);
}

TEST_CASE("pronoun census counts forms and groups") {
  SourceDocument doc = document_from_string(
      "You and your Sex; you, my self and my book. I am I. We? Us! "
      "They see them in their place. My self again.",
      "t");
  auto tokens = tokenize(doc);
  Report r = pronoun_census(tokens, "p");
  const auto* you = find_row(r, "you", 1);
  REQUIRE(you);
  CHECK(int_cell(*you, 2) == 2);
  const auto* your = find_row(r, "your", 1);
  REQUIRE(your);
  CHECK(int_cell(*your, 2) == 1);
  const auto* myself = find_row(r, "my self", 1);
  REQUIRE(myself);
  CHECK(int_cell(*myself, 2) == 2);
  // "my" excludes the bigram occurrences
  const auto* my = find_row(r, "my", 1);
  REQUIRE(my);
  CHECK(int_cell(*my, 2) == 1);
  const auto* i = find_row(r, "i", 1);
  REQUIRE(i);
  CHECK(int_cell(*i, 2) == 2);
  const auto* they = find_row(r, "they", 1);
  REQUIRE(they);
  CHECK(int_cell(*they, 2) == 1);

  // group sums equal the sum of their per-form cells
  std::map<std::string, std::int64_t> sums, printed;
  for (const auto& row : r.rows) {
    std::string group = cell_text(row[0]);
    std::string form = cell_text(row[1]);
    if (group == "Total") continue;
    if (form == "(group total)")
      printed[group] = int_cell(row, 2);
    else
      sums[group] += int_cell(row, 2);
  }
  REQUIRE(!printed.empty());
  for (const auto& [group, total] : printed) CHECK(sums[group] == total);
}

TEST_CASE("pronoun census on an empty corpus is all zeros") {
  std::vector<Token> none;
  Report r = pronoun_census(none, "p");
  for (const auto& row : r.rows)
    CHECK(int_cell(row, 2) == 0);
}

TEST_CASE("length distribution rows and ratios") {
  SourceDocument doc = document_from_string(
      "Tulips longword longword another uncharitableness a bc", "t");
  auto tokens = tokenize(doc);
  Report r = length_distribution(tokens, 7, "p");
  const auto* l7 = find_row(r, "7");
  REQUIRE(l7);
  CHECK(int_cell(*l7, 1) == 1);  // another
  const auto* l8 = find_row(r, "8");
  REQUIRE(l8);
  CHECK(int_cell(*l8, 1) == 1);  // longword, twice
  CHECK(int_cell(*l8, 2) == 2);
  const auto* l16 = find_row(r, "16");
  REQUIRE(l16);
  CHECK(int_cell(*l16, 1) == 1);
  CHECK(int_cell(*l16, 2) == 1);
  // ratio renders with two decimals
  CHECK(cell_text((*l8)[3]) == "2.00");
  const auto* total = find_row(r, "Total");
  REQUIRE(total);
  // lengths with no forms still get a row (continuous axis)
  CHECK(find_row(r, "9"));
  CHECK(find_row(r, "10"));
}

TEST_CASE("length distribution counts distinct folded forms") {
  SourceDocument doc =
      document_from_string("Longword longword LONGWORD", "t");
  auto tokens = tokenize(doc);
  Report r = length_distribution(tokens, 7, "p");
  const auto* l8 = find_row(r, "8");
  REQUIRE(l8);
  CHECK(int_cell(*l8, 1) == 1);
  CHECK(int_cell(*l8, 2) == 3);
  CHECK(cell_text((*l8)[3]) == "3.00");
}

TEST_CASE("punctuation census equals a character-count oracle") {
  const SourceDocument& doc = fx().excerpt;
  std::int64_t straight = 0, left = 0, right = 0, stops = 0, commas = 0;
  for (std::size_t i = 0; i < doc.text.size(); ++i) {
    unsigned char c = doc.text[i];
    if (c == '\'') ++straight;
    if (c == '.') ++stops;
    if (c == ',') ++commas;
    if (c == 0xE2 && i + 2 < doc.text.size() &&
        static_cast<unsigned char>(doc.text[i + 1]) == 0x80) {
      unsigned char third = doc.text[i + 2];
      if (third == 0x98) ++left;
      if (third == 0x99) ++right;
    }
  }
  REQUIRE(right > 0);  // the fixture deliberately mixes apostrophe styles
  Report r = punctuation_census(doc, "p");
  CHECK(int_cell(*find_row(r, "apostrophe U+0027"), 1) == straight);
  CHECK(int_cell(*find_row(r, "apostrophe U+2018"), 1) == left);
  CHECK(int_cell(*find_row(r, "apostrophe U+2019"), 1) == right);
  CHECK(int_cell(*find_row(r, "apostrophes total"), 1) ==
        straight + left + right);
  CHECK(int_cell(*find_row(r, "full stop"), 1) == stops);
  CHECK(int_cell(*find_row(r, "comma"), 1) == commas);
}

TEST_CASE("punctuation census trivial example") {
  Report r = punctuation_census(document_from_string("a,b,c.", "t"), "p");
  CHECK(int_cell(*find_row(r, "comma"), 1) == 2);
  CHECK(int_cell(*find_row(r, "full stop"), 1) == 1);
  CHECK(int_cell(*find_row(r, "apostrophes total"), 1) == 0);
}

TEST_CASE("census additivity across concatenation") {
  std::string a = "The Ladies improve, the World watches.";
  std::string b = "You and your Wit; they wou'd improve.";
  auto count = [&](const std::string& s) {
    std::map<std::string, std::int64_t> out;
    SourceDocument doc = document_from_string(s, "t");
    Report r = punctuation_census(doc, "p");
    for (const auto& row : r.rows) out[cell_text(row[0])] = int_cell(row, 1);
    Report pr = pronoun_census(tokenize(doc), "p");
    for (const auto& row : pr.rows)
      out["pron:" + cell_text(row[0]) + "/" + cell_text(row[1])] =
          int_cell(row, 2);
    return out;
  };
  auto ca = count(a), cb = count(b), cab = count(a + " " + b);
  for (const auto& [key, total] : cab) CHECK(total == ca[key] + cb[key]);
}

TEST_CASE("censuses are deterministic across re-tokenization") {
  Report a = pronoun_census(tokenize(fx().excerpt), "p");
  Report b = pronoun_census(tokenize(fx().excerpt), "p");
  CHECK(a.to_tsv() == b.to_tsv());
  Report la = length_distribution(tokenize(fx().excerpt), 7, "p");
  Report lb = length_distribution(tokenize(fx().excerpt), 7, "p");
  CHECK(la.to_tsv() == lb.to_tsv());
}

TEST_CASE("unknown words report lists suggestions") {
  SourceDocument doc = document_from_string("zzzgarden notable yeti", "t");
  auto tokens = tokenize(doc);
  auto index = annotate_corpus(tokens, fx().base, fx().overlay,
                               fx().contractions, fx().config);
  CHECK(index.unknown.count("zzzgarden") == 1);
  Report r = unknown_words(index, tokens, "p");
  const auto* row = find_row(r, "zzzgarden");
  REQUIRE(row);
  CHECK(int_cell(*row, 1) == 1);
  // alphabetical ordering
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    CHECK(cell_text(r.rows[i - 1][0]) < cell_text(r.rows[i][0]));
}

TEST_CASE("suffix table flags overlay-only forms") {
  SourceDocument doc = document_from_string(
      "impertinency and innocency, but patience brings presence; "
      "subserviency indifferency",
      "t");
  auto tokens = tokenize(doc);
  Report r = suffix_table(tokens, {"ency", "ence"}, fx().base, fx().overlay,
                          "p");
  const auto* ency = find_row(r, "ency");
  REQUIRE(ency);
  CHECK(int_cell(*ency, 1) == 4);
  std::string archaic = cell_text((*ency)[3]);
  for (const char* w :
       {"impertinency", "indifferency", "innocency", "subserviency"})
    CHECK(archaic.find(w) != std::string::npos);
  const auto* ence = find_row(r, "ence");
  REQUIRE(ence);
  CHECK(int_cell(*ence, 1) == 2);
  CHECK(cell_text((*ence)[3]).empty());
}

TEST_CASE("suffix match must be strictly longer than the suffix") {
  SourceDocument doc = document_from_string("ness harness", "t");
  auto tokens = tokenize(doc);
  Report r = suffix_table(tokens, {"ness"}, fx().base, fx().overlay, "p");
  const auto* row = find_row(r, "ness");
  REQUIRE(row);
  CHECK(int_cell(*row, 1) == 1);  // "harness" only
}

TEST_CASE("default suffix list covers the census pairs") {
  auto list = default_suffix_list();
  for (const char* s : {"tion", "tions", "ness", "nesses", "ency", "encies",
                        "yon", "yons", "ous", "able", "ly", "ick", "ical"}) {
    CHECK(std::find(list.begin(), list.end(), s) != list.end());
  }
}

TEST_CASE("reports serialize losslessly to TSV and JSON") {
  Report r = length_distribution(fx().tokens, 7, "corpus=x config=y");
  std::string tsv = r.to_tsv();
  CHECK(tsv.rfind("# provenance: corpus=x config=y", 0) == 0);
  std::string json = r.to_json();
  // every cell value appears in both serializations
  for (const auto& row : r.rows)
    for (const auto& cell : row) {
      if (cell_text(cell).empty()) continue;
      CHECK(tsv.find(cell_text(cell)) != std::string::npos);
      CHECK(json.find(cell_text(cell)) != std::string::npos);
    }
  CHECK_THROWS(r.add_row({std::string("too"), std::string("few")}));
}

TEST_CASE("normalization report covers every word token") {
  Lexicon merged = Lexicon::merge(fx().base, fx().overlay);
  Report r = normalization_report(fx().tokens, merged, fx().contractions,
                                  fx().config, "p");
  std::size_t words = 0;
  for (const auto& t : fx().tokens)
    if (t.kind == TokenKind::Word) ++words;
  CHECK(r.rows.size() >= words);
  const auto* row = find_row(r, "over-stock'd", 1);
  REQUIRE(row);
  CHECK(cell_text((*row)[2]) == "overstocked");
}
