#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "error.hpp"
#include "lexicon.hpp"

using namespace emlex;

TEST_CASE("parse a plain spelling-variant entry") {
  Lexicon lex = Lexicon::parse(
      "accrew,accrue,V+EN=accrue+Dic_EN_XVII+spelling\n", "test");
  auto hits = lex.lookup("accrew");
  REQUIRE(hits.size() == 1);
  const LexEntry& e = *hits[0];
  CHECK(e.surface == "accrew");
  CHECK(e.lemma == "accrue");
  CHECK(e.pos == "V");
  CHECK(e.archaic());
  CHECK(e.has_feature("spelling"));
  CHECK(!e.has_feature("meaning"));
  CHECK(e.modern_form() == "accrue");
}

TEST_CASE("parse an archaic-meaning entry without lemma") {
  Lexicon lex = Lexicon::parse(
      "displacency,N+EN=displeasure+Dic_EN_XVII+meaning\n", "test");
  auto hits = lex.lookup("displacency");
  REQUIRE(hits.size() == 1);
  CHECK(hits[0]->lemma == "displacency");  // defaults to the surface
  CHECK(hits[0]->pos == "N");
  CHECK(hits[0]->modern_form() == "displeasure");
}

TEST_CASE("parse a multi-unit contraction") {
  Lexicon lex = Lexicon::parse(
      "'twou'd,<it,it,PRO+3+n+s> <would,V+PT+3+s>+UNAMB\n", "test");
  auto hits = lex.lookup("'twou'd");
  REQUIRE(hits.size() == 1);
  const LexEntry& e = *hits[0];
  REQUIRE(e.expansion.size() == 2);
  CHECK(e.expansion[0].form == "it");
  CHECK(e.expansion[0].lemma == "it");
  CHECK(e.expansion[0].pos == "PRO");
  REQUIRE(e.expansion[0].features.size() == 3);
  CHECK(e.expansion[0].features[0].name == "3");
  CHECK(e.expansion[0].features[1].name == "n");
  CHECK(e.expansion[0].features[2].name == "s");
  CHECK(e.expansion[1].form == "would");
  CHECK(e.expansion[1].pos == "V");
  CHECK(!e.expansion[1].lemma.has_value());
  CHECK(e.unambiguous());
  CHECK(e.expanded() == "it would");
}

TEST_CASE("single-unit contraction") {
  Lexicon lex = Lexicon::parse("e'er,<ever,ADV>+UNAMB\n", "test");
  auto hits = lex.lookup("E'ER");  // lookup is case-insensitive
  REQUIRE(hits.size() == 1);
  CHECK(hits[0]->expanded() == "ever");
  CHECK(hits[0]->unambiguous());
}

TEST_CASE("comments, blanks, and tag spacing") {
  Lexicon lex = Lexicon::parse(
      "# header comment\n"
      "\n"
      "e'er, <ever,ADV> +UNAMB\n"
      "   # indented comment\n"
      "good,A\n",
      "test");
  CHECK(lex.size() == 2);
  CHECK(lex.lookup("e'er").front()->unambiguous());
}

TEST_CASE("parse errors carry line and column") {
  try {
    Lexicon::parse("good,A\nbad line without pos\n", "test");
    FAIL("expected ParseError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(Lexicon::parse("x,\n", "t"), Error);
  CHECK_THROWS_AS(Lexicon::parse("x,<it,PRO\n", "t"), Error);
}

TEST_CASE("overlay validation") {
  // Dic_EN_XVII entries need EN= and exactly one of +spelling/+meaning
  try {
    Lexicon::parse("accrew,accrue,V+EN=accrue+Dic_EN_XVII\n", "t");
    FAIL("expected ValidationError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ValidationError);
  }
  CHECK_THROWS_AS(
      Lexicon::parse(
          "accrew,accrue,V+EN=accrue+Dic_EN_XVII+spelling+meaning\n", "t"),
      Error);
  CHECK_THROWS_AS(
      Lexicon::parse("accrew,accrue,V+Dic_EN_XVII+spelling\n", "t"), Error);
}

TEST_CASE("UNAMB suppresses other analyses") {
  Lexicon lex = Lexicon::parse(
      "will,V\n"
      "will,N\n",
      "test");
  CHECK(lex.lookup("will").size() == 2);
  Lexicon una = Lexicon::parse(
      "'tis,<it,it,PRO+3+n+s> <is,be,V+3+s>+UNAMB\n"
      "'tis,N\n",
      "test");
  auto hits = una.lookup("'tis");
  REQUIRE(hits.size() == 1);
  CHECK(hits[0]->unambiguous());
}

TEST_CASE("merge is an additive union") {
  Lexicon a = Lexicon::parse("good,A\nwill,V\n", "a");
  Lexicon b = Lexicon::parse("will,N\nnew,A\n", "b");
  Lexicon m = Lexicon::merge(a, b);
  CHECK(m.size() == 4);
  CHECK(m.lookup("will").size() == 2);
  CHECK(m.contains("good"));
  CHECK(m.contains("new"));
  // merge oracle: the formatted union equals the set union of lines
  std::set<std::string> expected;
  a.for_each([&](const LexEntry& e) { expected.insert(format_entry(e)); });
  b.for_each([&](const LexEntry& e) { expected.insert(format_entry(e)); });
  std::set<std::string> got;
  m.for_each([&](const LexEntry& e) { got.insert(format_entry(e)); });
  CHECK(got == expected);
}

TEST_CASE("merge deduplicates identical entries") {
  Lexicon a = Lexicon::parse("good,A\n", "a");
  Lexicon b = Lexicon::parse("good,A\n", "b");
  CHECK(Lexicon::merge(a, b).size() == 1);
}

TEST_CASE("merge conflict on differing UNAMB") {
  Lexicon a = Lexicon::parse("e'er,<ever,ADV>+UNAMB\n", "a");
  Lexicon b = Lexicon::parse("e'er,<err,V>+UNAMB\n", "b");
  try {
    Lexicon::merge(a, b);
    FAIL("expected ConflictError");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConflictError);
  }
  // identical UNAMB analyses do not conflict
  Lexicon c = Lexicon::parse("e'er,<ever,ADV>+UNAMB\n", "c");
  CHECK(Lexicon::merge(a, c).size() == 1);
}

namespace {

// Generates structurally valid entries across the whole grammar.
struct Generator {
  std::mt19937 rng{97};

  int pick(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  }

  std::string word() {
    static const char letters[] = "abcdefghijklmnopqrstuvwxyz";
    std::string w;
    int n = pick(1, 10);
    for (int i = 0; i < n; ++i) w += letters[pick(0, 25)];
    if (pick(0, 9) == 0) w.insert(w.begin() + pick(0, (int)w.size()), '\'');
    return w;
  }

  std::string pos() {
    static const char* tags[] = {"N", "V", "A", "ADV", "PRO", "DET", "PREP"};
    return tags[pick(0, 6)];
  }

  Feature feature() {
    static const char* names[] = {"PT", "PP", "3", "s", "n", "COMP", "SUP",
                                  "UNAMB", "EN"};
    Feature f;
    f.name = names[pick(0, 8)];
    if (f.name == "EN" || pick(0, 3) == 0) f.value = word();
    return f;
  }

  std::vector<Feature> features() {
    std::vector<Feature> fs;
    int n = pick(0, 3);
    for (int i = 0; i < n; ++i) {
      Feature f = feature();
      bool dup = false;
      for (const auto& g : fs) dup = dup || g.name == f.name;
      if (!dup) fs.push_back(std::move(f));
    }
    return fs;
  }

  LexEntry entry() {
    LexEntry e;
    e.surface = word();
    if (pick(0, 1)) {
      e.lemma = word();
      e.pos = pos();
      e.features = features();
    } else if (pick(0, 1)) {
      e.lemma = e.surface;
      e.pos = pos();
      e.features = features();
    } else {
      e.lemma = e.surface;
      int units = pick(1, 3);
      for (int i = 0; i < units; ++i) {
        Unit u;
        u.form = word();
        if (pick(0, 1)) u.lemma = word();
        u.pos = pos();
        u.features = features();
        e.expansion.push_back(std::move(u));
      }
      e.features = features();
    }
    return e;
  }
};

}  // namespace

TEST_CASE("round-trip property over generated entries") {
  Generator gen;
  for (int i = 0; i < 1000; ++i) {
    LexEntry e = gen.entry();
    std::string line = format_entry(e);
    Lexicon lex;
    REQUIRE_NOTHROW(lex = Lexicon::parse(line + "\n", "gen"));
    REQUIRE(lex.size() == 1);
    const LexEntry* back = nullptr;
    lex.for_each([&](const LexEntry& p) { back = &p; });
    REQUIRE(back);
    INFO("line: ", line);
    CHECK(format_entry(*back) == line);
    CHECK(back->surface == e.surface);
    CHECK(back->same_analysis(e));
  }
}

TEST_CASE("bundled dictionaries load cleanly") {
  Lexicon base = Lexicon::load(std::string(DATA_DIR) + "/base_en.dic", "base");
  Lexicon overlay =
      Lexicon::load(std::string(DATA_DIR) + "/xvii_en.dic", "Dic_EN_XVII");
  Lexicon contractions = Lexicon::load(
      std::string(DATA_DIR) + "/contractions_en.dic", "contractions");
  CHECK(base.size() > 1000);
  CHECK(overlay.size() >= 50);
  CHECK(contractions.size() >= 90);
  CHECK_NOTHROW(Lexicon::merge(Lexicon::merge(base, overlay), contractions));
}
