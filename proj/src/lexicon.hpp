#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace emlex {

struct Feature {
  std::string name;
  std::optional<std::string> value;

  bool operator==(const Feature&) const = default;
};

// One unit of a multi-word contraction expansion, e.g. <it,it,PRO+3+n+s>.
struct Unit {
  std::string form;
  std::optional<std::string> lemma;
  std::string pos;
  std::vector<Feature> features;

  bool operator==(const Unit&) const = default;
};

struct LexEntry {
  std::string surface;
  std::string lemma;  // defaults to surface
  std::string pos;    // empty only for multi-unit entries
  std::vector<Feature> features;
  std::vector<Unit> expansion;
  std::string origin;
  int line = 0;

  bool has_feature(std::string_view name) const;
  std::optional<std::string> feature_value(std::string_view name) const;
  bool unambiguous() const { return has_feature("UNAMB"); }
  bool archaic() const { return has_feature("Dic_EN_XVII"); }
  // EN=<modern form> for overlay entries.
  std::optional<std::string> modern_form() const { return feature_value("EN"); }
  // Space-joined expansion forms, or the lemma for plain entries.
  std::string expanded() const;

  bool same_analysis(const LexEntry& other) const;
};

std::string format_feature(const Feature& f);
std::string format_entry(const LexEntry& entry);

class Lexicon {
 public:
  Lexicon() = default;

  // Parses the line-oriented dictionary grammar:
  //   entry := surface ("," lemma)? "," pos tags
  //          | surface "," unit (SP unit)* tags
  //   tags  := ("+" name ("=" value)?)*
  //   unit  := "<" form ("," lemma)? "," pos tags ">"
  // `#` comments and blank lines are skipped.
  static Lexicon parse(std::string_view content, std::string origin);
  static Lexicon load(const std::string& path, std::string origin);

  // Additive union. Throws ConflictError when two UNAMB entries claim the
  // same surface with different analyses.
  static Lexicon merge(const Lexicon& base, const Lexicon& overlay);

  // Case-insensitive. A UNAMB hit suppresses every other analysis.
  std::vector<const LexEntry*> lookup(std::string_view surface) const;
  bool contains(std::string_view surface) const {
    return !lookup(surface).empty();
  }

  void add(LexEntry entry);

  std::size_t size() const { return count_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const auto& [key, entries] : by_surface_)
      for (const auto& e : entries) fn(e);
  }

  std::string format() const;

 private:
  std::map<std::string, std::vector<LexEntry>> by_surface_;
  std::string name_;
  std::size_t count_ = 0;
};

}  // namespace emlex
