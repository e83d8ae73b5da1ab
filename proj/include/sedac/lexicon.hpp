#ifndef SEDAC_LEXICON_HPP
#define SEDAC_LEXICON_HPP

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sedac {

// Morphology and vocabulary tables driving the grammar, the generator and
// the rewrite rules.  Symbols are stored in predicate form (lowercase,
// multiword entries underscore-joined).  Immutable after load.

enum class WordClass {
  PluralNoun,     // base = singular form
  SingularNoun,
  AdjectiveForm,  // base = normalized noun predicate
  Attribute,      // property adjective with no noun form (fruity, large, ...)
  ProperNoun,
  Verb3sg,        // base = stem
  VerbStem,
  Unknown,
};

struct Classification {
  WordClass cls = WordClass::Unknown;
  std::string base;  // see WordClass
  bool operator==(const Classification&) const = default;
};

struct LexiconError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Lexicon {
 public:
  // Parses the sectioned CSV format ([nouns], [adjectives], [proper],
  // [verbs], '#' comments).  Throws LexiconError naming the offending
  // symbol on duplicates or conflicting classifications.
  static Lexicon load_text(std::string_view text,
                           const std::string& origin = "<memory>");
  static Lexicon load_file(const std::string& path);
  // Compiled-in copy of data/lexicon.csv.
  static const Lexicon& builtin();

  Classification classify(std::string_view symbol) const;

  // Grammar/generator helpers.
  bool is_attribute(std::string_view s) const;
  bool is_proper(std::string_view s) const;
  bool is_singular_noun(std::string_view s) const;
  std::optional<std::string> singular_of_plural(std::string_view plural) const;
  std::optional<std::string> plural_of_singular(std::string_view sing) const;
  std::optional<std::string> noun_of_adjective(std::string_view adj) const;
  std::optional<std::string> adjective_of_noun(std::string_view noun) const;
  std::optional<std::string> stem_of_verb3(std::string_view v) const;
  std::optional<std::string> verb3_of_stem(std::string_view stem) const;
  bool is_verb_stem(std::string_view s) const;

  std::vector<std::string> singular_nouns() const;
  std::vector<std::string> attributes() const;
  std::vector<std::string> proper_nouns() const;

 private:
  void add_noun(const std::string& sing, const std::string& plural);
  void add_adjective(const std::string& adj, const std::string& noun);
  void add_attribute(const std::string& adj);
  void add_proper(const std::string& name);
  void add_verb(const std::string& third, const std::string& stem);
  void reserve_symbol(const std::string& s, const char* role);

  std::map<std::string, std::string> noun_plural_;    // singular -> plural
  std::map<std::string, std::string> plural_to_sing_;
  std::map<std::string, std::string> adj_to_noun_;
  std::map<std::string, std::string> noun_to_adj_;
  std::set<std::string> attributes_;
  std::set<std::string> proper_;
  std::map<std::string, std::string> verb3_to_stem_;
  std::map<std::string, std::string> stem_to_verb3_;
  std::map<std::string, std::string> roles_;  // symbol -> role, for conflicts
};

// "negative numbers" -> "negative_numbers"
std::string symbol_from_words(const std::vector<std::string>& words);

}  // namespace sedac

#endif  // SEDAC_LEXICON_HPP
