#include "sedac/lexicon.hpp"

#include "sedac/formula.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "builtin_lexicon.inc"

namespace sedac {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::string underscore(std::string s) {
  for (char& c : s)
    if (c == ' ') c = '_';
  return s;
}

}  // namespace

std::string symbol_from_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out += '_';
    out += w;
  }
  return out;
}

void Lexicon::reserve_symbol(const std::string& s, const char* role) {
  auto [it, fresh] = roles_.emplace(s, role);
  if (!fresh)
    throw LexiconError("symbol '" + s + "' already classified as " +
                       it->second + ", cannot also be " + role);
}

void Lexicon::add_noun(const std::string& sing, const std::string& plural) {
  reserve_symbol(sing, "noun");
  if (plural != sing) reserve_symbol(plural, "plural noun");
  noun_plural_[sing] = plural;
  if (plural != sing) plural_to_sing_[plural] = sing;
}

void Lexicon::add_adjective(const std::string& adj, const std::string& noun) {
  reserve_symbol(adj, "adjective");
  auto [it, fresh] = noun_to_adj_.emplace(noun, adj);
  if (!fresh)
    throw LexiconError("noun '" + noun + "' already has adjective form '" +
                       it->second + "', cannot also take '" + adj + "'");
  adj_to_noun_[adj] = noun;
}

void Lexicon::add_attribute(const std::string& adj) {
  reserve_symbol(adj, "attribute");
  attributes_.insert(adj);
}

void Lexicon::add_proper(const std::string& name) {
  reserve_symbol(name, "proper noun");
  proper_.insert(name);
}

void Lexicon::add_verb(const std::string& third, const std::string& stem) {
  reserve_symbol(third, "verb");
  if (stem != third) reserve_symbol(stem, "verb stem");
  verb3_to_stem_[third] = stem;
  stem_to_verb3_[stem] = third;
}

Lexicon Lexicon::load_text(std::string_view text, const std::string& origin) {
  Lexicon lex;
  std::string section;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (t.front() == '[' && t.back() == ']') {
      section = t.substr(1, t.size() - 2);
      if (section != "nouns" && section != "adjectives" &&
          section != "proper" && section != "verbs")
        throw LexiconError(origin + ":" + std::to_string(lineno) +
                           ": unknown section [" + section + "]");
      continue;
    }
    if (section.empty())
      throw LexiconError(origin + ":" + std::to_string(lineno) +
                         ": entry before any section header");
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= t.size(); ++i) {
      if (i == t.size() || t[i] == ',') {
        fields.push_back(underscore(trim(std::string_view(t).substr(start, i - start))));
        start = i + 1;
      }
    }
    for (const auto& f : fields)
      if (!is_constant_name(f))
        throw LexiconError(origin + ":" + std::to_string(lineno) +
                           ": invalid symbol '" + f + "'");
    try {
      if (section == "nouns") {
        if (fields.size() != 2)
          throw LexiconError("noun entries need singular,plural");
        lex.add_noun(fields[0], fields[1]);
      } else if (section == "adjectives") {
        if (fields.size() == 1)
          lex.add_attribute(fields[0]);
        else if (fields.size() == 2)
          lex.add_adjective(fields[0], fields[1]);
        else
          throw LexiconError("adjective entries take one or two fields");
      } else if (section == "proper") {
        if (fields.size() != 1)
          throw LexiconError("proper entries take one field");
        lex.add_proper(fields[0]);
      } else {  // verbs
        if (fields.size() != 2)
          throw LexiconError("verb entries need third-person,stem");
        lex.add_verb(fields[0], fields[1]);
      }
    } catch (const LexiconError& e) {
      throw LexiconError(origin + ":" + std::to_string(lineno) + ": " +
                         e.what());
    }
  }
  // Adjective noun targets must be known nouns so normalization stays inside
  // the vocabulary.
  for (const auto& [adj, noun] : lex.adj_to_noun_)
    if (!lex.noun_plural_.count(noun))
      throw LexiconError(origin + ": adjective '" + adj +
                         "' maps to unknown noun '" + noun + "'");
  return lex;
}

Lexicon Lexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexiconError("cannot open lexicon file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_text(buf.str(), path);
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = load_text(kBuiltinLexiconCsv, "<builtin>");
  return lex;
}

Classification Lexicon::classify(std::string_view symbol) const {
  std::string s(symbol);
  if (auto it = plural_to_sing_.find(s); it != plural_to_sing_.end())
    return {WordClass::PluralNoun, it->second};
  if (noun_plural_.count(s)) return {WordClass::SingularNoun, s};
  if (auto it = adj_to_noun_.find(s); it != adj_to_noun_.end())
    return {WordClass::AdjectiveForm, it->second};
  if (attributes_.count(s)) return {WordClass::Attribute, s};
  if (proper_.count(s)) return {WordClass::ProperNoun, s};
  if (auto it = verb3_to_stem_.find(s); it != verb3_to_stem_.end())
    return {WordClass::Verb3sg, it->second};
  if (stem_to_verb3_.count(s)) return {WordClass::VerbStem, s};
  return {WordClass::Unknown, {}};
}

bool Lexicon::is_attribute(std::string_view s) const {
  return attributes_.count(std::string(s)) > 0;
}

bool Lexicon::is_proper(std::string_view s) const {
  return proper_.count(std::string(s)) > 0;
}

bool Lexicon::is_singular_noun(std::string_view s) const {
  return noun_plural_.count(std::string(s)) > 0;
}

std::optional<std::string> Lexicon::singular_of_plural(std::string_view plural) const {
  auto it = plural_to_sing_.find(std::string(plural));
  if (it == plural_to_sing_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Lexicon::plural_of_singular(std::string_view sing) const {
  auto it = noun_plural_.find(std::string(sing));
  if (it == noun_plural_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Lexicon::noun_of_adjective(std::string_view adj) const {
  auto it = adj_to_noun_.find(std::string(adj));
  if (it == adj_to_noun_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Lexicon::adjective_of_noun(std::string_view noun) const {
  auto it = noun_to_adj_.find(std::string(noun));
  if (it == noun_to_adj_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Lexicon::stem_of_verb3(std::string_view v) const {
  auto it = verb3_to_stem_.find(std::string(v));
  if (it == verb3_to_stem_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::string> Lexicon::verb3_of_stem(std::string_view stem) const {
  auto it = stem_to_verb3_.find(std::string(stem));
  if (it == stem_to_verb3_.end()) return std::nullopt;
  return it->second;
}

bool Lexicon::is_verb_stem(std::string_view s) const {
  return stem_to_verb3_.count(std::string(s)) > 0;
}

std::vector<std::string> Lexicon::singular_nouns() const {
  std::vector<std::string> out;
  for (const auto& [s, _] : noun_plural_) out.push_back(s);
  return out;
}

std::vector<std::string> Lexicon::attributes() const {
  return {attributes_.begin(), attributes_.end()};
}

std::vector<std::string> Lexicon::proper_nouns() const {
  return {proper_.begin(), proper_.end()};
}

}  // namespace sedac
