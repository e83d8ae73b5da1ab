#include "sedac/cnl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sedac {

namespace {

const char* kQueryPrefixWords[3] = {"true", "or", "false"};
const std::string kVar = "A";

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

bool is_determiner(const std::string& w) {
  return w == "each" || w == "every" || w == "any" || w == "all" || w == "a" ||
         w == "an";
}

// Sentence text -> lowercase word tokens; the terminal period is required
// and consumed here.
std::vector<std::string> tokenize_sentence(std::string_view sentence) {
  std::string text(sentence);
  std::vector<std::string> words;
  std::istringstream in(text);
  std::string w;
  while (in >> w) words.push_back(lower(w));
  if (words.empty())
    throw CnlParseError("empty sentence", "", 0);
  std::string& last = words.back();
  if (last.size() < 2 || last.back() != '.')
    throw CnlParseError("sentence does not end with '.'", last, words.size() - 1);
  last.pop_back();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (char c : words[i])
      if (!std::isalpha(static_cast<unsigned char>(c)) && c != ':')
        throw CnlParseError("unexpected character in word", words[i], i);
  }
  return words;
}

class SentenceParser {
 public:
  SentenceParser(std::vector<std::string> words, const Lexicon& lex)
      : words_(std::move(words)), lex_(lex) {}

  // statement := quantified | fact
  Formula parse_statement() {
    Formula f = peek_is_quantified() ? parse_quantified() : parse_fact();
    expect_end();
    return f;
  }

  // ground := PROPER ('is' ['not'] classifier | VERB3SG)
  Formula parse_ground() {
    Formula f = parse_fact();
    expect_end();
    return f;
  }

 private:
  bool peek_is_quantified() const {
    if (pos_ >= words_.size()) return false;
    const std::string& w = words_[pos_];
    if (is_determiner(w) || w == "no") return true;
    // bare plural subject
    auto np = try_noun_phrase();
    return np && np->second == WordClass::PluralNoun;
  }

  Formula parse_quantified() {
    bool negated = false;
    if (current() == "no") {
      negated = true;
      ++pos_;
    } else if (is_determiner(current())) {
      ++pos_;
    }
    auto np = try_noun_phrase();
    if (!np) fail("expected a noun");
    std::string subject =
        np->second == WordClass::PluralNoun ? base_of(np->first) : np->first;
    pos_ += np->third;

    Literal antecedent = pos(Atom::pred_app(subject, Term::variable(kVar)));

    // copula or verb consequent
    if (pos_ < words_.size() && (current() == "is" || current() == "are")) {
      ++pos_;
      if (pos_ < words_.size() && current() == "not") {
        negated = !negated;
        ++pos_;
      }
      std::string pred = parse_class_or_attribute();
      Literal cons{!negated, Atom::pred_app(pred, Term::variable(kVar))};
      return Formula::univ_impl(kVar, {antecedent}, cons);
    }
    // "Every cat swims." / "Cats swim." / "No bird swims."
    std::string stem = parse_verb();
    Literal cons{!negated, Atom::pred_app(stem, Term::variable(kVar))};
    return Formula::univ_impl(kVar, {antecedent}, cons);
  }

  Formula parse_fact() {
    Classification c = lex_.classify(current());
    if (c.cls != WordClass::ProperNoun)
      fail("expected a proper noun or a quantified subject");
    std::string individual = current();
    ++pos_;
    if (pos_ < words_.size() && current() == "is") {
      ++pos_;
      bool negated = false;
      if (pos_ < words_.size() && current() == "not") {
        negated = true;
        ++pos_;
      }
      std::string pred = parse_class_or_attribute();
      Literal lit{!negated, Atom::pred_app(pred, Term::constant(individual))};
      return Formula::ground(lit);
    }
    std::string stem = parse_verb();
    return Formula::ground(
        pos(Atom::pred_app(stem, Term::constant(individual))));
  }

  // classifier := ('a'|'an') noun | plural-noun | adjective
  std::string parse_class_or_attribute() {
    if (pos_ >= words_.size()) fail("expected a class or attribute");
    if (current() == "a" || current() == "an") {
      ++pos_;
      auto np = try_noun_phrase();
      if (!np || np->second != WordClass::SingularNoun)
        fail("expected a singular noun after the article");
      pos_ += np->third;
      return np->first;
    }
    if (auto np = try_noun_phrase()) {
      pos_ += np->third;
      return np->second == WordClass::PluralNoun ? base_of(np->first)
                                                 : np->first;
    }
    Classification c = lex_.classify(current());
    if (c.cls == WordClass::AdjectiveForm) {
      ++pos_;
      return c.base;  // normalized to the noun predicate
    }
    if (c.cls == WordClass::Attribute) {
      std::string w = current();
      ++pos_;
      return w;
    }
    fail("unknown class or attribute word");
  }

  std::string parse_verb() {
    if (pos_ >= words_.size()) fail("expected a verb");
    Classification c = lex_.classify(current());
    if (c.cls == WordClass::Verb3sg) {
      ++pos_;
      return c.base;  // canonical stem
    }
    if (c.cls == WordClass::VerbStem) {
      std::string w = current();
      ++pos_;
      return w;
    }
    fail("expected a verb");
  }

  struct NounPhrase {
    std::string first;  // matched symbol (singular or plural, underscored)
    WordClass second;
    std::size_t third;  // words consumed
  };

  // Longest-match lookup of a (multiword) noun starting at pos_.
  std::optional<NounPhrase> try_noun_phrase() const {
    std::size_t max_len = std::min<std::size_t>(3, words_.size() - pos_);
    for (std::size_t len = max_len; len >= 1; --len) {
      std::vector<std::string> span(words_.begin() + pos_,
                                    words_.begin() + pos_ + len);
      std::string sym = symbol_from_words(span);
      Classification c = lex_.classify(sym);
      if (c.cls == WordClass::SingularNoun)
        return NounPhrase{sym, WordClass::SingularNoun, len};
      if (c.cls == WordClass::PluralNoun)
        return NounPhrase{sym, WordClass::PluralNoun, len};
    }
    return std::nullopt;
  }

  std::string base_of(const std::string& plural) const {
    auto s = lex_.singular_of_plural(plural);
    return s ? *s : plural;
  }

  const std::string& current() const {
    if (pos_ >= words_.size())
      throw CnlParseError("unexpected end of sentence", "", pos_);
    return words_[pos_];
  }

  void expect_end() const {
    if (pos_ != words_.size())
      throw CnlParseError("trailing words after a complete sentence",
                          words_[pos_], pos_);
  }

  [[noreturn]] void fail(const std::string& what) const {
    if (pos_ >= words_.size()) throw CnlParseError(what, "", pos_);
    throw CnlParseError(what, words_[pos_], pos_);
  }

  std::vector<std::string> words_;
  const Lexicon& lex_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula nl_to_fof(std::string_view sentence, const Lexicon& lex) {
  return SentenceParser(tokenize_sentence(sentence), lex).parse_statement();
}

Formula parse_query_sentence(std::string_view sentence, const Lexicon& lex) {
  auto words = tokenize_sentence(sentence);
  if (words.size() < 4) throw CnlParseError("query too short", "", 0);
  // "true or false" then ':' glued to the third word or standing alone
  std::string third = words[2];
  bool colon_attached = !third.empty() && third.back() == ':';
  if (colon_attached) third.pop_back();
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string& w = i == 2 ? third : words[i];
    if (w != kQueryPrefixWords[i])
      throw CnlParseError("query must begin with 'True or false:'", words[i], i);
  }
  std::size_t body_start = 3;
  if (!colon_attached) {
    if (words.size() < 5 || words[3] != ":")
      throw CnlParseError("missing ':' after 'True or false'", words[3], 3);
    body_start = 4;
  }
  std::vector<std::string> rest(words.begin() + body_start, words.end());
  return SentenceParser(std::move(rest), lex).parse_ground();
}

NLScript parse_nl_script(std::string_view text) {
  // One sentence per line, or flowing text: lines are split further at each
  // '.' that ends a sentence, so pasted paragraphs work too.
  NLScript script;
  std::istringstream in{std::string(text)};
  std::string line;
  int queries = 0;
  auto add_sentence = [&](std::string t) {
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    std::size_t b = 0;
    while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
    t = t.substr(b);
    if (t.empty()) return;
    std::string head = lower(t.substr(0, 13));
    if (head == "true or false") {
      ++queries;
      script.query_sentence = t;
    } else {
      script.statements.push_back(t);
    }
  };
  while (std::getline(in, line)) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '.') continue;
      if (i + 1 < line.size() && !std::isspace(static_cast<unsigned char>(line[i + 1])))
        continue;
      add_sentence(line.substr(start, i - start + 1));
      start = i + 1;
    }
    if (start < line.size()) add_sentence(line.substr(start));
  }
  if (queries != 1)
    throw std::runtime_error("script must contain exactly one 'True or false:' line, found " +
                             std::to_string(queries));
  return script;
}

ParsedProblem parse_script(const NLScript& script, const Lexicon& lex) {
  std::vector<std::pair<int, std::string>> failures;
  FormulaSet axioms;
  std::vector<std::pair<std::string, Formula>> source_map;
  for (std::size_t i = 0; i < script.statements.size(); ++i) {
    try {
      Formula f = nl_to_fof(script.statements[i], lex);
      axioms.insert(f);
      source_map.emplace_back(script.statements[i], f);
    } catch (const CnlParseError& e) {
      failures.emplace_back(static_cast<int>(i),
                            std::string(e.what()) + " at '" + e.token + "'");
    }
  }
  std::optional<Formula> query;
  try {
    query = parse_query_sentence(script.query_sentence, lex);
  } catch (const CnlParseError& e) {
    failures.emplace_back(static_cast<int>(script.statements.size()),
                          std::string("query: ") + e.what() + " at '" +
                              e.token + "'");
  }
  if (!failures.empty()) {
    std::string msg = "script has " + std::to_string(failures.size()) +
                      " unparseable sentence(s); first at index " +
                      std::to_string(failures.front().first) + ": " +
                      failures.front().second;
    throw ScriptParseError(msg, failures);
  }
  return ParsedProblem{std::move(axioms), std::move(*query),
                       std::move(source_map)};
}

}  // namespace sedac
