#include "sedac/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "sedac/entail.hpp"
#include "sedac/reason.hpp"

namespace sedac {

const char* to_string(Ontology o) {
  return o == Ontology::True ? "true" : "false";
}

const char* to_string(Distractors d) {
  return d == Distractors::None ? "none" : "relevant";
}

namespace {

// Real-world subclass edges used by the true-ontology setting.  The false
// setting samples chains freely and rejects any that land on these.
const std::pair<const char*, const char*> kTrueEdges[] = {
    {"cat", "feline"},           {"feline", "carnivore"},
    {"carnivore", "mammal"},     {"mammal", "vertebrate"},
    {"vertebrate", "animal"},    {"dog", "canine"},
    {"canine", "carnivore"},     {"bird", "vertebrate"},
    {"snake", "reptile"},        {"reptile", "vertebrate"},
    {"sheep", "mammal"},         {"composite_number", "natural_number"},
    {"prime_number", "natural_number"}, {"natural_number", "integer"},
    {"even_number", "integer"},  {"integer", "real_number"},
    {"negative_number", "real_number"}, {"fraction", "real_number"},
    {"real_number", "complex_number"},  {"imaginary_number", "complex_number"},
    {"complex_number", "number"},       {"real_number", "number"},
    {"integer", "number"},
};

bool is_true_edge(const std::string& a, const std::string& b) {
  for (const auto& [x, y] : kTrueEdges)
    if (a == x && b == y) return true;
  return false;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

template <typename T>
const T& choice(std::mt19937_64& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

std::string words_of(const std::string& symbol) {
  std::string s = symbol;
  std::replace(s.begin(), s.end(), '_', ' ');
  return s;
}

std::string capitalized(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  return s;
}

std::string article_for(const std::string& phrase) {
  switch (phrase.empty() ? 'x' : phrase[0]) {
    case 'a': case 'e': case 'i': case 'o': case 'u': return "an";
    default: return "a";
  }
}

struct Sentence {
  std::string text;
  Formula formula;
  bool on_path = false;
};

class ProblemBuilder {
 public:
  ProblemBuilder(const GeneratorConfig& config, const Lexicon& lex,
                 std::mt19937_64& rng)
      : config_(config), lex_(lex), rng_(rng) {}

  // One attempt; throws GenerationError when the vocabulary cannot support
  // the requested shape.
  Problem build(int index) {
    nouns_ = lex_.singular_nouns();
    attrs_ = lex_.attributes();
    std::vector<std::string> people = lex_.proper_nouns();
    if (nouns_.size() < 8 || attrs_.size() < 4 || people.empty())
      throw GenerationError("lexicon too small for generation");

    chain_ = sample_chain();
    for (const auto& c : chain_) used_classes_.insert(c);
    property_ = choice(rng_, attrs_);
    property_positive_ = pick(rng_, 2) == 0;
    query_positive_ = pick(rng_, 2) == 0;
    individual_ = choice(rng_, people);

    std::vector<Sentence> rules;
    for (std::size_t i = 0; i + 1 < chain_.size(); ++i)
      rules.push_back(class_rule(chain_[i], chain_[i + 1], true));
    rules.push_back(property_rule(chain_.back(), property_,
                                  property_positive_, true));
    reachable_ = {chain_.begin(), chain_.end()};
    attr_used_.insert({chain_.back(), property_});

    std::vector<Sentence> facts;
    facts.push_back(membership_fact(individual_, chain_.front()));

    if (config_.distractors == Distractors::Relevant)
      add_distractors(rules, facts);

    std::shuffle(rules.begin(), rules.end(), rng_);
    std::shuffle(facts.begin(), facts.end(), rng_);

    Problem p;
    p.config = config_;
    std::ostringstream id;
    id << "p" << std::setw(4) << std::setfill('0') << index << "_h"
       << config_.hops << "_" << to_string(config_.ontology) << "_"
       << to_string(config_.distractors) << "_s" << config_.seed;
    p.id = id.str();

    for (const auto& s : rules) append(p, s);
    for (const auto& s : facts) append(p, s);

    std::string query_body = query_positive_
        ? capitalized(individual_) + " is " + words_of(property_)
        : capitalized(individual_) + " is not " + words_of(property_);
    p.nl.query_sentence = "True or false: " + query_body + ".";
    Literal qlit{query_positive_,
                 Atom::pred_app(property_, Term::constant(individual_))};
    p.query = Formula::ground(qlit);
    p.gold_answer = property_positive_ == query_positive_;
    return p;
  }

 private:
  void append(Problem& p, const Sentence& s) {
    p.nl.statements.push_back(s.text);
    if (s.on_path) p.proof_path.push_back(static_cast<int>(p.gold_ax.size()));
    p.gold_ax.insert(s.formula);
  }

  std::vector<std::string> sample_chain() {
    const int length = config_.hops;  // hops-1 subclass rules + property rule
    if (config_.ontology == Ontology::True) {
      // walk the real taxonomy
      for (int tries = 0; tries < 200; ++tries) {
        std::string start = kTrueEdges[pick(rng_, std::size(kTrueEdges))].first;
        std::vector<std::string> chain{start};
        while (static_cast<int>(chain.size()) < length) {
          std::vector<std::string> nexts;
          for (const auto& [a, b] : kTrueEdges)
            if (a == chain.back()) nexts.push_back(b);
          if (nexts.empty()) break;
          chain.push_back(choice(rng_, nexts));
        }
        if (static_cast<int>(chain.size()) == length) return chain;
      }
      throw GenerationError("no taxonomy path of the requested length");
    }
    for (int tries = 0; tries < 200; ++tries) {
      std::vector<std::string> chain;
      std::set<std::string> seen;
      while (static_cast<int>(chain.size()) < length) {
        const std::string& n = choice(rng_, nouns_);
        if (seen.insert(n).second) chain.push_back(n);
      }
      bool truthy = false;
      for (std::size_t i = 0; i + 1 < chain.size(); ++i)
        truthy = truthy || is_true_edge(chain[i], chain[i + 1]);
      if (!truthy) return chain;
    }
    throw GenerationError("could not sample a false-ontology chain");
  }

  Sentence class_rule(const std::string& sub, const std::string& super,
                      bool on_path) {
    Literal ante = pos(Atom::pred_app(sub, Term::variable("A")));
    Literal cons = pos(Atom::pred_app(super, Term::variable("A")));
    Formula f = Formula::univ_impl("A", {ante}, cons);
    std::string sg_sub = words_of(sub);
    std::string pl_sub = words_of(*lex_.plural_of_singular(sub));
    std::string sg_sup = words_of(super);
    std::string pl_sup = words_of(*lex_.plural_of_singular(super));
    std::vector<std::string> variants = {
        "Each " + sg_sub + " is " + article_for(sg_sup) + " " + sg_sup + ".",
        "Every " + sg_sub + " is " + article_for(sg_sup) + " " + sg_sup + ".",
        "Any " + sg_sub + " is " + article_for(sg_sup) + " " + sg_sup + ".",
        "All " + pl_sub + " are " + pl_sup + ".",
        capitalized(pl_sub) + " are " + pl_sup + ".",
    };
    return {choice(rng_, variants), f, on_path};
  }

  Sentence property_rule(const std::string& cls, const std::string& attr,
                         bool positive, bool on_path) {
    Literal ante = pos(Atom::pred_app(cls, Term::variable("A")));
    Literal cons{positive, Atom::pred_app(attr, Term::variable("A"))};
    Formula f = Formula::univ_impl("A", {ante}, cons);
    std::string sg = words_of(cls);
    std::string pl = words_of(*lex_.plural_of_singular(cls));
    std::string neg = positive ? "" : "not ";
    std::vector<std::string> variants = {
        "Each " + sg + " is " + neg + attr + ".",
        "Every " + sg + " is " + neg + attr + ".",
        "Any " + sg + " is " + neg + attr + ".",
        "All " + pl + " are " + neg + attr + ".",
        capitalized(pl) + " are " + neg + attr + ".",
    };
    return {choice(rng_, variants), f, on_path};
  }

  Sentence membership_fact(const std::string& who, const std::string& cls) {
    Literal lit = pos(Atom::pred_app(cls, Term::constant(who)));
    std::string sg = words_of(cls);
    return {capitalized(who) + " is " + article_for(sg) + " " + sg + ".",
            Formula::ground(lit), true};
  }

  std::string fresh_class() {
    for (int tries = 0; tries < 200; ++tries) {
      const std::string& n = choice(rng_, nouns_);
      if (!used_classes_.count(n)) {
        used_classes_.insert(n);
        return n;
      }
    }
    throw GenerationError("class vocabulary exhausted");
  }

  std::string attr_for(const std::string& cls) {
    for (int tries = 0; tries < 200; ++tries) {
      const std::string& a = choice(rng_, attrs_);
      if (a == property_) continue;  // the query property stays on the path
      if (attr_used_.insert({cls, a}).second) return a;
    }
    throw GenerationError("attribute vocabulary exhausted");
  }

  // Off-path material that shares predicates with the chain: a second
  // membership fact with its own mini-chain, one outgoing rule per chain
  // class, and a negated query-property rule on an unreachable class.
  void add_distractors(std::vector<Sentence>& rules,
                       std::vector<Sentence>& facts) {
    std::string d0 = fresh_class();
    std::string d1 = fresh_class();
    facts.push_back(membership_fact_offpath(individual_, d0));
    rules.push_back(class_rule(d0, d1, false));
    rules.push_back(property_rule(d1, attr_for(d1), pick(rng_, 2) == 0, false));
    reachable_.insert(d0);
    reachable_.insert(d1);

    for (const auto& c : chain_) {
      std::string e = fresh_class();
      rules.push_back(class_rule(c, e, false));
      rules.push_back(property_rule(e, attr_for(e), pick(rng_, 2) == 0, false));
      reachable_.insert(e);
    }

    // "Negative numbers are not large": reuses the query property on a class
    // the individual can never be proven to belong to.
    std::string u = fresh_class();
    rules.push_back(property_rule(u, property_, !property_positive_, false));
  }

  Sentence membership_fact_offpath(const std::string& who,
                                   const std::string& cls) {
    Sentence s = membership_fact(who, cls);
    s.on_path = false;
    return s;
  }

  const GeneratorConfig& config_;
  const Lexicon& lex_;
  std::mt19937_64& rng_;
  std::vector<std::string> nouns_;
  std::vector<std::string> attrs_;
  std::vector<std::string> chain_;
  std::set<std::string> used_classes_;
  std::set<std::string> reachable_;
  std::set<std::pair<std::string, std::string>> attr_used_;
  std::string property_;
  std::string individual_;
  bool property_positive_ = true;
  bool query_positive_ = true;
};

// Generated problems must survive their own front end and reasoner.
bool validate(const Problem& p, const Lexicon& lex) {
  try {
    if (p.gold_ax.size() != p.nl.statements.size()) return false;
    for (std::size_t i = 0; i < p.nl.statements.size(); ++i) {
      Formula f = nl_to_fof(p.nl.statements[i], lex);
      if (!alpha_equal(f, p.gold_ax[i])) return false;
    }
    Formula q = parse_query_sentence(p.nl.query_sentence, lex);
    if (!alpha_equal(q, p.query)) return false;
    if (!check_consistency(p.gold_ax).consistent) return false;
    if (evaluate_gold(p.gold_ax, p.query) != p.gold_answer) return false;
    if (p.gold_answer) {
      // minimal proof chain: removing any on-path axiom flips the answer
      for (int idx : p.proof_path) {
        FormulaSet reduced = p.gold_ax.without(p.gold_ax[idx]);
        if (evaluate_gold(reduced, p.query)) return false;
      }
    }
  } catch (const CnlParseError&) {
    return false;  // surface variant outside the grammar; resample
  }
  return true;
}

}  // namespace

std::vector<Problem> generate(const GeneratorConfig& config, const Lexicon& lex) {
  if (config.hops < 1 || config.hops > 3)
    throw GenerationError("hops must be between 1 and 3");
  if (config.count < 1) throw GenerationError("count must be positive");
  std::vector<Problem> out;
  for (int i = 0; i < config.count; ++i) {
    std::mt19937_64 rng(config.seed * 0x9E3779B97F4A7C15ULL +
                        static_cast<std::uint64_t>(i + 1) * 0xBF58476D1CE4E5B9ULL);
    bool done = false;
    for (int attempt = 0; attempt < 50 && !done; ++attempt) {
      Problem p = ProblemBuilder(config, lex, rng).build(i);
      if (validate(p, lex)) {
        out.push_back(std::move(p));
        done = true;
      }
    }
    if (!done)
      throw GenerationError("could not generate a valid problem at index " +
                            std::to_string(i));
  }
  return out;
}

// ── persistence ─────────────────────────────────────────────────────────────

namespace {

nlohmann::json config_json(const GeneratorConfig& c) {
  return {{"hops", c.hops},
          {"ontology", to_string(c.ontology)},
          {"distractors", to_string(c.distractors)},
          {"count", c.count},
          {"seed", c.seed}};
}

GeneratorConfig config_from(const nlohmann::json& j) {
  GeneratorConfig c;
  c.hops = j.at("hops").get<int>();
  c.ontology = j.at("ontology").get<std::string>() == "true" ? Ontology::True
                                                             : Ontology::False;
  c.distractors = j.at("distractors").get<std::string>() == "none"
                      ? Distractors::None
                      : Distractors::Relevant;
  c.count = j.at("count").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

}  // namespace

std::string problems_to_json(const std::vector<Problem>& problems) {
  nlohmann::json out;
  out["problems"] = nlohmann::json::array();
  for (const auto& p : problems) {
    nlohmann::json row;
    row["id"] = p.id;
    row["config"] = config_json(p.config);
    row["sentences"] = p.nl.statements;
    row["query_sentence"] = p.nl.query_sentence;
    nlohmann::json fofs = nlohmann::json::array();
    for (const auto& f : p.gold_ax) fofs.push_back(to_fof_text(f));
    row["gold_fof"] = std::move(fofs);
    row["query_fof"] = to_fof_text(p.query);
    row["gold_answer"] = p.gold_answer;
    row["proof_path"] = p.proof_path;
    out["problems"].push_back(std::move(row));
  }
  return out.dump(2);
}

std::vector<Problem> problems_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ProblemIoError(std::string("malformed problem file: ") + e.what());
  }
  std::vector<Problem> out;
  if (!doc.contains("problems") || !doc["problems"].is_array())
    throw ProblemIoError("problem file has no 'problems' array");
  int index = 0;
  for (const auto& row : doc["problems"]) {
    try {
      Problem p;
      p.id = row.at("id").get<std::string>();
      p.config = config_from(row.at("config"));
      p.nl.statements = row.at("sentences").get<std::vector<std::string>>();
      p.nl.query_sentence = row.at("query_sentence").get<std::string>();
      for (const auto& s : row.at("gold_fof"))
        p.gold_ax.insert(parse_fof_text(s.get<std::string>()));
      p.query = parse_fof_text(row.at("query_fof").get<std::string>());
      p.gold_answer = row.at("gold_answer").get<bool>();
      if (row.contains("proof_path"))
        p.proof_path = row.at("proof_path").get<std::vector<int>>();
      out.push_back(std::move(p));
    } catch (const std::exception& e) {
      throw ProblemIoError("problem record " + std::to_string(index) + ": " +
                           e.what());
    }
    ++index;
  }
  return out;
}

void save_problems(const std::vector<Problem>& problems, const std::string& path) {
  if (auto dir = std::filesystem::path(path).parent_path(); !dir.empty())
    std::filesystem::create_directories(dir);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ProblemIoError("cannot write " + path);
  out << problems_to_json(problems) << "\n";
}

std::vector<Problem> load_problems(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ProblemIoError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return problems_from_json(buf.str());
}

}  // namespace sedac
