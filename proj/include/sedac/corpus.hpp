#ifndef SEDAC_CORPUS_HPP
#define SEDAC_CORPUS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "sedac/cnl.hpp"
#include "sedac/formula.hpp"
#include "sedac/lexicon.hpp"

namespace sedac {

// Steamroller problem generator: a subclass chain, a property on the top
// class, a membership fact for one individual, and a query about the
// property.  Every emitted sentence parses under the grammar, and the gold
// answer is recomputed through the reasoner before a problem is accepted.

enum class Ontology { True, False };
enum class Distractors { None, Relevant };

struct GeneratorConfig {
  int hops = 2;  // rule applications from the membership fact to the query
  Ontology ontology = Ontology::False;
  Distractors distractors = Distractors::Relevant;
  int count = 100;
  std::uint64_t seed = 0;
};

struct Problem {
  std::string id;
  NLScript nl;
  FormulaSet gold_ax;
  Formula query;
  bool gold_answer = false;
  GeneratorConfig config;
  // Indices into gold_ax of the formulas on the proof path (chain rules,
  // property rule, membership fact); used by corruption suites.
  std::vector<int> proof_path;
};

struct GenerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Problem> generate(const GeneratorConfig& config, const Lexicon& lex);

struct ProblemIoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void save_problems(const std::vector<Problem>& problems, const std::string& path);
std::vector<Problem> load_problems(const std::string& path);

std::string problems_to_json(const std::vector<Problem>& problems);
std::vector<Problem> problems_from_json(const std::string& text);

const char* to_string(Ontology o);
const char* to_string(Distractors d);

}  // namespace sedac

#endif  // SEDAC_CORPUS_HPP
