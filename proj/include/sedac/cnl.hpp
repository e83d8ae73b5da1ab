#ifndef SEDAC_CNL_HPP
#define SEDAC_CNL_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sedac/formula.hpp"
#include "sedac/lexicon.hpp"

namespace sedac {

// Controlled-English front end.  The grammar is a hand-written recursive
// descent over word tokens and deliberately brittle: anything outside the
// productions in docs/grammar.md fails with the first offending token.

struct NLScript {
  std::vector<std::string> statements;  // each ends with '.'
  std::string query_sentence;           // begins "True or false:"
};

struct ParsedProblem {
  FormulaSet nl_ax;
  Formula query;  // ground literal
  std::vector<std::pair<std::string, Formula>> source_map;
};

struct CnlParseError : std::runtime_error {
  CnlParseError(const std::string& what, std::string token, std::size_t index)
      : std::runtime_error(what), token(std::move(token)), token_index(index) {}
  std::string token;        // first unrecognized token
  std::size_t token_index;  // position in the sentence
};

// Aggregated per-sentence failures from parse_script.
struct ScriptParseError : std::runtime_error {
  explicit ScriptParseError(std::string what,
                            std::vector<std::pair<int, std::string>> failures)
      : std::runtime_error(std::move(what)), failures(std::move(failures)) {}
  std::vector<std::pair<int, std::string>> failures;  // sentence index, message
};

// Splits plain text into statements plus the single query line.  Throws if
// the query is missing or duplicated.
NLScript parse_nl_script(std::string_view text);

// One sentence -> canonical formula.  Grammar variables are named A.
Formula nl_to_fof(std::string_view sentence, const Lexicon& lex);

// Query sentence ("True or false: ...") -> ground literal.
Formula parse_query_sentence(std::string_view sentence, const Lexicon& lex);

ParsedProblem parse_script(const NLScript& script, const Lexicon& lex);

}  // namespace sedac

#endif  // SEDAC_CNL_HPP
