#ifndef SEDAC_LP_HPP
#define SEDAC_LP_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sedac/formula.hpp"

namespace sedac {

// Front end for LLM-produced logic programs: repair what can be repaired,
// label what cannot, translate the rest to FOL.

enum class SyntaxErrorLabel {
  Communication,
  Symbol,
  NaturalLanguage,
  Knowledge,
  OtherSyntax,
};

const char* to_string(SyntaxErrorLabel label);

struct RepairEntry {
  int line = 0;  // 1-based line number in the raw input
  SyntaxErrorLabel label{};
  bool dropped = false;
  std::string before;
  std::string after;  // empty when dropped
};

using SyntaxRepairLog = std::vector<RepairEntry>;

// Literal token replacements applied during the symbol-repair step.  The
// missing-period and stray-comma repairs are built in; extra rewrites can be
// loaded from a config file ([replacements] section, from,to per line).
struct RepairTable {
  std::vector<std::pair<std::string, std::string>> replacements;
  static RepairTable defaults();
  static RepairTable load_file(const std::string& path);
};

struct FixResult {
  std::string cleaned;  // surviving (possibly repaired) clause lines
  SyntaxRepairLog log;
};

// Total on arbitrary input; worst case everything is dropped.
FixResult fix_syntax(std::string_view raw,
                     const RepairTable& table = RepairTable::defaults());

// ── statements ──────────────────────────────────────────────────────────────

struct LPStatement {
  enum class Kind { Fact, Rule, Query };
  Kind kind = Kind::Fact;
  Literal head;                // Query: the queried literal
  std::vector<Literal> body;   // empty unless Rule
  std::string raw_text;
  int line = 0;

  bool is_query() const { return kind == Kind::Query; }
};

struct ParseLpResult {
  std::vector<LPStatement> statements;
  SyntaxRepairLog residual;  // lines fix_syntax let through but parsing rejects
};

// Total; unparseable lines are logged OtherSyntax and skipped.
ParseLpResult parse_lp(std::string_view cleaned);

// File-load semantics: any bad line fails the whole program.
std::optional<std::vector<LPStatement>> parse_lp_strict(std::string_view raw);

struct TranslationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Fact -> ground literal or quantified fact; Rule -> quantified implication.
// Throws TranslationError on statements outside the one-variable unary
// fragment (ground rules, mixed-constant bodies); pre: not a query.
Formula lp_to_fof(const LPStatement& st);

// Inverse direction, used to answer fixed axiom sets under closed-world
// semantics.  Positive equality antecedents are instantiated away (the rule
// is grounded at the named constant); negative equalities cannot be
// expressed and throw TranslationError.
LPStatement statement_from_formula(const Formula& f);

std::string to_lp_text(const LPStatement& st);

}  // namespace sedac

#endif  // SEDAC_LP_HPP
