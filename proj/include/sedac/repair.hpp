#ifndef SEDAC_REPAIR_HPP
#define SEDAC_REPAIR_HPP

#include <optional>
#include <string>
#include <vector>

#include "sedac/cnl.hpp"
#include "sedac/formula.hpp"
#include "sedac/lexicon.hpp"
#include "sedac/lp.hpp"

namespace sedac {

// Semantic error detection and correction: per-statement soundness checks
// against the natural-language axioms, with proposal-based repair.
//
// Rewrite rules (replace, run to fixpoint):
//   - proper-noun antecedent predicate      p(X)  ->  (X = p)
//   - single positive equality antecedent   ! [X] : ((X = c) => l(X))  ->  l(c)
//   - ground literal over a noun/adjective constant promoted to a rule,
//     e.g. ~ swims(cats)  ->  ! [I] : (cat(I) => ~ swims(I))
//   - adjective predicates normalized to their noun, anywhere
//   - plural-noun predicates in antecedent/consequent made singular
// Derivation rules (add, applied once to the rewrite-normal form):
//   - flip the consequent sign
//   - reverse the implication (single-literal antecedents)

enum class ProposalOrigin { Rewrite, Derivation };

struct Proposal {
  Formula formula;
  ProposalOrigin origin;
};

using ProposalSet = std::vector<Proposal>;

// Exhaustive rewrite application; returns the input when no rule fires.
Formula rewrite_normal_form(const Formula& f, const Lexicon& lex);

// The saturated set minus f itself; rewrite proposals precede derivations.
ProposalSet propose(const Formula& f, const Lexicon& lex);

// Sign-preserving predicate normalization for query literals (adjective ->
// noun, plural noun -> singular); promotions do not apply to queries.
Formula normalize_query(const Formula& query, const Lexicon& lex);

// ── status reports ──────────────────────────────────────────────────────────

enum class StatementStatus {
  Ok,
  FixableSemantic,
  NonFixableSemantic,
  Query,          // excluded from soundness checking
  SyntaxRejected  // parsed line the translator could not map into the fragment
};

enum class ErrorDepth { None, Shallow, Deep };

const char* to_string(StatementStatus s);
const char* to_string(ErrorDepth d);

struct StatusEntry {
  LPStatement statement;
  std::optional<Formula> fof;
  StatementStatus status = StatementStatus::Ok;
  std::optional<Formula> fix;
  int score = 0;
  ErrorDepth depth = ErrorDepth::None;
};

struct StatusReport {
  std::vector<StatusEntry> entries;
};

// Status for a single translated statement against nl_ax; lp_ax is the full
// translated program (used by the fix score).
StatusEntry evaluate_statement(const LPStatement& st, const Formula& f,
                               const FormulaSet& nl_ax, const FormulaSet& lp_ax,
                               const Lexicon& lex);

StatusReport full_sedac(const ParsedProblem& nl,
                        const std::vector<LPStatement>& lp, const Lexicon& lex);

// Shallow-only correction: no nl required, rewrite rules to fixpoint.
FormulaSet partial_sedac(const std::vector<LPStatement>& lp, const Lexicon& lex);

// OK kept, fixable replaced by the chosen fix, non-fixable removed.
FormulaSet apply_report(const FormulaSet& lp_ax, const StatusReport& report);

// One record per statement: raw text, FOF, status, fix, score, depth.
std::string report_to_json(const StatusReport& report);

}  // namespace sedac

#endif  // SEDAC_REPAIR_HPP
