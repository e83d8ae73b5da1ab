#ifndef SEDAC_REASON_HPP
#define SEDAC_REASON_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "sedac/entail.hpp"
#include "sedac/formula.hpp"
#include "sedac/lp.hpp"

namespace sedac {

enum class Semantics { OpenWorld, ClosedWorld };

const char* to_string(Semantics s);

struct Verdict {
  bool answer = false;
  Semantics semantics = Semantics::OpenWorld;
  std::string provenance;  // entailment result or fixpoint membership
};

struct StratificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct QueryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// True iff axioms |= query (two-valued: not entailed means False).
Verdict answer_open_world(const FormulaSet& axioms, const Formula& query);

// Least fixpoint of the positive-head rules, negation as failure per
// stratum; negative-head rules derive nothing.  Query must be ground.
Verdict answer_closed_world(const std::vector<LPStatement>& program,
                            const Formula& query);

// Gold answer of a problem: open-world entailment over the gold axioms.
bool evaluate_gold(const FormulaSet& gold_ax, const Formula& query);

}  // namespace sedac

#endif  // SEDAC_REASON_HPP
