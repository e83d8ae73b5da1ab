#ifndef SEDAC_ENTAIL_HPP
#define SEDAC_ENTAIL_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sedac/formula.hpp"

namespace sedac {

// Decides axioms |= goal for the monadic function-free fragment.  The
// negated goal contributes at most one existential, so grounding over the
// named constants plus one fresh witness is complete; the ground problem is
// propositional and solved by a small DPLL.  Equality between distinct
// constants is false (constants name distinct individuals).

struct FragmentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroundModel {
  std::vector<std::string> domain;                       // nonempty
  std::map<std::pair<std::string, std::string>, bool> truth;  // (pred, const)

  bool holds(const std::string& pred, const std::string& constant) const;
  std::string to_string() const;
};

struct EntailResult {
  bool entailed = false;
  std::optional<GroundModel> witness;  // countermodel when not entailed
};

EntailResult entails(const FormulaSet& axioms, const Formula& goal);

struct ConsistencyResult {
  bool consistent = false;
  std::optional<GroundModel> model;
};

ConsistencyResult check_consistency(const FormulaSet& axioms);

// Diagnostic export for cross-checking with external provers.
std::string to_tptp_problem(const FormulaSet& axioms, const Formula& goal);

}  // namespace sedac

#endif  // SEDAC_ENTAIL_HPP
