// Test-only brute-force semantics for the monadic fragment, independent of
// the clause-based engine: enumerate every truth assignment over the ground
// atoms and evaluate formulas directly (quantifiers loop over the domain).
//
// Domain: the named constants plus one extra element.  The fragment is
// function-free with universal axioms and at most one existential (from a
// negated quantified goal), so any countermodel can be cut down to the
// substructure on the named constants plus a single witness; enumerating
// over that domain is therefore complete.

#ifndef SEDAC_TESTS_ORACLE_HPP
#define SEDAC_TESTS_ORACLE_HPP

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "sedac/formula.hpp"

namespace sedac::oracle {

struct Universe {
  std::vector<std::string> domain;  // last element is the anonymous extra
  std::vector<std::string> preds;
  std::map<std::pair<std::string, std::string>, int> atom_index;

  std::size_t atoms() const { return atom_index.size(); }
};

inline Universe universe_of(const FormulaSet& axioms, const Formula* goal,
                            int extras = 1) {
  Universe u;
  auto note_formula = [&](const Formula& f) {
    for (const auto& c : f.constants())
      if (std::find(u.domain.begin(), u.domain.end(), c) == u.domain.end())
        u.domain.push_back(c);
    for (const auto& p : f.predicates())
      if (std::find(u.preds.begin(), u.preds.end(), p) == u.preds.end())
        u.preds.push_back(p);
  };
  for (const auto& f : axioms) note_formula(f);
  if (goal) note_formula(*goal);
  for (int i = 0; i < extras; ++i)
    u.domain.push_back("#extra" + std::to_string(i));
  int next = 0;
  for (const auto& p : u.preds)
    for (const auto& d : u.domain) u.atom_index[{p, d}] = next++;
  return u;
}

inline bool eval_literal(const Literal& lit, const std::string& value,
                         const std::string& var, const Universe& u,
                         unsigned long long bits) {
  auto resolve = [&](const Term& t) -> const std::string& {
    return t.is_variable() && t.name == var ? value : t.name;
  };
  bool atom;
  if (lit.atom.is_equal()) {
    atom = resolve(lit.atom.a) == resolve(lit.atom.b);
  } else {
    auto it = u.atom_index.find({lit.atom.pred, resolve(lit.atom.a)});
    atom = it != u.atom_index.end() && (bits >> it->second & 1) != 0;
  }
  return lit.positive == atom;
}

inline bool eval_formula(const Formula& f, const Universe& u,
                         unsigned long long bits) {
  switch (f.kind()) {
    case Formula::Kind::Ground:
      return eval_literal(f.literal(), "", "", u, bits);
    case Formula::Kind::UnivFact:
      for (const auto& d : u.domain)
        if (!eval_literal(f.literal(), d, f.var(), u, bits)) return false;
      return true;
    case Formula::Kind::UnivImpl:
      for (const auto& d : u.domain) {
        bool ante = true;
        for (const auto& l : f.antecedent())
          ante = ante && eval_literal(l, d, f.var(), u, bits);
        if (ante && !eval_literal(f.consequent(), d, f.var(), u, bits))
          return false;
      }
      return true;
  }
  return false;
}

// axioms |= goal iff no assignment satisfies the axioms and falsifies the goal
inline bool entails(const FormulaSet& axioms, const Formula& goal,
                    int extras = 1) {
  Universe u = universe_of(axioms, &goal, extras);
  unsigned long long total = 1ULL << u.atoms();
  for (unsigned long long bits = 0; bits < total; ++bits) {
    bool all = true;
    for (const auto& f : axioms) all = all && eval_formula(f, u, bits);
    if (all && !eval_formula(goal, u, bits)) return false;
  }
  return true;
}

inline bool consistent(const FormulaSet& axioms, int extras = 1) {
  Universe u = universe_of(axioms, nullptr, extras);
  unsigned long long total = 1ULL << u.atoms();
  for (unsigned long long bits = 0; bits < total; ++bits) {
    bool all = true;
    for (const auto& f : axioms) all = all && eval_formula(f, u, bits);
    if (all) return true;
  }
  return false;
}

}  // namespace sedac::oracle

#endif  // SEDAC_TESTS_ORACLE_HPP
