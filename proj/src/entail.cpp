#include "sedac/entail.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sedac {

bool GroundModel::holds(const std::string& pred,
                        const std::string& constant) const {
  auto it = truth.find({pred, constant});
  return it != truth.end() && it->second;
}

std::string GroundModel::to_string() const {
  std::ostringstream out;
  out << "domain {";
  for (std::size_t i = 0; i < domain.size(); ++i)
    out << (i ? ", " : " ") << domain[i];
  out << " } true atoms {";
  bool first = true;
  for (const auto& [key, val] : truth) {
    if (!val) continue;
    out << (first ? " " : ", ") << key.first << "(" << key.second << ")";
    first = false;
  }
  out << " }";
  return out.str();
}

namespace {

// Propositional literal: +/-(atom_id + 1).
using Clause = std::vector<int>;

class Grounder {
 public:
  explicit Grounder(const FormulaSet& axioms) {
    for (const auto& f : axioms) note_constants(f);
  }

  void note_constants(const Formula& f) {
    for (const auto& c : f.constants())
      if (std::find(domain_.begin(), domain_.end(), c) == domain_.end())
        domain_.push_back(c);
  }

  // One fresh constant: the witness for the existential from a negated
  // quantified goal, and the "anonymous element" that makes grounding
  // complete for the fragment.
  void add_fresh() {
    for (int i = 0;; ++i) {
      std::string name = "d" + std::to_string(i);
      if (std::find(domain_.begin(), domain_.end(), name) == domain_.end()) {
        fresh_ = name;
        domain_.push_back(name);
        return;
      }
    }
  }

  const std::string& fresh() const { return fresh_; }
  const std::vector<std::string>& domain() const { return domain_; }

  int atom_id(const std::string& pred, const std::string& constant) {
    auto key = std::make_pair(pred, constant);
    auto it = ids_.find(key);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(names_.size());
    ids_.emplace(key, id);
    names_.push_back(key);
    return id;
  }

  // Evaluates a ground literal into either a fixed truth value (equalities)
  // or a propositional literal.
  struct GroundLit {
    bool fixed = false;
    bool value = false;
    int plit = 0;
  };

  GroundLit ground_literal(const Literal& lit, const std::string& var,
                           const std::string& value) {
    auto subst = [&](const Term& t) -> std::string {
      if (t.is_variable()) {
        if (t.name != var) throw FragmentError("unbound variable " + t.name);
        return value;
      }
      return t.name;
    };
    if (lit.atom.is_equal()) {
      bool eq = subst(lit.atom.a) == subst(lit.atom.b);
      return {true, lit.positive == eq, 0};
    }
    int id = atom_id(lit.atom.pred, subst(lit.atom.a));
    return {false, false, lit.positive ? id + 1 : -(id + 1)};
  }

  // Appends the clauses for one axiom.  Returns false if an always-false
  // clause (empty after simplification) was produced, i.e. the clause set is
  // unsatisfiable outright.
  bool add_axiom(const Formula& f, std::vector<Clause>& clauses) {
    switch (f.kind()) {
      case Formula::Kind::Ground:
        return add_clause_from({f.literal()}, "", "", clauses);
      case Formula::Kind::UnivFact:
        for (const auto& d : domain_)
          if (!add_clause_from({f.literal()}, f.var(), d, clauses))
            return false;
        return true;
      case Formula::Kind::UnivImpl:
        for (const auto& d : domain_) {
          std::vector<Literal> disjuncts;
          for (const auto& a : f.antecedent()) disjuncts.push_back(a.negated());
          disjuncts.push_back(f.consequent());
          if (!add_clause_from(disjuncts, f.var(), d, clauses)) return false;
        }
        return true;
    }
    return true;
  }

  // Clauses for the negated goal with the existential witnessed at `value`.
  // With constants naming distinct individuals, an equality in the goal can
  // pin the witness to a named constant, so the caller tries every domain
  // element (the fresh one covers the anonymous-element case).
  bool add_negated_goal_at(const Formula& f, const std::string& value,
                           std::vector<Clause>& clauses) {
    switch (f.kind()) {
      case Formula::Kind::Ground:
        return add_clause_from({f.literal().negated()}, "", "", clauses);
      case Formula::Kind::UnivFact:
        return add_clause_from({f.literal().negated()}, f.var(), value,
                               clauses);
      case Formula::Kind::UnivImpl:
        for (const auto& a : f.antecedent())
          if (!add_clause_from({a}, f.var(), value, clauses)) return false;
        return add_clause_from({f.consequent().negated()}, f.var(), value,
                               clauses);
    }
    return true;
  }

  bool add_clause_from(const std::vector<Literal>& disjuncts,
                       const std::string& var, const std::string& value,
                       std::vector<Clause>& clauses) {
    Clause clause;
    for (const auto& l : disjuncts) {
      GroundLit g = ground_literal(l, var, value);
      if (g.fixed) {
        if (g.value) return true;  // clause is a tautology
        continue;                  // disjunct is false, drop it
      }
      clause.push_back(g.plit);
    }
    if (clause.empty()) return false;
    clauses.push_back(std::move(clause));
    return true;
  }

  GroundModel model_from(const std::vector<int>& assignment) const {
    GroundModel m;
    m.domain = domain_;
    for (std::size_t i = 0; i < names_.size(); ++i)
      m.truth[names_[i]] = assignment[i] > 0;
    return m;
  }

  std::size_t atom_count() const { return names_.size(); }

 private:
  std::vector<std::string> domain_;
  std::string fresh_;
  std::map<std::pair<std::string, std::string>, int> ids_;
  std::vector<std::pair<std::string, std::string>> names_;
};

// Plain DPLL with unit propagation; problem sizes here are a few hundred
// atoms at most.
class Dpll {
 public:
  Dpll(std::vector<Clause> clauses, std::size_t atoms)
      : clauses_(std::move(clauses)), assign_(atoms, 0) {}

  bool solve() { return search(); }
  const std::vector<int>& assignment() const { return assign_; }

 private:
  bool value(int lit) const {
    int v = assign_[std::abs(lit) - 1];
    if (v == 0) return false;
    return (v > 0) == (lit > 0);
  }
  bool assigned(int lit) const { return assign_[std::abs(lit) - 1] != 0; }

  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const Clause& c : clauses_) {
        int unassigned = 0;
        int free_lit = 0;
        bool satisfied = false;
        for (int lit : c) {
          if (!assigned(lit)) {
            ++unassigned;
            free_lit = lit;
          } else if (value(lit)) {
            satisfied = true;
            break;
          }
        }
        if (satisfied) continue;
        if (unassigned == 0) return false;  // conflict
        if (unassigned == 1) {
          assign_[std::abs(free_lit) - 1] = free_lit > 0 ? 1 : -1;
          trail.push_back(free_lit);
          changed = true;
        }
      }
    }
    return true;
  }

  bool search() {
    std::vector<int> trail;
    if (!propagate(trail)) {
      undo(trail);
      return false;
    }
    int branch = 0;
    for (std::size_t i = 0; i < assign_.size(); ++i) {
      if (assign_[i] == 0) {
        branch = static_cast<int>(i) + 1;
        break;
      }
    }
    if (branch == 0) return true;  // all assigned, no conflict
    for (int sign : {+1, -1}) {
      assign_[branch - 1] = sign;
      if (search()) return true;
      assign_[branch - 1] = 0;
    }
    undo(trail);
    return false;
  }

  void undo(std::vector<int>& trail) {
    for (int lit : trail) assign_[std::abs(lit) - 1] = 0;
    trail.clear();
  }

  std::vector<Clause> clauses_;
  std::vector<int> assign_;
};

}  // namespace

EntailResult entails(const FormulaSet& axioms, const Formula& goal) {
  Grounder g(axioms);
  g.note_constants(goal);
  g.add_fresh();

  std::vector<Clause> base;
  for (const auto& f : axioms)
    if (!g.add_axiom(f, base)) return {true, std::nullopt};

  // Ground goals need no witness; quantified goals are refuted by finding a
  // satisfiable witness instantiation of the negation.
  std::vector<std::string> witnesses =
      goal.is_ground() ? std::vector<std::string>{g.fresh()} : g.domain();
  for (const auto& w : witnesses) {
    std::vector<Clause> clauses = base;
    if (!g.add_negated_goal_at(goal, w, clauses)) continue;
    Dpll solver(std::move(clauses), g.atom_count());
    if (solver.solve()) return {false, g.model_from(solver.assignment())};
  }
  return {true, std::nullopt};
}

ConsistencyResult check_consistency(const FormulaSet& axioms) {
  Grounder g(axioms);
  g.add_fresh();
  std::vector<Clause> clauses;
  for (const auto& f : axioms)
    if (!g.add_axiom(f, clauses)) return {false, std::nullopt};
  Dpll solver(std::move(clauses), g.atom_count());
  if (!solver.solve()) return {false, std::nullopt};
  return {true, g.model_from(solver.assignment())};
}

std::string to_tptp_problem(const FormulaSet& axioms, const Formula& goal) {
  std::ostringstream out;
  int i = 0;
  for (const auto& f : axioms)
    out << "fof(ax_" << i++ << ", axiom, " << to_fof_text(f) << ").\n";
  out << "fof(goal, conjecture, " << to_fof_text(goal) << ").\n";
  return out.str();
}

}  // namespace sedac
