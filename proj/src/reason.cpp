#include "sedac/reason.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sedac {

const char* to_string(Semantics s) {
  return s == Semantics::OpenWorld ? "open" : "closed";
}

Verdict answer_open_world(const FormulaSet& axioms, const Formula& query) {
  if (!query.is_ground()) throw QueryError("query must be a ground literal");
  EntailResult r = entails(axioms, query);
  return {r.entailed, Semantics::OpenWorld,
          r.entailed ? "entailed" : "not entailed"};
}

bool evaluate_gold(const FormulaSet& gold_ax, const Formula& query) {
  return answer_open_world(gold_ax, query).answer;
}

// ── closed world ────────────────────────────────────────────────────────────

namespace {

// Stratum numbers: pred depends positively on its body preds, and strictly
// above preds it depends on through negation.  Negative-head rules are inert
// under the closed-world reading and impose no constraints.
std::map<std::string, int> stratify(const std::vector<LPStatement>& program) {
  std::set<std::string> preds;
  for (const auto& st : program) {
    if (st.is_query() || !st.head.positive) continue;
    preds.insert(st.head.atom.pred);
    for (const auto& l : st.body) preds.insert(l.atom.pred);
  }
  std::map<std::string, int> stratum;
  for (const auto& p : preds) stratum[p] = 0;

  const int max_rounds = static_cast<int>(preds.size()) + 1;
  for (int round = 0; round <= max_rounds; ++round) {
    bool changed = false;
    for (const auto& st : program) {
      if (st.is_query() || !st.head.positive) continue;
      int& head = stratum[st.head.atom.pred];
      for (const auto& l : st.body) {
        int need = stratum[l.atom.pred] + (l.positive ? 0 : 1);
        if (head < need) {
          head = need;
          changed = true;
        }
      }
    }
    if (!changed) return stratum;
  }
  throw StratificationError("program is not stratified (negation cycle)");
}

}  // namespace

Verdict answer_closed_world(const std::vector<LPStatement>& program,
                            const Formula& query) {
  if (!query.is_ground() || !query.literal().atom.is_pred())
    throw QueryError("closed-world query must be a ground predicate literal");
  const std::string& qpred = query.literal().atom.pred;
  const std::string& qconst = query.literal().atom.a.name;

  auto strata = stratify(program);

  // Herbrand domain: constants of the program plus the queried constant.
  std::vector<std::string> domain;
  auto note = [&](const Term& t) {
    if (t.is_constant() &&
        std::find(domain.begin(), domain.end(), t.name) == domain.end())
      domain.push_back(t.name);
  };
  for (const auto& st : program) {
    if (st.is_query()) continue;
    note(st.head.atom.a);
    for (const auto& l : st.body) note(l.atom.a);
  }
  note(query.literal().atom.a);

  int max_stratum = 0;
  for (const auto& [_, s] : strata) max_stratum = std::max(max_stratum, s);

  std::set<std::pair<std::string, std::string>> facts;
  auto derivable = [&](const Literal& l, const std::string& constant) {
    bool in = facts.count({l.atom.pred, constant}) > 0;
    return l.positive ? in : !in;
  };

  for (int level = 0; level <= max_stratum; ++level) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& st : program) {
        if (st.is_query() || !st.head.positive) continue;
        if (strata[st.head.atom.pred] != level) continue;
        // ground facts and variable-free rules fire on their own constants;
        // rules with a variable are grounded over the whole domain
        bool has_var = st.head.atom.a.is_variable() ||
                       std::any_of(st.body.begin(), st.body.end(),
                                   [](const Literal& l) {
                                     return l.atom.a.is_variable();
                                   });
        auto fire = [&](const std::string& value) {
          for (const auto& l : st.body) {
            const std::string& c = l.atom.a.is_variable() ? value : l.atom.a.name;
            if (!derivable(l, c)) return;
          }
          const std::string& h =
              st.head.atom.a.is_variable() ? value : st.head.atom.a.name;
          if (facts.insert({st.head.atom.pred, h}).second) changed = true;
        };
        if (has_var) {
          for (const auto& d : domain) fire(d);
        } else {
          fire("");
        }
      }
    }
  }

  bool atom_in = facts.count({qpred, qconst}) > 0;
  bool answer = query.literal().positive ? atom_in : !atom_in;
  std::string why = qpred + "(" + qconst + ") " +
                    (atom_in ? "in fixpoint" : "not in fixpoint");
  return {answer, Semantics::ClosedWorld, why};
}

}  // namespace sedac
