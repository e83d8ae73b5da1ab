#include "sedac/repair.hpp"

#include <algorithm>

#include "json.hpp"
#include "sedac/entail.hpp"

namespace sedac {

namespace {

const std::string kPromotedVar = "I";

// Noun predicate for a constant that should not have been one, if any.
std::optional<std::string> promotable_noun(const std::string& constant,
                                           const Lexicon& lex) {
  Classification c = lex.classify(constant);
  switch (c.cls) {
    case WordClass::PluralNoun: return c.base;
    case WordClass::SingularNoun: return constant;
    case WordClass::AdjectiveForm: return c.base;
    default: return std::nullopt;
  }
}

std::optional<std::string> normalized_pred(const std::string& pred,
                                           const Lexicon& lex,
                                           bool plural_rule) {
  Classification c = lex.classify(pred);
  if (c.cls == WordClass::AdjectiveForm) return c.base;
  if (plural_rule && c.cls == WordClass::PluralNoun && c.base != pred)
    return c.base;
  return std::nullopt;
}

Literal with_pred(Literal l, std::string pred) {
  l.atom.pred = std::move(pred);
  return l;
}

// One rewrite step, first matching rule wins; nullopt at fixpoint.
std::optional<Formula> rewrite_step(const Formula& f, const Lexicon& lex) {
  switch (f.kind()) {
    case Formula::Kind::Ground: {
      const Literal& lit = f.literal();
      if (!lit.atom.is_pred()) return std::nullopt;
      // constant in predicate position: promote to a rule over the noun
      if (auto noun = promotable_noun(lit.atom.a.name, lex)) {
        Term v = Term::variable(kPromotedVar);
        Literal ante = pos(Atom::pred_app(*noun, v));
        Literal cons{lit.positive, Atom::pred_app(lit.atom.pred, v)};
        return Formula::univ_impl(kPromotedVar, {ante}, cons);
      }
      // adjective predicate over an individual: normalize to the noun
      if (auto n = normalized_pred(lit.atom.pred, lex, false))
        return Formula::ground(with_pred(lit, *n));
      return std::nullopt;
    }
    case Formula::Kind::UnivFact: {
      const Literal& lit = f.literal();
      if (!lit.atom.is_pred()) return std::nullopt;
      if (auto n = normalized_pred(lit.atom.pred, lex, false))
        return Formula::univ_fact(f.var(), with_pred(lit, *n));
      return std::nullopt;
    }
    case Formula::Kind::UnivImpl: {
      // proper noun used as an antecedent predicate -> equality
      for (std::size_t i = 0; i < f.antecedent().size(); ++i) {
        const Literal& l = f.antecedent()[i];
        if (l.atom.is_pred() && lex.is_proper(l.atom.pred)) {
          std::vector<Literal> ante = f.antecedent();
          ante[i] = Literal{l.positive,
                            Atom::equal(l.atom.a, Term::constant(l.atom.pred))};
          return Formula::univ_impl(f.var(), std::move(ante), f.consequent());
        }
      }
      // single positive equality antecedent -> instantiated conclusion
      if (f.antecedent().size() == 1 && f.antecedent()[0].atom.is_equal() &&
          f.antecedent()[0].positive) {
        const Atom& eq = f.antecedent()[0].atom;
        const Term& c = eq.a.is_constant() ? eq.a : eq.b;
        if (c.is_constant()) {
          Literal cons = f.consequent();
          if (cons.atom.is_pred()) {
            cons.atom.a = c;
            return Formula::ground(cons);
          }
        }
      }
      // plural/adjective predicates in antecedent and consequent
      for (std::size_t i = 0; i < f.antecedent().size(); ++i) {
        const Literal& l = f.antecedent()[i];
        if (!l.atom.is_pred()) continue;
        if (auto n = normalized_pred(l.atom.pred, lex, true)) {
          std::vector<Literal> ante = f.antecedent();
          ante[i] = with_pred(l, *n);
          return Formula::univ_impl(f.var(), std::move(ante), f.consequent());
        }
      }
      const Literal& cons = f.consequent();
      if (cons.atom.is_pred()) {
        if (auto n = normalized_pred(cons.atom.pred, lex, true))
          return Formula::univ_impl(f.var(), f.antecedent(),
                                    with_pred(cons, *n));
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace

Formula rewrite_normal_form(const Formula& f, const Lexicon& lex) {
  Formula current = f;
  while (auto next = rewrite_step(current, lex)) current = std::move(*next);
  return current;
}

ProposalSet propose(const Formula& f, const Lexicon& lex) {
  ProposalSet out;
  auto push = [&](Formula g, ProposalOrigin origin) {
    if (alpha_equal(g, f)) return;
    for (const auto& p : out)
      if (alpha_equal(p.formula, g)) return;
    out.push_back({std::move(g), origin});
  };

  Formula norm = rewrite_normal_form(f, lex);
  if (!alpha_equal(norm, f)) push(norm, ProposalOrigin::Rewrite);

  if (norm.is_univ_impl()) {
    push(Formula::univ_impl(norm.var(), norm.antecedent(),
                            norm.consequent().negated()),
         ProposalOrigin::Derivation);
    if (norm.antecedent().size() == 1)
      push(Formula::univ_impl(norm.var(), {norm.consequent()},
                              norm.antecedent()[0]),
           ProposalOrigin::Derivation);
  }
  return out;
}

Formula normalize_query(const Formula& query, const Lexicon& lex) {
  if (!query.is_ground() || !query.literal().atom.is_pred()) return query;
  const Literal& lit = query.literal();
  Classification c = lex.classify(lit.atom.pred);
  if (c.cls == WordClass::AdjectiveForm ||
      (c.cls == WordClass::PluralNoun && c.base != lit.atom.pred))
    return Formula::ground(with_pred(lit, c.base));
  return query;
}

// ── status computation ──────────────────────────────────────────────────────

const char* to_string(StatementStatus s) {
  switch (s) {
    case StatementStatus::Ok: return "OK";
    case StatementStatus::FixableSemantic: return "FixableSemanticError";
    case StatementStatus::NonFixableSemantic: return "NonFixableSemanticError";
    case StatementStatus::Query: return "Query";
    case StatementStatus::SyntaxRejected: return "OtherSyntaxError";
  }
  return "?";
}

const char* to_string(ErrorDepth d) {
  switch (d) {
    case ErrorDepth::None: return "none";
    case ErrorDepth::Shallow: return "shallow";
    case ErrorDepth::Deep: return "deep";
  }
  return "?";
}

StatusEntry evaluate_statement(const LPStatement& st, const Formula& f,
                               const FormulaSet& nl_ax, const FormulaSet& lp_ax,
                               const Lexicon& lex) {
  StatusEntry entry;
  entry.statement = st;
  entry.fof = f;
  if (entails(nl_ax, f).entailed) {
    entry.status = StatementStatus::Ok;
    return entry;
  }
  ProposalSet sound;
  for (const auto& p : propose(f, lex))
    if (entails(nl_ax, p.formula).entailed) sound.push_back(p);
  if (sound.empty()) {
    entry.status = StatementStatus::NonFixableSemantic;
    entry.depth = ErrorDepth::Deep;
    return entry;
  }
  // Best fix maximizes how much of nl_ax the tentatively-fixed program
  // entails; ties fall to the earlier proposal (rewrites come first).
  FormulaSet base = lp_ax.without(f);
  int best_score = -1;
  std::size_t best = 0;
  for (std::size_t i = 0; i < sound.size(); ++i) {
    FormulaSet candidate = base;
    candidate.insert(sound[i].formula);
    int score = 0;
    for (const auto& g : nl_ax)
      if (entails(candidate, g).entailed) ++score;
    if (score > best_score) {
      best_score = score;
      best = i;
    }
  }
  entry.status = StatementStatus::FixableSemantic;
  entry.fix = sound[best].formula;
  entry.score = best_score;
  entry.depth = sound[best].origin == ProposalOrigin::Rewrite
                    ? ErrorDepth::Shallow
                    : ErrorDepth::Deep;
  return entry;
}

StatusReport full_sedac(const ParsedProblem& nl,
                        const std::vector<LPStatement>& lp, const Lexicon& lex) {
  StatusReport report;
  // First pass: translate everything, building the lp_ax snapshot used by
  // the scoring step.
  FormulaSet lp_ax;
  std::vector<std::optional<Formula>> fofs(lp.size());
  for (std::size_t i = 0; i < lp.size(); ++i) {
    if (lp[i].is_query()) continue;
    try {
      fofs[i] = lp_to_fof(lp[i]);
      lp_ax.insert(*fofs[i]);
    } catch (const TranslationError&) {
      // stays unset; reported below
    }
  }
  for (std::size_t i = 0; i < lp.size(); ++i) {
    if (lp[i].is_query()) {
      StatusEntry entry;
      entry.statement = lp[i];
      entry.status = StatementStatus::Query;
      entry.fof = normalize_query(Formula::ground(lp[i].head), lex);
      report.entries.push_back(std::move(entry));
      continue;
    }
    if (!fofs[i]) {
      StatusEntry entry;
      entry.statement = lp[i];
      entry.status = StatementStatus::SyntaxRejected;
      report.entries.push_back(std::move(entry));
      continue;
    }
    report.entries.push_back(
        evaluate_statement(lp[i], *fofs[i], nl.nl_ax, lp_ax, lex));
  }
  return report;
}

FormulaSet partial_sedac(const std::vector<LPStatement>& lp, const Lexicon& lex) {
  FormulaSet out;
  for (const auto& st : lp) {
    if (st.is_query()) continue;
    try {
      Formula f = lp_to_fof(st);
      out.insert(rewrite_normal_form(f, lex));
    } catch (const TranslationError&) {
      // ignored, same as a statement that failed to parse
    }
  }
  return out;
}

FormulaSet apply_report(const FormulaSet& lp_ax, const StatusReport& report) {
  FormulaSet out;
  for (const auto& e : report.entries) {
    switch (e.status) {
      case StatementStatus::Ok:
        if (e.fof && lp_ax.contains(*e.fof)) out.insert(*e.fof);
        break;
      case StatementStatus::FixableSemantic:
        if (e.fix) out.insert(*e.fix);
        break;
      default:
        break;  // NonFixable removed; queries and rejects never axioms
    }
  }
  return out;
}

std::string report_to_json(const StatusReport& report) {
  nlohmann::json out;
  out["statements"] = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json row;
    row["raw"] = e.statement.raw_text;
    row["line"] = e.statement.line;
    row["fof"] = e.fof ? nlohmann::json(to_fof_text(*e.fof)) : nlohmann::json();
    row["status"] = to_string(e.status);
    row["fix"] = e.fix ? nlohmann::json(to_fof_text(*e.fix)) : nlohmann::json();
    row["score"] = e.score;
    row["depth"] = to_string(e.depth);
    out["statements"].push_back(std::move(row));
  }
  return out.dump(2);
}

}  // namespace sedac
