#include "sedac/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <memory>
#include <sstream>

#include "json.hpp"
#include "sedac/lp.hpp"

namespace sedac {

const char* to_string(Condition c) {
  switch (c) {
    case Condition::Baseline: return "baseline";
    case Condition::ZeroShot: return "zero_shot";
    case Condition::OneShot: return "one_shot";
    case Condition::OneShotSyntax: return "one_shot_syntax";
    case Condition::OneShotPartial: return "one_shot_partial";
    case Condition::OneShotFull: return "one_shot_full";
  }
  return "?";
}

std::optional<Condition> condition_from(const std::string& name) {
  for (Condition c : {Condition::Baseline, Condition::ZeroShot,
                      Condition::OneShot, Condition::OneShotSyntax,
                      Condition::OneShotPartial, Condition::OneShotFull})
    if (name == to_string(c)) return c;
  return std::nullopt;
}

const char* to_string(ErrorType t) {
  switch (t) {
    case ErrorType::Communication: return "communication";
    case ErrorType::Symbol: return "symbol";
    case ErrorType::Knowledge: return "knowledge";
    case ErrorType::NaturalLanguage: return "natural_language";
    case ErrorType::OtherSyntax: return "other_syntax";
    case ErrorType::ShallowSemantic: return "shallow_semantic";
    case ErrorType::DeepSemantic: return "deep_semantic";
  }
  return "?";
}

int ErrorRecord::total_types() const {
  int n = 0;
  for (int c : counts) n += c > 0 ? 1 : 0;
  return n;
}

// ── metric formulas ─────────────────────────────────────────────────────────

EvalMetrics compute_metrics(
    const std::vector<VerdictRecord>& verdicts,
    const std::vector<std::pair<std::string, bool>>& gold) {
  if (verdicts.size() != gold.size())
    throw MetricsError("verdict/gold size mismatch");
  EvalMetrics m;
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].problem_id != gold[i].first)
      throw MetricsError("verdict/gold id mismatch at index " +
                         std::to_string(i) + ": " + verdicts[i].problem_id +
                         " vs " + gold[i].first);
    bool truth = gold[i].second;
    bool pred = verdicts[i].predicted;
    if (truth && pred) ++m.confusion.tp;
    else if (!truth && pred) ++m.confusion.fp;
    else if (truth && !pred) ++m.confusion.fn;
    else ++m.confusion.tn;
  }
  const Confusion& c = m.confusion;
  auto ratio = [](int num, int den) {
    return den == 0 ? std::nan("") : static_cast<double>(num) / den;
  };
  m.accuracy = ratio(c.tp + c.tn, c.total());
  m.recall = ratio(c.tp, c.tp + c.fn);
  m.precision = ratio(c.tp, c.tp + c.fp);
  return m;
}

std::vector<std::vector<double>> correlation_matrix(
    const std::vector<ErrorRecord>& records) {
  if (records.size() < 2)
    throw MetricsError("correlation needs at least two records");
  const int k = kErrorTypeCount;
  const double n = static_cast<double>(records.size());
  std::array<double, kErrorTypeCount> mean{};
  for (const auto& r : records)
    for (int i = 0; i < k; ++i) mean[i] += r.counts[i] > 0 ? 1.0 : 0.0;
  for (int i = 0; i < k; ++i) mean[i] /= n;

  std::vector<std::vector<double>> cov(k, std::vector<double>(k, 0.0));
  for (const auto& r : records)
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        cov[i][j] += ((r.counts[i] > 0 ? 1.0 : 0.0) - mean[i]) *
                     ((r.counts[j] > 0 ? 1.0 : 0.0) - mean[j]);

  std::vector<std::vector<double>> out(k, std::vector<double>(k, 0.0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      double denom = std::sqrt(cov[i][i] * cov[j][j]);
      out[i][j] = denom == 0.0 ? std::nan("") : cov[i][j] / denom;
    }
    out[i][i] = 1.0;
  }
  return out;
}

double errors_per_failure(const std::vector<ErrorRecord>& records) {
  int failures = 0;
  int types = 0;
  for (const auto& r : records) {
    int t = r.total_types();
    if (t > 0) {
      ++failures;
      types += t;
    }
  }
  return failures == 0 ? 0.0 : static_cast<double>(types) / failures;
}

// ── evaluation ──────────────────────────────────────────────────────────────

namespace {

// Last standalone true/false (or Answer: True) wins, so chain-of-thought
// replies parse to their final verdict.
std::optional<bool> parse_bool_answer(const std::string& response) {
  std::optional<bool> found;
  std::string word;
  for (std::size_t i = 0; i <= response.size(); ++i) {
    char c = i < response.size() ? response[i] : ' ';
    if (std::isalpha(static_cast<unsigned char>(c))) {
      word += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    } else {
      if (word == "true") found = true;
      else if (word == "false") found = false;
      word.clear();
    }
  }
  return found;
}

PromptMode mode_for(Condition c) {
  switch (c) {
    case Condition::Baseline: return PromptMode::Baseline;
    case Condition::ZeroShot: return PromptMode::ZeroShot;
    default: return PromptMode::OneShot;
  }
}

std::optional<LPStatement> find_query(const std::vector<LPStatement>& sts) {
  for (const auto& st : sts)
    if (st.is_query()) return st;
  return std::nullopt;
}

}  // namespace

struct Evaluator::Analysis {
  std::optional<Transcript> transcript;
  FixResult fix;
  ParseLpResult parsed;
  std::optional<ParsedProblem> nl;
  std::optional<StatusReport> report;  // full-SEDAC over the parsed program
  FormulaSet lp_ax;
  ErrorRecord record;
};

Evaluator::Evaluator(const std::vector<Problem>& problems,
                     Translator& translator, const Lexicon& lex, int trial)
    : problems_(problems), translator_(translator), lex_(lex), trial_(trial) {}

const Evaluator::Analysis& Evaluator::analysis_for(std::size_t index,
                                                   PromptMode mode) {
  auto key = std::make_pair(index, mode);
  if (auto it = cache_.find(key); it != cache_.end()) return *it->second;
  auto a = std::make_shared<Analysis>();
  const Problem& problem = problems_[index];
  a->record.problem_id = problem.id;
  try {
    a->transcript = translator_.translate(problem, mode, trial_);
  } catch (const TranslateError&) {
    cache_.emplace(key, a);
    return *cache_[key];
  }
  if (mode == PromptMode::Baseline ||
      mode == PromptMode::ChainOfThoughtOneShot) {
    cache_.emplace(key, a);
    return *cache_[key];
  }
  a->fix = fix_syntax(a->transcript->response);
  a->parsed = parse_lp(a->fix.cleaned);
  auto bump = [&](SyntaxErrorLabel label) {
    switch (label) {
      case SyntaxErrorLabel::Communication:
        ++a->record.counts[static_cast<int>(ErrorType::Communication)]; break;
      case SyntaxErrorLabel::Symbol:
        ++a->record.counts[static_cast<int>(ErrorType::Symbol)]; break;
      case SyntaxErrorLabel::Knowledge:
        ++a->record.counts[static_cast<int>(ErrorType::Knowledge)]; break;
      case SyntaxErrorLabel::NaturalLanguage:
        ++a->record.counts[static_cast<int>(ErrorType::NaturalLanguage)]; break;
      case SyntaxErrorLabel::OtherSyntax:
        ++a->record.counts[static_cast<int>(ErrorType::OtherSyntax)]; break;
    }
  };
  for (const auto& e : a->fix.log) bump(e.label);
  for (const auto& e : a->parsed.residual) bump(e.label);
  try {
    a->nl = parse_script(problem.nl, lex_);
    a->report = full_sedac(*a->nl, a->parsed.statements, lex_);
    for (const auto& entry : a->report->entries) {
      if (entry.fof && !entry.statement.is_query() &&
          entry.status != StatementStatus::SyntaxRejected)
        a->lp_ax.insert(*entry.fof);
      if (entry.status == StatementStatus::FixableSemantic) {
        if (entry.depth == ErrorDepth::Shallow)
          ++a->record.counts[static_cast<int>(ErrorType::ShallowSemantic)];
        else
          ++a->record.counts[static_cast<int>(ErrorType::DeepSemantic)];
      } else if (entry.status == StatementStatus::NonFixableSemantic) {
        ++a->record.counts[static_cast<int>(ErrorType::DeepSemantic)];
      } else if (entry.status == StatementStatus::SyntaxRejected) {
        ++a->record.counts[static_cast<int>(ErrorType::OtherSyntax)];
      }
    }
  } catch (const ScriptParseError&) {
    // problem text outside the grammar: semantic analysis unavailable
  }
  cache_.emplace(key, a);
  return *cache_[key];
}

RunResult Evaluator::run(Condition condition, Semantics semantics) {
  RunResult result;
  result.condition = condition;
  result.semantics = semantics;
  std::vector<std::pair<std::string, bool>> gold;

  for (std::size_t i = 0; i < problems_.size(); ++i) {
    const Problem& problem = problems_[i];
    gold.emplace_back(problem.id, problem.gold_answer);
    const Analysis& a = analysis_for(i, mode_for(condition));
    if (condition != Condition::Baseline) result.records.push_back(a.record);

    std::optional<bool> answer;
    try {
      answer = [&]() -> std::optional<bool> {
        if (!a.transcript) return std::nullopt;
        if (condition == Condition::Baseline)
          return parse_bool_answer(a.transcript->response);

        // raw conditions: file-load semantics, one bad line kills the run
        if (condition == Condition::ZeroShot || condition == Condition::OneShot) {
          auto strict = parse_lp_strict(a.transcript->response);
          if (!strict) return std::nullopt;
          auto q = find_query(*strict);
          if (!q) return std::nullopt;
          if (semantics == Semantics::ClosedWorld)
            return answer_closed_world(*strict, Formula::ground(q->head)).answer;
          FormulaSet axioms;
          for (const auto& st : *strict) {
            if (st.is_query()) continue;
            axioms.insert(lp_to_fof(st));
          }
          return answer_open_world(axioms, Formula::ground(q->head)).answer;
        }

        auto q = find_query(a.parsed.statements);
        if (!q) return std::nullopt;
        Formula query = normalize_query(Formula::ground(q->head), lex_);

        if (condition == Condition::OneShotSyntax) {
          if (semantics == Semantics::ClosedWorld)
            return answer_closed_world(a.parsed.statements, query).answer;
          return answer_open_world(a.lp_ax, query).answer;
        }

        FormulaSet axioms =
            condition == Condition::OneShotPartial
                ? partial_sedac(a.parsed.statements, lex_)
                : (a.report ? apply_report(a.lp_ax, *a.report) : FormulaSet{});
        if (condition == Condition::OneShotFull && !a.report)
          return std::nullopt;
        if (semantics == Semantics::OpenWorld)
          return answer_open_world(axioms, query).answer;
        std::vector<LPStatement> program;
        for (const auto& f : axioms) {
          try {
            program.push_back(statement_from_formula(f));
          } catch (const TranslationError&) {
            // no program form (negative equality); skip the axiom
          }
        }
        return answer_closed_world(program, query).answer;
      }();
    } catch (const std::exception&) {
      answer = std::nullopt;  // per-problem failures never abort the batch
    }

    VerdictRecord v;
    v.problem_id = problem.id;
    if (answer) {
      v.predicted = *answer;
    } else {
      v.predicted = !problem.gold_answer;  // unanswered scores as wrong
      v.answered = false;
      ++result.unanswered;
    }
    result.verdicts.push_back(std::move(v));
  }
  result.metrics = compute_metrics(result.verdicts, gold);
  return result;
}

RunResult run_condition(const std::vector<Problem>& problems,
                        Condition condition, Semantics semantics,
                        Translator& translator, const Lexicon& lex, int trial) {
  Evaluator ev(problems, translator, lex, trial);
  return ev.run(condition, semantics);
}

// ── reports ─────────────────────────────────────────────────────────────────

namespace {

nlohmann::json metrics_json(const EvalMetrics& m) {
  auto opt = [](double v) {
    return std::isnan(v) ? nlohmann::json() : nlohmann::json(v);
  };
  return {{"accuracy", opt(m.accuracy)},
          {"recall", opt(m.recall)},
          {"precision", opt(m.precision)},
          {"confusion",
           {{"tp", m.confusion.tp},
            {"fp", m.confusion.fp},
            {"fn", m.confusion.fn},
            {"tn", m.confusion.tn}}}};
}

std::string fixed2(double v) {
  if (std::isnan(v)) return "  n/a";
  char buf[16];
  std::snprintf(buf, sizeof buf, "%5.2f", v);
  return buf;
}

struct Aggregate {
  double mean = 0, half_range = 0;
};

Aggregate aggregate(const std::vector<double>& xs) {
  if (xs.empty()) return {};
  double lo = xs[0], hi = xs[0], sum = 0;
  for (double x : xs) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
    sum += x;
  }
  return {sum / xs.size(), (hi - lo) / 2};
}

}  // namespace

std::string report_to_json(const EvalReport& report) {
  nlohmann::json out;
  out["problem_ids"] = report.problem_ids;
  out["trials"] = nlohmann::json::array();
  for (const auto& trial : report.trials) {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& run : trial) {
      nlohmann::json j;
      j["condition"] = to_string(run.condition);
      j["semantics"] = to_string(run.semantics);
      j["metrics"] = metrics_json(run.metrics);
      j["unanswered"] = run.unanswered;
      nlohmann::json verdicts = nlohmann::json::array();
      for (const auto& v : run.verdicts)
        verdicts.push_back({{"id", v.problem_id},
                            {"predicted", v.predicted},
                            {"answered", v.answered}});
      j["verdicts"] = std::move(verdicts);
      nlohmann::json records = nlohmann::json::array();
      for (const auto& r : run.records) {
        nlohmann::json rec;
        rec["id"] = r.problem_id;
        for (int t = 0; t < kErrorTypeCount; ++t)
          rec[to_string(static_cast<ErrorType>(t))] = r.counts[t];
        records.push_back(std::move(rec));
      }
      j["error_records"] = std::move(records);
      runs.push_back(std::move(j));
    }
    out["trials"].push_back(std::move(runs));
  }
  return out.dump(2);
}

std::string render_report_text(const EvalReport& report) {
  std::ostringstream out;
  if (report.trials.empty()) return "no runs\n";

  // metrics per (condition, semantics), aggregated over trials
  std::map<std::pair<std::string, std::string>,
           std::array<std::vector<double>, 3>>
      series;  // accuracy, recall, precision
  for (const auto& trial : report.trials) {
    for (const auto& run : trial) {
      auto& s = series[{to_string(run.condition), to_string(run.semantics)}];
      s[0].push_back(run.metrics.accuracy);
      s[1].push_back(run.metrics.recall);
      s[2].push_back(run.metrics.precision);
    }
  }
  bool multi = report.trials.size() > 1;
  out << "== Results by condition and semantics ==\n";
  out << "condition          semantics  recall  precision  accuracy";
  if (multi) out << "   (+/- half range over " << report.trials.size() << " trials)";
  out << "\n";
  for (const auto& [key, s] : series) {
    auto acc = aggregate(s[0]);
    auto rec = aggregate(s[1]);
    auto pre = aggregate(s[2]);
    char line[160];
    std::snprintf(line, sizeof line, "%-18s %-9s  %s   %s      %s", key.first.c_str(),
                  key.second.c_str(), fixed2(rec.mean).c_str(),
                  fixed2(pre.mean).c_str(), fixed2(acc.mean).c_str());
    out << line;
    if (multi) {
      std::snprintf(line, sizeof line, "   +/- %.3f %.3f %.3f", rec.half_range,
                    pre.half_range, acc.half_range);
      out << line;
    }
    out << "\n";
  }

  // error breakdown: per-type totals, mean with half-range over trials
  std::vector<const std::vector<ErrorRecord>*> per_trial_records;
  for (const auto& trial : report.trials) {
    const std::vector<ErrorRecord>* records = nullptr;
    for (const auto& run : trial)
      if (!run.records.empty()) records = &run.records;
    if (records) per_trial_records.push_back(records);
  }
  if (!per_trial_records.empty()) {
    const auto& first = *per_trial_records.front();
    out << "\n== Error breakdown (" << first.size() << " problems";
    if (per_trial_records.size() > 1)
      out << ", mean +/- half range over " << per_trial_records.size()
          << " trials";
    out << ") ==\n";
    for (int t = 0; t < kErrorTypeCount; ++t) {
      std::vector<double> totals, problems;
      for (const auto* records : per_trial_records) {
        int total = 0, with = 0;
        for (const auto& r : *records) {
          total += r.counts[t];
          with += r.counts[t] > 0 ? 1 : 0;
        }
        totals.push_back(total);
        problems.push_back(with);
      }
      auto tot = aggregate(totals);
      auto prob = aggregate(problems);
      char line[160];
      if (per_trial_records.size() > 1)
        std::snprintf(line, sizeof line,
                      "%-18s total %6.1f +/- %.1f   problems %6.1f +/- %.1f\n",
                      to_string(static_cast<ErrorType>(t)), tot.mean,
                      tot.half_range, prob.mean, prob.half_range);
      else
        std::snprintf(line, sizeof line, "%-18s total %4d   problems %4d\n",
                      to_string(static_cast<ErrorType>(t)),
                      static_cast<int>(tot.mean), static_cast<int>(prob.mean));
      out << line;
    }
    int with_errors = 0;
    for (const auto& r : first)
      if (r.total_types() > 0) ++with_errors;
    out << "problems with errors: " << with_errors << "\n";
    char line[80];
    std::snprintf(line, sizeof line, "error types per failure: %.2f\n",
                  errors_per_failure(first));
    out << line;

    if (first.size() >= 2) {
      out << "\n== Error type correlation ==\n";
      auto m = correlation_matrix(first);
      for (int i = 0; i < kErrorTypeCount; ++i) {
        char label[32];
        std::snprintf(label, sizeof label, "%-18s",
                      to_string(static_cast<ErrorType>(i)));
        out << label;
        for (int j = 0; j < kErrorTypeCount; ++j)
          out << " " << fixed2(m[i][j]);
        out << "\n";
      }
    }
  }
  return out.str();
}

// ── check pipeline ──────────────────────────────────────────────────────────

CheckResult run_check(const std::string& nl_text, const std::string& lp_text,
                      const Lexicon& lex) {
  CheckResult r;
  ParsedProblem nl = parse_script(parse_nl_script(nl_text), lex);
  for (const auto& f : nl.nl_ax) r.nl_ax.push_back(to_fof_text(f));

  FixResult fixed = fix_syntax(lp_text);
  r.syntax_log = fixed.log;
  ParseLpResult parsed = parse_lp(fixed.cleaned);
  for (const auto& e : parsed.residual) r.syntax_log.push_back(e);

  r.report = full_sedac(nl, parsed.statements, lex);
  FormulaSet lp_ax;
  for (const auto& entry : r.report.entries)
    if (entry.fof && !entry.statement.is_query() &&
        entry.status != StatementStatus::SyntaxRejected)
      lp_ax.insert(*entry.fof);
  for (const auto& f : lp_ax) r.lp_ax.push_back(to_fof_text(f));

  FormulaSet partial = partial_sedac(parsed.statements, lex);
  for (const auto& f : partial) r.partial.push_back(to_fof_text(f));

  FormulaSet full = apply_report(lp_ax, r.report);
  for (const auto& f : full) r.full.push_back(to_fof_text(f));

  std::optional<Formula> query;
  if (auto q = find_query(parsed.statements))
    query = normalize_query(Formula::ground(q->head), lex);
  else
    query = nl.query;
  if (query) {
    r.query = to_fof_text(*query);
    r.nl_entails_query = entails(nl.nl_ax, *query).entailed;
    r.lp_entails_query = entails(lp_ax, *query).entailed;
    r.partial_entails_query = entails(partial, *query).entailed;
    r.full_entails_query = entails(full, *query).entailed;
  }
  return r;
}

std::string render_check(const CheckResult& r) {
  std::ostringstream out;
  auto block = [&](const char* title, const std::vector<std::string>& fofs) {
    out << title << "\n";
    for (const auto& f : fofs) out << "  " << f << "\n";
  };
  block("nl_ax:", r.nl_ax);
  if (!r.syntax_log.empty()) {
    out << "syntax repairs:\n";
    for (const auto& e : r.syntax_log) {
      out << "  line " << e.line << ": " << to_string(e.label) << " "
          << (e.dropped ? "dropped" : "fixed") << " '" << e.before << "'";
      if (!e.dropped) out << " -> '" << e.after << "'";
      out << "\n";
    }
  }
  block("lp_ax:", r.lp_ax);
  out << "statuses:\n";
  for (const auto& e : r.report.entries) {
    out << "  " << e.statement.raw_text << "\n    " << to_string(e.status);
    if (e.fix) out << " fix " << to_fof_text(*e.fix) << " (" << to_string(e.depth)
                   << ", score " << e.score << ")";
    out << "\n";
  }
  block("partial_sedac:", r.partial);
  block("full_sedac:", r.full);
  if (r.query) {
    out << "query: " << *r.query << "\n";
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "  nl_ax entails: " << yn(r.nl_entails_query) << "\n";
    out << "  lp_ax entails: " << yn(r.lp_entails_query) << "\n";
    out << "  partial entails: " << yn(r.partial_entails_query) << "\n";
    out << "  full entails: " << yn(r.full_entails_query) << "\n";
  }
  return out.str();
}

}  // namespace sedac
