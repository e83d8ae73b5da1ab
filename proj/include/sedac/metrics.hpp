#ifndef SEDAC_METRICS_HPP
#define SEDAC_METRICS_HPP

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sedac/corpus.hpp"
#include "sedac/llm.hpp"
#include "sedac/reason.hpp"
#include "sedac/repair.hpp"

namespace sedac {

// Experiment conditions: how much of the pipeline runs between the raw LLM
// output and the reasoner.

enum class Condition {
  Baseline,        // LLM answers True/False directly
  ZeroShot,        // translation prompt without example, raw program
  OneShot,         // translation prompt with example, raw program
  OneShotSyntax,   // + syntactic repair
  OneShotPartial,  // + shallow semantic correction
  OneShotFull,     // + full semantic correction against the source text
};

const char* to_string(Condition c);
std::optional<Condition> condition_from(const std::string& name);

// ── error records ───────────────────────────────────────────────────────────

enum class ErrorType {
  Communication = 0,
  Symbol,
  Knowledge,
  NaturalLanguage,
  OtherSyntax,
  ShallowSemantic,
  DeepSemantic,
};
inline constexpr int kErrorTypeCount = 7;
const char* to_string(ErrorType t);

struct ErrorRecord {
  std::string problem_id;
  std::array<int, kErrorTypeCount> counts{};

  bool has(ErrorType t) const { return counts[static_cast<int>(t)] > 0; }
  int total_types() const;
};

// ── metrics ─────────────────────────────────────────────────────────────────

struct Confusion {
  int tp = 0, fp = 0, fn = 0, tn = 0;
  int total() const { return tp + fp + fn + tn; }
};

struct EvalMetrics {
  double accuracy = 0, recall = 0, precision = 0;
  Confusion confusion;
};

struct VerdictRecord {
  std::string problem_id;
  bool predicted = false;
  bool answered = true;  // false: no usable query/program, scored wrong
};

struct MetricsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Positive class is gold answer True.  Throws MetricsError on id mismatch.
EvalMetrics compute_metrics(const std::vector<VerdictRecord>& verdicts,
                            const std::vector<std::pair<std::string, bool>>& gold);

// Pearson correlation of the per-problem binary indicators, pairwise over
// error types.  Zero-variance columns yield NaN entries.
std::vector<std::vector<double>> correlation_matrix(
    const std::vector<ErrorRecord>& records);

// Mean number of distinct error types per problem that has at least one.
double errors_per_failure(const std::vector<ErrorRecord>& records);

// ── evaluation ──────────────────────────────────────────────────────────────

struct RunResult {
  Condition condition{};
  Semantics semantics{};
  std::vector<VerdictRecord> verdicts;  // one per problem, in order
  std::vector<ErrorRecord> records;     // empty for Baseline
  EvalMetrics metrics;
  int unanswered = 0;
};

// Runs conditions over a problem set, sharing the per-problem translation
// analysis between conditions and semantics.
class Evaluator {
 public:
  Evaluator(const std::vector<Problem>& problems, Translator& translator,
            const Lexicon& lex, int trial = 0);

  RunResult run(Condition condition, Semantics semantics);

 private:
  struct Analysis;
  const Analysis& analysis_for(std::size_t index, PromptMode mode);

  const std::vector<Problem>& problems_;
  Translator& translator_;
  const Lexicon& lex_;
  int trial_;
  std::map<std::pair<std::size_t, PromptMode>, std::shared_ptr<Analysis>> cache_;
};

RunResult run_condition(const std::vector<Problem>& problems,
                        Condition condition, Semantics semantics,
                        Translator& translator, const Lexicon& lex,
                        int trial = 0);

// ── reports ─────────────────────────────────────────────────────────────────

struct EvalReport {
  std::vector<std::vector<RunResult>> trials;  // [trial][condition-run]
  std::vector<std::string> problem_ids;
};

std::string report_to_json(const EvalReport& report);
std::string render_report_text(const EvalReport& report);

// ── the check pipeline ──────────────────────────────────────────────────────
// Everything the `check` subcommand shows for one (nl, lp) pair.

struct CheckResult {
  std::vector<std::string> nl_ax;       // FOF text, in source order
  std::vector<std::string> lp_ax;
  std::vector<std::string> partial;     // Partial-SEDAC output
  std::vector<std::string> full;        // Full-SEDAC output (report applied)
  StatusReport report;
  SyntaxRepairLog syntax_log;
  std::optional<std::string> query;     // normalized query literal, if any
  bool nl_entails_query = false;
  bool lp_entails_query = false;
  bool partial_entails_query = false;
  bool full_entails_query = false;
};

CheckResult run_check(const std::string& nl_text, const std::string& lp_text,
                      const Lexicon& lex);
std::string render_check(const CheckResult& r);

}  // namespace sedac

#endif  // SEDAC_METRICS_HPP
