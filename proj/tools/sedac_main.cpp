// Command-line front end: generate problem sets, translate them through a
// chat endpoint (or replay recorded transcripts), repair and check logic
// programs, answer queries, and run full evaluations.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sedac/corpus.hpp"
#include "sedac/entail.hpp"
#include "sedac/lexicon.hpp"
#include "sedac/llm.hpp"
#include "sedac/lp.hpp"
#include "sedac/metrics.hpp"
#include "sedac/reason.hpp"
#include "sedac/repair.hpp"

namespace fs = std::filesystem;
using namespace sedac;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void spit(const std::string& path, const std::string& content) {
  if (auto dir = fs::path(path).parent_path(); !dir.empty())
    fs::create_directories(dir);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

Lexicon load_lexicon_arg(const std::string& path) {
  if (path.empty()) return Lexicon::builtin();
  return Lexicon::load_file(path);
}

Semantics semantics_from(const std::string& s) {
  if (s == "open") return Semantics::OpenWorld;
  if (s == "closed") return Semantics::ClosedWorld;
  throw CLI::ValidationError("--semantics must be open or closed");
}

// ── fixture corpus ──────────────────────────────────────────────────────────
// A bundled synthetic-transcript corpus seeded with the syntactic and
// semantic error classes, engineered so each pipeline stage repairs one
// slice of it: 8 faithful, 6 syntax-only, 8 shallow, 10 deep, 8 unfixable.

std::string faithful_program(const Problem& p) {
  std::string text;
  for (const auto& f : p.gold_ax) text += to_lp_text(statement_from_formula(f)) + "\n";
  LPStatement q;
  q.kind = LPStatement::Kind::Query;
  q.head = p.query.literal();
  text += to_lp_text(q) + "\n";
  return text;
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

int pick_rule_line(const Problem& p, const std::vector<std::string>& lines,
                   bool want_property_rule, const Lexicon& lex) {
  // on-path formulas are chain rules, one property rule, one fact; find the
  // matching program line by rendering the formula
  for (int idx : p.proof_path) {
    const Formula& f = p.gold_ax[idx];
    bool is_prop = f.is_univ_impl() && lex.is_attribute(f.consequent().atom.pred);
    bool is_rule = f.is_univ_impl();
    if (want_property_rule ? is_prop : (is_rule && !is_prop)) {
      std::string text = to_lp_text(statement_from_formula(f));
      for (std::size_t i = 0; i < lines.size(); ++i)
        if (lines[i] == text) return static_cast<int>(i);
    }
  }
  return -1;
}

int pick_fact_line(const Problem& p, const std::vector<std::string>& lines) {
  for (int idx : p.proof_path) {
    const Formula& f = p.gold_ax[idx];
    if (!f.is_ground()) continue;
    std::string text = to_lp_text(statement_from_formula(f));
    for (std::size_t i = 0; i < lines.size(); ++i)
      if (lines[i] == text) return static_cast<int>(i);
  }
  return -1;
}

// Rewrite-class corruption: the property rule collapsed to a ground literal
// over the plural class noun ("large(fractions)."), the membership fact
// demoted to a rule over the proper noun, or a pluralized rule body.
std::string corrupt_shallow(const Problem& p, const Lexicon& lex, int variant) {
  auto lines = split_lines(faithful_program(p));
  if (variant % 3 == 0) {
    int li = pick_rule_line(p, lines, true, lex);
    for (int idx : p.proof_path) {
      const Formula& f = p.gold_ax[idx];
      if (!f.is_univ_impl() || !lex.is_attribute(f.consequent().atom.pred))
        continue;
      std::string cls = f.antecedent()[0].atom.pred;
      std::string plural = *lex.plural_of_singular(cls);
      std::string neg = f.consequent().positive ? "" : "\\+";
      lines[li] = neg + f.consequent().atom.pred + "(" + plural + ").";
      break;
    }
    return join_lines(lines);
  }
  if (variant % 3 == 1) {
    int li = pick_fact_line(p, lines);
    for (int idx : p.proof_path) {
      const Formula& f = p.gold_ax[idx];
      if (!f.is_ground()) continue;
      lines[li] = f.literal().atom.pred + "(X) :- " + f.literal().atom.a.name +
                  "(X).";
      break;
    }
    return join_lines(lines);
  }
  int li = pick_rule_line(p, lines, false, lex);
  if (li < 0) li = pick_rule_line(p, lines, true, lex);
  for (int idx : p.proof_path) {
    const Formula& f = p.gold_ax[idx];
    if (!f.is_univ_impl()) continue;
    std::string body = f.antecedent()[0].atom.pred;
    auto plural = lex.plural_of_singular(body);
    if (!plural || *plural == body) continue;
    std::string expected = to_lp_text(statement_from_formula(f));
    if (lines[li] != expected) continue;
    std::string neg = f.consequent().positive ? "" : "\\+";
    lines[li] = neg + f.consequent().atom.pred + "(X) :- " + *plural + "(X).";
    return join_lines(lines);
  }
  // no pluralizable rule body; fall back to the fact demotion
  return corrupt_shallow(p, lex, 1);
}

// Derivation-class corruption: consequent sign flip or reversed implication.
std::string corrupt_deep(const Problem& p, const Lexicon& lex, int variant) {
  auto lines = split_lines(faithful_program(p));
  bool flip = variant % 2 == 0;
  int li = pick_rule_line(p, lines, flip, lex);
  if (li < 0) li = pick_rule_line(p, lines, !flip, lex);
  for (int idx : p.proof_path) {
    const Formula& f = p.gold_ax[idx];
    if (!f.is_univ_impl()) continue;
    std::string expected = to_lp_text(statement_from_formula(f));
    if (lines[li] != expected) continue;
    std::string head = f.consequent().atom.pred;
    std::string body = f.antecedent()[0].atom.pred;
    if (flip) {
      std::string neg = f.consequent().positive ? "\\+" : "";
      lines[li] = neg + head + "(X) :- " + body + "(X).";
    } else {
      lines[li] = body + "(X) :- " + head + "(X).";
    }
    return join_lines(lines);
  }
  return join_lines(lines);
}

// Unfixable slice: an on-path rule is simply missing; half of these also
// carry a background-knowledge clause or a natural-language line so every
// error class appears in the corpus.
std::string drop_on_path_rule(const Problem& p, const Lexicon& lex, int variant) {
  auto lines = split_lines(faithful_program(p));
  int li = pick_rule_line(p, lines, false, lex);
  if (li < 0) li = pick_rule_line(p, lines, true, lex);
  lines.erase(lines.begin() + li);
  const std::string& who = p.query.literal().atom.a.name;
  if (variant % 2 == 0)
    lines.insert(lines.begin(), "even(X) :- number(X), X mod 2 =:= 0.");
  else
    lines.insert(lines.end() - 1,
                 who + " is " + p.query.literal().atom.pred + ".");
  return join_lines(lines);
}

std::string wrap_with_syntax_errors(const std::string& program, int variant) {
  auto lines = split_lines(program);
  std::string out = "```prolog\n";
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    if (i == 0 && variant % 2 == 0) line = "Problog: " + line;
    if (line.rfind("?-", 0) == 0) line = "-?" + line.substr(2);
    if (i == 1 && !line.empty() && line.back() == '.') line.pop_back();
    out += line + "\n";
  }
  out += "```\n";
  return out;
}

const char* kWrenNl =
    "Each integer is not fruity.\n"
    "Negative numbers are brown.\n"
    "Wren is an integer.\n"
    "True or false: Wren is not fruity.\n";

const char* kWrenLp =
    "even(X) :- integer(X), 0 is X mod 2.\n"
    "integer(X) :- fruity(X).\n"
    "integer(wren).\n"
    "integer(X).\n"
    "brown(negative).\n"
    "?- \\+ fruity(wren).\n";

const char* kAlexNl =
    "Each composite number is not liquid.\n"
    "Every composite number is a fraction.\n"
    "Every composite number is a number.\n"
    "Negative numbers are not large.\n"
    "Every fraction is large.\n"
    "Each fraction is a real number.\n"
    "Fractions are integers.\n"
    "Integers are temperate.\n"
    "Each number is slow.\n"
    "Each even number is loud.\n"
    "Even numbers are natural numbers.\n"
    "Alex is an even number.\n"
    "Alex is a composite number.\n"
    "True or false: Alex is large.\n";

const char* kAlexGpt3Response =
    "composite(X) :- number(X), \\+prime(X).\n"
    "liquid(X) :- \\+composite(X).\n"
    "fraction(X) :- composite(X).\n"
    "number(X).\n"
    "large(X) :- \\+negative(X), fraction(X).\n"
    "real_number(X) :- fraction(X).\n"
    "integer(X) :- fraction(X).\n"
    "temperate(X) :- integer(X).\n"
    "slow(X) :- number(X).\n"
    "loud(X) :- even(X).\n"
    "even(X) :- number(X), X mod 2 =:= 0.\n"
    "natural_number(X) :- even(X).\n"
    "alex is large. \n";

int make_fixtures(const std::string& dir) {
  const Lexicon& lex = Lexicon::builtin();
  spit(dir + "/wren/nl.txt", kWrenNl);
  spit(dir + "/wren/lp.txt", kWrenLp);
  spit(dir + "/alex/nl.txt", kAlexNl);

  // The larger worked example, replayable through the full pipeline.
  NLScript alex_script = parse_nl_script(kAlexNl);
  ParsedProblem alex_parsed = parse_script(alex_script, lex);
  Problem alex;
  alex.id = "worked_alex";
  alex.nl = alex_script;
  alex.gold_ax = alex_parsed.nl_ax;
  alex.query = alex_parsed.query;
  alex.gold_answer = evaluate_gold(alex.gold_ax, alex.query);
  alex.config = GeneratorConfig{2, Ontology::False, Distractors::Relevant, 1, 0};
  save_problems({alex}, dir + "/problems/alex.json");

  TranscriptStore store(dir + "/transcripts");
  Transcript t;
  t.problem_id = alex.id;
  t.mode = PromptMode::OneShot;
  t.model = "fixture";
  t.trial = 0;
  t.prompt = render_prompt(PromptMode::OneShot, alex);
  t.response = kAlexGpt3Response;
  store.put(t);

  // Synthetic corpus: generate a pool, keep gold-True problems for the
  // corruption groups so breaking the proof flips the answer.
  GeneratorConfig gc{2, Ontology::False, Distractors::Relevant, 220, 7202};
  std::vector<Problem> pool = generate(gc, lex);
  std::vector<Problem> corpus;
  std::size_t cursor = 0;
  auto take = [&](int n, bool need_true) {
    std::vector<Problem> out;
    while (static_cast<int>(out.size()) < n && cursor < pool.size()) {
      Problem& cand = pool[cursor++];
      if (!need_true || cand.gold_answer) out.push_back(cand);
    }
    if (static_cast<int>(out.size()) < n)
      throw std::runtime_error("fixture pool exhausted");
    return out;
  };
  struct Group {
    std::vector<Problem> problems;
    int kind;  // 0 faithful, 1 syntax, 2 shallow, 3 deep, 4 dropped
  };
  std::vector<Group> groups;
  groups.push_back({take(8, false), 0});
  bool need_positive_query = true;  // corruption groups use provable queries
  auto take_true_positive = [&](int n) {
    std::vector<Problem> out;
    while (static_cast<int>(out.size()) < n && cursor < pool.size()) {
      Problem& cand = pool[cursor++];
      if (cand.gold_answer && cand.query.literal().positive == need_positive_query)
        out.push_back(cand);
    }
    if (static_cast<int>(out.size()) < n)
      throw std::runtime_error("fixture pool exhausted (gold-true)");
    return out;
  };
  groups.push_back({take_true_positive(6), 1});
  groups.push_back({take_true_positive(8), 2});
  groups.push_back({take_true_positive(10), 3});
  groups.push_back({take_true_positive(8), 4});

  int variant = 0;
  for (const auto& g : groups) {
    for (const auto& p : g.problems) {
      std::string program = faithful_program(p);
      switch (g.kind) {
        case 1: program = wrap_with_syntax_errors(program, variant); break;
        case 2: program = corrupt_shallow(p, lex, variant); break;
        case 3: program = corrupt_deep(p, lex, variant); break;
        case 4: program = drop_on_path_rule(p, lex, variant); break;
        default: break;
      }
      Transcript tr;
      tr.problem_id = p.id;
      tr.mode = PromptMode::OneShot;
      tr.model = "fixture";
      tr.trial = 0;
      tr.prompt = render_prompt(PromptMode::OneShot, p);
      tr.response = program;
      store.put(tr);

      Transcript base;
      base.problem_id = p.id;
      base.mode = PromptMode::Baseline;
      base.model = "fixture";
      base.trial = 0;
      base.prompt = render_prompt(PromptMode::Baseline, p);
      bool correct = variant % 8 < 5;  // mid-range baseline accuracy
      base.response = (p.gold_answer == correct) ? "True" : "False";
      store.put(base);

      corpus.push_back(p);
      ++variant;
    }
  }
  save_problems(corpus, dir + "/problems/synthetic.json");
  std::cout << "fixtures written to " << dir << " (" << corpus.size()
            << " synthetic problems)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"steamroller translation checker"};
  app.require_subcommand(1);

  std::string lexicon_path;
  app.add_option("--lexicon", lexicon_path, "lexicon file (default: built-in)");

  // generate
  auto* gen = app.add_subcommand("generate", "generate a problem set");
  GeneratorConfig gc;
  std::string ontology = "false", distractors = "relevant", out_path;
  gen->add_option("--hops", gc.hops, "proof chain length (1-3)");
  gen->add_option("--ontology", ontology, "true|false");
  gen->add_option("--distractors", distractors, "none|relevant");
  gen->add_option("--count", gc.count, "number of problems");
  gen->add_option("--seed", gc.seed, "generator seed");
  gen->add_option("--out", out_path, "output problems.json")->required();

  // translate
  auto* tr = app.add_subcommand("translate", "collect LLM translations");
  std::string tr_problems, tr_mode = "one_shot", tr_replay_dir = "transcripts",
              tr_endpoint;
  int tr_trial = 0;
  tr->add_option("--problems", tr_problems)->required();
  tr->add_option("--mode", tr_mode, "baseline|zero_shot|one_shot|cot_one_shot");
  tr->add_option("--replay-dir", tr_replay_dir, "transcript store directory");
  tr->add_option("--endpoint", tr_endpoint, "endpoint config JSON (live mode)");
  tr->add_option("--trial", tr_trial);

  // fix
  auto* fix = app.add_subcommand("fix", "repair logic-program syntax");
  std::string fix_in, fix_out, fix_repairs;
  fix->add_option("--in", fix_in, "raw program file")->required();
  fix->add_option("--out", fix_out, "write cleaned program here");
  fix->add_option("--repairs", fix_repairs, "extra replacement table");

  // check
  auto* check = app.add_subcommand("check", "run semantic error detection");
  std::string check_nl, check_lp, check_json, check_tptp;
  check->add_option("--nl", check_nl, "controlled-English script")->required();
  check->add_option("--lp", check_lp, "logic program file")->required();
  check->add_option("--json", check_json, "also write the status report JSON");
  check->add_option("--dump-tptp", check_tptp,
                    "write the soundness obligations as TPTP problems");

  // answer
  auto* ans = app.add_subcommand("answer", "answer gold problems");
  std::string ans_problems, ans_semantics = "open";
  ans->add_option("--problems", ans_problems)->required();
  ans->add_option("--semantics", ans_semantics, "open|closed");

  // eval
  auto* ev = app.add_subcommand("eval", "run conditions and report");
  std::string ev_problems, ev_replay = "fixtures/transcripts",
              ev_conditions = "baseline,one_shot,one_shot_syntax,one_shot_partial,one_shot_full",
              ev_semantics = "open", ev_out, ev_model = "fixture", ev_endpoint;
  int ev_trials = 1;
  bool ev_check = false, ev_both = false;
  ev->add_option("--problems", ev_problems)->required();
  ev->add_option("--replay-dir", ev_replay);
  ev->add_option("--condition", ev_conditions, "comma-separated conditions");
  ev->add_option("--semantics", ev_semantics, "open|closed");
  ev->add_flag("--both-semantics", ev_both, "run open and closed world");
  ev->add_option("--trials", ev_trials);
  ev->add_option("--model", ev_model, "replay model name");
  ev->add_option("--endpoint", ev_endpoint, "endpoint config JSON (live mode)");
  ev->add_option("--out", ev_out, "write the JSON report here");
  ev->add_flag("--check", ev_check, "verify problem-set invariants; nonzero exit on violation");
  bool ev_divergent = false;
  ev->add_flag("--divergent-only", ev_divergent,
               "re-run only problems the raw one-shot condition answers wrongly");

  // report
  auto* rep = app.add_subcommand("report", "re-render a saved eval report");
  std::string rep_in;
  rep->add_option("--in", rep_in, "eval report JSON")->required();

  // make-fixtures
  auto* mf = app.add_subcommand("make-fixtures", "regenerate bundled fixtures");
  std::string mf_dir = "fixtures";
  mf->add_option("--dir", mf_dir);

  CLI11_PARSE(app, argc, argv);

  try {
    Lexicon lex = load_lexicon_arg(lexicon_path);

    if (gen->parsed()) {
      gc.ontology = ontology == "true" ? Ontology::True : Ontology::False;
      gc.distractors =
          distractors == "none" ? Distractors::None : Distractors::Relevant;
      auto problems = generate(gc, lex);
      save_problems(problems, out_path);
      std::cout << "wrote " << problems.size() << " problems to " << out_path
                << "\n";
      return 0;
    }

    if (tr->parsed()) {
      auto problems = load_problems(tr_problems);
      auto mode = prompt_mode_from(tr_mode);
      if (!mode) throw std::runtime_error("unknown mode " + tr_mode);
      TranscriptStore store(tr_replay_dir);
      std::optional<Translator> translator;
      if (tr_endpoint.empty())
        translator.emplace(store);
      else
        translator.emplace(store, EndpointConfig::from_json_file(tr_endpoint));
      auto transcripts = translator->translate_batch(problems, *mode, tr_trial);
      std::cout << transcripts.size() << " transcripts in " << tr_replay_dir
                << "\n";
      return 0;
    }

    if (fix->parsed()) {
      RepairTable table = fix_repairs.empty() ? RepairTable::defaults()
                                              : RepairTable::load_file(fix_repairs);
      FixResult r = fix_syntax(slurp(fix_in), table);
      for (const auto& e : r.log)
        std::cout << "line " << e.line << ": " << to_string(e.label) << " "
                  << (e.dropped ? "dropped" : "fixed") << "\n";
      if (fix_out.empty())
        std::cout << r.cleaned << "\n";
      else
        spit(fix_out, r.cleaned + "\n");
      return 0;
    }

    if (check->parsed()) {
      CheckResult r = run_check(slurp(check_nl), slurp(check_lp), lex);
      std::cout << render_check(r);
      if (!check_json.empty()) spit(check_json, report_to_json(r.report) + "\n");
      if (!check_tptp.empty()) {
        ParsedProblem nl = parse_script(parse_nl_script(slurp(check_nl)), lex);
        int i = 0;
        for (const auto& e : r.report.entries) {
          if (!e.fof || e.statement.is_query()) continue;
          spit(check_tptp + "/obligation_" + std::to_string(i++) + ".p",
               to_tptp_problem(nl.nl_ax, *e.fof));
        }
      }
      return 0;
    }

    if (ans->parsed()) {
      auto problems = load_problems(ans_problems);
      Semantics sem = semantics_from(ans_semantics);
      for (const auto& p : problems) {
        bool answer;
        if (sem == Semantics::OpenWorld) {
          answer = answer_open_world(p.gold_ax, p.query).answer;
        } else {
          std::vector<LPStatement> program;
          for (const auto& f : p.gold_ax)
            program.push_back(statement_from_formula(f));
          answer = answer_closed_world(program, p.query).answer;
        }
        std::cout << p.id << " " << (answer ? "True" : "False")
                  << (answer == p.gold_answer ? "" : " (gold mismatch!)")
                  << "\n";
      }
      return 0;
    }

    if (ev->parsed()) {
      auto problems = load_problems(ev_problems);
      int violations = 0;
      if (ev_check) {
        for (const auto& p : problems) {
          if (evaluate_gold(p.gold_ax, p.query) != p.gold_answer) {
            std::cerr << "gold mismatch: " << p.id << "\n";
            ++violations;
          }
          if (p.gold_ax.size() != p.nl.statements.size()) {
            std::cerr << "axiom/sentence count mismatch: " << p.id << "\n";
            ++violations;
          }
        }
      }
      TranscriptStore store(ev_replay);
      std::optional<Translator> translator;
      if (ev_endpoint.empty())
        translator.emplace(store, ev_model);
      else
        translator.emplace(store, EndpointConfig::from_json_file(ev_endpoint));

      std::vector<Condition> conditions;
      std::stringstream cs(ev_conditions);
      std::string item;
      while (std::getline(cs, item, ',')) {
        auto c = condition_from(item);
        if (!c) throw std::runtime_error("unknown condition " + item);
        conditions.push_back(*c);
      }
      std::vector<Semantics> sems;
      if (ev_both)
        sems = {Semantics::OpenWorld, Semantics::ClosedWorld};
      else
        sems = {semantics_from(ev_semantics)};

      if (ev_divergent) {
        Evaluator probe(problems, *translator, lex, 0);
        RunResult raw = probe.run(Condition::OneShot, Semantics::OpenWorld);
        std::vector<Problem> divergent;
        for (std::size_t i = 0; i < problems.size(); ++i)
          if (raw.verdicts[i].predicted != problems[i].gold_answer)
            divergent.push_back(problems[i]);
        std::cout << "divergent problems: " << divergent.size() << " of "
                  << problems.size() << "\n";
        problems = std::move(divergent);
      }

      EvalReport report;
      for (const auto& p : problems) report.problem_ids.push_back(p.id);
      for (int trial = 0; trial < ev_trials; ++trial) {
        Evaluator evaluator(problems, *translator, lex, trial);
        std::vector<RunResult> runs;
        for (Condition c : conditions)
          for (Semantics s : sems) runs.push_back(evaluator.run(c, s));
        report.trials.push_back(std::move(runs));
      }
      std::cout << render_report_text(report);
      if (!ev_out.empty()) spit(ev_out, report_to_json(report));
      if (violations) {
        std::cerr << violations << " invariant violation(s)\n";
        return 1;
      }
      return 0;
    }

    if (rep->parsed()) {
      nlohmann::json doc = nlohmann::json::parse(slurp(rep_in));
      EvalReport report;
      report.problem_ids =
          doc.at("problem_ids").get<std::vector<std::string>>();
      for (const auto& trial : doc.at("trials")) {
        std::vector<RunResult> runs;
        for (const auto& j : trial) {
          RunResult r;
          r.condition = *condition_from(j.at("condition").get<std::string>());
          r.semantics = j.at("semantics").get<std::string>() == "open"
                            ? Semantics::OpenWorld
                            : Semantics::ClosedWorld;
          r.unanswered = j.at("unanswered").get<int>();
          for (const auto& v : j.at("verdicts")) {
            VerdictRecord vr;
            vr.problem_id = v.at("id").get<std::string>();
            vr.predicted = v.at("predicted").get<bool>();
            vr.answered = v.at("answered").get<bool>();
            r.verdicts.push_back(std::move(vr));
          }
          for (const auto& rec : j.at("error_records")) {
            ErrorRecord er;
            er.problem_id = rec.at("id").get<std::string>();
            for (int t = 0; t < kErrorTypeCount; ++t)
              er.counts[t] = rec.at(to_string(static_cast<ErrorType>(t))).get<int>();
            r.records.push_back(std::move(er));
          }
          const auto& m = j.at("metrics");
          auto metric = [&](const char* k) {
            return m.at(k).is_null() ? std::nan("") : m.at(k).get<double>();
          };
          r.metrics.accuracy = metric("accuracy");
          r.metrics.recall = metric("recall");
          r.metrics.precision = metric("precision");
          r.metrics.confusion.tp = m.at("confusion").at("tp").get<int>();
          r.metrics.confusion.fp = m.at("confusion").at("fp").get<int>();
          r.metrics.confusion.fn = m.at("confusion").at("fn").get<int>();
          r.metrics.confusion.tn = m.at("confusion").at("tn").get<int>();
          runs.push_back(std::move(r));
        }
        report.trials.push_back(std::move(runs));
      }
      std::cout << render_report_text(report);
      return 0;
    }

    if (mf->parsed()) return make_fixtures(mf_dir);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
