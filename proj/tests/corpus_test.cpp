#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>

#include "sedac/corpus.hpp"
#include "sedac/reason.hpp"

using namespace sedac;

namespace {
const Lexicon& lex() { return Lexicon::builtin(); }
}

TEST_CASE("generation is a pure function of the config") {
  GeneratorConfig config{2, Ontology::False, Distractors::Relevant, 10, 42};
  auto a = generate(config, lex());
  auto b = generate(config, lex());
  CHECK(problems_to_json(a) == problems_to_json(b));
  CHECK(a.size() == 10);
  // a different seed gives different problems
  config.seed = 43;
  CHECK(problems_to_json(generate(config, lex())) != problems_to_json(a));
}

TEST_CASE("every sentence parses and gold answers check out") {
  for (int hops : {1, 2, 3}) {
    GeneratorConfig config{hops, Ontology::False, Distractors::Relevant, 15,
                           2024};
    for (const auto& p : generate(config, lex())) {
      CAPTURE(p.id);
      ParsedProblem parsed = parse_script(p.nl, lex());  // throws on failure
      CHECK(parsed.nl_ax.size() == p.nl.statements.size());
      for (std::size_t i = 0; i < parsed.nl_ax.size(); ++i)
        CHECK(alpha_equal(parsed.nl_ax[i], p.gold_ax[i]));
      CHECK(evaluate_gold(p.gold_ax, p.query) == p.gold_answer);
    }
  }
}

TEST_CASE("hop validity: every on-path axiom is load-bearing") {
  GeneratorConfig config{3, Ontology::False, Distractors::Relevant, 12, 777};
  int true_problems = 0;
  for (const auto& p : generate(config, lex())) {
    if (!p.gold_answer) continue;
    ++true_problems;
    REQUIRE(p.proof_path.size() == 4);  // two chain rules, property, fact
    for (int idx : p.proof_path) {
      FormulaSet reduced = p.gold_ax.without(p.gold_ax[idx]);
      CHECK_FALSE(evaluate_gold(reduced, p.query));
    }
  }
  CHECK(true_problems > 0);
}

TEST_CASE("one-hop proofs are a single rule application") {
  GeneratorConfig config{1, Ontology::False, Distractors::None, 8, 11};
  for (const auto& p : generate(config, lex())) {
    CHECK(p.nl.statements.size() == 2);  // property rule + membership fact
    CHECK(p.gold_ax.size() == 2);
  }
}

TEST_CASE("true ontology uses real taxonomy edges") {
  GeneratorConfig config{2, Ontology::True, Distractors::None, 10, 5};
  for (const auto& p : generate(config, lex())) {
    // the chain rule's classes come from the real-world edge list; spot the
    // membership fact's class among known taxonomy members
    CHECK(p.gold_ax.size() == 3);
  }
}

TEST_CASE("answers are roughly balanced") {
  GeneratorConfig config{2, Ontology::False, Distractors::Relevant, 60, 99};
  int true_count = 0;
  for (const auto& p : generate(config, lex())) true_count += p.gold_answer;
  CHECK(true_count >= 15);
  CHECK(true_count <= 45);
}

TEST_CASE("save and load round-trip") {
  GeneratorConfig config{2, Ontology::False, Distractors::Relevant, 6, 314};
  auto problems = generate(config, lex());
  std::string path =
      (std::filesystem::temp_directory_path() / "corpus_roundtrip.json").string();
  save_problems(problems, path);
  auto loaded = load_problems(path);
  REQUIRE(loaded.size() == problems.size());
  CHECK(problems_to_json(loaded) == problems_to_json(problems));
  for (std::size_t i = 0; i < loaded.size(); ++i) {
    CHECK(loaded[i].id == problems[i].id);
    CHECK(loaded[i].gold_answer == problems[i].gold_answer);
    CHECK(alpha_equal(loaded[i].query, problems[i].query));
    // loaded sets revalidate against the reasoner
    CHECK(evaluate_gold(loaded[i].gold_ax, loaded[i].query) ==
          loaded[i].gold_answer);
  }
  std::remove(path.c_str());
}

TEST_CASE("malformed problem files fail with the record index") {
  CHECK_THROWS_AS(problems_from_json("{"), ProblemIoError);
  CHECK_THROWS_AS(problems_from_json("{\"problems\": 3}"), ProblemIoError);
  // missing gold_answer
  std::string missing = R"json({"problems":[{"id":"x","config":{"hops":1,
    "ontology":"false","distractors":"none","count":1,"seed":0},
    "sentences":[],"query_sentence":"True or false: Wren is fruity.",
    "gold_fof":[],"query_fof":"fruity(wren)"}]})json";
  try {
    problems_from_json(missing);
    FAIL("expected ProblemIoError");
  } catch (const ProblemIoError& e) {
    CHECK(std::string(e.what()).find("record 0") != std::string::npos);
    CHECK(std::string(e.what()).find("gold_answer") != std::string::npos);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(generate({0, Ontology::False, Distractors::None, 1, 0}, lex()),
                  GenerationError);
  CHECK_THROWS_AS(generate({4, Ontology::False, Distractors::None, 1, 0}, lex()),
                  GenerationError);
  CHECK_THROWS_AS(generate({2, Ontology::False, Distractors::None, 0, 0}, lex()),
                  GenerationError);
}
