#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sedac/cnl.hpp"

using namespace sedac;

namespace {
const Lexicon& lex() { return Lexicon::builtin(); }

std::string fof(const std::string& sentence) {
  return to_fof_text(nl_to_fof(sentence, lex()));
}
}  // namespace

TEST_CASE("sentences from the worked example") {
  CHECK(fof("Each integer is not fruity.") ==
        "! [A] : (integer(A) => ~ fruity(A))");
  CHECK(fof("Negative numbers are brown.") ==
        "! [A] : (negative_number(A) => brown(A))");
  CHECK(fof("Wren is an integer.") == "integer(wren)");
}

TEST_CASE("verb sentences and singular/plural tolerance") {
  Formula plural = nl_to_fof("Cats swim.", lex());
  Formula every = nl_to_fof("Every cat swims.", lex());
  CHECK(to_fof_text(plural) == "! [A] : (cat(A) => swim(A))");
  CHECK(alpha_equal(plural, every));

  // every quantified pattern reads the same in both numbers
  CHECK(alpha_equal(nl_to_fof("All cats are birds.", lex()),
                    nl_to_fof("Every cat is a bird.", lex())));
  CHECK(alpha_equal(nl_to_fof("Fractions are integers.", lex()),
                    nl_to_fof("Each fraction is an integer.", lex())));
  CHECK(alpha_equal(nl_to_fof("Negative numbers are not large.", lex()),
                    nl_to_fof("Any negative number is not large.", lex())));
}

TEST_CASE("determiners, negation, adjective normalization") {
  CHECK(fof("No bird swims.") == "! [A] : (bird(A) => ~ swim(A))");
  CHECK(fof("Each composite number is not liquid.") ==
        "! [A] : (composite_number(A) => ~ liquid(A))");
  CHECK(fof("Every composite number is a fraction.") ==
        "! [A] : (composite_number(A) => fraction(A))");
  CHECK(fof("Even numbers are natural numbers.") ==
        "! [A] : (even_number(A) => natural_number(A))");
  // predicate adjectives with a noun form are normalized
  CHECK(fof("Tom is even.") == "even_number(tom)");
  CHECK(fof("Each integer is even.") ==
        "! [A] : (integer(A) => even_number(A))");
  CHECK(fof("Whiskers swims.") == "swim(whiskers)");
  CHECK(fof("Wren is not an integer.") == "~ integer(wren)");
}

TEST_CASE("canonical outputs never use plural or adjective predicates") {
  const char* sentences[] = {
      "Each integer is not fruity.", "Negative numbers are brown.",
      "Even numbers are natural numbers.", "Cats swim.",
      "Each integer is even.", "All fractions are integers.",
  };
  for (const char* s : sentences) {
    Formula f = nl_to_fof(s, lex());
    for (const auto& pred : f.predicates()) {
      Classification c = lex().classify(pred);
      CHECK(c.cls != WordClass::PluralNoun);
      CHECK(c.cls != WordClass::AdjectiveForm);
      CHECK(c.cls != WordClass::Verb3sg);
    }
  }
}

TEST_CASE("parse failures report the first unrecognized token") {
  try {
    nl_to_fof("Each glorp is brown.", lex());
    FAIL("expected CnlParseError");
  } catch (const CnlParseError& e) {
    CHECK(e.token == "glorp");
    CHECK(e.token_index == 1);
  }
  CHECK_THROWS_AS(nl_to_fof("Each integer is not fruity", lex()),
                  CnlParseError);  // missing period
  CHECK_THROWS_AS(nl_to_fof("integer is fruity.", lex()), CnlParseError);
  CHECK_THROWS_AS(nl_to_fof("Wren is an integer extra.", lex()),
                  CnlParseError);
}

TEST_CASE("query sentences") {
  Formula q = parse_query_sentence("True or false: Wren is not fruity.", lex());
  CHECK(to_fof_text(q) == "~ fruity(wren)");
  CHECK(to_fof_text(parse_query_sentence("True or false: Alex is large.",
                                         lex())) == "large(alex)");
  CHECK_THROWS_AS(parse_query_sentence("Wren is not fruity.", lex()),
                  CnlParseError);
}

TEST_CASE("the Wren script") {
  NLScript s = parse_nl_script(
      "Each integer is not fruity.\n"
      "Negative numbers are brown.\n"
      "Wren is an integer.\n"
      "True or false: Wren is not fruity.\n");
  REQUIRE(s.statements.size() == 3);
  ParsedProblem p = parse_script(s, lex());
  REQUIRE(p.nl_ax.size() == 3);
  CHECK(to_fof_text(p.nl_ax[0]) == "! [A] : (integer(A) => ~ fruity(A))");
  CHECK(to_fof_text(p.nl_ax[1]) == "! [A] : (negative_number(A) => brown(A))");
  CHECK(to_fof_text(p.nl_ax[2]) == "integer(wren)");
  CHECK(to_fof_text(p.query) == "~ fruity(wren)");
  CHECK(p.source_map.size() == 3);
}

TEST_CASE("the thirteen-axiom script") {
  NLScript s = parse_nl_script(
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
      "True or false: Alex is large.\n");
  ParsedProblem p = parse_script(s, lex());
  CHECK(p.nl_ax.size() == 13);
  CHECK(to_fof_text(p.query) == "large(alex)");
}

TEST_CASE("flowing paragraph scripts split into sentences") {
  NLScript s = parse_nl_script(
      "Each integer is not fruity. Negative numbers are brown. "
      "Wren is an integer.\n\nTrue or false: Wren is not fruity.\n");
  REQUIRE(s.statements.size() == 3);
  CHECK(s.statements[0] == "Each integer is not fruity.");
  CHECK(s.statements[2] == "Wren is an integer.");
  ParsedProblem p = parse_script(s, lex());
  CHECK(p.nl_ax.size() == 3);
  CHECK(to_fof_text(p.query) == "~ fruity(wren)");
}

TEST_CASE("degenerate script: query only") {
  NLScript s = parse_nl_script("True or false: Wren is fruity.\n");
  ParsedProblem p = parse_script(s, lex());
  CHECK(p.nl_ax.empty());
  CHECK(to_fof_text(p.query) == "fruity(wren)");
}

TEST_CASE("script errors aggregate per-sentence failures") {
  NLScript s = parse_nl_script(
      "Each integer is not fruity.\n"
      "Blorp the glorp.\n"
      "Zim zam zum.\n"
      "True or false: Wren is fruity.\n");
  try {
    parse_script(s, lex());
    FAIL("expected ScriptParseError");
  } catch (const ScriptParseError& e) {
    REQUIRE(e.failures.size() == 2);
    CHECK(e.failures[0].first == 1);
    CHECK(e.failures[1].first == 2);
  }
  CHECK_THROWS(parse_nl_script("Wren is an integer.\n"));  // no query line
}
