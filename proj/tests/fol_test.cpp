#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "sedac/formula.hpp"

using namespace sedac;

namespace {

Formula impl(const std::string& var, Literal ante, Literal cons) {
  return Formula::univ_impl(var, {std::move(ante)}, std::move(cons));
}

Literal lit(const std::string& pred, const std::string& constant,
            bool positive = true) {
  return Literal{positive, Atom::pred_app(pred, Term::constant(constant))};
}

Literal vlit(const std::string& pred, const std::string& var,
             bool positive = true) {
  return Literal{positive, Atom::pred_app(pred, Term::variable(var))};
}

}  // namespace

TEST_CASE("rendering matches the printed forms") {
  CHECK(to_fof_text(impl("A", vlit("integer", "A"), vlit("fruity", "A", false))) ==
        "! [A] : (integer(A) => ~ fruity(A))");
  CHECK(to_fof_text(Formula::ground(lit("integer", "wren"))) == "integer(wren)");
  CHECK(to_fof_text(Formula::ground(lit("fruity", "wren", false))) ==
        "~ fruity(wren)");
  CHECK(to_fof_text(Formula::univ_fact("X", vlit("integer", "X"))) ==
        "! [X] : integer(X)");
  Literal eq = pos(Atom::equal(Term::variable("X"), Term::constant("tom")));
  CHECK(to_fof_text(Formula::univ_impl("X", {eq}, vlit("swims", "X"))) ==
        "! [X] : ((X = tom) => swims(X))");
  Formula conj = Formula::univ_impl(
      "X", {vlit("negative", "X", false), vlit("fraction", "X")},
      vlit("large", "X"));
  CHECK(to_fof_text(conj) ==
        "! [X] : ((~ negative(X) & fraction(X)) => large(X))");
}

TEST_CASE("rendering is deterministic") {
  Formula f = impl("A", vlit("cat", "A"), vlit("swim", "A"));
  CHECK(to_fof_text(f) == to_fof_text(f));
}

TEST_CASE("parsing the emitted subset") {
  Formula f = parse_fof_text("! [X] : (cat(X) => swim(X))");
  CHECK(alpha_equal(f, impl("X", vlit("cat", "X"), vlit("swim", "X"))));

  Formula g = parse_fof_text("brown(negative)");
  REQUIRE(g.is_ground());
  CHECK(g.literal().atom.pred == "brown");
  CHECK(g.literal().atom.a.name == "negative");

  // optional parentheses and whitespace variants
  CHECK(alpha_equal(parse_fof_text("! [A]: p(A)=>q(A)"),
                    parse_fof_text("! [A] : (p(A) => q(A))")));
  CHECK(alpha_equal(parse_fof_text("! [X] : ((a(X) & b(X)) => c(X))"),
                    Formula::univ_impl("X", {vlit("a", "X"), vlit("b", "X")},
                                       vlit("c", "X"))));
}

TEST_CASE("parse errors carry byte offsets") {
  CHECK_THROWS_AS(parse_fof_text("! [A] : ((x = tom) => swims(A))"),
                  FofParseError);
  CHECK_THROWS_AS(parse_fof_text("p(X)"), FofParseError);         // unbound
  CHECK_THROWS_AS(parse_fof_text("p(a, b)"), FofParseError);      // arity
  CHECK_THROWS_AS(parse_fof_text("! [X] : (p(X) | q(X))"), FofParseError);
  CHECK_THROWS_AS(parse_fof_text("! [X] : ! [Y] : p(X)"), FofParseError);
  try {
    parse_fof_text("cat(X) =>");
  } catch (const FofParseError& e) {
    CHECK(e.offset > 0);
  }
}

TEST_CASE("alpha equality") {
  CHECK(alpha_equal(parse_fof_text("! [A]: p(A)=>q(A)"),
                    parse_fof_text("! [X]: p(X)=>q(X)")));
  CHECK_FALSE(alpha_equal(parse_fof_text("p(a)"), parse_fof_text("p(b)")));
  CHECK_FALSE(alpha_equal(parse_fof_text("! [X]: p(X)=>q(X)"),
                          parse_fof_text("! [X]: q(X)=>p(X)")));
}

TEST_CASE("construction invariants") {
  CHECK_THROWS_AS(Formula::univ_impl("X", {}, vlit("p", "X")),
                  std::invalid_argument);
  CHECK_THROWS_AS(Formula::univ_impl("X", {vlit("p", "Y")}, vlit("q", "X")),
                  std::invalid_argument);
  CHECK_THROWS_AS(Formula::ground(vlit("p", "X")), std::invalid_argument);
  CHECK_THROWS_AS(Term::constant("Wren"), std::invalid_argument);
  CHECK_THROWS_AS(Term::variable("wren"), std::invalid_argument);
}

namespace {

// Uniform random fragment formulas for the round-trip property.
Formula random_formula(std::mt19937_64& rng) {
  const std::vector<std::string> preds{"p", "q", "r", "s"};
  const std::vector<std::string> consts{"a", "b", "c"};
  const std::vector<std::string> vars{"X", "Y", "A"};
  auto coin = [&] { return rng() % 2 == 0; };
  auto any = [&](const std::vector<std::string>& xs) {
    return xs[rng() % xs.size()];
  };
  auto literal_over = [&](const std::string& var) -> Literal {
    if (rng() % 5 == 0)
      return Literal{coin(), Atom::equal(Term::variable(var),
                                         Term::constant(any(consts)))};
    return Literal{coin(), Atom::pred_app(any(preds), Term::variable(var))};
  };
  switch (rng() % 3) {
    case 0:
      return Formula::ground(
          Literal{coin(), Atom::pred_app(any(preds), Term::constant(any(consts)))});
    case 1: {
      std::string v = any(vars);
      return Formula::univ_fact(v, Literal{coin(), Atom::pred_app(
                                                       any(preds),
                                                       Term::variable(v))});
    }
    default: {
      std::string v = any(vars);
      std::vector<Literal> ante;
      std::size_t n = 1 + rng() % 3;
      for (std::size_t i = 0; i < n; ++i) ante.push_back(literal_over(v));
      return Formula::univ_impl(v, std::move(ante), literal_over(v));
    }
  }
}

}  // namespace

TEST_CASE("round trip: parse(to_fof_text(f)) alpha-equals f") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 2000; ++i) {
    Formula f = random_formula(rng);
    std::string text = to_fof_text(f);
    Formula back = parse_fof_text(text);
    CAPTURE(text);
    CHECK(alpha_equal(f, back));
    CHECK(to_fof_text(back) == text);
  }
}

TEST_CASE("formula sets dedupe up to renaming and keep order") {
  FormulaSet s;
  CHECK(s.insert(parse_fof_text("! [A]: p(A)=>q(A)")));
  CHECK_FALSE(s.insert(parse_fof_text("! [Z]: p(Z)=>q(Z)")));
  CHECK(s.insert(parse_fof_text("p(a)")));
  REQUIRE(s.size() == 2);
  CHECK(to_fof_text(s[0]) == "! [A] : (p(A) => q(A))");
  CHECK(to_fof_text(s[1]) == "p(a)");
  CHECK(s.contains(parse_fof_text("! [B]: p(B)=>q(B)")));
  FormulaSet rest = s.without(parse_fof_text("! [Q]: p(Q)=>q(Q)"));
  CHECK(rest.size() == 1);
  CHECK(to_fof_text(rest[0]) == "p(a)");
}
