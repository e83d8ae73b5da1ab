#include "sedac/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sedac {

Term Term::variable(std::string name) {
  if (!is_variable_name(name))
    throw std::invalid_argument("not a variable name: '" + name + "'");
  return Term{Kind::Variable, std::move(name)};
}

Term Term::constant(std::string name) {
  if (!is_constant_name(name))
    throw std::invalid_argument("not a constant name: '" + name + "'");
  return Term{Kind::Constant, std::move(name)};
}

Atom Atom::pred_app(std::string pred, Term arg) {
  if (!is_constant_name(pred))
    throw std::invalid_argument("not a predicate name: '" + pred + "'");
  return Atom{Kind::Pred, std::move(pred), std::move(arg), Term{}};
}

Atom Atom::equal(Term lhs, Term rhs) {
  return Atom{Kind::Equal, {}, std::move(lhs), std::move(rhs)};
}

bool Atom::mentions_variable(const std::string& var) const {
  auto is_var = [&](const Term& t) {
    return t.is_variable() && t.name == var;
  };
  if (kind == Kind::Pred) return is_var(a);
  return is_var(a) || is_var(b);
}

namespace {

bool literal_is_ground(const Literal& l) {
  if (l.atom.is_pred()) return l.atom.a.is_constant();
  return l.atom.a.is_constant() && l.atom.b.is_constant();
}

// Every variable occurring in the literal must be the bound one, and the
// literal must actually use it.
void check_over_var(const Literal& l, const std::string& var,
                    const char* where) {
  auto check_term = [&](const Term& t) {
    if (t.is_variable() && t.name != var)
      throw std::invalid_argument(std::string("unbound variable '") + t.name +
                                  "' in " + where);
  };
  check_term(l.atom.a);
  if (l.atom.is_equal()) check_term(l.atom.b);
  if (!l.atom.mentions_variable(var))
    throw std::invalid_argument(std::string(where) +
                                " literal does not use the bound variable");
}

}  // namespace

Formula Formula::ground(Literal lit) {
  if (!literal_is_ground(lit))
    throw std::invalid_argument("ground literal contains a variable");
  Formula f;
  f.kind_ = Kind::Ground;
  f.lit_ = std::move(lit);
  return f;
}

Formula Formula::univ_fact(std::string var, Literal lit) {
  if (!is_variable_name(var))
    throw std::invalid_argument("not a variable name: '" + var + "'");
  check_over_var(lit, var, "quantified fact");
  Formula f;
  f.kind_ = Kind::UnivFact;
  f.var_ = std::move(var);
  f.lit_ = std::move(lit);
  return f;
}

Formula Formula::univ_impl(std::string var, std::vector<Literal> antecedent,
                           Literal consequent) {
  if (!is_variable_name(var))
    throw std::invalid_argument("not a variable name: '" + var + "'");
  if (antecedent.empty())
    throw std::invalid_argument("implication with empty antecedent");
  for (const auto& l : antecedent) check_over_var(l, var, "antecedent");
  check_over_var(consequent, var, "consequent");
  Formula f;
  f.kind_ = Kind::UnivImpl;
  f.var_ = std::move(var);
  f.antecedent_ = std::move(antecedent);
  f.lit_ = std::move(consequent);
  return f;
}

const std::string& Formula::var() const {
  if (kind_ == Kind::Ground)
    throw std::logic_error("ground formula has no bound variable");
  return var_;
}

const Literal& Formula::literal() const {
  if (kind_ == Kind::UnivImpl)
    throw std::logic_error("use consequent()/antecedent() on implications");
  return lit_;
}

const std::vector<Literal>& Formula::antecedent() const {
  if (kind_ != Kind::UnivImpl)
    throw std::logic_error("formula is not an implication");
  return antecedent_;
}

const Literal& Formula::consequent() const {
  if (kind_ != Kind::UnivImpl)
    throw std::logic_error("formula is not an implication");
  return lit_;
}

namespace {

void collect_terms(const Formula& f, std::vector<Term>& out) {
  auto add_lit = [&](const Literal& l) {
    out.push_back(l.atom.a);
    if (l.atom.is_equal()) out.push_back(l.atom.b);
  };
  if (f.is_univ_impl()) {
    for (const auto& l : f.antecedent()) add_lit(l);
    add_lit(f.consequent());
  } else {
    add_lit(f.literal());
  }
}

}  // namespace

std::vector<std::string> Formula::constants() const {
  std::vector<Term> terms;
  collect_terms(*this, terms);
  std::vector<std::string> out;
  for (const auto& t : terms)
    if (t.is_constant() && std::find(out.begin(), out.end(), t.name) == out.end())
      out.push_back(t.name);
  return out;
}

std::vector<std::string> Formula::predicates() const {
  std::vector<std::string> out;
  auto add = [&](const Literal& l) {
    if (l.atom.is_pred() &&
        std::find(out.begin(), out.end(), l.atom.pred) == out.end())
      out.push_back(l.atom.pred);
  };
  if (is_univ_impl()) {
    for (const auto& l : antecedent()) add(l);
    add(consequent());
  } else {
    add(literal());
  }
  return out;
}

// ── alpha equality ──────────────────────────────────────────────────────────

namespace {

Term rename_term(const Term& t, const std::string& from, const std::string& to) {
  if (t.is_variable() && t.name == from) return Term{Term::Kind::Variable, to};
  return t;
}

Literal rename_literal(const Literal& l, const std::string& from,
                       const std::string& to) {
  Literal r = l;
  r.atom.a = rename_term(r.atom.a, from, to);
  if (r.atom.is_equal()) r.atom.b = rename_term(r.atom.b, from, to);
  return r;
}

}  // namespace

bool alpha_equal(const Formula& f, const Formula& g) {
  if (f.kind() != g.kind()) return false;
  if (f.is_ground()) return f == g;
  const std::string& fv = f.var();
  const std::string& gv = g.var();
  if (f.is_univ_fact())
    return rename_literal(f.literal(), fv, "_") ==
           rename_literal(g.literal(), gv, "_");
  if (f.antecedent().size() != g.antecedent().size()) return false;
  for (std::size_t i = 0; i < f.antecedent().size(); ++i)
    if (rename_literal(f.antecedent()[i], fv, "_") !=
        rename_literal(g.antecedent()[i], gv, "_"))
      return false;
  return rename_literal(f.consequent(), fv, "_") ==
         rename_literal(g.consequent(), gv, "_");
}

// ── rendering ───────────────────────────────────────────────────────────────

namespace {

std::string atom_text(const Atom& a) {
  if (a.is_pred()) return a.pred + "(" + a.a.name + ")";
  return "(" + a.a.name + " = " + a.b.name + ")";
}

}  // namespace

std::string to_fof_text(const Literal& lit) {
  std::string s = atom_text(lit.atom);
  return lit.positive ? s : "~ " + s;
}

std::string to_fof_text(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Ground:
      return to_fof_text(f.literal());
    case Formula::Kind::UnivFact:
      return "! [" + f.var() + "] : " + to_fof_text(f.literal());
    case Formula::Kind::UnivImpl: {
      std::string ant;
      if (f.antecedent().size() == 1) {
        ant = to_fof_text(f.antecedent()[0]);
      } else {
        ant = "(";
        for (std::size_t i = 0; i < f.antecedent().size(); ++i) {
          if (i) ant += " & ";
          ant += to_fof_text(f.antecedent()[i]);
        }
        ant += ")";
      }
      return "! [" + f.var() + "] : (" + ant + " => " +
             to_fof_text(f.consequent()) + ")";
    }
  }
  return {};
}

// ── parsing ─────────────────────────────────────────────────────────────────
// Tolerant recursive descent over the emitted subset:
//   formula := '!' '[' VAR ']' ':' expr | expr
//   expr    := conj [ '=>' conj ]
//   conj    := unary ( '&' unary )*
//   unary   := '~' unary | '(' expr ')' | NAME '(' term ')' | term '=' term
// Expressions are parsed into a small tree, then checked against the
// fragment shapes (everything richer is rejected with an offset).

namespace {

struct Token {
  enum class Kind {
    Bang, LBrack, RBrack, Colon, LParen, RParen, Arrow, Tilde, Amp, Eq,
    Name, Var, End
  };
  Kind kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(std::string_view s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    std::size_t at = pos_;
    if (pos_ >= s_.size()) return {Token::Kind::End, "", at};
    char c = s_[pos_];
    auto one = [&](Token::Kind k) {
      ++pos_;
      return Token{k, std::string(1, c), at};
    };
    switch (c) {
      case '!': return one(Token::Kind::Bang);
      case '[': return one(Token::Kind::LBrack);
      case ']': return one(Token::Kind::RBrack);
      case ':': return one(Token::Kind::Colon);
      case '(': return one(Token::Kind::LParen);
      case ')': return one(Token::Kind::RParen);
      case '~': return one(Token::Kind::Tilde);
      case '&': return one(Token::Kind::Amp);
      case '=':
        if (pos_ + 1 < s_.size() && s_[pos_ + 1] == '>') {
          pos_ += 2;
          return {Token::Kind::Arrow, "=>", at};
        }
        return one(Token::Kind::Eq);
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string word(s_.substr(start, pos_ - start));
      bool upper = std::isupper(static_cast<unsigned char>(word[0]));
      return {upper ? Token::Kind::Var : Token::Kind::Name, word, at};
    }
    throw FofParseError("unexpected character '" + std::string(1, c) + "'", at);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

struct Node {
  enum class Kind { Lit, And, Impl };
  Kind kind;
  Literal lit{};             // Lit
  std::vector<Node> kids;    // And: n children; Impl: [lhs, rhs]
  std::size_t offset = 0;
};

class FofParser {
 public:
  explicit FofParser(std::string_view s) : lex_(s) { advance(); }

  Formula parse() {
    Formula f = parse_formula();
    if (cur_.kind != Token::Kind::End) fail("end of input");
    return f;
  }

 private:
  Formula parse_formula() {
    if (cur_.kind == Token::Kind::Bang) {
      advance();
      expect(Token::Kind::LBrack, "'['");
      if (cur_.kind != Token::Kind::Var) fail("variable name");
      std::string var = cur_.text;
      advance();
      expect(Token::Kind::RBrack, "']'");
      expect(Token::Kind::Colon, "':'");
      Node e = parse_expr();
      return to_quantified(var, e);
    }
    Node e = parse_expr();
    if (e.kind == Node::Kind::Impl)
      throw FofParseError("implication without quantifier", e.offset);
    if (e.kind == Node::Kind::And)
      throw FofParseError("conjunction without quantifier", e.offset);
    return guarded(e.offset, [&] { return Formula::ground(e.lit); });
  }

  Formula to_quantified(const std::string& var, const Node& e) {
    if (e.kind == Node::Kind::Impl) {
      std::vector<Literal> ant = flatten_conj(e.kids[0]);
      std::vector<Literal> cons = flatten_conj(e.kids[1]);
      if (cons.size() != 1)
        throw FofParseError("implication conclusion must be a single literal",
                            e.kids[1].offset);
      return guarded(e.offset,
                     [&] { return Formula::univ_impl(var, ant, cons[0]); });
    }
    std::vector<Literal> lits = flatten_conj(e);
    if (lits.size() != 1)
      throw FofParseError("bare conjunction under a quantifier", e.offset);
    return guarded(e.offset,
                   [&] { return Formula::univ_fact(var, lits[0]); });
  }

  template <typename F>
  Formula guarded(std::size_t offset, F make) {
    try {
      return make();
    } catch (const std::invalid_argument& ex) {
      throw FofParseError(ex.what(), offset);
    }
  }

  std::vector<Literal> flatten_conj(const Node& n) {
    if (n.kind == Node::Kind::Lit) return {n.lit};
    if (n.kind == Node::Kind::And) {
      std::vector<Literal> out;
      for (const Node& k : n.kids) {
        auto part = flatten_conj(k);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    throw FofParseError("nested implication", n.offset);
  }

  Node parse_expr() {
    Node lhs = parse_conj();
    if (cur_.kind == Token::Kind::Arrow) {
      std::size_t at = cur_.offset;
      advance();
      Node rhs = parse_conj();
      Node impl{Node::Kind::Impl, {}, {}, lhs.offset};
      impl.kids.push_back(std::move(lhs));
      impl.kids.push_back(std::move(rhs));
      if (cur_.kind == Token::Kind::Arrow)
        throw FofParseError("chained implication", at);
      return impl;
    }
    return lhs;
  }

  Node parse_conj() {
    Node first = parse_unary();
    if (cur_.kind != Token::Kind::Amp) return first;
    Node conj{Node::Kind::And, {}, {}, first.offset};
    conj.kids.push_back(std::move(first));
    while (cur_.kind == Token::Kind::Amp) {
      advance();
      conj.kids.push_back(parse_unary());
    }
    return conj;
  }

  Node parse_unary() {
    std::size_t at = cur_.offset;
    if (cur_.kind == Token::Kind::Tilde) {
      advance();
      Node inner = parse_unary();
      if (inner.kind != Node::Kind::Lit)
        throw FofParseError("negation applies to atoms only", at);
      inner.lit = inner.lit.negated();
      return inner;
    }
    if (cur_.kind == Token::Kind::LParen) {
      advance();
      Node inner = parse_expr();
      expect(Token::Kind::RParen, "')'");
      return inner;
    }
    return Node{Node::Kind::Lit, parse_atom_literal(), {}, at};
  }

  Literal parse_atom_literal() {
    if (cur_.kind == Token::Kind::Name) {
      std::string name = cur_.text;
      std::size_t at = cur_.offset;
      advance();
      if (cur_.kind == Token::Kind::LParen) {
        advance();
        Term arg = parse_term();
        if (cur_.kind != Token::Kind::RParen)
          fail("')' (predicates are unary)");
        advance();
        return pos(Atom::pred_app(name, arg));
      }
      if (cur_.kind == Token::Kind::Eq) {
        advance();
        Term rhs = parse_term();
        return pos(Atom::equal(Term{Term::Kind::Constant, name}, rhs));
      }
      throw FofParseError("expected '(' or '=' after '" + name + "'", at);
    }
    if (cur_.kind == Token::Kind::Var) {
      Term lhs{Term::Kind::Variable, cur_.text};
      advance();
      expect(Token::Kind::Eq, "'='");
      Term rhs = parse_term();
      return pos(Atom::equal(lhs, rhs));
    }
    fail("a literal");
  }

  Term parse_term() {
    if (cur_.kind == Token::Kind::Name) {
      Term t{Term::Kind::Constant, cur_.text};
      advance();
      return t;
    }
    if (cur_.kind == Token::Kind::Var) {
      Term t{Term::Kind::Variable, cur_.text};
      advance();
      return t;
    }
    fail("a term");
  }

  void expect(Token::Kind k, const char* what) {
    if (cur_.kind != k) fail(what);
    advance();
  }

  [[noreturn]] void fail(const char* what) {
    std::string got = cur_.kind == Token::Kind::End ? "end of input"
                                                    : "'" + cur_.text + "'";
    throw FofParseError("expected " + std::string(what) + ", got " + got,
                        cur_.offset);
  }

  void advance() { cur_ = lex_.next(); }

  Lexer lex_;
  Token cur_{Token::Kind::End, "", 0};
};

}  // namespace

Formula parse_fof_text(std::string_view text) { return FofParser(text).parse(); }

// ── FormulaSet ──────────────────────────────────────────────────────────────

FormulaSet::FormulaSet(std::initializer_list<Formula> fs) {
  for (const auto& f : fs) insert(f);
}

bool FormulaSet::insert(Formula f) {
  if (contains(f)) return false;
  items_.push_back(std::move(f));
  return true;
}

bool FormulaSet::contains(const Formula& f) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const Formula& g) { return alpha_equal(f, g); });
}

FormulaSet FormulaSet::without(const Formula& f) const {
  FormulaSet out;
  for (const auto& g : items_)
    if (!alpha_equal(f, g)) out.insert(g);
  return out;
}

}  // namespace sedac
