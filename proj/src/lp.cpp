#include "sedac/lp.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace sedac {

const char* to_string(SyntaxErrorLabel label) {
  switch (label) {
    case SyntaxErrorLabel::Communication: return "CommunicationError";
    case SyntaxErrorLabel::Symbol: return "SymbolError";
    case SyntaxErrorLabel::NaturalLanguage: return "NaturalLanguageError";
    case SyntaxErrorLabel::Knowledge: return "KnowledgeError";
    case SyntaxErrorLabel::OtherSyntax: return "OtherSyntaxError";
  }
  return "?";
}

RepairTable RepairTable::defaults() { return {}; }

RepairTable RepairTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open repair table: " + path);
  RepairTable table;
  std::string line;
  bool in_section = false;
  while (std::getline(in, line)) {
    std::string t = line;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    if (t.empty() || t[0] == '#') continue;
    if (t == "[replacements]") {
      in_section = true;
      continue;
    }
    if (!in_section) continue;
    auto comma = t.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("repair table entries are from,to: " + t);
    table.replacements.emplace_back(t.substr(0, comma), t.substr(comma + 1));
  }
  return table;
}

// ── line classification ─────────────────────────────────────────────────────

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_fence(const std::string& line) {
  return line.rfind("```", 0) == 0;
}

// Prose prefixes an LLM uses to hand over a program.
const char* kProsePrefixes[] = {"problog program", "prolog program", "problog",
                                "prolog",          "program",        "output",
                                "answer"};

std::optional<std::string> strip_prose_prefix(const std::string& line) {
  std::string low;
  for (char c : line) low += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const char* p : kProsePrefixes) {
    std::string prefix = std::string(p) + ":";
    if (low.rfind(prefix, 0) == 0) return trim(line.substr(prefix.size()));
  }
  return std::nullopt;
}

std::string replace_all(std::string s, const std::string& from,
                        const std::string& to) {
  if (from.empty()) return s;
  std::size_t at = 0;
  while ((at = s.find(from, at)) != std::string::npos) {
    s.replace(at, from.size(), to);
    at += to.size();
  }
  return s;
}

struct LineScan {
  bool has_clause_shape = false;  // name(...) application or ':-'/'?-'
  int bare_words = 0;             // alphabetic tokens outside any name(args)
  bool has_arith = false;         // is/mod/=:=/comparisons/numerals
};

// One pass over the line, tracking whether we are inside the parentheses of
// a name(...) application.  `is` and `mod` count as arithmetic builtins, not
// as words, so `0 is X mod 2` flags Knowledge rather than NaturalLanguage.
LineScan scan_line(const std::string& line) {
  LineScan r;
  std::size_t i = 0;
  int paren_depth = 0;
  auto peek = [&](std::size_t k) -> char {
    return k < line.size() ? line[k] : '\0';
  };
  while (i < line.size()) {
    char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      r.has_arith = true;
      while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < line.size() &&
             (std::isalnum(static_cast<unsigned char>(line[i])) || line[i] == '_'))
        ++i;
      std::string word = line.substr(start, i - start);
      if (word == "is" || word == "mod") {
        r.has_arith = true;
        continue;
      }
      bool functor = peek(i) == '(';
      if (functor) {
        r.has_clause_shape = true;
        continue;
      }
      bool variable = std::isupper(static_cast<unsigned char>(word[0]));
      if (!variable && paren_depth == 0) ++r.bare_words;
      continue;
    }
    switch (c) {
      case '(': ++paren_depth; ++i; break;
      case ')': if (paren_depth > 0) --paren_depth; ++i; break;
      case ':':
        if (peek(i + 1) == '-') { r.has_clause_shape = true; i += 2; }
        else ++i;
        break;
      case '?':
        if (peek(i + 1) == '-') { r.has_clause_shape = true; i += 2; }
        else ++i;
        break;
      case '=':
        if (peek(i + 1) == ':' || peek(i + 1) == '\\' || peek(i + 1) == '<')
          r.has_arith = true;
        ++i;
        break;
      case '<': case '>':
        r.has_arith = true;
        ++i;
        break;
      default:
        ++i;
        break;
    }
  }
  return r;
}

// Parses one already-cleaned clause line; returns nullopt on failure.
std::optional<LPStatement> parse_clause_line(const std::string& line, int lineno);

}  // namespace

FixResult fix_syntax(std::string_view raw, const RepairTable& table) {
  FixResult result;
  std::vector<std::string> kept;
  std::istringstream in{std::string(raw)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string original = line;
    std::string t = trim(line);
    if (t.empty()) continue;

    std::optional<SyntaxErrorLabel> first_label;

    // (1) communication markers
    if (is_fence(t)) {
      result.log.push_back({lineno, SyntaxErrorLabel::Communication, true,
                            original, ""});
      continue;
    }
    if (t.size() >= 4 && t.rfind("<<", 0) == 0 &&
        t.compare(t.size() - 2, 2, ">>") == 0) {
      t = trim(t.substr(2, t.size() - 4));
      first_label = SyntaxErrorLabel::Communication;
    }
    if (auto stripped = strip_prose_prefix(t)) {
      t = *stripped;
      if (!first_label) first_label = SyntaxErrorLabel::Communication;
      if (t.empty()) {
        result.log.push_back({lineno, SyntaxErrorLabel::Communication, true,
                              original, ""});
        continue;
      }
    }

    // (2) symbol repairs
    std::string before_symbols = t;
    if (t.rfind("-?", 0) == 0) t = "?-" + t.substr(2);
    for (const auto& [from, to] : table.replacements)
      t = replace_all(t, from, to);
    while (t.size() >= 2 && t.compare(t.size() - 2, 2, ",.") == 0)
      t = t.substr(0, t.size() - 2) + ".";
    if (!t.empty() && t.back() != '.') t += '.';
    if (t != before_symbols && !first_label)
      first_label = SyntaxErrorLabel::Symbol;

    // (3) natural language
    LineScan scan = scan_line(t);
    if (!scan.has_clause_shape && scan.bare_words >= 2) {
      result.log.push_back({lineno, SyntaxErrorLabel::NaturalLanguage, true,
                            original, ""});
      continue;
    }

    // (4) background-knowledge clauses (arithmetic, builtins, numerals)
    if (scan.has_arith) {
      result.log.push_back({lineno, SyntaxErrorLabel::Knowledge, true,
                            original, ""});
      continue;
    }

    // (5) must parse as a clause, otherwise drop
    if (!parse_clause_line(t, lineno)) {
      result.log.push_back({lineno, SyntaxErrorLabel::OtherSyntax, true,
                            original, ""});
      continue;
    }

    if (t != trim(original))
      result.log.push_back({lineno,
                            first_label ? *first_label : SyntaxErrorLabel::Symbol,
                            false, original, t});
    kept.push_back(t);
  }
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (i) result.cleaned += '\n';
    result.cleaned += kept[i];
  }
  return result;
}

// ── clause parsing ──────────────────────────────────────────────────────────

namespace {

class ClauseParser {
 public:
  explicit ClauseParser(const std::string& s) : s_(s) {}

  std::optional<LPStatement> parse(int lineno) {
    LPStatement st;
    st.line = lineno;
    st.raw_text = s_;
    skip_ws();
    if (take("?-")) {
      auto lit = parse_literal();
      if (!lit || !take(".") || !at_end()) return std::nullopt;
      st.kind = LPStatement::Kind::Query;
      st.head = *lit;
    } else {
      auto head = parse_literal();
      if (!head) return std::nullopt;
      st.head = *head;
      if (take(":-")) {
        st.kind = LPStatement::Kind::Rule;
        do {
          auto lit = parse_literal();
          if (!lit) return std::nullopt;
          st.body.push_back(*lit);
        } while (take(","));
      } else {
        st.kind = LPStatement::Kind::Fact;
      }
      if (!take(".") || !at_end()) return std::nullopt;
    }
    // fragment restriction: at most one distinct variable per statement
    std::set<std::string> vars;
    auto collect = [&](const Literal& l) {
      if (l.atom.a.is_variable()) vars.insert(l.atom.a.name);
    };
    collect(st.head);
    for (const auto& l : st.body) collect(l);
    if (vars.size() > 1) return std::nullopt;
    return st;
  }

 private:
  std::optional<Literal> parse_literal() {
    skip_ws();
    bool positive = true;
    if (take("\\+")) positive = false;
    skip_ws();
    std::string name = take_ident();
    if (name.empty() || std::isupper(static_cast<unsigned char>(name[0])))
      return std::nullopt;
    skip_ws();
    if (!take("(")) return std::nullopt;
    skip_ws();
    std::string arg = take_ident();
    if (arg.empty()) return std::nullopt;
    skip_ws();
    if (!take(")")) return std::nullopt;  // unary predicates only
    Term t = std::isupper(static_cast<unsigned char>(arg[0]))
                 ? Term{Term::Kind::Variable, arg}
                 : Term{Term::Kind::Constant, arg};
    if (t.is_constant() && !is_constant_name(arg)) return std::nullopt;
    if (t.is_variable() && !is_variable_name(arg)) return std::nullopt;
    return Literal{positive, Atom::pred_app(name, t)};
  }

  std::string take_ident() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    return s_.substr(start, pos_ - start);
  }

  bool take(std::string_view tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  bool at_end() {
    skip_ws();
    return pos_ == s_.size();
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::optional<LPStatement> parse_clause_line(const std::string& line, int lineno) {
  return ClauseParser(line).parse(lineno);
}

}  // namespace

ParseLpResult parse_lp(std::string_view cleaned) {
  ParseLpResult result;
  std::istringstream in{std::string(cleaned)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty()) continue;
    if (auto st = parse_clause_line(t, lineno))
      result.statements.push_back(std::move(*st));
    else
      result.residual.push_back({lineno, SyntaxErrorLabel::OtherSyntax, true,
                                 line, ""});
  }
  return result;
}

std::optional<std::vector<LPStatement>> parse_lp_strict(std::string_view raw) {
  std::vector<LPStatement> out;
  std::istringstream in{std::string(raw)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string t = trim(line);
    if (t.empty()) continue;
    auto st = parse_clause_line(t, lineno);
    if (!st) return std::nullopt;
    out.push_back(std::move(*st));
  }
  return out;
}

// ── translation ─────────────────────────────────────────────────────────────

Formula lp_to_fof(const LPStatement& st) {
  if (st.is_query())
    throw std::logic_error("queries are not axioms; translate the literal");
  std::set<std::string> vars;
  auto note = [&](const Literal& l) {
    if (l.atom.a.is_variable()) vars.insert(l.atom.a.name);
  };
  note(st.head);
  for (const auto& l : st.body) note(l);

  if (vars.empty()) {
    if (st.kind == LPStatement::Kind::Rule)
      throw TranslationError("ground rule is outside the fragment: " +
                             st.raw_text);
    return Formula::ground(st.head);
  }
  const std::string& var = *vars.begin();
  auto require_over_var = [&](const Literal& l) {
    if (!l.atom.a.is_variable())
      throw TranslationError("mixed constant/variable literals in: " +
                             st.raw_text);
  };
  if (st.kind == LPStatement::Kind::Fact) {
    return Formula::univ_fact(var, st.head);
  }
  require_over_var(st.head);
  for (const auto& l : st.body) require_over_var(l);
  return Formula::univ_impl(var, st.body, st.head);
}

LPStatement statement_from_formula(const Formula& f) {
  LPStatement st;
  switch (f.kind()) {
    case Formula::Kind::Ground:
      if (f.literal().atom.is_equal())
        throw TranslationError("equality facts have no program form");
      st.kind = LPStatement::Kind::Fact;
      st.head = f.literal();
      break;
    case Formula::Kind::UnivFact:
      if (f.literal().atom.is_equal())
        throw TranslationError("equality facts have no program form");
      st.kind = LPStatement::Kind::Fact;
      st.head = f.literal();
      break;
    case Formula::Kind::UnivImpl: {
      // Positive equalities pin the variable to a constant; instantiate.
      std::optional<std::string> pin;
      std::vector<Literal> body;
      for (const auto& l : f.antecedent()) {
        if (l.atom.is_equal()) {
          if (!l.positive)
            throw TranslationError("negative equality has no program form");
          const Term& c = l.atom.a.is_constant() ? l.atom.a : l.atom.b;
          pin = c.name;
        } else {
          body.push_back(l);
        }
      }
      Literal head = f.consequent();
      if (head.atom.is_equal())
        throw TranslationError("equality conclusions have no program form");
      if (pin) {
        Term c{Term::Kind::Constant, *pin};
        head.atom.a = c;
        for (auto& l : body) l.atom.a = c;
      }
      if (body.empty()) {
        st.kind = LPStatement::Kind::Fact;
        st.head = head;
      } else {
        st.kind = LPStatement::Kind::Rule;
        st.head = head;
        st.body = std::move(body);
      }
      break;
    }
  }
  st.raw_text = to_lp_text(st);
  return st;
}

std::string to_lp_text(const LPStatement& st) {
  auto lit_text = [](const Literal& l) {
    std::string s = l.atom.pred + "(" + l.atom.a.name + ")";
    return l.positive ? s : "\\+" + s;
  };
  std::string out;
  if (st.is_query()) {
    out = "?- " + lit_text(st.head) + ".";
    return out;
  }
  out = lit_text(st.head);
  if (!st.body.empty()) {
    out += " :- ";
    for (std::size_t i = 0; i < st.body.size(); ++i) {
      if (i) out += ", ";
      out += lit_text(st.body[i]);
    }
  }
  out += ".";
  return out;
}

}  // namespace sedac
