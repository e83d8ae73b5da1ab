#ifndef SEDAC_FORMULA_HPP
#define SEDAC_FORMULA_HPP

#include <cctype>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sedac {

// ── Monadic fragment ────────────────────────────────────────────────────────
// Unary predicates plus equality between a bound variable and a constant.
// Three formula shapes cover everything the grammar and the logic-program
// translator produce; richer input is rejected at parse time, which keeps
// entailment a decision procedure.

struct Term {
  enum class Kind { Variable, Constant };

  Kind kind;
  std::string name;

  // Throws std::invalid_argument on an ill-formed name.
  static Term variable(std::string name);
  static Term constant(std::string name);

  bool is_variable() const { return kind == Kind::Variable; }
  bool is_constant() const { return kind == Kind::Constant; }

  bool operator==(const Term&) const = default;
};

// pred(arg) or lhs = rhs.  Predicates are unary throughout.
struct Atom {
  enum class Kind { Pred, Equal };

  Kind kind;
  std::string pred;  // Kind::Pred only
  Term a;            // argument, or equality lhs
  Term b;            // equality rhs; unused for Pred

  static Atom pred_app(std::string pred, Term arg);
  static Atom equal(Term lhs, Term rhs);

  bool is_pred() const { return kind == Kind::Pred; }
  bool is_equal() const { return kind == Kind::Equal; }
  bool mentions_variable(const std::string& var) const;

  bool operator==(const Atom&) const = default;
};

struct Literal {
  bool positive = true;
  Atom atom;

  Literal negated() const { return Literal{!positive, atom}; }
  bool operator==(const Literal&) const = default;
};

inline Literal pos(Atom a) { return Literal{true, std::move(a)}; }
inline Literal neg(Atom a) { return Literal{false, std::move(a)}; }

// ── Formula ─────────────────────────────────────────────────────────────────
// Immutable value type.  Shapes:
//   Ground      — [~] p(c) or [~] (c = d), no variables
//   UnivFact    — ! [X] : [~] p(X)
//   UnivImpl    — ! [X] : ((l1 & ... & ln) => l0), every literal over X,
//                 antecedent nonempty
// Exactly one bound variable, no nesting.

class Formula {
 public:
  enum class Kind { Ground, UnivFact, UnivImpl };

  // Empty placeholder (an unnamed ground atom); build real formulas with the
  // factories below.
  Formula() = default;

  static Formula ground(Literal lit);
  static Formula univ_fact(std::string var, Literal lit);
  static Formula univ_impl(std::string var, std::vector<Literal> antecedent,
                           Literal consequent);

  Kind kind() const { return kind_; }
  bool is_ground() const { return kind_ == Kind::Ground; }
  bool is_univ_fact() const { return kind_ == Kind::UnivFact; }
  bool is_univ_impl() const { return kind_ == Kind::UnivImpl; }

  // Bound variable name; Ground formulas have none.
  const std::string& var() const;
  // Ground literal or UnivFact literal.
  const Literal& literal() const;
  const std::vector<Literal>& antecedent() const;
  const Literal& consequent() const;

  // Structural equality (variable names matter); see alpha_equal below.
  bool operator==(const Formula&) const = default;

  std::vector<std::string> constants() const;
  std::vector<std::string> predicates() const;

 private:
  Kind kind_ = Kind::Ground;
  std::string var_;
  std::vector<Literal> antecedent_;
  Literal lit_{};  // ground/fact literal, or consequent for UnivImpl
};

bool alpha_equal(const Formula& f, const Formula& g);

// Deterministic TPTP FOF rendering of the fragment, e.g.
//   ! [A] : (integer(A) => ~ fruity(A))
std::string to_fof_text(const Formula& f);
std::string to_fof_text(const Literal& lit);

struct FofParseError : std::runtime_error {
  FofParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset(offset) {}
  std::size_t offset;  // byte offset into the input
};

// Inverse of to_fof_text on the emitted subset (whitespace and redundant
// parentheses tolerated).  Throws FofParseError.
Formula parse_fof_text(std::string_view text);

// ── FormulaSet ──────────────────────────────────────────────────────────────
// Stable insertion order, no duplicates up to alpha-renaming.

class FormulaSet {
 public:
  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> fs);

  // False if an alpha-equal member already exists.
  bool insert(Formula f);
  bool contains(const Formula& f) const;
  FormulaSet without(const Formula& f) const;

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const Formula& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

 private:
  std::vector<Formula> items_;
};

inline bool is_constant_name(std::string_view s) {
  if (s.empty() || s[0] < 'a' || s[0] > 'z') return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

inline bool is_variable_name(std::string_view s) {
  if (s.empty() || s[0] < 'A' || s[0] > 'Z') return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace sedac

#endif  // SEDAC_FORMULA_HPP
