#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tribasis {

// Immutable propositional formula over variables X1, X2, ... with the
// Lukasiewicz connectives.  Value semantics; nodes are shared.
class Formula {
public:
  enum class Kind {
    Var,
    Bot,
    Top,
    Not,
    And,       // weak conjunction, min
    Or,        // weak disjunction, max
    StrongAnd, // bounded product
    StrongOr,  // bounded sum
    Minus,     // bounded difference
    Implies,
    Iff
  };

  static Formula var(int index); // index >= 1
  static Formula bot();
  static Formula top();
  static Formula negation(Formula a);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula strong_conj(Formula a, Formula b);
  static Formula strong_disj(Formula a, Formula b);
  static Formula minus(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);

  Kind kind() const { return node_->kind; }
  int var_index() const;  // Kind::Var only
  Formula child() const;  // Kind::Not only
  Formula lhs() const;    // binary kinds only
  Formula rhs() const;

  int max_var() const; // largest variable index, 0 if none

  bool operator==(const Formula& other) const; // structural equality

  // ASCII rendering with minimal parentheses; parse_formula round-trips it.
  std::string str() const;

private:
  struct Node {
    Kind kind;
    int var = 0;
    std::shared_ptr<const Node> a, b;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula binary(Kind k, Formula a, Formula b);
  std::shared_ptr<const Node> node_;
};

struct FormulaParseError : std::runtime_error {
  size_t position; // byte offset into the input
  FormulaParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at offset " + std::to_string(pos)), position(pos) {}
};

// Grammar, loosest to tightest:
//   iff    := impl ("<->" impl)*            left-associative
//   impl   := sum ("->" impl)?              right-associative
//   sum    := prod (("|" | "+") prod)*      left-associative
//   prod   := unary (("&" | "*" | "-") unary)*
//   unary  := "!" unary | atom
//   atom   := "X<k>" | "0" | "1" | "(" iff ")"
// The usual glyphs are accepted as alternatives for every token.
Formula parse_formula(std::string_view text);

} // namespace tribasis
