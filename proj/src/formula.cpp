#include "tribasis/formula.hpp"

#include <algorithm>
#include <cctype>
#include <vector>

namespace tribasis {

namespace {

using Kind = Formula::Kind;

bool is_binary(Kind k) { return k != Kind::Var && k != Kind::Bot && k != Kind::Top && k != Kind::Not; }

// Printing levels, tightest first; binds Formula::str below.
int level(Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::Bot:
    case Kind::Top: return 0;
    case Kind::Not: return 1;
    case Kind::And:
    case Kind::StrongAnd:
    case Kind::Minus: return 2;
    case Kind::Or:
    case Kind::StrongOr: return 3;
    case Kind::Implies: return 4;
    case Kind::Iff: return 5;
  }
  return 0;
}

const char* token(Kind k) {
  switch (k) {
    case Kind::And: return " & ";
    case Kind::Or: return " | ";
    case Kind::StrongAnd: return " * ";
    case Kind::StrongOr: return " + ";
    case Kind::Minus: return " - ";
    case Kind::Implies: return " -> ";
    case Kind::Iff: return " <-> ";
    default: return "";
  }
}

} // namespace

Formula Formula::var(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be at least 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->var = index;
  return Formula(std::move(n));
}

Formula Formula::bot() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bot;
  return Formula(std::move(n));
}

Formula Formula::top() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Top;
  return Formula(std::move(n));
}

Formula Formula::negation(Formula a) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->a = std::move(a.node_);
  return Formula(std::move(n));
}

Formula Formula::binary(Kind k, Formula a, Formula b) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  n->a = std::move(a.node_);
  n->b = std::move(b.node_);
  return Formula(std::move(n));
}

Formula Formula::conj(Formula a, Formula b) { return binary(Kind::And, std::move(a), std::move(b)); }
Formula Formula::disj(Formula a, Formula b) { return binary(Kind::Or, std::move(a), std::move(b)); }
Formula Formula::strong_conj(Formula a, Formula b) {
  return binary(Kind::StrongAnd, std::move(a), std::move(b));
}
Formula Formula::strong_disj(Formula a, Formula b) {
  return binary(Kind::StrongOr, std::move(a), std::move(b));
}
Formula Formula::minus(Formula a, Formula b) { return binary(Kind::Minus, std::move(a), std::move(b)); }
Formula Formula::implies(Formula a, Formula b) {
  return binary(Kind::Implies, std::move(a), std::move(b));
}
Formula Formula::iff(Formula a, Formula b) { return binary(Kind::Iff, std::move(a), std::move(b)); }

int Formula::var_index() const {
  if (kind() != Kind::Var) throw std::logic_error("var_index on a non-variable");
  return node_->var;
}

Formula Formula::child() const {
  if (kind() != Kind::Not) throw std::logic_error("child on a non-negation");
  return Formula(node_->a);
}

Formula Formula::lhs() const {
  if (!is_binary(kind())) throw std::logic_error("lhs on a non-binary formula");
  return Formula(node_->a);
}

Formula Formula::rhs() const {
  if (!is_binary(kind())) throw std::logic_error("rhs on a non-binary formula");
  return Formula(node_->b);
}

int Formula::max_var() const {
  switch (kind()) {
    case Kind::Var: return node_->var;
    case Kind::Bot:
    case Kind::Top: return 0;
    case Kind::Not: return child().max_var();
    default: return std::max(lhs().max_var(), rhs().max_var());
  }
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::Var: return node_->var == other.node_->var;
    case Kind::Bot:
    case Kind::Top: return true;
    case Kind::Not: return child() == other.child();
    default: return lhs() == other.lhs() && rhs() == other.rhs();
  }
}

std::string Formula::str() const {
  std::string out;
  auto emit = [&out](auto&& self, const Formula& f) -> void {
    const int lv = level(f.kind());
    switch (f.kind()) {
      case Kind::Var:
        out += 'X';
        out += std::to_string(f.var_index());
        return;
      case Kind::Bot: out += '0'; return;
      case Kind::Top: out += '1'; return;
      case Kind::Not: {
        out += '!';
        Formula c = f.child();
        if (level(c.kind()) > lv) {
          out += '(';
          self(self, c);
          out += ')';
        } else {
          self(self, c);
        }
        return;
      }
      default: break;
    }
    Formula a = f.lhs(), b = f.rhs();
    const bool right_assoc = f.kind() == Kind::Implies;
    const int la = level(a.kind()), lb = level(b.kind());
    const bool pa = right_assoc ? la >= lv : la > lv;
    const bool pb = right_assoc ? lb > lv : lb >= lv;
    if (pa) out += '(';
    self(self, a);
    if (pa) out += ')';
    out += token(f.kind());
    if (pb) out += '(';
    self(self, b);
    if (pb) out += ')';
  };
  emit(emit, *this);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

enum class Tok { Var, Zero, One, Not, And, Or, StrongAnd, StrongOr, Minus, Arrow, Iff, LParen, RParen, End };

struct Lexeme {
  Tok tok;
  size_t pos;
  int var = 0;
};

struct Lexer {
  std::string_view s;
  size_t i = 0;

  bool starts(std::string_view pat) const { return s.substr(i, pat.size()) == pat; }

  Lexeme next() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\n' || s[i] == '\r')) ++i;
    const size_t at = i;
    if (i >= s.size()) return {Tok::End, at};
    struct Sym {
      std::string_view pat;
      Tok tok;
    };
    // Multi-character tokens first.
    static const Sym syms[] = {
        {"<->", Tok::Iff},      {"->", Tok::Arrow},     {"↔", Tok::Iff},
        {"→", Tok::Arrow}, {"¬", Tok::Not},   {"∧", Tok::And},
        {"∨", Tok::Or},    {"⊙", Tok::StrongAnd}, {"⊕", Tok::StrongOr},
        {"⊖", Tok::Minus}, {"⊥", Tok::Zero},  {"⊤", Tok::One},
        {"!", Tok::Not},        {"&", Tok::And},        {"|", Tok::Or},
        {"*", Tok::StrongAnd},  {"+", Tok::StrongOr},   {"-", Tok::Minus},
        {"(", Tok::LParen},     {")", Tok::RParen},     {"0", Tok::Zero},
        {"1", Tok::One},
    };
    for (const auto& sym : syms)
      if (starts(sym.pat)) {
        i += sym.pat.size();
        return {sym.tok, at};
      }
    if (s[i] == 'X' || s[i] == 'x') {
      size_t j = i + 1;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      if (j == i + 1) throw FormulaParseError("variable needs an index", at);
      if (j - i - 1 > 6) throw FormulaParseError("variable index too large", at);
      int v = std::stoi(std::string(s.substr(i + 1, j - i - 1)));
      if (v < 1) throw FormulaParseError("variable index must be at least 1", at);
      i = j;
      return {Tok::Var, at, v};
    }
    throw FormulaParseError("unexpected character", at);
  }
};

struct Parser {
  Lexer lex;
  Lexeme cur;

  explicit Parser(std::string_view s) : lex{s} { cur = lex.next(); }

  void advance() { cur = lex.next(); }

  Formula parse_iff() {
    Formula f = parse_impl();
    while (cur.tok == Tok::Iff) {
      advance();
      f = Formula::iff(std::move(f), parse_impl());
    }
    return f;
  }

  Formula parse_impl() {
    Formula f = parse_sum();
    if (cur.tok == Tok::Arrow) {
      advance();
      return Formula::implies(std::move(f), parse_impl());
    }
    return f;
  }

  Formula parse_sum() {
    Formula f = parse_prod();
    while (cur.tok == Tok::Or || cur.tok == Tok::StrongOr) {
      Tok t = cur.tok;
      advance();
      Formula g = parse_prod();
      f = t == Tok::Or ? Formula::disj(std::move(f), std::move(g))
                       : Formula::strong_disj(std::move(f), std::move(g));
    }
    return f;
  }

  Formula parse_prod() {
    Formula f = parse_unary();
    while (cur.tok == Tok::And || cur.tok == Tok::StrongAnd || cur.tok == Tok::Minus) {
      Tok t = cur.tok;
      advance();
      Formula g = parse_unary();
      switch (t) {
        case Tok::And: f = Formula::conj(std::move(f), std::move(g)); break;
        case Tok::StrongAnd: f = Formula::strong_conj(std::move(f), std::move(g)); break;
        default: f = Formula::minus(std::move(f), std::move(g)); break;
      }
    }
    return f;
  }

  Formula parse_unary() {
    if (cur.tok == Tok::Not) {
      advance();
      return Formula::negation(parse_unary());
    }
    return parse_atom();
  }

  Formula parse_atom() {
    switch (cur.tok) {
      case Tok::Var: {
        int v = cur.var;
        advance();
        return Formula::var(v);
      }
      case Tok::Zero: advance(); return Formula::bot();
      case Tok::One: advance(); return Formula::top();
      case Tok::LParen: {
        advance();
        Formula f = parse_iff();
        if (cur.tok != Tok::RParen) throw FormulaParseError("expected ')'", cur.pos);
        advance();
        return f;
      }
      case Tok::End: throw FormulaParseError("unexpected end of input", cur.pos);
      default: throw FormulaParseError("expected a formula", cur.pos);
    }
  }
};

} // namespace

Formula parse_formula(std::string_view text) {
  Parser p(text);
  Formula f = p.parse_iff();
  if (p.cur.tok != Tok::End) throw FormulaParseError("trailing input", p.cur.pos);
  return f;
}

} // namespace tribasis
