#include "bub/expr.hpp"

#include <cctype>

namespace bub {

Expr Expr::number(Integer v) {
  auto n = std::make_shared<Node>();
  n->op = Op::Number;
  n->value = std::move(v);
  return Expr(std::move(n));
}

Expr Expr::name(std::string id, int column) {
  auto n = std::make_shared<Node>();
  n->op = Op::Name;
  n->id = std::move(id);
  n->column = column;
  return Expr(std::move(n));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->children = {std::move(lhs), std::move(rhs)};
  return Expr(std::move(n));
}

Expr Expr::negate(Expr operand) {
  auto n = std::make_shared<Node>();
  n->op = Op::Neg;
  n->children = {std::move(operand)};
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, std::uint32_t exponent) {
  auto n = std::make_shared<Node>();
  n->op = Op::Pow;
  n->exponent = exponent;
  n->children = {std::move(base)};
  return Expr(std::move(n));
}

std::vector<std::string> Expr::names() const {
  std::vector<std::string> out;
  auto visit = [&out](const Expr& e, auto& self) -> void {
    if (e.op() == Op::Name) {
      for (const auto& s : out)
        if (s == e.identifier()) return;
      out.push_back(e.identifier());
    }
    for (const auto& c : e.node_->children) self(c, self);
  };
  visit(*this, visit);
  return out;
}

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

namespace {

// expr   := term (('+'|'-') term)*
// term   := unary ('*' unary)*
// unary  := '-' unary | factor
// factor := atom ('^' integer)?
// atom   := integer | identifier | '(' expr ')'
class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip_ws();
    if (at_end()) fail("empty expression");
    Expr e = expr();
    skip_ws();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::SyntaxError, msg, SourcePos{0, static_cast<int>(pos_) + 1});
  }
  bool at_end() const { return pos_ >= text_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr expr() {
    Expr acc = term();
    for (;;) {
      if (accept('+'))
        acc = Expr::binary(Expr::Op::Add, acc, term());
      else if (accept('-'))
        acc = Expr::binary(Expr::Op::Sub, acc, term());
      else
        return acc;
    }
  }

  Expr term() {
    Expr acc = unary();
    while (accept('*')) acc = Expr::binary(Expr::Op::Mul, acc, unary());
    return acc;
  }

  Expr unary() {
    if (accept('-')) return Expr::negate(unary());
    return factor();
  }

  Expr factor() {
    Expr base = atom();
    if (accept('^')) {
      skip_ws();
      auto digits = read_digits();
      if (digits.empty()) fail("expected exponent after '^'");
      if (digits.size() > 9) fail("exponent too large");
      base = Expr::power(base, static_cast<std::uint32_t>(std::stoul(std::string(digits))));
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    if (at_end()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Expr::number(Integer(std::string(read_digits())));
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      int col = static_cast<int>(pos_) + 1;
      std::size_t start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      return Expr::name(std::string(text_.substr(start, pos_ - start)), col);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace bub
