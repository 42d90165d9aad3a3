#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bub/binom.hpp"
#include "bub/error.hpp"

namespace bub {

/// Formal polynomial expression over generator names, as written in problem
/// files: integers, identifiers, + - * ^ and parentheses. Names are resolved
/// only when the expression is normalized in a concrete ring.
class Expr {
 public:
  enum class Op { Number, Name, Add, Sub, Mul, Neg, Pow };

  static Expr number(Integer v);
  static Expr name(std::string id, int column = 0);
  static Expr binary(Op op, Expr lhs, Expr rhs);
  static Expr negate(Expr operand);
  static Expr power(Expr base, std::uint32_t exponent);

  Op op() const noexcept { return node_->op; }
  const Integer& value() const { return node_->value; }
  const std::string& identifier() const { return node_->id; }
  int column() const noexcept { return node_->column; }
  std::uint32_t exponent() const noexcept { return node_->exponent; }
  const Expr& lhs() const { return node_->children.at(0); }
  const Expr& rhs() const { return node_->children.at(1); }

  /// Every identifier referenced, in order of first appearance.
  std::vector<std::string> names() const;

 private:
  struct Node {
    Op op = Op::Number;
    Integer value;
    std::string id;
    int column = 0;
    std::uint32_t exponent = 0;
    std::vector<Expr> children;
  };
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses a polynomial expression. Errors are SyntaxError with a 1-based
/// column relative to `text`.
Expr parse_expr(std::string_view text);

bool is_identifier(std::string_view s);

}  // namespace bub
