#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace fracalc {

enum class Op { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow, Exp, Ln, Sin, Cos };

/// Immutable expression tree of a univariate real function f(x).
///
/// Nodes are shared, so copies are cheap and an Expr may be evaluated from
/// any number of threads. Pow carries its exponent as a real literal; it is
/// not an expression.
class Expr {
 public:
  static Expr constant(double value);
  static Expr variable();
  static Expr unary(Op op, Expr arg);
  static Expr binary(Op op, Expr lhs, Expr rhs);
  static Expr power(Expr base, double exponent);

  Op op() const noexcept;
  /// Constant value, or the exponent of a Pow node.
  double value() const noexcept;
  std::size_t arity() const noexcept;
  const Expr& arg(std::size_t i) const;

  bool depends_on_x() const noexcept;

  /// Fully parenthesized infix rendering.
  std::string str() const;

  double operator()(double x) const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Expr::Node {
  Op op;
  double value = 0.0;
  std::vector<Expr> args;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);

/// Parses text per the grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := NUMBER | 'x' | 'pi' | 'e' | FUNC '(' expr ')' | '(' expr ')'
///   FUNC   := 'exp' | 'ln' | 'sin' | 'cos'
///
/// The exponent of '^' must be free of x; it is folded to a literal.
/// Throws SyntaxError or UnknownIdentifier.
Expr parse(std::string_view text);

/// Pointwise value. Throws DomainError for ln of a non-positive argument,
/// division by zero, 0 to a negative power and non-integer powers of
/// negative numbers.
double eval(const Expr& e, double x);

}  // namespace fracalc
