#include "fracalc/expr.hpp"

#include <cctype>
#include <charconv>
#include <numbers>
#include <stdexcept>

#include "fracalc/errors.hpp"
#include "scalar_ops.hpp"

namespace fracalc {

Expr Expr::constant(double value) {
  return Expr(std::make_shared<const Node>(Node{Op::Constant, value, {}}));
}

Expr Expr::variable() { return Expr(std::make_shared<const Node>(Node{Op::Variable, 0.0, {}})); }

Expr Expr::unary(Op op, Expr arg) {
  switch (op) {
    case Op::Neg:
    case Op::Exp:
    case Op::Ln:
    case Op::Sin:
    case Op::Cos: break;
    default: throw std::invalid_argument("Expr::unary: op is not unary");
  }
  return Expr(std::make_shared<const Node>(Node{op, 0.0, {std::move(arg)}}));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  switch (op) {
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: break;
    default: throw std::invalid_argument("Expr::binary: op is not binary");
  }
  return Expr(std::make_shared<const Node>(Node{op, 0.0, {std::move(lhs), std::move(rhs)}}));
}

Expr Expr::power(Expr base, double exponent) {
  return Expr(std::make_shared<const Node>(Node{Op::Pow, exponent, {std::move(base)}}));
}

Op Expr::op() const noexcept { return node_->op; }
double Expr::value() const noexcept { return node_->value; }
std::size_t Expr::arity() const noexcept { return node_->args.size(); }
const Expr& Expr::arg(std::size_t i) const { return node_->args.at(i); }

bool Expr::depends_on_x() const noexcept {
  if (op() == Op::Variable) {
    return true;
  }
  for (const auto& a : node_->args) {
    if (a.depends_on_x()) {
      return true;
    }
  }
  return false;
}

namespace {

std::string format_number(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

const char* op_name(Op op) {
  switch (op) {
    case Op::Exp: return "exp";
    case Op::Ln: return "ln";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    default: return "?";
  }
}

}  // namespace

std::string Expr::str() const {
  switch (op()) {
    case Op::Constant: return format_number(value());
    case Op::Variable: return "x";
    case Op::Neg: return "(-" + arg(0).str() + ")";
    case Op::Pow: return "(" + arg(0).str() + "^" + format_number(value()) + ")";
    case Op::Exp:
    case Op::Ln:
    case Op::Sin:
    case Op::Cos: return std::string(op_name(op())) + "(" + arg(0).str() + ")";
    default: return "(" + arg(0).str() + op_name(op()) + arg(1).str() + ")";
  }
}

double Expr::operator()(double x) const { return eval(*this, x); }

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_ == b.node_) {
    return true;
  }
  if (a.op() != b.op() || a.arity() != b.arity()) {
    return false;
  }
  if ((a.op() == Op::Constant || a.op() == Op::Pow) && a.value() != b.value()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.arg(i) == b.arg(i))) {
      return false;
    }
  }
  return true;
}

Expr operator+(Expr a, Expr b) { return Expr::binary(Op::Add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(Op::Sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(Op::Mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(Op::Div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::unary(Op::Neg, std::move(a)); }

double eval(const Expr& e, double x) {
  switch (e.op()) {
    case Op::Constant: return e.value();
    case Op::Variable: return x;
    case Op::Pow: return detail::scalar_pow(eval(e.arg(0), x), e.value());
    case Op::Neg:
    case Op::Exp:
    case Op::Ln:
    case Op::Sin:
    case Op::Cos: return detail::scalar_unary(e.op(), eval(e.arg(0), x));
    default: return detail::scalar_binary(e.op(), eval(e.arg(0), x), eval(e.arg(1), x));
  }
}

// ---------------------------------------------------------------------------
// Recursive-descent parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    if (text_.find_first_not_of(" \t\r\n") == std::string_view::npos) {
      throw SyntaxError("empty expression", 0);
    }
    Expr e = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) {
      throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) {
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    }
  }

  Expr parse_expr() {
    Expr lhs = parse_term();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + parse_term();
      } else if (accept('-')) {
        lhs = lhs - parse_term();
      } else {
        return lhs;
      }
    }
  }

  Expr parse_term() {
    Expr lhs = parse_factor();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * parse_factor();
      } else if (accept('/')) {
        lhs = lhs / parse_factor();
      } else {
        return lhs;
      }
    }
  }

  Expr parse_factor() {
    if (accept('-')) {
      return -parse_factor();
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_atom();
    if (!accept('^')) {
      return base;
    }
    skip_ws();
    const std::size_t at = pos_;
    Expr exponent = parse_factor();
    if (exponent.depends_on_x()) {
      throw SyntaxError("exponent must be constant", at);
    }
    double folded = 0.0;
    try {
      folded = eval(exponent, 0.0);
    } catch (const DomainError& e) {
      throw SyntaxError(std::string("exponent is undefined: ") + e.what(), at);
    }
    return Expr::power(std::move(base), folded);
  }

  Expr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw SyntaxError("unexpected end of input", pos_);
    }
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      return Expr::constant(parse_number());
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return parse_identifier();
    }
    if (accept('(')) {
      Expr inner = parse_expr();
      expect(')');
      return inner;
    }
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  double parse_number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        ++n;
      }
      return n;
    };
    std::size_t mantissa = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      mantissa += digits();
    }
    if (mantissa == 0) {
      throw SyntaxError("malformed number", start);
    }
    // An exponent needs at least one digit; otherwise 'e' is left for the
    // next token.
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t look = pos_ + 1;
      if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) {
        ++look;
      }
      if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
        pos_ = look;
        digits();
      }
    }
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw SyntaxError("malformed number", start);
    }
    return value;
  }

  Expr parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "x") {
      return Expr::variable();
    }
    if (name == "pi") {
      return Expr::constant(std::numbers::pi);
    }
    if (name == "e") {
      return Expr::constant(std::numbers::e);
    }
    Op fn;
    if (name == "exp") {
      fn = Op::Exp;
    } else if (name == "ln") {
      fn = Op::Ln;
    } else if (name == "sin") {
      fn = Op::Sin;
    } else if (name == "cos") {
      fn = Op::Cos;
    } else {
      throw UnknownIdentifier(std::string(name), start);
    }
    expect('(');
    Expr arg = parse_expr();
    expect(')');
    return Expr::unary(fn, std::move(arg));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

}  // namespace fracalc
