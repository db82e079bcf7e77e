#pragma once

// Scalar kernels shared by the pointwise evaluator and the order-0 entry of
// Taylor jets, so both paths round identically.

#include <cmath>
#include <stdexcept>

#include "fracalc/errors.hpp"
#include "fracalc/expr.hpp"

namespace fracalc::detail {

inline bool is_integer_exponent(double r) noexcept { return std::isfinite(r) && r == std::round(r); }

inline double scalar_div(double a, double b) {
  if (b == 0.0) {
    throw DomainError("division by zero");
  }
  return a / b;
}

inline double scalar_ln(double a) {
  if (!(a > 0.0)) {
    throw DomainError("ln of non-positive argument");
  }
  return std::log(a);
}

inline double scalar_pow(double base, double exponent) {
  if (is_integer_exponent(exponent)) {
    if (base == 0.0 && exponent < 0.0) {
      throw DomainError("0 raised to a negative power");
    }
  } else if (base < 0.0) {
    throw DomainError("non-integer power of a negative base");
  }
  return std::pow(base, exponent);
}

inline double scalar_unary(Op op, double a) {
  switch (op) {
    case Op::Neg: return -a;
    case Op::Exp: return std::exp(a);
    case Op::Ln: return scalar_ln(a);
    case Op::Sin: return std::sin(a);
    case Op::Cos: return std::cos(a);
    default: break;
  }
  throw std::logic_error("scalar_unary: not a unary op");
}

inline double scalar_binary(Op op, double a, double b) {
  switch (op) {
    case Op::Add: return a + b;
    case Op::Sub: return a - b;
    case Op::Mul: return a * b;
    case Op::Div: return scalar_div(a, b);
    default: break;
  }
  throw std::logic_error("scalar_binary: not a binary op");
}

}  // namespace fracalc::detail
