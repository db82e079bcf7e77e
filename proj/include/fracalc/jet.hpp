#pragma once

#include <Eigen/Core>

#include "fracalc/expr.hpp"

namespace fracalc {

/// Truncated Taylor expansion of f about x0 in the scaled variable t,
/// f(x0 + step * t) = sum_k coeffs[k] t^k. With step = 1 the coefficients are
/// the usual f^(k)(x0)/k!.
struct Jet {
  double x0 = 0.0;
  double step = 1.0;
  Eigen::VectorXd coeffs;

  int order() const noexcept { return static_cast<int>(coeffs.size()) - 1; }

  /// f^(k)(x0) = k! coeffs[k] / step^k.
  double derivative(int k) const;
};

/// Taylor coefficients of e through `order` by jet arithmetic (Cauchy
/// products and the usual recurrences for /, exp, ln, pow, sin, cos).
///
/// coeffs[0] is computed by the same scalar kernels as eval(), so it equals
/// eval(e, x0) bit for bit. Throws DomainError where eval would, or where the
/// function is not differentiable (non-integer power of 0), and
/// ArithmeticError if any coefficient is non-finite.
Jet jet_eval(const Expr& e, double x0, int order, double step = 1.0);

}  // namespace fracalc
