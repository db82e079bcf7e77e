#pragma once

#include <functional>

#include <Eigen/Core>

#include "fracalc/expr.hpp"

namespace fracalc {

using PointFunction = std::function<double(double)>;

/// Grid for the forward-difference derivative kernel. h = x/N, anchored at 0.
struct GLGridConfig {
  int iterations = 128;
  bool use_shift = true;
};

/// Source of higher derivatives of an operand f.
///
/// derivs(x, K) returns [f(x), f'(x), ..., f^(K)(x)]. scaled_taylor(x, K)
/// returns c_k = f^(k)(x) x^k / k!, the form the series operators consume;
/// it stays finite for orders where the raw derivatives overflow. Backends
/// that only know derivs get scaled_taylor computed from it.
///
/// Both calls are deterministic and the provider is immutable, so it can be
/// shared across threads.
class DerivativeProvider {
 public:
  using DerivsFn = std::function<Eigen::VectorXd(double, int)>;

  explicit DerivativeProvider(DerivsFn derivs, DerivsFn scaled_taylor = {});

  Eigen::VectorXd derivs(double x, int order) const;
  Eigen::VectorXd scaled_taylor(double x, int order) const;

 private:
  DerivsFn derivs_;
  DerivsFn scaled_;
};

/// Derivatives from Taylor jets of e.
DerivativeProvider jet_provider(Expr e);

/// Derivatives from a user-supplied closed form. fn(x, K) must return K + 1
/// entries.
DerivativeProvider analytic_provider(DerivativeProvider::DerivsFn fn);

/// Integer-order derivative f^(n)(x) by the forward-difference kernel
///
///   h = x/N, p_k = x - n h/2 + k h (k = 0..N-1),
///   f^(n)(x) ~ (-1/h)^n sum_k (-1)^k C(n, k) f(p_k).
///
/// The loop runs over all N points in ascending order even though C(n, k)
/// vanishes for k > n. Requires x > 0 and n <= N. Without the shift the grid
/// starts at x and the scheme degrades to a one-sided difference.
double gl_integer_derivative(const PointFunction& f, int n, double x, int iterations,
                             bool use_shift = true);

/// derivs(x, K)[k] = gl_integer_derivative(f, k, x, cfg.iterations, cfg.use_shift).
DerivativeProvider numeric_provider(PointFunction f, GLGridConfig cfg = {});

}  // namespace fracalc
