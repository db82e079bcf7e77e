#pragma once

// Fractional integrals and derivatives anchored at 0.
//
// The series operators expand the operator at x in derivatives of f at the
// same point:
//
//   I^a f(x) = 1/Gamma(a) sum_k (-1)^k x^(k+a) / (k! (k+a)) f^(k)(x)
//   D^a f(x) = sum_k C(a, k) x^(k-a) / Gamma(k-a+1) f^(k)(x)
//
// Grunwald-Letnikov and Riemann-Liouville quadrature versions are provided as
// independent references. Every operator requires x > 0 and throws
// DomainError otherwise.

#include "fracalc/convergence.hpp"
#include "fracalc/providers.hpp"
#include "fracalc/specfun.hpp"

namespace fracalc {

enum class Method { series, gl, rl_quad };
enum class Side { left, right };

struct EvalConfig {
  /// Read by dispatchers that pick an operator; the operators below take the
  /// order as an explicit argument.
  FracOrder order;
  int max_terms = 256;
  double rel_tol = 1e-15;
  Method method = Method::series;
  GLGridConfig gl;
  int quad_points = 64;

  StopRule stop_rule() const;
};

/// Fractional integral of order alpha > 0. Reduces to the repeated-integral
/// series for integer alpha.
SeriesReport series_integral(const DerivativeProvider& p, double alpha, double x, const EvalConfig& cfg);

/// Ordinary integral of f from a to x, as the difference of the two
/// expansions at x and at a. a > 0.
SeriesReport first_order_integral_from_a(const DerivativeProvider& p_at_x, const DerivativeProvider& p_at_a,
                                         double a, double x, const EvalConfig& cfg);

/// n-fold repeated integral from 0, n >= 1.
SeriesReport nfold_integral(const DerivativeProvider& p, int n, double x, const EvalConfig& cfg);

/// Fractional derivative of any real order; negative alpha is the fractional
/// integral of order -alpha.
///
/// For alpha in {0, 1, 2, ...} the series collapses to its single surviving
/// term, and the result is p.derivs(x, alpha)[alpha] exactly.
SeriesReport series_derivative(const DerivativeProvider& p, double alpha, double x, const EvalConfig& cfg);

/// Same operator from the double sum over b = 0..n, n = ceil(alpha), before
/// regrouping by derivative order. alpha must be positive and non-integer
/// (std::invalid_argument otherwise). Term k of the report is the inner sum
/// over b at that k.
SeriesReport series_derivative_binomial_form(const DerivativeProvider& p, double alpha, double x,
                                             const EvalConfig& cfg);

/// Truncated Grunwald-Letnikov sum on h = x/N with a real h^-alpha prefactor.
/// With use_shift the grid moves by s = alpha h / 2 against the direction of
/// the sum:
///
///   left:  h^-alpha sum_{k<N} (-1)^k C(alpha, k) f(x + s - k h)
///   right: h^-alpha sum_{k<N} (-1)^k C(alpha, k) f(x - s + k h)
double gl_fractional(const PointFunction& f, double alpha, double x, int iterations, Side side, bool use_shift);

/// Riemann-Liouville integral by composite Gauss-Legendre. For alpha < 1 the
/// substitution s = (x - t)^alpha removes the endpoint singularity; for
/// alpha >= 1 the kernel is already bounded and is integrated directly.
double rl_integral_quad(const PointFunction& f, double alpha, double x, int quad_points = 64);

/// d^n/dx^n I^(n-alpha) f with n = ceil(alpha), the outer derivative by an
/// n-th order central difference of step fd_step (default 1e-3 x).
/// alpha must be positive and non-integer.
double rl_derivative_quad(const PointFunction& f, double alpha, double x, int quad_points = 64,
                          double fd_step = 0.0);

/// D^alpha (f g) through the Leibniz expansion of (f g)^(k).
SeriesReport product_derivative(const DerivativeProvider& pf, const DerivativeProvider& pg, double alpha, double x,
                                const EvalConfig& cfg);

/// a D^alpha f + b D^beta f summed as one series over k with falling-factorial
/// weights.
SeriesReport combined_order_apply(const DerivativeProvider& p, double a, double alpha, double b, double beta,
                                  double x, const EvalConfig& cfg);

/// D^alpha u(x) + b x^(k - alpha) u^(k)(x) - g(x), the fractional part
/// from the truncated derivative series.
double ode_residual(const DerivativeProvider& pu, double alpha, double b, int k, const PointFunction& g, double x,
                    const EvalConfig& cfg);

}  // namespace fracalc
