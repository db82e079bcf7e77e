#pragma once

// Gamma-family helpers and the combinatorial coefficients that weight the
// fractional series.

namespace fracalc {

/// Operator order alpha together with n = ceil(alpha) (0 for alpha <= 0).
struct FracOrder {
  double alpha = 0.0;
  int ceil_order = 0;

  /// Throws std::invalid_argument for NaN or infinite alpha.
  static FracOrder from(double alpha);

  bool is_integer() const noexcept;
  /// True for alpha in {0, 1, 2, ...}.
  bool is_nonnegative_integer() const noexcept;
};

/// True when x lies within 1e-9 of a non-positive integer.
bool is_gamma_pole(double x) noexcept;

double gamma(double x);

/// 1/Gamma(x). Exactly 0 at the poles of Gamma.
double rgamma(double x) noexcept;

/// Generalized binomial coefficient C(alpha, k), evaluated by the iterative
/// product b *= (alpha + 1)/p - 1 for p = 1..k. For integer alpha = n >= 0
/// and k > n one factor is exactly zero.
double gen_binomial(double alpha, int k) noexcept;

/// Falling factorial x (x - 1) ... (x - n + 1); 1 for n = 0.
double falling_factorial(double x, int n) noexcept;

/// Closed form D^alpha x^mu = Gamma(mu + 1)/Gamma(mu + 1 - alpha) x^(mu - alpha)
/// for the operator anchored at 0. Negative alpha is the fractional integral.
/// Throws DomainError unless mu > -1 and x > 0.
double rl_power_rule(double mu, double alpha, double x);

}  // namespace fracalc
