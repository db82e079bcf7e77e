#include "fracalc/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "fracalc/errors.hpp"

namespace fracalc {

namespace {

constexpr double kIntegerSlack = 1e-9;

bool near_integer(double x) noexcept { return std::abs(x - std::round(x)) <= kIntegerSlack; }

}  // namespace

FracOrder FracOrder::from(double alpha) {
  if (!std::isfinite(alpha)) {
    throw std::invalid_argument("fractional order must be finite");
  }
  FracOrder order;
  order.alpha = alpha;
  order.ceil_order = alpha > 0.0 ? static_cast<int>(std::ceil(alpha)) : 0;
  return order;
}

bool FracOrder::is_integer() const noexcept { return alpha == std::round(alpha); }

bool FracOrder::is_nonnegative_integer() const noexcept { return alpha >= 0.0 && is_integer(); }

bool is_gamma_pole(double x) noexcept { return x <= kIntegerSlack && near_integer(x); }

double gamma(double x) { return std::tgamma(x); }

double rgamma(double x) noexcept {
  if (is_gamma_pole(x)) {
    return 0.0;
  }
  // tgamma overflows to +inf past ~171.6, giving the correct limit 0.
  return 1.0 / std::tgamma(x);
}

double gen_binomial(double alpha, int k) noexcept {
  double b = 1.0;
  const double k2 = alpha + 1.0;
  double p = 1.0;
  for (int c = 1; c <= k; ++c) {
    b *= k2 / p - 1.0;
    p += 1.0;
  }
  return b;
}

double falling_factorial(double x, int n) noexcept {
  double product = 1.0;
  for (int k = 1; k <= n; ++k) {
    product *= x - (k - 1);
  }
  return product;
}

double rl_power_rule(double mu, double alpha, double x) {
  if (!(x > 0.0)) {
    throw DomainError("rl_power_rule: x must be > 0");
  }
  if (!(mu > -1.0)) {
    throw DomainError("rl_power_rule: mu must be > -1");
  }
  return std::tgamma(mu + 1.0) * rgamma(mu + 1.0 - alpha) * std::pow(x, mu - alpha);
}

}  // namespace fracalc
