#include "fracalc/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fracalc/errors.hpp"
#include "fracalc/quadrature.hpp"
#include "series_detail.hpp"

namespace fracalc {

StopRule EvalConfig::stop_rule() const {
  StopRule rule;
  rule.rel_tol = rel_tol;
  rule.max_terms = max_terms;
  rule.consecutive_small = std::min(rule.consecutive_small, max_terms);
  return rule;
}

namespace {

void require_positive_x(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": x must be > 0");
  }
}

double alternating(int k) noexcept { return k % 2 == 0 ? 1.0 : -1.0; }

}  // namespace

SeriesReport series_integral(const DerivativeProvider& p, double alpha, double x, const EvalConfig& cfg) {
  require_positive_x(x, "series_integral");
  FracOrder::from(alpha);
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("series_integral: alpha must be > 0");
  }
  const StopRule rule = cfg.stop_rule();
  const double scale = rgamma(alpha) * std::pow(x, alpha);
  detail::TaylorCache c(p, x, rule.max_terms);
  return run_series([&](int k) { return scale * alternating(k) * c[k] / (k + alpha); }, rule);
}

SeriesReport first_order_integral_from_a(const DerivativeProvider& p_at_x, const DerivativeProvider& p_at_a,
                                         double a, double x, const EvalConfig& cfg) {
  require_positive_x(x, "first_order_integral_from_a");
  require_positive_x(a, "first_order_integral_from_a (lower bound)");
  const StopRule rule = cfg.stop_rule();
  detail::TaylorCache cx(p_at_x, x, rule.max_terms);
  detail::TaylorCache ca(p_at_a, a, rule.max_terms);
  return run_series([&](int k) { return alternating(k) * (x * cx[k] - a * ca[k]) / (k + 1); }, rule);
}

SeriesReport nfold_integral(const DerivativeProvider& p, int n, double x, const EvalConfig& cfg) {
  require_positive_x(x, "nfold_integral");
  if (n < 1) {
    throw std::invalid_argument("nfold_integral: n must be >= 1");
  }
  const StopRule rule = cfg.stop_rule();
  const double scale = std::pow(x, n) / std::tgamma(static_cast<double>(n));
  detail::TaylorCache c(p, x, rule.max_terms);
  return run_series([&](int k) { return scale * alternating(k) * c[k] / (k + n); }, rule);
}

SeriesReport series_derivative(const DerivativeProvider& p, double alpha, double x, const EvalConfig& cfg) {
  require_positive_x(x, "series_derivative");
  const FracOrder order = FracOrder::from(alpha);
  const StopRule rule = cfg.stop_rule();

  if (order.is_nonnegative_integer()) {
    const int n = static_cast<int>(alpha);
    const double value = p.derivs(x, n)[n];
    if (!std::isfinite(value)) {
      throw ArithmeticError("non-finite series term", static_cast<std::size_t>(n));
    }
    SeriesReport report;
    report.value = value;
    report.term_magnitudes = {std::abs(value)};
    report.terms_used = 1;
    report.verdict = Verdict::converged;
    return report;
  }

  const double scale = std::pow(x, -alpha);
  detail::DerivativeWeights weights(alpha);
  detail::TaylorCache c(p, x, rule.max_terms);
  return run_series(
      [&](int k) {
        const double w = weights.next();
        return w == 0.0 ? 0.0 : scale * w * c[k];
      },
      rule);
}

SeriesReport series_derivative_binomial_form(const DerivativeProvider& p, double alpha, double x,
                                             const EvalConfig& cfg) {
  require_positive_x(x, "series_derivative_binomial_form");
  const FracOrder order = FracOrder::from(alpha);
  if (!(alpha > 0.0) || order.is_integer()) {
    throw std::invalid_argument("series_derivative_binomial_form: alpha must be positive and non-integer");
  }
  const int n = order.ceil_order;
  const StopRule rule = cfg.stop_rule();

  std::vector<double> outer(n + 1);
  for (int b = 0; b <= n; ++b) {
    outer[b] = gen_binomial(n, b);
  }
  // r_j = j!/Gamma(j + 1 - alpha) for j up to max_terms + n.
  std::vector<double> ratio;
  ratio.reserve(static_cast<std::size_t>(rule.max_terms + n));
  detail::FactorialGammaRatio ratio_gen(alpha);
  auto r = [&](int j) {
    while (static_cast<int>(ratio.size()) <= j) {
      ratio.push_back(ratio_gen.next());
    }
    return ratio[j];
  };

  const double scale = std::pow(x, -alpha);
  detail::BinomialSequence inner(alpha - n);
  detail::TaylorCache c(p, x, rule.max_terms + n);
  return run_series(
      [&](int k) {
        const double ck = inner.next();
        double sum = 0.0;
        for (int b = 0; b <= n; ++b) {
          sum += outer[b] * r(k + b) * c[k + b];
        }
        return scale * ck * sum;
      },
      rule);
}

double gl_fractional(const PointFunction& f, double alpha, double x, int iterations, Side side, bool use_shift) {
  require_positive_x(x, "gl_fractional");
  FracOrder::from(alpha);
  if (iterations < 1) {
    throw std::invalid_argument("gl_fractional: N must be >= 1");
  }
  const double h = x / static_cast<double>(iterations);
  const double shift = use_shift ? alpha * h / 2.0 : 0.0;
  const double direction = side == Side::left ? -1.0 : 1.0;
  const double start = x - direction * shift;

  double sum = 0.0;
  double sign = 1.0;
  detail::BinomialSequence binomial(alpha);
  for (int k = 0; k < iterations; ++k) {
    const double b = binomial.next();
    sum += sign * b * f(start + direction * k * h);
    sign = -sign;
  }
  return sum * std::pow(h, -alpha);
}

double rl_integral_quad(const PointFunction& f, double alpha, double x, int quad_points) {
  require_positive_x(x, "rl_integral_quad");
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw std::invalid_argument("rl_integral_quad: alpha must be > 0");
  }
  if (quad_points < 1) {
    throw std::invalid_argument("rl_integral_quad: quad_points must be >= 1");
  }
  if (alpha < 1.0) {
    const double inv = 1.0 / alpha;
    const double upper = std::pow(x, alpha);
    auto integrand = [&](double s) { return f(std::max(0.0, x - std::pow(s, inv))); };
    return rgamma(alpha + 1.0) * integrate(integrand, 0.0, upper, quad_points);
  }
  auto integrand = [&](double t) { return f(t) * std::pow(x - t, alpha - 1.0); };
  return rgamma(alpha) * integrate(integrand, 0.0, x, quad_points);
}

double rl_derivative_quad(const PointFunction& f, double alpha, double x, int quad_points, double fd_step) {
  require_positive_x(x, "rl_derivative_quad");
  const FracOrder order = FracOrder::from(alpha);
  if (!(alpha > 0.0) || order.is_integer()) {
    throw std::invalid_argument("rl_derivative_quad: alpha must be positive and non-integer");
  }
  const int n = order.ceil_order;
  const double step = fd_step > 0.0 ? fd_step : 1e-3 * x;
  if (!(x - 0.5 * n * step > 0.0)) {
    throw DomainError("rl_derivative_quad: difference stencil reaches x <= 0");
  }
  if (x + step == x) {
    throw std::invalid_argument("rl_derivative_quad: fd_step underflows at x");
  }
  double sum = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double y = x + (0.5 * n - j) * step;
    sum += alternating(j) * gen_binomial(n, j) * rl_integral_quad(f, n - alpha, y, quad_points);
  }
  return sum / std::pow(step, n);
}

SeriesReport product_derivative(const DerivativeProvider& pf, const DerivativeProvider& pg, double alpha, double x,
                                const EvalConfig& cfg) {
  require_positive_x(x, "product_derivative");
  FracOrder::from(alpha);
  const StopRule rule = cfg.stop_rule();
  const double scale = std::pow(x, -alpha);
  detail::DerivativeWeights weights(alpha);
  detail::TaylorCache cf(pf, x, rule.max_terms);
  detail::TaylorCache cg(pg, x, rule.max_terms);
  // In scaled coefficients the Leibniz sum sum_h C(k,h) f^(h) g^(k-h) x^k/k!
  // is the Cauchy product sum_h cf_h cg_(k-h).
  return run_series(
      [&](int k) {
        const double w = weights.next();
        if (w == 0.0) {
          return 0.0;
        }
        double leibniz = 0.0;
        for (int h = 0; h <= k; ++h) {
          leibniz += cf[h] * cg[k - h];
        }
        return scale * w * leibniz;
      },
      rule);
}

SeriesReport combined_order_apply(const DerivativeProvider& p, double a, double alpha, double b, double beta,
                                  double x, const EvalConfig& cfg) {
  require_positive_x(x, "combined_order_apply");
  FracOrder::from(alpha);
  FracOrder::from(beta);
  const StopRule rule = cfg.stop_rule();
  const double scale_a = a * std::pow(x, -alpha);
  const double scale_b = b * std::pow(x, -beta);
  // (alpha)_k Gamma(k+1-alpha)^-1 = C(alpha,k) k!/Gamma(k+1-alpha), generated
  // without forming the falling factorial itself.
  detail::DerivativeWeights wa(alpha);
  detail::DerivativeWeights wb(beta);
  detail::TaylorCache c(p, x, rule.max_terms);
  return run_series(
      [&](int k) {
        const double weight = scale_a * wa.next() + scale_b * wb.next();
        return weight == 0.0 ? 0.0 : weight * c[k];
      },
      rule);
}

double ode_residual(const DerivativeProvider& pu, double alpha, double b, int k, const PointFunction& g, double x,
                    const EvalConfig& cfg) {
  require_positive_x(x, "ode_residual");
  if (k < 0) {
    throw std::invalid_argument("ode_residual: k must be >= 0");
  }
  const double fractional = series_derivative(pu, alpha, x, cfg).value;
  const double uk = pu.derivs(x, k)[k];
  return fractional + b * std::pow(x, k - alpha) * uk - g(x);
}

}  // namespace fracalc
