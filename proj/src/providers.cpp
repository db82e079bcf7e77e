#include "fracalc/providers.hpp"

#include <cmath>
#include <stdexcept>

#include "fracalc/errors.hpp"
#include "fracalc/jet.hpp"
#include "fracalc/specfun.hpp"

namespace fracalc {

using Eigen::VectorXd;

namespace {

void check_order(int order) {
  if (order < 0) {
    throw std::invalid_argument("derivative order must be >= 0");
  }
}

VectorXd scale_derivatives(const VectorXd& d, double x) {
  VectorXd c(d.size());
  double factor = 1.0;  // x^k / k!
  for (Eigen::Index k = 0; k < d.size(); ++k) {
    if (k > 0) {
      factor *= x / static_cast<double>(k);
    }
    c[k] = d[k] == 0.0 ? 0.0 : d[k] * factor;
  }
  return c;
}

}  // namespace

DerivativeProvider::DerivativeProvider(DerivsFn derivs, DerivsFn scaled_taylor)
    : derivs_(std::move(derivs)), scaled_(std::move(scaled_taylor)) {
  if (!derivs_) {
    throw std::invalid_argument("DerivativeProvider: derivs function is empty");
  }
}

VectorXd DerivativeProvider::derivs(double x, int order) const {
  check_order(order);
  VectorXd d = derivs_(x, order);
  if (d.size() != order + 1) {
    throw std::logic_error("DerivativeProvider: backend returned wrong length");
  }
  return d;
}

VectorXd DerivativeProvider::scaled_taylor(double x, int order) const {
  check_order(order);
  if (!scaled_) {
    return scale_derivatives(derivs(x, order), x);
  }
  VectorXd c = scaled_(x, order);
  if (c.size() != order + 1) {
    throw std::logic_error("DerivativeProvider: backend returned wrong length");
  }
  return c;
}

DerivativeProvider jet_provider(Expr e) {
  auto derivs = [e](double x, int order) {
    const Jet jet = jet_eval(e, x, order);
    VectorXd d(order + 1);
    double factorial = 1.0;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) {
        factorial *= k;
      }
      d[k] = factorial * jet.coeffs[k];
    }
    return d;
  };
  // Expanding in t with x(t) = x (1 + t) gives c_k = f^(k)(x) x^k / k!
  // directly, with no factorials in sight.
  auto scaled = [e](double x, int order) { return jet_eval(e, x, order, x).coeffs; };
  return DerivativeProvider(std::move(derivs), std::move(scaled));
}

DerivativeProvider analytic_provider(DerivativeProvider::DerivsFn fn) {
  return DerivativeProvider(std::move(fn));
}

double gl_integer_derivative(const PointFunction& f, int n, double x, int iterations,
                             bool use_shift) {
  if (n < 0) {
    throw std::invalid_argument("gl_integer_derivative: order must be >= 0");
  }
  if (iterations < 1 || n > iterations) {
    throw std::invalid_argument("gl_integer_derivative: need 1 <= N and order <= N");
  }
  if (!(x > 0.0)) {
    throw DomainError("gl_integer_derivative: x must be > 0");
  }
  const double pow = n;
  const double h = x / static_cast<double>(iterations);
  const double correction = use_shift ? pow * h / 2.0 : 0.0;
  double pointshift = x - correction - h;
  double sign = 1.0;
  double sum = 0.0;
  for (int k = 0; k < iterations; ++k) {
    pointshift += h;
    sum += sign * gen_binomial(pow, k) * f(pointshift);
    sign *= -1.0;
  }
  return sum * std::pow(-1.0 / h, pow);
}

DerivativeProvider numeric_provider(PointFunction f, GLGridConfig cfg) {
  if (cfg.iterations < 1) {
    throw std::invalid_argument("numeric_provider: iterations must be >= 1");
  }
  auto derivs = [f = std::move(f), cfg](double x, int order) {
    VectorXd d(order + 1);
    for (int k = 0; k <= order; ++k) {
      d[k] = gl_integer_derivative(f, k, x, cfg.iterations, cfg.use_shift);
    }
    return d;
  };
  return DerivativeProvider(std::move(derivs));
}

}  // namespace fracalc
