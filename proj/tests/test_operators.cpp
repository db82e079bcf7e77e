#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracalc/errors.hpp"
#include "fracalc/expr.hpp"
#include "fracalc/operators.hpp"

using namespace fracalc;

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kTable1AtOne = 1.329278600918967;

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

DerivativeProvider jp(const char* text) { return jet_provider(parse(text)); }

PointFunction fn(const char* text) {
  return [e = parse(text)](double x) { return eval(e, x); };
}

EvalConfig with_terms(int n) {
  EvalConfig cfg;
  cfg.max_terms = n;
  return cfg;
}

}  // namespace

TEST_CASE("series_integral") {
  const EvalConfig cfg;
  CHECK(rel(series_integral(jp("x^2"), 1.0, 1.0, cfg).value, 1.0 / 3.0) < 1e-14);
  CHECK(rel(series_integral(jp("exp(x)"), 1.0, 1.0, cfg).value, std::exp(1.0) - 1.0) < 1e-14);
  // Gamma(3)/Gamma(3.5), mpmath.
  CHECK(rel(series_integral(jp("x^2"), 0.5, 1.0, cfg).value, 0.60180222245094004) < 1e-14);
  CHECK_THROWS_AS(series_integral(jp("x^2"), 0.0, 1.0, cfg), std::invalid_argument);
  CHECK_THROWS_AS(series_integral(jp("x^2"), 0.5, -1.0, cfg), DomainError);
}

TEST_CASE("first_order_integral_from_a") {
  const auto ln = jp("ln(x)");
  const SeriesReport r = first_order_integral_from_a(ln, ln, 1.0, 2.0, with_terms(5000));
  CHECK(rel(r.value, 2.0 * std::log(2.0) - 1.0) < 1e-3);

  const auto ex = jp("exp(sin(x))");
  const SeriesReport same = first_order_integral_from_a(ex, ex, 0.7, 0.7, EvalConfig{});
  CHECK(same.value == 0.0);
  CHECK(same.verdict == Verdict::converged);

  const auto sq = jp("x^2");
  CHECK(rel(first_order_integral_from_a(sq, sq, 1.0, 2.0, EvalConfig{}).value, 7.0 / 3.0) < 1e-14);
  // Reversed bounds flip the sign.
  CHECK(rel(first_order_integral_from_a(sq, sq, 2.0, 1.0, EvalConfig{}).value, -7.0 / 3.0) < 1e-14);
}

TEST_CASE("nfold_integral") {
  const EvalConfig cfg;
  CHECK(rel(nfold_integral(jp("1"), 2, 1.0, cfg).value, 0.5) < 1e-15);
  CHECK(rel(nfold_integral(jp("x"), 2, 1.0, cfg).value, 1.0 / 6.0) < 1e-15);
  CHECK(rel(nfold_integral(jp("x^2"), 1, 1.0, cfg).value, 1.0 / 3.0) < 1e-15);
  // Three-fold integral of exp from 0: e^x - 1 - x - x^2/2.
  CHECK(rel(nfold_integral(jp("exp(x)"), 3, 1.2, cfg).value, std::exp(1.2) - 1.0 - 1.2 - 0.72) < 1e-12);
  CHECK_THROWS_AS(nfold_integral(jp("x"), 0, 1.0, cfg), std::invalid_argument);
}

TEST_CASE("series_derivative") {
  CHECK(rel(series_derivative(jp("x^2"), kThird, 1.0, with_terms(3)).value, kTable1AtOne) < 1e-15);
  const SeriesReport first = series_derivative(jp("x^2"), 1.0, 3.0, EvalConfig{});
  CHECK(first.value == 6.0);
  CHECK(first.terms_used == 1);

  // ln(4x)/sqrt(pi x) at x = 1.
  const SeriesReport ln = series_derivative(jp("ln(x)"), 0.5, 1.0, with_terms(2000));
  CHECK(std::abs(ln.value - 0.78213283827483395) < 1e-3);

  CHECK_THROWS_AS(series_derivative(jp("x"), 0.5, 0.0, EvalConfig{}), DomainError);
  CHECK_THROWS_AS(series_derivative(jp("x"), NAN, 1.0, EvalConfig{}), std::invalid_argument);
}

TEST_CASE("series_derivative_binomial_form") {
  const EvalConfig cfg;
  const double direct = series_derivative(jp("x^2"), kThird, 1.0, cfg).value;
  const double split = series_derivative_binomial_form(jp("x^2"), kThird, 1.0, cfg).value;
  CHECK(rel(split, kTable1AtOne) < 1e-12);
  CHECK(rel(split, direct) < 1e-12);
  // Gamma(3)/Gamma(2.5), mpmath.
  CHECK(rel(series_derivative_binomial_form(jp("x^2"), 0.5, 1.0, cfg).value, 1.5045055561273501) < 1e-13);

  const EvalConfig forty = with_terms(40);
  CHECK(rel(series_derivative_binomial_form(jp("exp(x)"), 0.5, 1.0, forty).value,
            series_derivative(jp("exp(x)"), 0.5, 1.0, forty).value) < 1e-10);
  CHECK(rel(series_derivative_binomial_form(jp("exp(x)"), 2.5, 0.8, forty).value,
            series_derivative(jp("exp(x)"), 2.5, 0.8, forty).value) < 1e-10);

  CHECK_THROWS_AS(series_derivative_binomial_form(jp("x^2"), 1.0, 1.0, cfg), std::invalid_argument);
  CHECK_THROWS_AS(series_derivative_binomial_form(jp("x^2"), -0.5, 1.0, cfg), std::invalid_argument);
}

TEST_CASE("gl_fractional") {
  const PointFunction sq = [](double t) { return t * t; };
  CHECK(gl_fractional(sq, 0.0, 0.7, 5, Side::left, true) == 0.7 * 0.7);
  CHECK(gl_fractional(sq, 0.0, 0.7, 5, Side::right, false) == 0.7 * 0.7);
  CHECK(std::abs(gl_fractional(sq, 1.0, 1.0, 256, Side::left, true) - 2.0) < 1e-4);

  const double nine = gl_fractional(sq, kThird, 1.0, 9, Side::left, true);
  CHECK(std::abs(nine - 1.3295) <= 0.005);
  CHECK(rel(nine, 1.329546485908133) < 1e-14);

  // The unshifted sum is first order in h; the shift buys a lot at N = 9.
  const double plain = gl_fractional(sq, kThird, 1.0, 9, Side::left, false);
  CHECK(std::abs(plain - kTable1AtOne) > 10.0 * std::abs(nine - kTable1AtOne));
  CHECK_THROWS_AS(gl_fractional(sq, kThird, 0.0, 9, Side::left, true), DomainError);
  CHECK_THROWS_AS(gl_fractional(sq, kThird, 1.0, 0, Side::left, true), std::invalid_argument);
}

TEST_CASE("rl_integral_quad") {
  CHECK(rel(rl_integral_quad([](double) { return 1.0; }, 0.5, 1.0), 1.1283791670955126) < 1e-13);
  CHECK(rel(rl_integral_quad([](double t) { return std::exp(t); }, 1.0, 1.0), std::exp(1.0) - 1.0) < 1e-14);
  CHECK(std::abs(rl_integral_quad([](double t) { return t * t; }, 0.5, 1.0) - 0.60180222245094004) < 1e-8);
  // alpha >= 1 goes through the direct kernel; (x - t)^1.5 is only C^1 at the
  // endpoint, which limits Gauss-Legendre to about 1e-11 here.
  CHECK(rel(rl_integral_quad([](double t) { return t * t; }, 2.5, 1.3), rl_power_rule(2.0, -2.5, 1.3)) < 1e-10);
  CHECK_THROWS_AS(rl_integral_quad([](double t) { return t; }, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("rl_derivative_quad") {
  const PointFunction sq = [](double t) { return t * t; };
  CHECK(std::abs(rl_derivative_quad(sq, kThird, 1.0, 64, 1e-3) - kTable1AtOne) < 1e-4);
  CHECK(std::abs(rl_derivative_quad(sq, 0.5, 1.0) - 1.5045055561273501) < 1e-4);
  CHECK(std::abs(rl_derivative_quad(sq, 1.5, 1.0) - rl_power_rule(2.0, 1.5, 1.0)) < 1e-4);

  const PointFunction ex = [](double t) { return std::exp(t); };
  const double series = series_derivative(jp("exp(x)"), 0.5, 0.5, EvalConfig{}).value;
  CHECK(std::abs(rl_derivative_quad(ex, 0.5, 0.5) - series) < 1e-4);

  CHECK_THROWS_AS(rl_derivative_quad(sq, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(rl_derivative_quad(sq, 0.5, 1e-3, 64, 0.01), DomainError);
}

TEST_CASE("product_derivative") {
  const EvalConfig cfg;
  const auto x = jp("x");
  CHECK(rel(product_derivative(x, x, kThird, 1.0, cfg).value, kTable1AtOne) < 1e-14);
  CHECK(rel(product_derivative(x, x, 1.0, 2.0, cfg).value, 4.0) < 1e-15);

  const auto ex = jp("exp(x)");
  CHECK(rel(product_derivative(ex, ex, 0.5, 0.5, cfg).value,
            series_derivative(jp("exp(2*x)"), 0.5, 0.5, cfg).value) < 1e-8);
}

TEST_CASE("combined_order_apply") {
  const EvalConfig cfg;
  const auto sq = jp("x^2");
  CHECK(rel(combined_order_apply(sq, 1.0, kThird, 1.0, kThird, 1.0, cfg).value, 2.0 * kTable1AtOne) < 1e-14);

  const auto ex = jp("exp(x)");
  CHECK(combined_order_apply(ex, 1.0, 0.4, 0.0, 0.9, 1.3, cfg).value ==
        doctest::Approx(series_derivative(ex, 0.4, 1.3, cfg).value).epsilon(1e-15));

  const double merged = combined_order_apply(ex, 2.0, 0.3, 3.0, 0.7, 1.0, cfg).value;
  const double separate =
      2.0 * series_derivative(ex, 0.3, 1.0, cfg).value + 3.0 * series_derivative(ex, 0.7, 1.0, cfg).value;
  CHECK(rel(merged, separate) < 1e-10);
}

TEST_CASE("ode_residual") {
  const PointFunction g = [](double x) {
    return std::log(4.0 * x) / std::sqrt(std::numbers::pi * x) + 1.0 / std::sqrt(x);
  };
  CHECK(std::abs(ode_residual(jp("ln(x)"), 0.5, 1.0, 1, g, 1.0, with_terms(2000))) <= 1e-3);

  const PointFunction zero = [](double) { return 0.0; };
  CHECK(ode_residual(jp("0"), 0.37, 2.0, 1, zero, 1.5, EvalConfig{}) == 0.0);

  const PointFunction power = [](double x) { return rl_power_rule(2.0, kThird, x); };
  CHECK(std::abs(ode_residual(jp("x^2"), kThird, 0.0, 0, power, 1.4, EvalConfig{})) <= 1e-12);
  CHECK(rel(power(1.4), 2.328963807359781) < 1e-15);
}
