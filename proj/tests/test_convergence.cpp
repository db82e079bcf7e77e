#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "fracalc/convergence.hpp"
#include "fracalc/errors.hpp"
#include "fracalc/expr.hpp"
#include "fracalc/operators.hpp"

using namespace fracalc;

namespace {

// Term k of the first-order integral series for f = 1/(1 - x):
// (-1)^k r^(k+1) / (k+1) with r = x/(1 - x).
TermSource geometric_integral_terms(double x) {
  const double r = x / (1.0 - x);
  return [r](int k) { return (k % 2 == 0 ? 1.0 : -1.0) * std::pow(r, k + 1) / (k + 1); };
}

}  // namespace

TEST_CASE("compensated summation") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 10; ++i) {
    s.add(1e-16);
  }
  s.add(-1.0);
  CHECK(s.value() == doctest::Approx(1e-15).epsilon(1e-12));
}

TEST_CASE("exp integral terms converge quickly") {
  // Terms of the first-order integral of exp at x = 1: (-1)^k e / (k+1)!.
  StopRule rule;
  rule.rel_tol = 1e-12;
  rule.max_terms = 100;
  const SeriesReport r = run_series(
      [](int k) { return (k % 2 == 0 ? 1.0 : -1.0) * std::exp(1.0) / std::tgamma(k + 2.0); }, rule);
  CHECK(r.verdict == Verdict::converged);
  CHECK(r.terms_used <= 20);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-12));
  CHECK(r.terms_used == static_cast<int>(r.term_magnitudes.size()));
}

TEST_CASE("zero terms converge after consecutive_small") {
  StopRule rule;
  const SeriesReport r = run_series([](int) { return 0.0; }, rule);
  CHECK(r.verdict == Verdict::converged);
  CHECK(r.terms_used == rule.consecutive_small);
  CHECK(r.value == 0.0);
}

TEST_CASE("geometric growth is flagged") {
  StopRule rule;
  rule.rel_tol = 1e-10;
  rule.max_terms = 40;
  const SeriesReport diverging = run_series(geometric_integral_terms(0.6), rule);
  CHECK(diverging.verdict == Verdict::diverging);
  CHECK(diverging.terms_used <= 40);

  const SeriesReport converging = run_series(geometric_integral_terms(0.3), rule);
  CHECK(converging.verdict == Verdict::converged);
  // ln(1 + r) with r = 3/7
  CHECK(converging.value == doctest::Approx(std::log(10.0 / 7.0)).epsilon(1e-9));
}

TEST_CASE("a Taylor hump is not divergence") {
  // 12^k/k! rises for twelve terms with a falling ratio, then decays.
  StopRule rule;
  rule.max_terms = 200;
  const SeriesReport r = run_series([](int k) { return std::pow(12.0, k) / std::tgamma(k + 1.0); }, rule);
  CHECK(r.verdict == Verdict::converged);
  CHECK(r.value == doctest::Approx(std::exp(12.0)).epsilon(1e-13));
}

TEST_CASE("max terms reached and determinism") {
  StopRule rule;
  rule.max_terms = 50;
  auto harmonic = [](int k) { return 1.0 / (k + 1.0) / (k + 1.0); };
  const SeriesReport a = run_series(harmonic, rule);
  const SeriesReport b = run_series(harmonic, rule);
  CHECK(a.verdict == Verdict::max_terms_reached);
  CHECK(a.terms_used == 50);
  CHECK(a.value == b.value);
  CHECK(a.term_magnitudes == b.term_magnitudes);
}

TEST_CASE("non-finite terms abort with their index") {
  StopRule rule;
  try {
    run_series([](int k) { return k == 3 ? NAN : 1.0; }, rule);
    FAIL("expected ArithmeticError");
  } catch (const ArithmeticError& e) {
    CHECK(e.index() == 3);
  }
}

TEST_CASE("stop rule validation") {
  StopRule rule;
  rule.rel_tol = 0.0;
  CHECK_THROWS_AS(rule.validate(), std::invalid_argument);
  rule = StopRule{};
  rule.growth_factor = 1.0;
  CHECK_THROWS_AS(rule.validate(), std::invalid_argument);
  rule = StopRule{};
  rule.max_terms = 1;
  CHECK_THROWS_AS(rule.validate(), std::invalid_argument);
  rule.consecutive_small = 1;
  CHECK_NOTHROW(rule.validate());
}

TEST_CASE("polynomial series stop right after the degree") {
  EvalConfig cfg;
  for (int degree = 0; degree <= 6; ++degree) {
    const auto p = jet_provider(parse("x^" + std::to_string(degree) + " + 1"));
    const SeriesReport r = series_derivative(p, 0.37, 1.3, cfg);
    CHECK(r.verdict == Verdict::converged);
    CHECK(r.terms_used <= degree + 1 + 2);
  }
}

TEST_CASE("class condition diagnostics") {
  const auto ex = class_condition_diag(jet_provider(parse("exp(x)")), 0.5, 1.0, 30);
  CHECK(ex.verdict == DecayClass::decaying);
  CHECK(ex.magnitudes.size() == 31);
  // Each m_n from the definition, computed independently.
  for (int n = 0; n <= 30; ++n) {
    const double direct = std::abs(gen_binomial(0.5, n) * rgamma(n + 0.5) * std::exp(1.0));
    CHECK(ex.magnitudes[n] == doctest::Approx(direct).epsilon(1e-12));
  }

  const auto cubic = class_condition_diag(jet_provider(parse("x^3")), 0.7, 1.4, 10);
  CHECK(cubic.verdict == DecayClass::decaying);
  for (int n = 4; n <= 10; ++n) {
    CHECK(cubic.magnitudes[n] == 0.0);
  }

  const auto geometric = jet_provider(parse("1/(1-x)"));
  CHECK(class_condition_diag(geometric, -1.0, 0.6, 40).verdict == DecayClass::growing);
  CHECK(class_condition_diag(geometric, 0.5, 0.6, 40).verdict == DecayClass::growing);
  CHECK(class_condition_diag(geometric, 0.5, 0.3, 40).verdict == DecayClass::decaying);
  // Integer order collapses the weights, so nothing is left to grow.
  CHECK(class_condition_diag(geometric, 1.0, 0.6, 40).verdict == DecayClass::decaying);

  // ln(x): m_n ~ 1/n^2, slowly decaying.
  CHECK(class_condition_diag(jet_provider(parse("ln(x)")), 0.5, 1.0, 400).verdict == DecayClass::decaying);
}

TEST_CASE("decaying diagnosis implies a converged series on the corpus") {
  const char* corpus[] = {"exp(x)", "x^3", "sin(x)", "exp(-x)*cos(x)", "1/(1+x)"};
  EvalConfig cfg;
  cfg.rel_tol = 1e-12;
  cfg.max_terms = 400;
  for (const char* text : corpus) {
    const auto p = jet_provider(parse(text));
    for (double alpha : {0.3, 0.5, -0.5}) {
      for (double x : {0.3, 0.8}) {
        if (class_condition_diag(p, alpha, x, 60).verdict == DecayClass::decaying) {
          CAPTURE(text);
          CHECK(series_derivative(p, alpha, x, cfg).verdict == Verdict::converged);
        }
      }
    }
  }
}
