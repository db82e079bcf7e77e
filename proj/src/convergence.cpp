#include "fracalc/convergence.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracalc/errors.hpp"
#include "series_detail.hpp"

namespace fracalc {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::converged: return "converged";
    case Verdict::max_terms_reached: return "max_terms_reached";
    case Verdict::diverging: return "diverging";
  }
  return "unknown";
}

std::string_view to_string(DecayClass c) noexcept {
  switch (c) {
    case DecayClass::decaying: return "decaying";
    case DecayClass::flat: return "flat";
    case DecayClass::growing: return "growing";
  }
  return "unknown";
}

void StopRule::validate() const {
  if (!(rel_tol > 0.0)) {
    throw std::invalid_argument("StopRule: rel_tol must be > 0");
  }
  if (max_terms < 1 || consecutive_small < 1 || growth_window < 1) {
    throw std::invalid_argument("StopRule: counts must be >= 1");
  }
  if (consecutive_small > max_terms) {
    throw std::invalid_argument("StopRule: consecutive_small exceeds max_terms");
  }
  if (!(growth_factor > 1.0)) {
    throw std::invalid_argument("StopRule: growth_factor must be > 1");
  }
}

void CompensatedSum::add(double v) noexcept {
  const double t = sum_ + v;
  if (std::abs(sum_) >= std::abs(v)) {
    compensation_ += (sum_ - t) + v;
  } else {
    compensation_ += (v - t) + sum_;
  }
  sum_ = t;
}

namespace {

bool sustained_growth(const std::vector<double>& m, int window, double factor) {
  const auto n = static_cast<int>(m.size());
  if (n < window + 1) {
    return false;
  }
  const int first = n - 1 - window;
  if (!(m[first] > 0.0)) {
    return false;
  }
  double prev_ratio = 0.0;
  for (int j = first + 1; j < n; ++j) {
    const double ratio = m[j] / m[j - 1];
    if (!(ratio > 1.0) || ratio < prev_ratio * (1.0 - 1e-12)) {
      return false;
    }
    prev_ratio = ratio;
  }
  return m[n - 1] >= factor * m[first];
}

}  // namespace

SeriesReport run_series(const TermSource& term, const StopRule& rule) {
  rule.validate();
  constexpr double tiny = std::numeric_limits<double>::min();

  SeriesReport report;
  report.term_magnitudes.reserve(static_cast<std::size_t>(std::min(rule.max_terms, 4096)));
  CompensatedSum sum;
  int small_run = 0;

  for (int k = 0; k < rule.max_terms; ++k) {
    const double t = term(k);
    if (!std::isfinite(t)) {
      throw ArithmeticError("non-finite series term", static_cast<std::size_t>(k));
    }
    sum.add(t);
    report.term_magnitudes.push_back(std::abs(t));

    const double partial = sum.value();
    if (std::abs(t) <= rule.rel_tol * std::max(std::abs(partial), tiny)) {
      ++small_run;
    } else {
      small_run = 0;
    }
    if (small_run >= rule.consecutive_small) {
      report.verdict = Verdict::converged;
      break;
    }
    if (sustained_growth(report.term_magnitudes, rule.growth_window, rule.growth_factor)) {
      report.verdict = Verdict::diverging;
      break;
    }
  }

  report.value = sum.value();
  report.terms_used = static_cast<int>(report.term_magnitudes.size());
  return report;
}

ClassCondition class_condition_diag(const DerivativeProvider& p, double alpha, double x, int max_order) {
  if (!(x > 0.0)) {
    throw DomainError("class_condition_diag: x must be > 0");
  }
  if (max_order < 1) {
    throw std::invalid_argument("class_condition_diag: K must be >= 1");
  }
  const Eigen::VectorXd c = p.scaled_taylor(x, max_order);
  const double scale = std::pow(x, -alpha);
  detail::DerivativeWeights weights(alpha);

  ClassCondition out;
  out.magnitudes.resize(static_cast<std::size_t>(max_order) + 1);
  for (int n = 0; n <= max_order; ++n) {
    const double w = weights.next();
    out.magnitudes[n] = (w == 0.0 || c[n] == 0.0) ? 0.0 : std::abs(scale * w * c[n]);
  }

  // Log-linear fit over the nonzero entries of the tail half.
  double sn = 0.0, sy = 0.0, snn = 0.0, sny = 0.0;
  int count = 0;
  for (int n = max_order / 2; n <= max_order; ++n) {
    const double m = out.magnitudes[n];
    if (m > 0.0) {
      const double y = std::log(m);
      sn += n;
      sy += y;
      snn += static_cast<double>(n) * n;
      sny += n * y;
      ++count;
    }
  }
  if (count < 2) {
    out.verdict = DecayClass::decaying;
    return out;
  }
  const double denom = count * snn - sn * sn;
  out.tail_slope = (count * sny - sn * sy) / denom;

  constexpr double kFlatBand = 1e-3;
  if (out.tail_slope < -kFlatBand) {
    out.verdict = DecayClass::decaying;
  } else if (out.tail_slope > kFlatBand) {
    out.verdict = DecayClass::growing;
  } else {
    out.verdict = DecayClass::flat;
  }
  return out;
}

}  // namespace fracalc
