#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "fracalc/providers.hpp"

namespace fracalc {

enum class Verdict { converged, max_terms_reached, diverging };

std::string_view to_string(Verdict v) noexcept;

/// When to stop summing a series.
///
/// Converged: `consecutive_small` successive terms with
/// |t_k| <= rel_tol * max(|partial sum|, tiny).
/// Diverging: over the last `growth_window` steps every term grew, the
/// growth ratio never decreased, and the magnitude rose by at least
/// `growth_factor` overall. A decelerating rise (the hump of x^k/k! for
/// large x) is not flagged.
struct StopRule {
  double rel_tol = 1e-15;
  int consecutive_small = 2;
  int max_terms = 256;
  int growth_window = 8;
  double growth_factor = 1.5;

  /// Throws std::invalid_argument on non-positive fields,
  /// growth_factor <= 1 or consecutive_small > max_terms.
  void validate() const;
};

struct SeriesReport {
  double value = 0.0;
  int terms_used = 0;
  std::vector<double> term_magnitudes;
  Verdict verdict = Verdict::max_terms_reached;
};

/// Neumaier's variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double v) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Term k of a series, requested in order k = 0, 1, 2, ...
using TermSource = std::function<double(int)>;

/// Sums terms in ascending k under `rule`. Throws ArithmeticError carrying
/// the index of the first non-finite term.
SeriesReport run_series(const TermSource& term, const StopRule& rule);

enum class DecayClass { decaying, flat, growing };

std::string_view to_string(DecayClass c) noexcept;

struct ClassCondition {
  DecayClass verdict = DecayClass::decaying;
  /// m_n = |C(alpha, n) f^(n)(x) x^(n - alpha) / Gamma(n + 1 - alpha)|, n = 0..K.
  std::vector<double> magnitudes;
  /// Least-squares slope of log m_n against n over the nonzero tail half.
  double tail_slope = 0.0;
};

/// Empirical check of the term-decay condition behind the derivative series.
/// |slope| <= 1e-3 per term counts as flat.
ClassCondition class_condition_diag(const DerivativeProvider& p, double alpha, double x, int max_order);

}  // namespace fracalc
