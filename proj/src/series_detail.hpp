#pragma once

// Coefficient generators shared by the series operators and the decay
// diagnostics. Every generator yields its k-th value on the k-th call.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Core>

#include "fracalc/providers.hpp"
#include "fracalc/specfun.hpp"

namespace fracalc::detail {

/// C(alpha, k) by the same product sequence as gen_binomial.
class BinomialSequence {
 public:
  explicit BinomialSequence(double alpha) : k2_(alpha + 1.0) {}

  double next() noexcept {
    if (started_) {
      b_ *= k2_ / p_ - 1.0;
      p_ += 1.0;
    }
    started_ = true;
    return b_;
  }

 private:
  double k2_;
  double b_ = 1.0;
  double p_ = 1.0;
  bool started_ = false;
};

/// r_k = k! / Gamma(k + 1 - alpha). Moderate in size (~ k^alpha) where its
/// two factors are not.
class FactorialGammaRatio {
 public:
  explicit FactorialGammaRatio(double alpha) : alpha_(alpha) {}

  double next() {
    const double z = static_cast<double>(k_) + 1.0 - alpha_;
    double r;
    if (k_ <= kDirectLimit) {
      r = std::tgamma(static_cast<double>(k_) + 1.0) * rgamma(z);
    } else if (is_gamma_pole(z)) {
      r = 0.0;
    } else if (prev_ != 0.0) {
      r = prev_ * static_cast<double>(k_) / (static_cast<double>(k_) - alpha_);
    } else {
      r = log_ratio(z);
    }
    prev_ = r;
    ++k_;
    return r;
  }

 private:
  static constexpr int kDirectLimit = 150;

  double log_ratio(double z) const {
    // Gamma(z) < 0 exactly when z < 0 and ceil(-z) is odd.
    const double sign = (z < 0.0 && static_cast<long long>(std::ceil(-z)) % 2 == 1) ? -1.0 : 1.0;
    return sign * std::exp(std::lgamma(static_cast<double>(k_) + 1.0) - std::lgamma(z));
  }

  double alpha_;
  double prev_ = 0.0;
  int k_ = 0;
};

/// w_k = C(alpha, k) k! / Gamma(k + 1 - alpha). The k-th derivative-series
/// term is x^-alpha w_k c_k with c_k = f^(k)(x) x^k / k!.
class DerivativeWeights {
 public:
  explicit DerivativeWeights(double alpha) : binomial_(alpha), ratio_(alpha) {}

  double next() {
    const double b = binomial_.next();
    const double r = ratio_.next();
    return b == 0.0 || r == 0.0 ? 0.0 : b * r;
  }

 private:
  BinomialSequence binomial_;
  FactorialGammaRatio ratio_;
};

/// Lazily extended scaled Taylor coefficients of a provider at x, capped at
/// `cap` entries. The provider is re-queried with doubled order on demand.
class TaylorCache {
 public:
  TaylorCache(const DerivativeProvider& p, double x, int cap) : p_(p), x_(x), cap_(cap) {}

  double operator[](int k) {
    if (k >= cap_) {
      throw std::out_of_range("TaylorCache: order beyond cap");
    }
    if (k >= coeffs_.size()) {
      int want = std::max<int>(16, static_cast<int>(coeffs_.size()) * 2);
      want = std::min(std::max(want, k + 1), cap_);
      coeffs_ = p_.scaled_taylor(x_, want - 1);
    }
    return coeffs_[k];
  }

 private:
  const DerivativeProvider& p_;
  double x_;
  int cap_;
  Eigen::VectorXd coeffs_;
};

}  // namespace fracalc::detail
