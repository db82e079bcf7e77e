#include "fracalc/jet.hpp"

#include <cmath>
#include <stdexcept>

#include "fracalc/errors.hpp"
#include "scalar_ops.hpp"

namespace fracalc {

using Eigen::Index;
using Eigen::VectorXd;

double Jet::derivative(int k) const {
  if (k < 0 || k > order()) {
    throw std::out_of_range("Jet::derivative: order out of range");
  }
  double scale = 1.0;
  for (int j = 1; j <= k; ++j) {
    scale *= j / step;
  }
  return scale * coeffs[k];
}

namespace {

VectorXd cauchy_product(const VectorXd& a, const VectorXd& b) {
  const Index n = a.size();
  VectorXd c(n);
  for (Index k = 0; k < n; ++k) {
    double sum = 0.0;
    for (Index j = 0; j <= k; ++j) {
      sum += a[j] * b[k - j];
    }
    c[k] = sum;
  }
  return c;
}

VectorXd jet_div(const VectorXd& a, const VectorXd& b) {
  const Index n = a.size();
  VectorXd c(n);
  c[0] = detail::scalar_div(a[0], b[0]);
  for (Index k = 1; k < n; ++k) {
    double sum = a[k];
    for (Index j = 1; j <= k; ++j) {
      sum -= b[j] * c[k - j];
    }
    c[k] = sum / b[0];
  }
  return c;
}

VectorXd jet_exp(const VectorXd& a) {
  const Index n = a.size();
  VectorXd e(n);
  e[0] = std::exp(a[0]);
  for (Index k = 1; k < n; ++k) {
    double sum = 0.0;
    for (Index j = 1; j <= k; ++j) {
      sum += static_cast<double>(j) * a[j] * e[k - j];
    }
    e[k] = sum / static_cast<double>(k);
  }
  return e;
}

VectorXd jet_ln(const VectorXd& a) {
  const Index n = a.size();
  VectorXd l(n);
  l[0] = detail::scalar_ln(a[0]);
  for (Index k = 1; k < n; ++k) {
    double sum = 0.0;
    for (Index j = 1; j < k; ++j) {
      sum += static_cast<double>(j) * l[j] * a[k - j];
    }
    l[k] = (a[k] - sum / static_cast<double>(k)) / a[0];
  }
  return l;
}

// sin and cos of a jet come out of one coupled recurrence.
void jet_sincos(const VectorXd& a, VectorXd& s, VectorXd& c) {
  const Index n = a.size();
  s.resize(n);
  c.resize(n);
  s[0] = std::sin(a[0]);
  c[0] = std::cos(a[0]);
  for (Index k = 1; k < n; ++k) {
    double ss = 0.0;
    double cc = 0.0;
    for (Index j = 1; j <= k; ++j) {
      const double ja = static_cast<double>(j) * a[j];
      ss += ja * c[k - j];
      cc += ja * s[k - j];
    }
    s[k] = ss / static_cast<double>(k);
    c[k] = -cc / static_cast<double>(k);
  }
}

VectorXd jet_pow(const VectorXd& a, double r) {
  const Index n = a.size();
  const double p0 = detail::scalar_pow(a[0], r);
  VectorXd p;
  if (a[0] != 0.0) {
    p.resize(n);
    p[0] = p0;
    for (Index k = 1; k < n; ++k) {
      double sum = 0.0;
      for (Index j = 1; j <= k; ++j) {
        sum += (r * static_cast<double>(j) - static_cast<double>(k - j)) * a[j] * p[k - j];
      }
      p[k] = sum / (static_cast<double>(k) * a[0]);
    }
  } else if (detail::is_integer_exponent(r)) {
    // r >= 0 here; scalar_pow rejected 0^negative.
    p = VectorXd::Zero(n);
    p[0] = 1.0;
    VectorXd base = a;
    for (auto e = static_cast<long long>(r); e > 0; e >>= 1) {
      if (e & 1) {
        p = cauchy_product(p, base);
      }
      if (e > 1) {
        base = cauchy_product(base, base);
      }
    }
  } else {
    throw DomainError("non-integer power is not differentiable at 0");
  }
  p[0] = p0;
  return p;
}

VectorXd jet_rec(const Expr& e, double x0, double step, Index n) {
  switch (e.op()) {
    case Op::Constant: {
      VectorXd c = VectorXd::Zero(n);
      c[0] = e.value();
      return c;
    }
    case Op::Variable: {
      VectorXd c = VectorXd::Zero(n);
      c[0] = x0;
      if (n > 1) {
        c[1] = step;
      }
      return c;
    }
    case Op::Add: return jet_rec(e.arg(0), x0, step, n) + jet_rec(e.arg(1), x0, step, n);
    case Op::Sub: return jet_rec(e.arg(0), x0, step, n) - jet_rec(e.arg(1), x0, step, n);
    case Op::Neg: return -jet_rec(e.arg(0), x0, step, n);
    case Op::Mul: return cauchy_product(jet_rec(e.arg(0), x0, step, n), jet_rec(e.arg(1), x0, step, n));
    case Op::Div: return jet_div(jet_rec(e.arg(0), x0, step, n), jet_rec(e.arg(1), x0, step, n));
    case Op::Pow: return jet_pow(jet_rec(e.arg(0), x0, step, n), e.value());
    case Op::Exp: return jet_exp(jet_rec(e.arg(0), x0, step, n));
    case Op::Ln: return jet_ln(jet_rec(e.arg(0), x0, step, n));
    case Op::Sin:
    case Op::Cos: {
      VectorXd s;
      VectorXd c;
      jet_sincos(jet_rec(e.arg(0), x0, step, n), s, c);
      return e.op() == Op::Sin ? s : c;
    }
  }
  throw std::logic_error("jet_eval: unhandled node");
}

}  // namespace

Jet jet_eval(const Expr& e, double x0, int order, double step) {
  if (order < 0) {
    throw std::invalid_argument("jet_eval: order must be >= 0");
  }
  Jet jet;
  jet.x0 = x0;
  jet.step = step;
  jet.coeffs = jet_rec(e, x0, step, static_cast<Index>(order) + 1);
  for (Index k = 0; k < jet.coeffs.size(); ++k) {
    if (!std::isfinite(jet.coeffs[k])) {
      throw ArithmeticError("non-finite Taylor coefficient", static_cast<std::size_t>(k));
    }
  }
  return jet;
}

}  // namespace fracalc
