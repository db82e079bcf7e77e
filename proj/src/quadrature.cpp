#include "fracalc/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "fracalc/errors.hpp"

namespace fracalc {

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) {
    throw std::invalid_argument("gauss_legendre: n must be >= 1");
  }
  Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (int k = 1; k < n; ++k) {
    sub[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  }
  GaussLegendreRule rule;
  if (n == 1) {
    rule.nodes = Eigen::VectorXd::Zero(1);
    rule.weights = Eigen::VectorXd::Constant(1, 2.0);
    return rule;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_legendre: eigensolver failed");
  }
  rule.nodes = solver.eigenvalues();
  rule.weights = 2.0 * solver.eigenvectors().row(0).transpose().array().square();
  // The rule is symmetric; enforce it exactly.
  for (int i = 0; i < n / 2; ++i) {
    const int j = n - 1 - i;
    const double node = 0.5 * (rule.nodes[j] - rule.nodes[i]);
    const double weight = 0.5 * (rule.weights[i] + rule.weights[j]);
    rule.nodes[i] = -node;
    rule.nodes[j] = node;
    rule.weights[i] = rule.weights[j] = weight;
  }
  if (n % 2 == 1) {
    rule.nodes[n / 2] = 0.0;
  }
  return rule;
}

namespace {

const GaussLegendreRule& cached_rule(int n) {
  static std::mutex mutex;
  static std::map<int, GaussLegendreRule> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) {
    it = cache.emplace(n, gauss_legendre(n)).first;
  }
  return it->second;
}

}  // namespace

double integrate(const PointFunction& f, double a, double b, int points, int panels) {
  if (panels < 1) {
    throw std::invalid_argument("integrate: panels must be >= 1");
  }
  const GaussLegendreRule& rule = cached_rule(points);
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double half = 0.5 * width;
    const double mid = lo + half;
    double panel = 0.0;
    for (Eigen::Index i = 0; i < rule.nodes.size(); ++i) {
      const double v = f(mid + half * rule.nodes[i]);
      if (!std::isfinite(v)) {
        throw ArithmeticError("quadrature: non-finite integrand", static_cast<std::size_t>(p * rule.nodes.size() + i));
      }
      panel += rule.weights[i] * v;
    }
    total += half * panel;
  }
  return total;
}

}  // namespace fracalc
