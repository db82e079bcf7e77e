#pragma once

#include <Eigen/Core>

#include "fracalc/providers.hpp"

namespace fracalc {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// Golub-Welsch: nodes are the eigenvalues of the Jacobi matrix of the
/// Legendre recurrence, weights 2 v_0^2 from the normalized eigenvectors.
GaussLegendreRule gauss_legendre(int n);

/// Composite rule: `panels` equal panels of `points` nodes each. Throws
/// ArithmeticError if f is non-finite at a node.
double integrate(const PointFunction& f, double a, double b, int points, int panels = 8);

}  // namespace fracalc
