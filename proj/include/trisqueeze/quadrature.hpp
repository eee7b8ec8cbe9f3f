#pragma once

#include <Eigen/Dense>

namespace trisqueeze {

struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
};

/// n-point Gauss-Legendre rule on [-1, 1] (Newton iteration on P_n).
QuadratureRule gauss_legendre(int n);

/// Composite rule: `panels` equal panels on [lo, hi], each with an n-point Gauss-Legendre rule.
QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int n);

}  // namespace trisqueeze
