#include "trisqueeze/quadrature.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numbers>
#include <utility>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

namespace {

// (P_n(x), P_n'(x)) by the Bonnet recurrence; x must lie strictly inside (-1, 1).
std::pair<double, double> legendre(int n, double x) {
  double p0 = 1, p1 = x;
  for (int k = 2; k <= n; ++k) {
    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  return {p1, n * (x * p1 - p0) / (x * x - 1)};
}

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1) throw DomainError(fmt::format("Gauss-Legendre order {} must be positive", n));
  QuadratureRule rule{Eigen::VectorXd(n), Eigen::VectorXd(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    for (int iter = 0; iter < 100; ++iter) {
      const auto [p, dp] = legendre(n, x);
      const double dx = p / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double dp = legendre(n, x).second;
    const double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes(i) = -x;
    rule.nodes(n - 1 - i) = x;
    rule.weights(i) = w;
    rule.weights(n - 1 - i) = w;
  }
  return rule;
}

QuadratureRule composite_gauss_legendre(double lo, double hi, int panels, int n) {
  if (panels < 1) throw DomainError(fmt::format("panel count {} must be positive", panels));
  const QuadratureRule base = gauss_legendre(n);
  QuadratureRule rule{Eigen::VectorXd(panels * n), Eigen::VectorXd(panels * n)};
  const double width = (hi - lo) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    rule.nodes.segment(p * n, n) = (mid + 0.5 * width * base.nodes.array()).matrix();
    rule.weights.segment(p * n, n) = 0.5 * width * base.weights;
  }
  return rule;
}

}  // namespace trisqueeze
