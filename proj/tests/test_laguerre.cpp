#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "trisqueeze/laguerre.hpp"

using namespace trisqueeze;

namespace {

// Explicit sum L_k^g(x) = sum_i (-1)^i binom(k+g, k-i) x^i / i!, accumulated in long double.
double laguerre_sum(int k, double g, double x) {
  long double s = 0;
  for (int i = 0; i <= k; ++i) {
    long double c = 1;
    for (int j = 1; j <= k - i; ++j) c *= (g + i + j) / static_cast<long double>(j);
    for (int j = 1; j <= i; ++j) c *= x / static_cast<long double>(j);
    s += (i % 2 ? -c : c);
  }
  return static_cast<double>(s);
}

}  // namespace

TEST(Laguerre, LowOrders) {
  EXPECT_DOUBLE_EQ(laguerre(0, 2.5), 1.0);
  EXPECT_DOUBLE_EQ(laguerre(1, 2.5), -1.5);
  // L_2^g(x) = x^2/2 - (g+2) x + (g+1)(g+2)/2
  const double g = 0.5, x = 1.0;
  EXPECT_NEAR(laguerre(2, g, x), x * x / 2 - (g + 2) * x + (g + 1) * (g + 2) / 2, 1e-15);
}

TEST(Laguerre, MatchesExplicitSum) {
  for (double g : {-0.5, 0.0, 0.5, 3.0}) {
    for (int k = 0; k <= 12; ++k) {
      for (double x : {0.0, 0.3, 1.7, 4.2, 9.0}) {
        const double ref = laguerre_sum(k, g, x);
        EXPECT_NEAR(laguerre(k, g, x), ref, 1e-11 * (1 + std::abs(ref))) << k << " " << g << " " << x;
      }
    }
  }
}

TEST(Laguerre, HomogeneousFormAgrees) {
  for (double g : {-0.5, 0.0}) {
    for (int k = 0; k <= 10; ++k) {
      for (double eta : {-1.3, -0.2, 0.4, 2.0}) {
        for (double c : {0.0, 0.5, 3.0}) {
          const double ref = std::pow(eta, k) * laguerre(k, g, c / eta);
          EXPECT_NEAR(laguerre_homogeneous(k, g, eta, c), ref, 1e-10 * (1 + std::abs(ref)));
        }
      }
    }
  }
}

TEST(Laguerre, HomogeneousLimitAtZeroEta) {
  double fact = 1;
  for (int k = 0; k <= 8; ++k) {
    if (k > 0) fact *= k;
    const double c = 1.7;
    EXPECT_NEAR(laguerre_homogeneous(k, -0.5, 0.0, c), std::pow(-c, k) / fact, 1e-13);
  }
}

TEST(Laguerre, AdditionIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 5);
  for (double t1 : {-0.5, 0.0, 0.5}) {
    for (double t2 : {-0.5, 0.0, 0.5}) {
      for (int m = 0; m <= 10; ++m) {
        const double x = u(rng), y = u(rng);
        double lhs = 0;
        for (int i = 0; i <= m; ++i) lhs += laguerre(i, t1, x) * laguerre(m - i, t2, y);
        const double rhs = laguerre(m, t1 + t2 + 1, x + y);
        EXPECT_NEAR(lhs, rhs, 1e-10 * (1 + std::abs(rhs)));
      }
    }
  }
}

TEST(Laguerre, Guards) {
  EXPECT_THROW(laguerre(-1, 0.5), DomainError);
  EXPECT_THROW(laguerre(kMaxLaguerreDegree + 1, 0.5), DomainError);
  EXPECT_THROW(laguerre(2, -1.0, 0.5), DomainError);
}
