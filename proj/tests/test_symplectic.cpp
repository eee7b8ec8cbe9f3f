#include <gtest/gtest.h>

#include <unsupported/Eigen/MatrixFunctions>

#include "trisqueeze/symplectic.hpp"

using namespace trisqueeze;

namespace {

// Heisenberg generator on (a1, a2, a3, a1+, a2+, a3+): d/dt a = -R a+, d/dt a+ = -R a.
// Its exponential holds cosh R and -sinh R as blocks; a route independent of the eigensolver.
Eigen::Matrix<double, 6, 6> heisenberg_propagator(const SqueezeParams<double>& p) {
  Eigen::Matrix<double, 6, 6> m = Eigen::Matrix<double, 6, 6>::Zero();
  const Matrix3<double> r = coupling_matrix(p);
  m.topRightCorner<3, 3>() = -r;
  m.bottomLeftCorner<3, 3>() = -r;
  return m.exp();
}

}  // namespace

TEST(Symplectic, IdentityAtZero) {
  const auto c = bogoliubov_coeffs(SqueezeParams<double>{});
  EXPECT_TRUE(c.annihilation.isIdentity(0));
  EXPECT_TRUE(c.creation.isZero(0));
}

TEST(Symplectic, MatchesMatrixExponential) {
  for (const SqueezeParams<double> p : {SqueezeParams<double>{0.6, 0.8, 0.9}, SqueezeParams<double>{0.1, -0.4, 2.0},
                                        SqueezeParams<double>{1.5, 0.0, 0.0}, SqueezeParams<double>::symmetric(1.2)}) {
    const auto c = bogoliubov_coeffs(p);
    const auto u = heisenberg_propagator(p);
    const double scale = u.cwiseAbs().maxCoeff();
    EXPECT_LT((c.annihilation - u.topLeftCorner<3, 3>()).cwiseAbs().maxCoeff(), 1e-13 * scale);
    EXPECT_LT((c.creation - u.topRightCorner<3, 3>()).cwiseAbs().maxCoeff(), 1e-13 * scale);
  }
}

TEST(Symplectic, SymmetricClosedForm) {
  for (int i = 0; i <= 30; ++i) {
    const double r = 0.1 * i;
    const auto a = bogoliubov_coeffs(SqueezeParams<double>::symmetric(r));
    const auto b = symmetric_coeffs_closed(r);
    EXPECT_LT((a.annihilation - b.annihilation).cwiseAbs().maxCoeff(), 1e-12) << r;
    EXPECT_LT((a.creation - b.creation).cwiseAbs().maxCoeff(), 1e-12) << r;
  }
}

TEST(Symplectic, SymmetricValuesAtHalf) {
  const auto c = bogoliubov_coeffs(SqueezeParams<double>::symmetric(0.5));
  const double f1 = (2 * std::cosh(0.5) + std::cosh(1.0)) / 3;
  const double f2 = (2 * std::sinh(0.5) - std::sinh(1.0)) / 3;
  EXPECT_NEAR(c.f1(1), f1, 1e-14);
  EXPECT_NEAR(c.f2(1), f2, 1e-14);
  EXPECT_NEAR(c.f2(1), -0.0443369, 1e-7);
}

TEST(Symplectic, SingleCouplingIsTwoModeSqueezer) {
  const double r = 0.7;
  const auto c = bogoliubov_coeffs(SqueezeParams<double>{r, 0, 0});
  EXPECT_NEAR(c.f1(1), std::cosh(r), 1e-14);
  EXPECT_NEAR(c.g2(1), -std::sinh(r), 1e-14);
  EXPECT_NEAR(c.h1(3), 1.0, 1e-14);
  EXPECT_NEAR(c.f2(1), 0.0, 1e-14);
}

TEST(Symplectic, ResidualDetectsBrokenCoefficients) {
  auto c = bogoliubov_coeffs(SqueezeParams<double>{0.3, 0.2, 0.1});
  EXPECT_TRUE(symplectic_check(c).accepted());
  c.creation(0, 1) += 1e-6;
  EXPECT_FALSE(symplectic_check(c).accepted());
}

TEST(Symplectic, RejectsOutOfRange) {
  EXPECT_THROW(bogoliubov_coeffs(SqueezeParams<double>{10.5, 0, 0}), DomainError);
  EXPECT_THROW(bogoliubov_coeffs(SqueezeParams<double>{0, std::nan(""), 0}), DomainError);
  EXPECT_THROW(BogoliubovCoeffs<double>::row(4), DomainError);
}

TEST(Symplectic, LongDoubleInstantiation) {
  const auto c = bogoliubov_coeffs(SqueezeParams<long double>{0.6L, 0.8L, 0.9L});
  const auto d = bogoliubov_coeffs(SqueezeParams<double>{0.6, 0.8, 0.9});
  EXPECT_LT((c.cast<double>().annihilation - d.annihilation).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_LT(symplectic_check(c).max(), 1e-15);
}
