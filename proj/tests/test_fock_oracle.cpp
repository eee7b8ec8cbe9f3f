#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "trisqueeze/fock_oracle.hpp"

using namespace trisqueeze;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

Monomial number_monomial(int j, int power = 1) {
  Monomial m;
  m.creation[j - 1] = m.annihilation[j - 1] = power;
  return m;
}

SingleModeDensity fock_density(int n, int cutoff) {
  SingleModeDensity d{Eigen::MatrixXcd::Zero(cutoff + 1, cutoff + 1)};
  d.rho(n, n) = 1;
  return d;
}

// One N = 14 propagator shared by the tests that need the full cutoff.
const FockPropagator& symmetric_propagator() {
  static const FockPropagator p(Params::symmetric(0.25), FockCutoff(14));
  return p;
}

}  // namespace

TEST(FockOracle, CutoffRange) {
  EXPECT_THROW(FockCutoff(3), DomainError);
  EXPECT_THROW(FockCutoff(16), DomainError);
  const FockCutoff c(5);
  EXPECT_EQ(c.dim(), 216);
  EXPECT_EQ(c.occupations(c.index(2, 5, 1)), (std::array<int, 3>{2, 5, 1}));
}

TEST(FockOracle, GeneratorElements) {
  const FockCutoff cutoff(4);
  EXPECT_EQ(build_generator(Params{}, cutoff).nonZeros(), 0);
  const auto k = build_generator(Params{1, 0, 0}, cutoff);
  EXPECT_DOUBLE_EQ(k.coeff(cutoff.index(0, 0, 0), cutoff.index(1, 1, 0)), 1.0);
  EXPECT_DOUBLE_EQ(k.coeff(cutoff.index(1, 1, 0), cutoff.index(0, 0, 0)), -1.0);
  EXPECT_DOUBLE_EQ(k.coeff(cutoff.index(1, 1, 2), cutoff.index(2, 2, 2)), 2.0);
}

TEST(FockOracle, GeneratorIsAntiHermitian) {
  const auto k = build_generator(Params{0.6, 0.8, 0.9}, FockCutoff(10));
  const Eigen::SparseMatrix<double> kt = k.transpose();
  EXPECT_LT((k + kt).norm(), 1e-14);
}

TEST(FockOracle, IdentityEvolution) {
  const FockCutoff cutoff(6);
  const auto vac = TruncatedState::number(cutoff, 0, 0, 0);
  TruncationReport report;
  const auto out = apply_squeeze(vac, Params{}, &report);
  EXPECT_LT((out.amplitudes() - vac.amplitudes()).norm(), 1e-15);
  EXPECT_EQ(report.max(), 0.0);
}

TEST(FockOracle, SqueezedVacuumMean) {
  const Params p = Params::symmetric(0.2);
  TruncationReport report;
  const auto out = apply_squeeze(TruncatedState::number(FockCutoff(12), 0, 0, 0), p, &report);
  const Coeffs c = bogoliubov_coeffs(p);
  const double expected = c.f2(1) * c.f2(1) + c.g2(1) * c.g2(1) + c.h2(1) * c.h2(1);
  EXPECT_NEAR(oracle_expectation(out, number_monomial(1)).real(), expected, 1e-8);
  EXPECT_LT(report.norm_defect, 1e-10);
  const MomentTable t = moment_table(c, InputState::vacuum());
  Monomial cross = number_monomial(1);
  cross.creation[1] = cross.annihilation[1] = 1;
  EXPECT_NEAR(oracle_expectation(out, cross).real(), t.cross(1, 2), 1e-8);
}

TEST(FockOracle, RefusesLeakyEvolution) {
  const auto vac = TruncatedState::number(FockCutoff(6), 0, 0, 0);
  try {
    apply_squeeze(vac, Params::symmetric(1.5));
    FAIL() << "expected a truncation error";
  } catch (const TruncationError& e) {
    EXPECT_FALSE(e.report().acceptable());
  }
}

TEST(FockOracle, DirectExpectations) {
  const FockCutoff cutoff(5);
  EXPECT_EQ(oracle_expectation(TruncatedState::number(cutoff, 0, 0, 0), number_monomial(1)), cplx(0));
  EXPECT_NEAR(oracle_expectation(TruncatedState::number(cutoff, 2, 0, 0), number_monomial(1, 2)).real(), 2.0, 1e-15);
  Monomial big;
  big.annihilation[0] = 5;
  EXPECT_THROW(oracle_expectation(TruncatedState::number(cutoff, 0, 0, 0), big), DomainError);
}

TEST(FockOracle, CoherentPreparation) {
  const auto s = TruncatedState::from_input(FockCutoff(14), InputState::coherent({1.2, 0}, {0, -0.9}, {0.5, 0.5}));
  EXPECT_LT(s.preparation_defect(), 1e-9);
  EXPECT_NEAR(s.norm(), 1.0, 1e-14);
  EXPECT_THROW(TruncatedState::from_input(FockCutoff(6), InputState::coherent(3.0, 0, 0)), TruncationError);
}

TEST(FockOracle, CoherentInputMoments) {
  const Params p{0.1, 0.15, 0.05};
  const InputState in = InputState::coherent({0.4, 0.1}, {-0.3, 0}, {0, 0.2});
  const auto out = apply_squeeze(TruncatedState::from_input(FockCutoff(12), in), p);
  const MomentTable t = moment_table(bogoliubov_coeffs(p), in);
  for (int j = 1; j <= 3; ++j) {
    EXPECT_NEAR(oracle_expectation(out, number_monomial(j)).real(), t.mean_n[j - 1], 1e-8 * t.mean_n[j - 1]);
    EXPECT_NEAR(oracle_expectation(out, number_monomial(j, 2)).real(), t.pair_n[j - 1], 1e-8 * t.pair_n[j - 1]);
  }
}

TEST(FockOracle, ReducedDensity) {
  const FockCutoff cutoff(6);
  const auto rho = reduced_density(TruncatedState::number(cutoff, 1, 0, 0), 1);
  EXPECT_NEAR(std::abs(rho.rho(1, 1) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(rho.purity(), 1.0, 1e-15);

  const auto sq = FockPropagator(Params::symmetric(0.5), FockCutoff(12)).apply(TruncatedState::number(FockCutoff(12), 0, 0, 0));
  const auto r1 = reduced_density(sq, 1);
  EXPECT_LT((r1.rho - r1.rho.adjoint()).cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_LT(r1.purity(), 0.99);
  const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(r1.rho).eigenvalues();
  EXPECT_GT(ev.minCoeff(), -1e-8);
}

TEST(FockOracle, ModeSymmetricInputGivesEqualReducedStates) {
  const FockCutoff cutoff(10);
  const auto out = FockPropagator(Params::symmetric(0.2), cutoff).apply(TruncatedState::number(cutoff, 1, 1, 1));
  const auto r1 = reduced_density(out, 1), r2 = reduced_density(out, 2), r3 = reduced_density(out, 3);
  EXPECT_LT((r1.rho - r2.rho).cwiseAbs().maxCoeff(), 1e-8);
  EXPECT_LT((r1.rho - r3.rho).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(FockOracle, NumberStateQuasiprobabilities) {
  EXPECT_NEAR(oracle_wigner(fock_density(0, 10), 0, Ordering::Symmetric), 2 / kPi, 1e-12);
  EXPECT_NEAR(oracle_wigner(fock_density(1, 10), 0, Ordering::Symmetric), -2 / kPi, 1e-12);
  EXPECT_NEAR(oracle_wigner(fock_density(0, 10), 0, Ordering::Antinormal), 1 / kPi, 1e-15);
  const cplx z(0.7, -0.4);
  const double r2 = std::norm(z);
  EXPECT_NEAR(oracle_wigner(fock_density(2, 10), z, Ordering::Symmetric),
              2 / kPi * std::exp(-2 * r2) * std::assoc_laguerre(2, 0, 4 * r2), 1e-12);
  EXPECT_NEAR(oracle_wigner(fock_density(3, 10), z, Ordering::Antinormal),
              std::exp(-r2) * std::pow(r2, 3) / (6 * kPi), 1e-14);
  SingleModeDensity edge = fock_density(10, 10);
  EXPECT_THROW(oracle_wigner(edge, 0, Ordering::Symmetric), TruncationError);
}

TEST(FockOracle, G2OfNumberInputAtFullCutoff) {
  const auto& prop = symmetric_propagator();
  const auto out = apply_squeeze(prop, TruncatedState::number(prop.cutoff(), 1, 1, 1));
  const double n = oracle_expectation(out, number_monomial(1)).real();
  const double p = oracle_expectation(out, number_monomial(1, 2)).real();
  EXPECT_NEAR(p / (n * n) - 1, g2(bogoliubov_coeffs(prop.params()), InputState::number(1, 1, 1), 1), 1e-6);
}

TEST(FockOracle, ExcitedWignerAtFullCutoff) {
  const auto& prop = symmetric_propagator();
  const auto out = apply_squeeze(prop, TruncatedState::number(prop.cutoff(), 0, 0, 1));
  const auto rho = reduced_density(out, 1);
  const Coeffs c = bogoliubov_coeffs(prop.params());
  for (cplx z : {cplx(0, 0), cplx(0.4, 0.3), cplx(-0.9, 0.2)}) {
    for (Ordering s : {Ordering::Symmetric, Ordering::Antinormal}) {
      EXPECT_NEAR(oracle_wigner(rho, z, s), wigner_excited(c, 1, ExcitedSlot::Mode3, z, s), 1e-5);
    }
  }
}
