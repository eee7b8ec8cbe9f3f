#include <gtest/gtest.h>

#include <unsupported/Eigen/KroneckerProduct>

#include <random>

#include "trisqueeze/error.hpp"
#include "trisqueeze/ladder.hpp"

using namespace trisqueeze;

namespace {

constexpr int kLevels = 7;  // per-mode truncation of the matrix oracle

Eigen::MatrixXd lowering() {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(kLevels, kLevels);
  for (int n = 1; n < kLevels; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

Eigen::MatrixXd embed(const Eigen::MatrixXd& op, int mode) {
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(kLevels, kLevels);
  const Eigen::MatrixXd m1 = mode == 1 ? op : id;
  const Eigen::MatrixXd m2 = mode == 2 ? op : id;
  const Eigen::MatrixXd m3 = mode == 3 ? op : id;
  return Eigen::kroneckerProduct(Eigen::MatrixXd(Eigen::kroneckerProduct(m1, m2)), m3);
}

Eigen::MatrixXd symbol_matrix(const LadderSymbol& s) {
  const Eigen::MatrixXd a = lowering();
  return embed(s.kind == Ladder::Annihilate ? a : Eigen::MatrixXd(a.transpose()), s.mode);
}

Eigen::MatrixXcd polynomial_matrix(const LadderPolynomial& p) {
  const int dim = kLevels * kLevels * kLevels;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [m, c] : p.terms()) {
    Eigen::MatrixXd term = Eigen::MatrixXd::Identity(dim, dim);
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < m.creation[j]; ++k) term = term * symbol_matrix({j + 1, Ladder::Create});
    }
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < m.annihilation[j]; ++k) term = term * symbol_matrix({j + 1, Ladder::Annihilate});
    }
    out += c * term.cast<std::complex<double>>();
  }
  return out;
}

// Matrix elements between states whose occupations stay clear of the truncation edge.
double low_block_difference(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b, int max_occ) {
  double worst = 0;
  for (int i = 0; i < a.rows(); ++i) {
    const int i1 = i / (kLevels * kLevels), i2 = (i / kLevels) % kLevels, i3 = i % kLevels;
    if (std::max({i1, i2, i3}) > max_occ) continue;
    for (int j = 0; j < a.cols(); ++j) {
      const int j1 = j / (kLevels * kLevels), j2 = (j / kLevels) % kLevels, j3 = j % kLevels;
      if (std::max({j1, j2, j3}) > max_occ) continue;
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
    }
  }
  return worst;
}

}  // namespace

TEST(Ladder, CanonicalCommutator) {
  const auto a = LadderPolynomial::annihilator(1);
  const auto ad = LadderPolynomial::creator(1);
  const auto comm = a * ad - ad * a;
  EXPECT_EQ(comm.terms().size(), 1u);
  EXPECT_EQ(comm.coefficient(Monomial{}), std::complex<double>(1));
  const auto cross = LadderPolynomial::annihilator(1) * LadderPolynomial::creator(2) -
                     LadderPolynomial::creator(2) * LadderPolynomial::annihilator(1);
  EXPECT_TRUE(cross.empty());
}

TEST(Ladder, SquareOfNumberOperator) {
  // (a+ a)^2 = a+^2 a^2 + a+ a
  const auto n = LadderPolynomial::creator(2) * LadderPolynomial::annihilator(2);
  const auto n2 = n * n;
  Monomial pair, single;
  pair.creation[1] = pair.annihilation[1] = 2;
  single.creation[1] = single.annihilation[1] = 1;
  EXPECT_EQ(n2.terms().size(), 2u);
  EXPECT_EQ(n2.coefficient(pair), std::complex<double>(1));
  EXPECT_EQ(n2.coefficient(single), std::complex<double>(1));
}

TEST(Ladder, AntinormalWord) {
  // a^2 a+^2 = a+^2 a^2 + 4 a+ a + 2
  const auto p = normal_order(OperatorWord{{3, Ladder::Annihilate},
                                           {3, Ladder::Annihilate},
                                           {3, Ladder::Create},
                                           {3, Ladder::Create}});
  Monomial two, one;
  two.creation[2] = two.annihilation[2] = 2;
  one.creation[2] = one.annihilation[2] = 1;
  EXPECT_EQ(p.coefficient(two), std::complex<double>(1));
  EXPECT_EQ(p.coefficient(one), std::complex<double>(4));
  EXPECT_EQ(p.coefficient(Monomial{}), std::complex<double>(2));
}

TEST(Ladder, RandomWordsMatchFockMatrices) {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> mode(1, 3), kind(0, 1), length(1, 5);
  for (int trial = 0; trial < 40; ++trial) {
    OperatorWord word;
    const int len = length(rng);
    for (int i = 0; i < len; ++i) word.push_back({mode(rng), kind(rng) ? Ladder::Create : Ladder::Annihilate});
    const int dim = kLevels * kLevels * kLevels;
    Eigen::MatrixXd direct = Eigen::MatrixXd::Identity(dim, dim);
    for (const auto& s : word) direct = direct * symbol_matrix(s);
    const auto normal = polynomial_matrix(normal_order(word));
    EXPECT_LT(low_block_difference(direct.cast<std::complex<double>>(), normal, kLevels - 1 - len), 1e-10)
        << "trial " << trial;
  }
}

TEST(Ladder, AdjointReversesOrder) {
  const auto p = (LadderPolynomial::annihilator(1) * std::complex<double>(0, 2)) * LadderPolynomial::creator(2);
  const auto q = p.adjoint();
  Monomial m;
  m.creation[0] = 1;
  m.annihilation[1] = 1;
  EXPECT_EQ(q.coefficient(m), std::complex<double>(0, -2));
}

TEST(Ladder, DegreeGuard) {
  LadderPolynomial p = LadderPolynomial::constant(1);
  for (int i = 0; i < kMaxLadderDegree; ++i) p = p * LadderPolynomial::annihilator(1 + i % 3);
  EXPECT_EQ(p.degree(), kMaxLadderDegree);
  EXPECT_THROW(p * LadderPolynomial::creator(1), DomainError);
  EXPECT_THROW(LadderPolynomial::annihilator(0), DomainError);
}
