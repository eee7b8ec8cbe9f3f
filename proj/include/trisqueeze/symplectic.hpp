#pragma once

// Bogoliubov transformation generated by the three-mode squeeze operator
//
//   S(r) = exp[ r1 (a1 a2 - a1+ a2+) + r2 (a1 a3 - a1+ a3+) + r3 (a2 a3 - a2+ a3+) ].
//
// Conjugating an annihilator gives S+ a_j S = sum_k cosh(R)_jk a_k - sinh(R)_jk a_k+,
// where R is the symmetric coupling matrix with R12 = r1, R13 = r2, R23 = r3.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

inline constexpr double kMaxSqueeze = 10.0;

template <typename Scalar>
using Matrix3 = Eigen::Matrix<Scalar, 3, 3>;

template <typename Scalar = double>
struct SqueezeParams {
  Scalar r1{0};
  Scalar r2{0};
  Scalar r3{0};

  static SqueezeParams symmetric(Scalar r) { return {r, r, r}; }

  bool is_symmetric() const { return r1 == r2 && r2 == r3; }

  Scalar max_abs() const {
    using std::abs;
    return std::max({abs(r1), abs(r2), abs(r3)});
  }

  SqueezeParams operator-() const { return {-r1, -r2, -r3}; }
  bool operator==(const SqueezeParams&) const = default;
};

template <typename Scalar>
void validate(const SqueezeParams<Scalar>& p) {
  using std::isfinite;
  for (Scalar r : {p.r1, p.r2, p.r3}) {
    if (!isfinite(r)) throw DomainError("squeeze parameter is not finite");
    if (std::abs(static_cast<double>(r)) > kMaxSqueeze) {
      throw DomainError(fmt::format("squeeze parameter {} exceeds |r| <= {}",
                                    static_cast<double>(r), kMaxSqueeze));
    }
  }
}

/// Symmetric zero-diagonal coupling matrix; pair (1,2) carries r1, (1,3) r2, (2,3) r3.
template <typename Scalar>
Matrix3<Scalar> coupling_matrix(const SqueezeParams<Scalar>& p) {
  Matrix3<Scalar> R;
  R << Scalar(0), p.r1, p.r2,
       p.r1, Scalar(0), p.r3,
       p.r2, p.r3, Scalar(0);
  return R;
}

/// Coefficients of S+ a_j S = f1 a1 + f2 a1+ + g1 a2 + g2 a2+ + h1 a3 + h2 a3+.
///
/// Row j of `annihilation` holds (f1, g1, h1) of output mode j+1 and row j of
/// `creation` holds (f2, g2, h2). Modes are addressed 1-based by the accessors.
template <typename Scalar = double>
struct BogoliubovCoeffs {
  Matrix3<Scalar> annihilation = Matrix3<Scalar>::Identity();
  Matrix3<Scalar> creation = Matrix3<Scalar>::Zero();

  static BogoliubovCoeffs identity() { return {}; }

  Scalar f1(int j) const { return annihilation(row(j), 0); }
  Scalar g1(int j) const { return annihilation(row(j), 1); }
  Scalar h1(int j) const { return annihilation(row(j), 2); }
  Scalar f2(int j) const { return creation(row(j), 0); }
  Scalar g2(int j) const { return creation(row(j), 1); }
  Scalar h2(int j) const { return creation(row(j), 2); }

  /// Coefficient pair (of a_k, of a_k+) in output mode j.
  Scalar annihilator_coeff(int j, int k) const { return annihilation(row(j), row(k)); }
  Scalar creator_coeff(int j, int k) const { return creation(row(j), row(k)); }

  static int row(int mode) {
    if (mode < 1 || mode > 3) throw DomainError(fmt::format("mode index {} is not in 1..3", mode));
    return mode - 1;
  }

  template <typename Other>
  BogoliubovCoeffs<Other> cast() const {
    return {annihilation.template cast<Other>(), creation.template cast<Other>()};
  }
};

/// cosh(R) and -sinh(R) through the real symmetric eigendecomposition of R.
template <typename Scalar>
BogoliubovCoeffs<Scalar> bogoliubov_coeffs(const SqueezeParams<Scalar>& p) {
  validate(p);
  const Matrix3<Scalar> R = coupling_matrix(p);
  Eigen::SelfAdjointEigenSolver<Matrix3<Scalar>> eig(R);
  const auto& V = eig.eigenvectors();
  const auto& lambda = eig.eigenvalues();
  using std::cosh;
  using std::sinh;
  const Eigen::Matrix<Scalar, 3, 1> ch = lambda.unaryExpr([](Scalar l) { return cosh(l); });
  const Eigen::Matrix<Scalar, 3, 1> sh = lambda.unaryExpr([](Scalar l) { return sinh(l); });
  BogoliubovCoeffs<Scalar> c;
  c.annihilation.noalias() = V * ch.asDiagonal() * V.transpose();
  c.creation.noalias() = -(V * sh.asDiagonal() * V.transpose());
  return c;
}

/// Closed forms for r1 = r2 = r3 = r.
template <typename Scalar>
BogoliubovCoeffs<Scalar> symmetric_coeffs_closed(Scalar r) {
  validate(SqueezeParams<Scalar>::symmetric(r));
  using std::cosh;
  using std::sinh;
  const Scalar third = Scalar(1) / Scalar(3);
  const Scalar diag1 = third * (2 * cosh(r) + cosh(2 * r));    // f1(1)
  const Scalar diag2 = third * (2 * sinh(r) - sinh(2 * r));    // f2(1)
  const Scalar off1 = third * (-cosh(r) + cosh(2 * r));        // g1(1)
  const Scalar off2 = -third * (sinh(r) + sinh(2 * r));        // g2(1)
  BogoliubovCoeffs<Scalar> c;
  c.annihilation.setConstant(off1);
  c.annihilation.diagonal().setConstant(diag1);
  c.creation.setConstant(off2);
  c.creation.diagonal().setConstant(diag2);
  return c;
}

/// Largest violations of the canonical commutators of the transformed modes.
struct SymplecticResidual {
  double per_mode = 0;           // |[b_j, b_j+] - 1|
  double cross_annihilator = 0;  // |[b_j, b_k]|, j != k
  double cross_mixed = 0;        // |[b_j, b_k+]|, j != k

  double max() const { return std::max({per_mode, cross_annihilator, cross_mixed}); }
  bool accepted(double tol = 1e-10) const { return max() < tol; }
};

template <typename Scalar>
SymplecticResidual symplectic_check(const BogoliubovCoeffs<Scalar>& c) {
  const Matrix3<Scalar>& A = c.annihilation;
  const Matrix3<Scalar>& B = c.creation;
  const Matrix3<Scalar> norm = A * A.transpose() - B * B.transpose();
  const Matrix3<Scalar> pairing = A * B.transpose();
  SymplecticResidual res;
  for (int j = 0; j < 3; ++j) {
    res.per_mode = std::max(res.per_mode, std::abs(static_cast<double>(norm(j, j) - Scalar(1))));
    for (int k = 0; k < 3; ++k) {
      if (j == k) continue;
      res.cross_mixed = std::max(res.cross_mixed, std::abs(static_cast<double>(norm(j, k))));
      res.cross_annihilator = std::max(
          res.cross_annihilator, std::abs(static_cast<double>(pairing(j, k) - pairing(k, j))));
    }
  }
  return res;
}

}  // namespace trisqueeze
