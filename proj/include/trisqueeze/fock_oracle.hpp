#pragma once

// Brute-force reference: the squeeze operator exp(K) on a truncated three-mode
// Fock space, applied to explicit state vectors.

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include <array>
#include <complex>
#include <vector>

#include "trisqueeze/error.hpp"
#include "trisqueeze/ladder.hpp"
#include "trisqueeze/moments.hpp"
#include "trisqueeze/quasiprob.hpp"

namespace trisqueeze {

inline constexpr double kLeakageTolerance = 1e-8;

/// Per-mode basis {0..N}, dimension (N+1)^3.
class FockCutoff {
 public:
  static constexpr int kMin = 4;
  static constexpr int kMax = 15;

  explicit FockCutoff(int n);

  int n() const { return n_; }
  int levels() const { return n_ + 1; }
  int dim() const { return levels() * levels() * levels(); }
  int index(int n1, int n2, int n3) const { return (n1 * levels() + n2) * levels() + n3; }
  std::array<int, 3> occupations(int index) const;

 private:
  int n_;
};

struct TruncationReport {
  double norm_defect = 0;             // |1 - <psi|psi>|
  std::array<double, 3> top_shell{};  // probability of n_j = N

  double max() const;
  bool acceptable(double tol = kLeakageTolerance) const { return max() < tol; }
};

/// Raised when a state reaches the cutoff; the report says by how much.
class TruncationError : public Error {
 public:
  TruncationError(const std::string& what, TruncationReport report) : Error(what), report_(report) {}
  const TruncationReport& report() const { return report_; }

 private:
  TruncationReport report_;
};

class TruncatedState {
 public:
  TruncatedState(FockCutoff cutoff, Eigen::VectorXcd amplitudes, double preparation_defect = 0);

  static TruncatedState number(FockCutoff cutoff, int n1, int n2, int n3);
  /// Product of the factors of `input`; coherent factors are expanded and renormalized
  /// after checking that the discarded weight is below the leakage tolerance.
  static TruncatedState from_input(FockCutoff cutoff, const InputState& input);

  const FockCutoff& cutoff() const { return cutoff_; }
  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  std::complex<double> amplitude(int n1, int n2, int n3) const { return amplitudes_(cutoff_.index(n1, n2, n3)); }
  double norm() const { return amplitudes_.norm(); }
  /// Weight of a coherent expansion that fell beyond the cutoff before renormalization.
  double preparation_defect() const { return preparation_defect_; }

 private:
  FockCutoff cutoff_;
  Eigen::VectorXcd amplitudes_;
  double preparation_defect_;
};

/// Coefficients e^{-|a|^2/2} a^n / sqrt(n!) for n = 0..N (not renormalized).
Eigen::VectorXcd coherent_amplitudes(std::complex<double> alpha, int n_max);

/// K = r1(a1 a2 - a1+ a2+) + r2(a1 a3 - a1+ a3+) + r3(a2 a3 - a2+ a3+) in the truncated basis.
Eigen::SparseMatrix<double> build_generator(const Params& params, const FockCutoff& cutoff);

TruncationReport truncation_report(const TruncatedState& state);

/// exp(K) computed once by dense scaling and squaring on each total-photon-parity block.
class FockPropagator {
 public:
  FockPropagator(const Params& params, FockCutoff cutoff);

  const Params& params() const { return params_; }
  const FockCutoff& cutoff() const { return cutoff_; }

  /// exp(K) psi, without any leakage check.
  TruncatedState apply(const TruncatedState& state) const;

 private:
  Params params_;
  FockCutoff cutoff_;
  std::array<std::vector<int>, 2> block_index_;
  std::array<Eigen::MatrixXd, 2> block_exp_;
};

/// exp(K) psi; throws TruncationError when the report exceeds the tolerance.
TruncatedState apply_squeeze(const FockPropagator& propagator, const TruncatedState& state,
                             TruncationReport* report = nullptr, double tol = kLeakageTolerance);
TruncatedState apply_squeeze(const TruncatedState& state, const Params& params, TruncationReport* report = nullptr,
                             double tol = kLeakageTolerance);

/// <psi| a+^p a^q |psi> with at most 4 quanta of each kind per mode.
std::complex<double> oracle_expectation(const TruncatedState& state, const Monomial& monomial);
std::complex<double> oracle_expectation(const TruncatedState& state, const LadderPolynomial& poly);

struct SingleModeDensity {
  Eigen::MatrixXcd rho;

  int n() const { return static_cast<int>(rho.rows()) - 1; }
  double trace() const { return rho.trace().real(); }
  double purity() const { return (rho * rho).trace().real(); }
};

SingleModeDensity reduced_density(const TruncatedState& state, int mode);

/// s = 0: (2/pi) Tr[rho D(z) Pi D(z)+]; s = -1: <z|rho|z>/pi.
double oracle_wigner(const SingleModeDensity& rho, std::complex<double> z, Ordering s);

}  // namespace trisqueeze
