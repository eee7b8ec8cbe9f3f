#pragma once

// Operator moments of three-mode squeezed number and coherent states:
// quadrature squeezing, g2(0) and the Cauchy-Schwarz parameter V_jk.
//
// Every moment is evaluated in the Heisenberg picture: the observable is
// rewritten in terms of the transformed modes S+ a_j S, normally ordered and
// averaged over the unsqueezed product input state.

#include <array>
#include <complex>
#include <optional>
#include <utility>
#include <variant>

#include "trisqueeze/ladder.hpp"
#include "trisqueeze/symplectic.hpp"

namespace trisqueeze {

using Coeffs = BogoliubovCoeffs<double>;
using Params = SqueezeParams<double>;

inline constexpr double kMaxCoherentAmplitude = 20.0;

struct NumberState {
  int n = 0;
  bool operator==(const NumberState&) const = default;
};

struct CoherentState {
  std::complex<double> alpha{};
  bool operator==(const CoherentState&) const = default;
};

using ModeState = std::variant<NumberState, CoherentState>;

/// Product input |m1> x |m2> x |m3>, each factor a number or a coherent state.
class InputState {
 public:
  InputState() = default;
  explicit InputState(std::array<ModeState, 3> modes);

  static InputState vacuum() { return {}; }
  static InputState number(int n1, int n2, int n3);
  static InputState number(const std::array<int, 3>& n) { return number(n[0], n[1], n[2]); }
  static InputState coherent(std::complex<double> a1, std::complex<double> a2, std::complex<double> a3);

  const ModeState& mode(int j) const;
  const std::array<ModeState, 3>& modes() const { return modes_; }

  bool all_number() const;
  bool all_coherent() const;
  /// Occupations when every factor is a number state.
  std::optional<std::array<int, 3>> occupations() const;

  bool operator==(const InputState&) const = default;

 private:
  std::array<ModeState, 3> modes_{NumberState{}, NumberState{}, NumberState{}};
};

/// Quadrature X = [a1 + a1+ + c1 (a2 + a2+) + c2 (a3 + a3+)]/2 and its conjugate Y.
class QuadratureSelector {
 public:
  QuadratureSelector(int c1, int c2);

  int c1() const { return c1_; }
  int c2() const { return c2_; }
  /// [X, Y] = iC with C = (1 + c1^2 + c2^2)/2.
  double normalizer() const { return 0.5 * (1 + c1_ * c1_ + c2_ * c2_); }

 private:
  int c1_;
  int c2_;
};

struct Squeezing {
  double sx;
  double sy;
};

/// Diagonal moments of the three output modes. Pair index 0,1,2 = (1,2),(1,3),(2,3).
struct MomentTable {
  std::array<double, 3> mean_n{};
  std::array<double, 3> pair_n{};   // <a_j+^2 a_j^2>
  std::array<double, 3> cross_n{};  // <a_j+ a_j a_k+ a_k>

  static int pair_index(int j, int k);
  double cross(int j, int k) const { return cross_n[pair_index(j, k)]; }

  /// g2 of mode j, or nullopt when the mean photon number vanishes.
  std::optional<double> g2(int j) const;
  std::optional<double> cauchy_schwarz(int j, int k) const;
};

/// Smallest mean photon number (or cross moment) treated as nonzero in ratios.
inline constexpr double kRatioFloor = 1e-12;

LadderPolynomial transformed_mode(const Coeffs& coeffs, int j);

/// Exact product-state expectation of a normally ordered polynomial.
std::complex<double> expectation(const LadderPolynomial& poly, const InputState& state);

LadderPolynomial quadrature_x(const Coeffs& coeffs, const QuadratureSelector& sel);
LadderPolynomial quadrature_y(const Coeffs& coeffs, const QuadratureSelector& sel);

/// Variances <(dX)^2>, <(dY)^2> of the squeezed state.
std::pair<double, double> quadrature_variances(const Coeffs& coeffs, const QuadratureSelector& sel,
                                               const InputState& state);

Squeezing squeezing(const Coeffs& coeffs, const QuadratureSelector& sel, const InputState& state);
Squeezing squeezing_symmetric_closed(double r, const QuadratureSelector& sel);

MomentTable moment_table(const Coeffs& coeffs, const InputState& state);

/// g2 = <a+^2 a^2>/<a+ a>^2 - 1 of output mode `mode`; throws UndefinedRatio on vacuum output.
double g2(const Coeffs& coeffs, const InputState& state, int mode);

/// Literal closed forms for <a1+ a1> and <a1+^2 a1^2> under a number-state input.
std::pair<double, double> a1_moments_closed(const Coeffs& coeffs, const std::array<int, 3>& n);

/// <a1+^2 a1^2> - <a1+ a1>^2 for input |0, n, n>, evaluated by the moment engine.
double subpoisson_certificate(const Coeffs& coeffs, int n);

/// Sum-of-squares form of the certificate; valid when mode 1 sees modes 2 and 3 alike
/// (g(1) = h(1)), which holds for symmetric squeezing.
double subpoisson_sum_of_squares(const Coeffs& coeffs, int n);

/// V_jk = sqrt(<a_j+^2 a_j^2><a_k+^2 a_k^2>)/<a_j+ a_j a_k+ a_k> - 1.
double cauchy_schwarz(const Coeffs& coeffs, const InputState& state, int j, int k);

}  // namespace trisqueeze
