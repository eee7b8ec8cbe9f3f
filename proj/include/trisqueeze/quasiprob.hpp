#pragma once

// s-parameterized characteristic function and quasiprobability distributions of
// output mode 1 for three-mode squeezed number states S(r)|n1, n2, n3>.
//
//   C(zeta, s) = Tr[rho exp(zeta a1+ - zeta* a1)] exp(s |zeta|^2 / 2)
//   W(z, s)    = pi^-2 \int d^2 zeta C(zeta, s) exp(z zeta* - zeta z*),   z = x + iy.
//
// With this convention the vacuum Wigner function is (2/pi) exp(-2|z|^2).

#include <Eigen/Dense>

#include <array>
#include <complex>

#include "trisqueeze/moments.hpp"

namespace trisqueeze {

enum class Ordering : int { Antinormal = -1, Symmetric = 0, Normal = 1 };

/// Husimi Q (s = -1), Wigner (s = 0) and Glauber-Sudarshan P (s = 1).
Ordering ordering_from_int(int s);
inline double ordering_value(Ordering s) { return static_cast<int>(s); }

/// Which input mode carries the excitation in the closed forms.
enum class ExcitedSlot { Mode1, Mode3 };

inline constexpr int kMaxExcitation = 20;
inline constexpr int kMaxNumericExcitation = 6;
inline constexpr int kMaxGridPoints = 257;

using Occupations = std::array<int, 3>;

/// zeta together with upsilon_k = zeta c_k - zeta* d_k, (c_k, d_k) the mode-1 coefficients of a_k, a_k+.
struct CharFnArgs {
  std::complex<double> zeta;
  std::array<std::complex<double>, 3> upsilon;
};

CharFnArgs char_fn_args(const Coeffs& coeffs, std::complex<double> zeta);

/// Gaussian parameters of the mode-1 distributions.
///
/// theta_plus / theta_minus are 2<(dX1)^2> - s/2 and 2<(dY1)^2> - s/2 of the squeezed vacuum;
/// x pairs with theta_plus and y with theta_minus. eta_plus = (c+d)^2 - theta_plus and
/// eta_minus = (c-d)^2 - theta_minus, with (c, d) the coefficients of the excited slot.
struct WignerAux {
  double lambda1 = 0;
  double lambda2 = 0;
  double b = 0;
  double k = 0;
  double theta_plus = 0;
  double theta_minus = 0;
  double eta_plus = 0;
  double eta_minus = 0;
};

WignerAux wigner_aux(const Coeffs& coeffs, Ordering s, ExcitedSlot slot = ExcitedSlot::Mode3);

std::complex<double> char_fn(const Coeffs& coeffs, const Occupations& n, std::complex<double> zeta, Ordering s);

double wigner_vacuum(const Coeffs& coeffs, std::complex<double> z, Ordering s);

/// Closed form for inputs (n, 0, 0) (slot Mode1) or (0, 0, n) (slot Mode3).
double wigner_excited(const Coeffs& coeffs, int n, ExcitedSlot slot, std::complex<double> z, Ordering s);

/// W(0, 0, s) for input (0, 0, n3) (or (n3, 0, 0) with slot Mode1).
double wigner_origin(const Coeffs& coeffs, int n3, Ordering s, ExcitedSlot slot = ExcitedSlot::Mode3);

/// s-quasiprobability of the number state |n>.
double fock_limit_wigner(int n, std::complex<double> z, Ordering s);

/// Rectangular x-y sampling grid, endpoints inclusive.
struct GridSpec {
  double x_min = -4;
  double x_max = 4;
  int nx = 101;
  double y_min = -4;
  double y_max = 4;
  int ny = 101;

  double x(int i) const { return nx == 1 ? x_min : x_min + (x_max - x_min) * i / (nx - 1); }
  double y(int j) const { return ny == 1 ? y_min : y_min + (y_max - y_min) * j / (ny - 1); }
  double dx() const { return nx == 1 ? 0 : (x_max - x_min) / (nx - 1); }
  double dy() const { return ny == 1 ? 0 : (y_max - y_min) / (ny - 1); }

  void validate() const;

  /// Symmetric window wide enough that the distribution has decayed at its edges.
  static GridSpec automatic(const Coeffs& coeffs, const Occupations& n, Ordering s, int nx = 101, int ny = 101);
};

struct QuasiprobGrid {
  GridSpec grid;
  Ordering s = Ordering::Symmetric;
  Eigen::MatrixXd values;  // values(i, j) = W(x_i, y_j)

  /// Riemann sum over the sampled rectangle.
  double integral() const;
};

/// Closed-form evaluation on a grid; available for (0,0,0), (n,0,0) and (0,0,n).
QuasiprobGrid wigner_closed_grid(const Coeffs& coeffs, const Occupations& n, const GridSpec& grid, Ordering s);
bool has_closed_form(const Occupations& n);

struct NumericOptions {
  double boundary_tolerance = 1e-12;  // |C| at the edge of the zeta window
  double refinement_tolerance = 1e-8;  // max |W_2P - W_P| to stop panel doubling
  int nodes_per_panel = 16;
  int max_panels = 512;
};

/// Direct two-dimensional quadrature of the characteristic function.
QuasiprobGrid wigner_numeric(const Coeffs& coeffs, const Occupations& n, const GridSpec& grid, Ordering s,
                             const NumericOptions& options = {});

}  // namespace trisqueeze
