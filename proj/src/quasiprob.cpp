#include "trisqueeze/quasiprob.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "trisqueeze/laguerre.hpp"
#include "trisqueeze/quadrature.hpp"

namespace trisqueeze {

namespace {

using cplx = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void require_convergent(Ordering s, const char* what) {
  if (s == Ordering::Normal) {
    throw DomainError(fmt::format("{} is only defined here for s = -1 or s = 0", what));
  }
}

void check_excitation(int n, int limit) {
  if (n < 0 || n > limit) throw DomainError(fmt::format("excitation {} outside 0..{}", n, limit));
}

}  // namespace

Ordering ordering_from_int(int s) {
  if (s < -1 || s > 1) throw DomainError(fmt::format("ordering parameter s = {} is not in {{-1, 0, 1}}", s));
  return static_cast<Ordering>(s);
}

CharFnArgs char_fn_args(const Coeffs& coeffs, cplx zeta) {
  CharFnArgs args{zeta, {}};
  for (int k = 1; k <= 3; ++k) {
    args.upsilon[k - 1] = zeta * coeffs.annihilator_coeff(1, k) - std::conj(zeta) * coeffs.creator_coeff(1, k);
  }
  return args;
}

WignerAux wigner_aux(const Coeffs& coeffs, Ordering ordering, ExcitedSlot slot) {
  const double s = ordering_value(ordering);
  const Eigen::Vector3d c = coeffs.annihilation.row(0).transpose();
  const Eigen::Vector3d d = coeffs.creation.row(0).transpose();
  WignerAux aux;
  aux.lambda1 = c.squaredNorm() + d.squaredNorm();
  aux.lambda2 = c.dot(d);
  aux.b = 0.5 * (aux.lambda1 - s);
  aux.k = aux.b * aux.b - aux.lambda2 * aux.lambda2;
  aux.theta_plus = 0.5 * (c + d).squaredNorm() - 0.5 * s;
  aux.theta_minus = 0.5 * (c - d).squaredNorm() - 0.5 * s;
  const int k = slot == ExcitedSlot::Mode1 ? 0 : 2;
  aux.eta_plus = (c(k) + d(k)) * (c(k) + d(k)) - aux.theta_plus;
  aux.eta_minus = (c(k) - d(k)) * (c(k) - d(k)) - aux.theta_minus;
  return aux;
}

cplx char_fn(const Coeffs& coeffs, const Occupations& n, cplx zeta, Ordering s) {
  for (int nj : n) check_excitation(nj, kMaxLaguerreDegree);
  const CharFnArgs args = char_fn_args(coeffs, zeta);
  double exponent = 0.5 * ordering_value(s) * std::norm(zeta);
  double product = 1;
  for (int k = 0; k < 3; ++k) {
    const double u = std::norm(args.upsilon[k]);
    exponent -= 0.5 * u;
    product *= laguerre(n[k], u);
  }
  return std::exp(exponent) * product;
}

double wigner_vacuum(const Coeffs& coeffs, cplx z, Ordering s) {
  const WignerAux aux = wigner_aux(coeffs, s);
  if (!(aux.theta_plus > 0) || !(aux.theta_minus > 0)) {
    throw SingularDistribution(fmt::format("P-function singular: theta+ = {}, theta- = {}", aux.theta_plus,
                                           aux.theta_minus));
  }
  const double x = z.real(), y = z.imag();
  return std::exp(-x * x / aux.theta_plus - y * y / aux.theta_minus) /
         (kPi * std::sqrt(aux.theta_plus * aux.theta_minus));
}

double wigner_excited(const Coeffs& coeffs, int n, ExcitedSlot slot, cplx z, Ordering s) {
  require_convergent(s, "the excited-state closed form");
  check_excitation(n, kMaxExcitation);
  const WignerAux aux = wigner_aux(coeffs, s, slot);
  const int k = slot == ExcitedSlot::Mode1 ? 1 : 3;
  const double cs = coeffs.annihilator_coeff(1, k);
  const double ds = coeffs.creator_coeff(1, k);
  const double beta_plus = (cs + ds) * (cs + ds);
  const double beta_minus = (cs - ds) * (cs - ds);
  const double tp = aux.theta_plus, tm = aux.theta_minus;
  const double x2 = z.real() * z.real(), y2 = z.imag() * z.imag();

  // Each quadrature axis contributes eta^m L_m^{-1/2}(beta q^2 / (theta eta)) / theta^m.
  double sum = 0;
  for (int m = 0; m <= n; ++m) {
    const double along_x = laguerre_homogeneous(m, -0.5, aux.eta_plus, x2 * beta_plus / tp) / std::pow(tp, m);
    const double along_y =
        laguerre_homogeneous(n - m, -0.5, aux.eta_minus, y2 * beta_minus / tm) / std::pow(tm, n - m);
    sum += along_x * along_y;
  }
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return sign * sum * std::exp(-x2 / tp - y2 / tm) / (kPi * std::sqrt(tp * tm));
}

double wigner_origin(const Coeffs& coeffs, int n3, Ordering s, ExcitedSlot slot) {
  return wigner_excited(coeffs, n3, slot, cplx{}, s);
}

double fock_limit_wigner(int n, cplx z, Ordering ordering) {
  require_convergent(ordering, "the number-state quasiprobability");
  check_excitation(n, kMaxExcitation);
  const double s = ordering_value(ordering);
  const double rho2 = std::norm(z);
  // (1+s)^n L_n(4|z|^2/(1-s^2)) written homogeneously so that s = -1 stays finite.
  const double poly = laguerre_homogeneous(n, 0.0, 1 + s, 4 * rho2 / (1 - s));
  const double sign = n % 2 == 0 ? 1.0 : -1.0;
  return 2 * sign / kPi * poly / std::pow(1 - s, n + 1) * std::exp(-2 * rho2 / (1 - s));
}

void GridSpec::validate() const {
  if (nx < 1 || ny < 1 || nx > kMaxGridPoints || ny > kMaxGridPoints) {
    throw DomainError(fmt::format("grid {}x{} outside 1..{} points per axis", nx, ny, kMaxGridPoints));
  }
  for (double v : {x_min, x_max, y_min, y_max}) {
    if (!std::isfinite(v)) throw DomainError("grid bounds must be finite");
  }
  if (x_min > x_max || y_min > y_max) throw DomainError("grid bounds are reversed");
}

GridSpec GridSpec::automatic(const Coeffs& coeffs, const Occupations& n, Ordering s, int nx, int ny) {
  require_convergent(s, "an automatic grid window");
  const WignerAux aux = wigner_aux(coeffs, s);
  const int total = n[0] + n[1] + n[2];
  const double decay = 36.0 + 6.0 * total;
  const double hx = std::sqrt(aux.theta_plus * decay);
  const double hy = std::sqrt(aux.theta_minus * decay);
  GridSpec g{-hx, hx, nx, -hy, hy, ny};
  g.validate();
  return g;
}

double QuasiprobGrid::integral() const { return values.sum() * grid.dx() * grid.dy(); }

bool has_closed_form(const Occupations& n) { return (n[1] == 0 && n[2] == 0) || (n[0] == 0 && n[1] == 0); }

QuasiprobGrid wigner_closed_grid(const Coeffs& coeffs, const Occupations& n, const GridSpec& grid, Ordering s) {
  grid.validate();
  if (!has_closed_form(n)) {
    throw DomainError(fmt::format("no closed form for input ({}, {}, {})", n[0], n[1], n[2]));
  }
  QuasiprobGrid out{grid, s, Eigen::MatrixXd(grid.nx, grid.ny)};
  const bool vacuum = n[0] == 0 && n[2] == 0;
  const ExcitedSlot slot = n[0] > 0 ? ExcitedSlot::Mode1 : ExcitedSlot::Mode3;
  const int excitation = std::max(n[0], n[2]);
  for (int i = 0; i < grid.nx; ++i) {
    for (int j = 0; j < grid.ny; ++j) {
      const cplx z(grid.x(i), grid.y(j));
      out.values(i, j) = vacuum ? wigner_vacuum(coeffs, z, s) : wigner_excited(coeffs, excitation, slot, z, s);
    }
  }
  return out;
}

namespace {

// Characteristic function is real and even in Re(zeta) and Im(zeta) separately.
double char_fn_real(const Coeffs& coeffs, const Occupations& n, double a, double b, Ordering s) {
  return char_fn(coeffs, n, cplx(a, b), s).real();
}

struct ZetaWindow {
  double a_max;  // along Re(zeta), the conjugate of y
  double b_max;  // along Im(zeta), the conjugate of x
};

ZetaWindow select_window(const Coeffs& coeffs, const Occupations& n, Ordering s, double tol) {
  const WignerAux aux = wigner_aux(coeffs, s);
  if (!(aux.theta_plus > 0) || !(aux.theta_minus > 0)) {
    throw QuadratureError("characteristic function does not decay: nonpositive Gaussian width");
  }
  ZetaWindow w{std::sqrt(2 / aux.theta_minus), std::sqrt(2 / aux.theta_plus)};
  constexpr int kEdgeSamples = 65;
  constexpr int kMaxGrowth = 80;
  auto edge_max = [&](bool along_a) {
    double m = 0;
    for (int i = 0; i < kEdgeSamples; ++i) {
      const double t = double(i) / (kEdgeSamples - 1);
      const double v = along_a ? char_fn_real(coeffs, n, w.a_max, t * w.b_max, s)
                               : char_fn_real(coeffs, n, t * w.a_max, w.b_max, s);
      m = std::max(m, std::abs(v));
    }
    return m;
  };
  int confirmations = 0;
  for (int iter = 0; iter < kMaxGrowth; ++iter) {
    const bool a_ok = edge_max(true) < tol;
    const bool b_ok = edge_max(false) < tol;
    if (a_ok && b_ok) {
      // Require the edge to stay decayed one growth step further out.
      if (++confirmations == 2) return w;
      w.a_max *= 1.25;
      w.b_max *= 1.25;
      continue;
    }
    confirmations = 0;
    if (!a_ok) w.a_max *= 1.25;
    if (!b_ok) w.b_max *= 1.25;
  }
  throw QuadratureError(fmt::format("integrand not decayed below {} within the zeta window ({}, {})", tol,
                                    w.a_max, w.b_max));
}

Eigen::MatrixXd integrate_on_grid(const Coeffs& coeffs, const Occupations& n, const GridSpec& grid, Ordering s,
                                  const ZetaWindow& window, int panels, int order) {
  const QuadratureRule ra = composite_gauss_legendre(0, window.a_max, panels, order);
  const QuadratureRule rb = composite_gauss_legendre(0, window.b_max, panels, order);
  const Eigen::Index na = ra.nodes.size(), nb = rb.nodes.size();
  Eigen::MatrixXd c(na, nb);
  for (Eigen::Index i = 0; i < na; ++i)
    for (Eigen::Index j = 0; j < nb; ++j) c(i, j) = char_fn_real(coeffs, n, ra.nodes(i), rb.nodes(j), s);

  // W(x, y) = (4/pi^2) sum_ij wa_i wb_j C(a_i, b_j) cos(2 y a_i) cos(2 x b_j)
  Eigen::MatrixXd kx(grid.nx, nb), ky(grid.ny, na);
  for (int ix = 0; ix < grid.nx; ++ix)
    for (Eigen::Index j = 0; j < nb; ++j) kx(ix, j) = rb.weights(j) * std::cos(2 * grid.x(ix) * rb.nodes(j));
  for (int iy = 0; iy < grid.ny; ++iy)
    for (Eigen::Index i = 0; i < na; ++i) ky(iy, i) = ra.weights(i) * std::cos(2 * grid.y(iy) * ra.nodes(i));
  return (4 / (kPi * kPi)) * (kx * c.transpose() * ky.transpose());
}

}  // namespace

QuasiprobGrid wigner_numeric(const Coeffs& coeffs, const Occupations& n, const GridSpec& grid, Ordering s,
                             const NumericOptions& options) {
  require_convergent(s, "numeric quasiprobability");
  for (int nj : n) check_excitation(nj, kMaxNumericExcitation);
  grid.validate();
  const ZetaWindow window = select_window(coeffs, n, s, options.boundary_tolerance);

  int panels = 4;
  Eigen::MatrixXd coarse = integrate_on_grid(coeffs, n, grid, s, window, panels, options.nodes_per_panel);
  while (panels * 2 <= options.max_panels) {
    panels *= 2;
    Eigen::MatrixXd fine = integrate_on_grid(coeffs, n, grid, s, window, panels, options.nodes_per_panel);
    const double change = (fine - coarse).cwiseAbs().maxCoeff();
    if (change < options.refinement_tolerance) return {grid, s, std::move(fine)};
    coarse = std::move(fine);
  }
  throw QuadratureError(fmt::format("panel doubling did not converge to {} within {} panels",
                                    options.refinement_tolerance, options.max_panels));
}

}  // namespace trisqueeze
