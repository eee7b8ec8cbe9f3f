#include "trisqueeze/moments.hpp"

#include <fmt/format.h>

#include <cmath>

namespace trisqueeze {

namespace {

using cplx = std::complex<double>;

double falling_factorial(int n, int p) {
  double f = 1;
  for (int i = 0; i < p; ++i) f *= (n - i);
  return f;
}

void validate_mode_state(const ModeState& s) {
  if (const auto* num = std::get_if<NumberState>(&s)) {
    if (num->n < 0) throw DomainError(fmt::format("photon number {} is negative", num->n));
  } else {
    const auto& coh = std::get<CoherentState>(s);
    if (!std::isfinite(coh.alpha.real()) || !std::isfinite(coh.alpha.imag()) ||
        std::abs(coh.alpha) > kMaxCoherentAmplitude) {
      throw DomainError(fmt::format("coherent amplitude |alpha| = {} outside 0..{}", std::abs(coh.alpha),
                                    kMaxCoherentAmplitude));
    }
  }
}

// <m| (a+)^p a^q |m>
cplx mode_expectation(const ModeState& s, int p, int q) {
  if (const auto* num = std::get_if<NumberState>(&s)) {
    return p == q ? cplx(falling_factorial(num->n, p)) : cplx(0);
  }
  const cplx a = std::get<CoherentState>(s).alpha;
  return std::pow(std::conj(a), p) * std::pow(a, q);
}

double real_checked(cplx v, const char* what) {
  if (std::abs(v.imag()) > 1e-9 * std::max(1.0, std::abs(v.real()))) {
    throw Error(fmt::format("{} has an imaginary part {}", what, v.imag()));
  }
  return v.real();
}

LadderPolynomial number_operator(const LadderPolynomial& b) { return b.adjoint() * b; }

LadderPolynomial pair_operator(const LadderPolynomial& b) {
  const LadderPolynomial bd = b.adjoint();
  return (bd * bd) * (b * b);
}

void check_distinct(int j, int k) {
  BogoliubovCoeffs<double>::row(j);
  BogoliubovCoeffs<double>::row(k);
  if (j == k) throw DomainError(fmt::format("cross moment needs two distinct modes, got ({}, {})", j, k));
}

}  // namespace

InputState::InputState(std::array<ModeState, 3> modes) : modes_(modes) {
  for (const auto& m : modes_) validate_mode_state(m);
}

InputState InputState::number(int n1, int n2, int n3) {
  return InputState({NumberState{n1}, NumberState{n2}, NumberState{n3}});
}

InputState InputState::coherent(cplx a1, cplx a2, cplx a3) {
  return InputState({CoherentState{a1}, CoherentState{a2}, CoherentState{a3}});
}

const ModeState& InputState::mode(int j) const { return modes_[Coeffs::row(j)]; }

bool InputState::all_number() const {
  for (const auto& m : modes_)
    if (!std::holds_alternative<NumberState>(m)) return false;
  return true;
}

bool InputState::all_coherent() const {
  for (const auto& m : modes_)
    if (!std::holds_alternative<CoherentState>(m)) return false;
  return true;
}

std::optional<std::array<int, 3>> InputState::occupations() const {
  if (!all_number()) return std::nullopt;
  return std::array<int, 3>{std::get<NumberState>(modes_[0]).n, std::get<NumberState>(modes_[1]).n,
                            std::get<NumberState>(modes_[2]).n};
}

QuadratureSelector::QuadratureSelector(int c1, int c2) : c1_(c1), c2_(c2) {
  if ((c1 != 0 && c1 != 1) || (c2 != 0 && c2 != 1)) {
    throw DomainError(fmt::format("quadrature selector ({}, {}) must take values 0 or 1", c1, c2));
  }
}

int MomentTable::pair_index(int j, int k) {
  check_distinct(j, k);
  if (j > k) std::swap(j, k);
  return j == 1 ? k - 2 : 2;
}

std::optional<double> MomentTable::g2(int j) const {
  const double n = mean_n[Coeffs::row(j)];
  if (!(n > kRatioFloor)) return std::nullopt;
  return pair_n[Coeffs::row(j)] / (n * n) - 1;
}

std::optional<double> MomentTable::cauchy_schwarz(int j, int k) const {
  const double denom = cross(j, k);
  if (!(denom > kRatioFloor)) return std::nullopt;
  // Rounding can leave a vanishing pair moment marginally negative.
  const double num = std::max(0.0, pair_n[Coeffs::row(j)]) * std::max(0.0, pair_n[Coeffs::row(k)]);
  return std::sqrt(num) / denom - 1;
}

LadderPolynomial transformed_mode(const Coeffs& coeffs, int j) {
  LadderPolynomial b;
  for (int k = 1; k <= 3; ++k) {
    b += coeffs.annihilator_coeff(j, k) * LadderPolynomial::annihilator(k);
    b += coeffs.creator_coeff(j, k) * LadderPolynomial::creator(k);
  }
  return b;
}

cplx expectation(const LadderPolynomial& poly, const InputState& state) {
  cplx total{};
  for (const auto& [m, c] : poly.terms()) {
    cplx v = c;
    for (int j = 0; j < 3 && v != cplx{}; ++j) {
      v *= mode_expectation(state.modes()[j], m.creation[j], m.annihilation[j]);
    }
    total += v;
  }
  return total;
}

LadderPolynomial quadrature_x(const Coeffs& coeffs, const QuadratureSelector& sel) {
  const std::array<double, 3> weight{1.0, double(sel.c1()), double(sel.c2())};
  LadderPolynomial x;
  for (int j = 1; j <= 3; ++j) {
    if (weight[j - 1] == 0) continue;
    const LadderPolynomial b = transformed_mode(coeffs, j);
    x += (0.5 * weight[j - 1]) * (b + b.adjoint());
  }
  return x;
}

LadderPolynomial quadrature_y(const Coeffs& coeffs, const QuadratureSelector& sel) {
  const std::array<double, 3> weight{1.0, double(sel.c1()), double(sel.c2())};
  const cplx factor = 1.0 / cplx(0, 2);
  LadderPolynomial y;
  for (int j = 1; j <= 3; ++j) {
    if (weight[j - 1] == 0) continue;
    const LadderPolynomial b = transformed_mode(coeffs, j);
    y += (factor * weight[j - 1]) * (b - b.adjoint());
  }
  return y;
}

std::pair<double, double> quadrature_variances(const Coeffs& coeffs, const QuadratureSelector& sel,
                                               const InputState& state) {
  auto variance = [&](const LadderPolynomial& q) {
    const cplx mean = expectation(q, state);
    const cplx second = expectation(q * q, state);
    return real_checked(second - mean * mean, "quadrature variance");
  };
  return {variance(quadrature_x(coeffs, sel)), variance(quadrature_y(coeffs, sel))};
}

Squeezing squeezing(const Coeffs& coeffs, const QuadratureSelector& sel, const InputState& state) {
  const auto [vx, vy] = quadrature_variances(coeffs, sel, state);
  const double c = sel.normalizer();
  return {(2 * vx - c) / c, (2 * vy - c) / c};
}

Squeezing squeezing_symmetric_closed(double r, const QuadratureSelector& sel) {
  validate(Params::symmetric(r));
  const double c1 = sel.c1();
  const double c2 = sel.c2();
  const double k = 1 + c1 * c1 + c2 * c2;
  const double m = c1 + c2 + c1 * c2;
  const double sx = (k * (2 * std::exp(2 * r) + std::exp(-4 * r) - 3) + 2 * m * (std::exp(-4 * r) - std::exp(2 * r))) /
                    (3 * k);
  const double sy = (k * (2 * std::exp(-2 * r) + std::exp(4 * r) - 3) + 2 * m * (std::exp(4 * r) - std::exp(-2 * r))) /
                    (3 * k);
  return {sx, sy};
}

MomentTable moment_table(const Coeffs& coeffs, const InputState& state) {
  std::array<LadderPolynomial, 3> b{transformed_mode(coeffs, 1), transformed_mode(coeffs, 2),
                                    transformed_mode(coeffs, 3)};
  std::array<LadderPolynomial, 3> n{number_operator(b[0]), number_operator(b[1]), number_operator(b[2])};
  MomentTable t;
  for (int j = 0; j < 3; ++j) {
    t.mean_n[j] = real_checked(expectation(n[j], state), "mean photon number");
    t.pair_n[j] = real_checked(expectation(pair_operator(b[j]), state), "pair moment");
  }
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  for (int p = 0; p < 3; ++p) {
    const auto [j, k] = pairs[p];
    t.cross_n[p] = real_checked(expectation(n[j] * n[k], state), "cross moment");
  }
  return t;
}

double g2(const Coeffs& coeffs, const InputState& state, int mode) {
  const LadderPolynomial b = transformed_mode(coeffs, mode);
  const double n = real_checked(expectation(number_operator(b), state), "mean photon number");
  if (!(n > kRatioFloor)) {
    throw UndefinedRatio(fmt::format("g2 of mode {} is undefined: mean photon number {} is below {}", mode, n,
                                     kRatioFloor));
  }
  const double pair = real_checked(expectation(pair_operator(b), state), "pair moment");
  return pair / (n * n) - 1;
}

std::pair<double, double> a1_moments_closed(const Coeffs& c, const std::array<int, 3>& occ) {
  for (int n : occ)
    if (n < 0) throw DomainError(fmt::format("photon number {} is negative", n));
  const double n1 = occ[0], n2 = occ[1], n3 = occ[2];
  const double f1 = c.f1(1), f2 = c.f2(1), g1 = c.g1(1), g2 = c.g2(1), h1 = c.h1(1), h2 = c.h2(1);
  auto sq = [](double v) { return v * v; };
  auto qu = [](double v) { return v * v * v * v; };

  const double mean_f = n1 * sq(f1) + (n1 + 1) * sq(f2);
  const double mean_g = n2 * sq(g1) + (n2 + 1) * sq(g2);
  const double mean_h = n3 * sq(h1) + (n3 + 1) * sq(h2);
  const double mean = mean_f + mean_g + mean_h;

  const double pair =
      n1 * (n1 - 1) * qu(f1) + (n1 + 1) * (n1 + 2) * qu(f2) + sq(2 * n1 + 1) * sq(f1) * sq(f2) +
      n2 * (n2 - 1) * qu(g1) + (n2 + 1) * (n2 + 2) * qu(g2) + sq(2 * n2 + 1) * sq(g1) * sq(g2) +
      n3 * (n3 - 1) * qu(h1) + (n3 + 1) * (n3 + 2) * qu(h2) + sq(2 * n3 + 1) * sq(h1) * sq(h2) +
      (2 * n1 + 1) * f1 * f2 * (2 * (2 * n2 + 1) * g1 * g2 + (2 * n3 + 1) * h1 * h2) +
      (2 * n3 + 1) * h1 * h2 * (2 * (2 * n2 + 1) * g1 * g2 + (2 * n1 + 1) * f1 * f2) +
      4 * mean_f * (mean_g + mean_h) + 4 * mean_g * mean_h;
  return {mean, pair};
}

double subpoisson_certificate(const Coeffs& coeffs, int n) {
  const InputState state = InputState::number(0, n, n);
  const LadderPolynomial b = transformed_mode(coeffs, 1);
  const double mean = real_checked(expectation(number_operator(b), state), "mean photon number");
  const double pair = real_checked(expectation(pair_operator(b), state), "pair moment");
  return pair - mean * mean;
}

double subpoisson_sum_of_squares(const Coeffs& c, int n) {
  if (n < 0) throw DomainError(fmt::format("photon number {} is negative", n));
  const double scale = std::max(1.0, c.annihilation.cwiseAbs().maxCoeff());
  if (std::abs(c.g1(1) - c.h1(1)) > 1e-12 * scale || std::abs(c.g2(1) - c.h2(1)) > 1e-12 * scale) {
    throw DomainError("sum-of-squares certificate needs g(1) = h(1), i.e. symmetric squeezing");
  }
  const double f1 = c.f1(1), f2 = c.f2(1), g1 = c.g1(1), g2 = c.g2(1);
  const double m = n;
  auto sq = [](double v) { return v * v; };
  return sq(sq(f2)) + 2 * m * (m - 1) * sq(sq(g1)) + 2 * (m + 1) * (m + 2) * sq(sq(g2)) +
         sq(f1 * f2 + 2 * (2 * m + 1) * g1 * g2) + 4 * sq(f2) * (m * sq(g1) + (m + 1) * sq(g2));
}

double cauchy_schwarz(const Coeffs& coeffs, const InputState& state, int j, int k) {
  check_distinct(j, k);
  const LadderPolynomial bj = transformed_mode(coeffs, j);
  const LadderPolynomial bk = transformed_mode(coeffs, k);
  const double cross = real_checked(expectation(number_operator(bj) * number_operator(bk), state), "cross moment");
  if (!(cross > kRatioFloor)) {
    throw UndefinedRatio(
        fmt::format("V_{}{} is undefined: cross moment {} is below {}", j, k, cross, kRatioFloor));
  }
  const double pj = std::max(0.0, real_checked(expectation(pair_operator(bj), state), "pair moment"));
  const double pk = std::max(0.0, real_checked(expectation(pair_operator(bk), state), "pair moment"));
  return std::sqrt(pj * pk) / cross - 1;
}

}  // namespace trisqueeze
