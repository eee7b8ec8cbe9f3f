#include "trisqueeze/fock_oracle.hpp"

#include <fmt/format.h>

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace trisqueeze {

namespace {

using cplx = std::complex<double>;

// a_mode^times psi; lowering never leaves the truncated space.
Eigen::VectorXcd lower(const FockCutoff& cutoff, const Eigen::VectorXcd& psi, int mode, int times) {
  Eigen::VectorXcd cur = psi;
  const int stride = mode == 0 ? cutoff.levels() * cutoff.levels() : mode == 1 ? cutoff.levels() : 1;
  for (int t = 0; t < times; ++t) {
    Eigen::VectorXcd next = Eigen::VectorXcd::Zero(cur.size());
    for (int i = 0; i < cutoff.dim(); ++i) {
      const int nj = cutoff.occupations(i)[mode];
      if (nj > 0) next(i - stride) += std::sqrt(double(nj)) * cur(i);
    }
    cur = std::move(next);
  }
  return cur;
}

void check_mode(int mode) {
  if (mode < 1 || mode > 3) throw DomainError(fmt::format("mode {} outside 1..3", mode));
}

}  // namespace

FockCutoff::FockCutoff(int n) : n_(n) {
  if (n < kMin || n > kMax) throw DomainError(fmt::format("Fock cutoff {} outside {}..{}", n, kMin, kMax));
}

std::array<int, 3> FockCutoff::occupations(int index) const {
  const int l = levels();
  return {index / (l * l), (index / l) % l, index % l};
}

double TruncationReport::max() const {
  return std::max({norm_defect, top_shell[0], top_shell[1], top_shell[2]});
}

TruncatedState::TruncatedState(FockCutoff cutoff, Eigen::VectorXcd amplitudes, double preparation_defect)
    : cutoff_(cutoff), amplitudes_(std::move(amplitudes)), preparation_defect_(preparation_defect) {
  if (amplitudes_.size() != cutoff_.dim()) {
    throw DomainError(fmt::format("state has {} amplitudes, cutoff needs {}", amplitudes_.size(), cutoff_.dim()));
  }
}

TruncatedState TruncatedState::number(FockCutoff cutoff, int n1, int n2, int n3) {
  for (int n : {n1, n2, n3}) {
    if (n < 0 || n > cutoff.n()) throw DomainError(fmt::format("occupation {} outside 0..{}", n, cutoff.n()));
  }
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(cutoff.dim());
  psi(cutoff.index(n1, n2, n3)) = 1;
  return {cutoff, std::move(psi)};
}

Eigen::VectorXcd coherent_amplitudes(cplx alpha, int n_max) {
  Eigen::VectorXcd c(n_max + 1);
  c(0) = std::exp(-0.5 * std::norm(alpha));
  for (int n = 1; n <= n_max; ++n) c(n) = c(n - 1) * alpha / std::sqrt(double(n));
  return c;
}

TruncatedState TruncatedState::from_input(FockCutoff cutoff, const InputState& input) {
  std::array<Eigen::VectorXcd, 3> factors;
  double defect = 0;
  for (int j = 0; j < 3; ++j) {
    const ModeState& m = input.mode(j + 1);
    if (const auto* num = std::get_if<NumberState>(&m)) {
      if (num->n > cutoff.n()) throw DomainError(fmt::format("occupation {} exceeds cutoff {}", num->n, cutoff.n()));
      factors[j] = Eigen::VectorXcd::Zero(cutoff.levels());
      factors[j](num->n) = 1;
    } else {
      factors[j] = coherent_amplitudes(std::get<CoherentState>(m).alpha, cutoff.n());
      const double lost = 1 - factors[j].squaredNorm();
      defect = std::max(defect, lost);
      factors[j] /= factors[j].norm();
    }
  }
  if (defect > kLeakageTolerance) {
    TruncationReport report;
    report.norm_defect = defect;
    throw TruncationError(fmt::format("coherent input loses {:.3g} of its weight at cutoff {}", defect, cutoff.n()),
                          report);
  }
  Eigen::VectorXcd psi(cutoff.dim());
  for (int i = 0; i < cutoff.dim(); ++i) {
    const auto n = cutoff.occupations(i);
    psi(i) = factors[0](n[0]) * factors[1](n[1]) * factors[2](n[2]);
  }
  return {cutoff, std::move(psi), defect};
}

Eigen::SparseMatrix<double> build_generator(const Params& params, const FockCutoff& cutoff) {
  validate(params);
  const std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
  const std::array<double, 3> r{params.r1, params.r2, params.r3};
  std::vector<Eigen::Triplet<double>> entries;
  for (int i = 0; i < cutoff.dim(); ++i) {
    const auto n = cutoff.occupations(i);
    for (int p = 0; p < 3; ++p) {
      if (r[p] == 0) continue;
      const auto [j, k] = pairs[p];
      // r a_j a_k lowers both modes; -r a_j+ a_k+ is its negative transpose.
      if (n[j] > 0 && n[k] > 0) {
        auto m = n;
        --m[j];
        --m[k];
        const double v = r[p] * std::sqrt(double(n[j]) * n[k]);
        const int row = cutoff.index(m[0], m[1], m[2]);
        entries.emplace_back(row, i, v);
        entries.emplace_back(i, row, -v);
      }
    }
  }
  Eigen::SparseMatrix<double> k(cutoff.dim(), cutoff.dim());
  k.setFromTriplets(entries.begin(), entries.end());
  return k;
}

TruncationReport truncation_report(const TruncatedState& state) {
  const FockCutoff& cutoff = state.cutoff();
  TruncationReport report;
  report.norm_defect = std::abs(1 - state.amplitudes().squaredNorm());
  for (int i = 0; i < cutoff.dim(); ++i) {
    const auto n = cutoff.occupations(i);
    const double p = std::norm(state.amplitudes()(i));
    for (int j = 0; j < 3; ++j) {
      if (n[j] == cutoff.n()) report.top_shell[j] += p;
    }
  }
  return report;
}

FockPropagator::FockPropagator(const Params& params, FockCutoff cutoff) : params_(params), cutoff_(cutoff) {
  const Eigen::SparseMatrix<double> k = build_generator(params, cutoff);
  // Every term moves the total photon number by two, so its parity is conserved.
  for (int i = 0; i < cutoff.dim(); ++i) {
    const auto n = cutoff.occupations(i);
    block_index_[(n[0] + n[1] + n[2]) % 2].push_back(i);
  }
  const Eigen::MatrixXd dense = Eigen::MatrixXd(k);
  for (int b = 0; b < 2; ++b) {
    const auto& idx = block_index_[b];
    const Eigen::Index m = static_cast<Eigen::Index>(idx.size());
    Eigen::MatrixXd block(m, m);
    for (Eigen::Index c = 0; c < m; ++c)
      for (Eigen::Index r = 0; r < m; ++r) block(r, c) = dense(idx[r], idx[c]);
    block_exp_[b] = block.exp();
  }
}

TruncatedState FockPropagator::apply(const TruncatedState& state) const {
  if (state.cutoff().n() != cutoff_.n()) throw DomainError("state and propagator use different cutoffs");
  Eigen::VectorXcd out(cutoff_.dim());
  for (int b = 0; b < 2; ++b) {
    const auto& idx = block_index_[b];
    Eigen::VectorXcd in(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i) in(i) = state.amplitudes()(idx[i]);
    const Eigen::VectorXcd res = block_exp_[b].cast<cplx>() * in;
    for (std::size_t i = 0; i < idx.size(); ++i) out(idx[i]) = res(i);
  }
  return {cutoff_, std::move(out), state.preparation_defect()};
}

TruncatedState apply_squeeze(const FockPropagator& propagator, const TruncatedState& state, TruncationReport* report,
                             double tol) {
  TruncatedState out = propagator.apply(state);
  const TruncationReport rep = truncation_report(out);
  if (report) *report = rep;
  if (!rep.acceptable(tol)) {
    throw TruncationError(
        fmt::format("truncation leakage {:.3g} exceeds {:.1g} (norm defect {:.3g}, top shell {:.3g}, {:.3g}, {:.3g})",
                    rep.max(), tol, rep.norm_defect, rep.top_shell[0], rep.top_shell[1], rep.top_shell[2]),
        rep);
  }
  return out;
}

TruncatedState apply_squeeze(const TruncatedState& state, const Params& params, TruncationReport* report,
                             double tol) {
  return apply_squeeze(FockPropagator(params, state.cutoff()), state, report, tol);
}

cplx oracle_expectation(const TruncatedState& state, const Monomial& monomial) {
  for (int j = 0; j < 3; ++j) {
    if (monomial.creation[j] > 4 || monomial.annihilation[j] > 4 || monomial.creation[j] < 0 ||
        monomial.annihilation[j] < 0) {
      throw DomainError(fmt::format("monomial {} exceeds 4 quanta per mode", monomial.to_string()));
    }
  }
  Eigen::VectorXcd bra = state.amplitudes();
  Eigen::VectorXcd ket = state.amplitudes();
  for (int j = 0; j < 3; ++j) {
    bra = lower(state.cutoff(), bra, j, monomial.creation[j]);
    ket = lower(state.cutoff(), ket, j, monomial.annihilation[j]);
  }
  return bra.dot(ket);
}

cplx oracle_expectation(const TruncatedState& state, const LadderPolynomial& poly) {
  cplx sum = 0;
  for (const auto& [m, c] : poly.terms()) sum += c * oracle_expectation(state, m);
  return sum;
}

SingleModeDensity reduced_density(const TruncatedState& state, int mode) {
  check_mode(mode);
  const FockCutoff& cutoff = state.cutoff();
  const int l = cutoff.levels();
  Eigen::MatrixXcd m(l, l * l);
  for (int i = 0; i < cutoff.dim(); ++i) {
    const auto n = cutoff.occupations(i);
    const int j = mode - 1;
    const int rest = j == 0 ? n[1] * l + n[2] : j == 1 ? n[0] * l + n[2] : n[0] * l + n[1];
    m(n[j], rest) = state.amplitudes()(i);
  }
  return {m * m.adjoint()};
}

double oracle_wigner(const SingleModeDensity& density, cplx z, Ordering s) {
  const int n = density.n();
  const double tail = density.rho(n, n).real();
  if (tail >= kLeakageTolerance) {
    TruncationReport report;
    report.top_shell[0] = tail;
    throw TruncationError(fmt::format("reduced density has {:.3g} weight in its top level", tail), report);
  }
  constexpr double kPi = std::numbers::pi;
  if (s == Ordering::Antinormal) {
    const Eigen::VectorXcd c = coherent_amplitudes(z, n);
    return (c.adjoint() * density.rho * c)(0, 0).real() / kPi;
  }
  if (s != Ordering::Symmetric) throw DomainError("oracle quasiprobability supports s = -1 and s = 0 only");

  // D(z) in a space large enough that its first N+1 rows are exact to rounding.
  const double r = std::abs(z);
  const int big = n + 60 + static_cast<int>(std::ceil(6 * r * r + 12 * r));
  Eigen::MatrixXcd gen = Eigen::MatrixXcd::Zero(big + 1, big + 1);
  for (int k = 1; k <= big; ++k) {
    gen(k, k - 1) = z * std::sqrt(double(k));               // z a+
    gen(k - 1, k) = -std::conj(z) * std::sqrt(double(k));  // -z* a
  }
  const Eigen::MatrixXcd d = gen.exp();
  const Eigen::MatrixXcd rows = d.topRows(n + 1);
  Eigen::VectorXd parity(big + 1);
  for (int k = 0; k <= big; ++k) parity(k) = k % 2 == 0 ? 1 : -1;
  const Eigen::MatrixXcd displaced_parity = rows * parity.asDiagonal() * rows.adjoint();
  return 2 / kPi * (density.rho * displaced_parity).trace().real();
}

}  // namespace trisqueeze
