#include "trisqueeze/ladder.hpp"

#include <fmt/format.h>

#include <numeric>

#include "trisqueeze/error.hpp"

namespace trisqueeze {

namespace {

int checked_mode(int mode) {
  if (mode < 1 || mode > 3) throw DomainError(fmt::format("mode index {} is not in 1..3", mode));
  return mode - 1;
}

double binomial(int n, int k) {
  double b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

double factorial(int n) {
  double f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// a^q (a+)^p = sum_k k! C(q,k) C(p,k) (a+)^{p-k} a^{q-k}
struct Contraction {
  int removed;
  double weight;
};

std::vector<Contraction> contractions(int q, int p) {
  std::vector<Contraction> out;
  for (int k = 0; k <= std::min(q, p); ++k) {
    out.push_back({k, factorial(k) * binomial(q, k) * binomial(p, k)});
  }
  return out;
}

}  // namespace

int Monomial::degree() const {
  return std::accumulate(creation.begin(), creation.end(), 0) +
         std::accumulate(annihilation.begin(), annihilation.end(), 0);
}

std::string Monomial::to_string() const {
  std::string s;
  for (int j = 0; j < 3; ++j) {
    if (creation[j] > 0) s += fmt::format("a{}+^{} ", j + 1, creation[j]);
    if (annihilation[j] > 0) s += fmt::format("a{}^{} ", j + 1, annihilation[j]);
  }
  if (s.empty()) return "1";
  s.pop_back();
  return s;
}

LadderPolynomial LadderPolynomial::constant(Coefficient c) { return monomial(Monomial{}, c); }

LadderPolynomial LadderPolynomial::annihilator(int mode) {
  Monomial m;
  m.annihilation[checked_mode(mode)] = 1;
  return monomial(m);
}

LadderPolynomial LadderPolynomial::creator(int mode) {
  Monomial m;
  m.creation[checked_mode(mode)] = 1;
  return monomial(m);
}

LadderPolynomial LadderPolynomial::monomial(const Monomial& m, Coefficient c) {
  LadderPolynomial p;
  p.add(m, c);
  return p;
}

LadderPolynomial::Coefficient LadderPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient{} : it->second;
}

int LadderPolynomial::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

LadderPolynomial LadderPolynomial::adjoint() const {
  LadderPolynomial out;
  for (const auto& [m, c] : terms_) out.add(m.adjoint(), std::conj(c));
  return out;
}

void LadderPolynomial::add(const Monomial& m, Coefficient c) {
  if (c == Coefficient{}) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == Coefficient{}) terms_.erase(it);
  }
}

LadderPolynomial& LadderPolynomial::operator+=(const LadderPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

LadderPolynomial& LadderPolynomial::operator-=(const LadderPolynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

LadderPolynomial& LadderPolynomial::operator*=(Coefficient c) {
  if (c == Coefficient{}) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

LadderPolynomial operator*(const LadderPolynomial& lhs, const LadderPolynomial& rhs) {
  if (lhs.degree() + rhs.degree() > kMaxLadderDegree) {
    throw DomainError(fmt::format("product degree {} exceeds the normal-ordering guard {}",
                                  lhs.degree() + rhs.degree(), kMaxLadderDegree));
  }
  LadderPolynomial out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      // Only the inner a_j^q (a_j+)^p pair of each mode needs reordering.
      std::array<std::vector<Contraction>, 3> per_mode;
      for (int j = 0; j < 3; ++j) per_mode[j] = contractions(ml.annihilation[j], mr.creation[j]);
      for (const auto& c1 : per_mode[0]) {
        for (const auto& c2 : per_mode[1]) {
          for (const auto& c3 : per_mode[2]) {
            const std::array<const Contraction*, 3> picks{&c1, &c2, &c3};
            Monomial m;
            double weight = 1;
            for (int j = 0; j < 3; ++j) {
              m.creation[j] = ml.creation[j] + mr.creation[j] - picks[j]->removed;
              m.annihilation[j] = ml.annihilation[j] + mr.annihilation[j] - picks[j]->removed;
              weight *= picks[j]->weight;
            }
            out.add(m, cl * cr * weight);
          }
        }
      }
    }
  }
  return out;
}

std::string LadderPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += fmt::format("({:.6g}{:+.6g}i) {}", c.real(), c.imag(), m.to_string());
  }
  return s;
}

LadderPolynomial normal_order(const OperatorWord& word) {
  LadderPolynomial out = LadderPolynomial::constant(1.0);
  for (const auto& sym : word) {
    out = out * (sym.kind == Ladder::Create ? LadderPolynomial::creator(sym.mode)
                                            : LadderPolynomial::annihilator(sym.mode));
  }
  return out;
}

LadderPolynomial normal_order(std::span<const LadderPolynomial> factors) {
  LadderPolynomial out = LadderPolynomial::constant(1.0);
  for (const auto& f : factors) out = out * f;
  return out;
}

}  // namespace trisqueeze
