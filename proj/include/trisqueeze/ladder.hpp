#pragma once

// Normally ordered polynomials in the ladder operators of three bosonic modes.

#include <array>
#include <complex>
#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace trisqueeze {

/// Highest total degree a product may reach before normal ordering refuses it.
inline constexpr int kMaxLadderDegree = 8;

/// prod_j (a_j+)^{p_j} (a_j)^{q_j}; modes commute, so this is normally ordered.
struct Monomial {
  std::array<int, 3> creation{0, 0, 0};
  std::array<int, 3> annihilation{0, 0, 0};

  int degree() const;
  Monomial adjoint() const { return {annihilation, creation}; }
  std::string to_string() const;

  auto operator<=>(const Monomial&) const = default;
};

class LadderPolynomial {
 public:
  using Coefficient = std::complex<double>;
  using Terms = std::map<Monomial, Coefficient>;

  LadderPolynomial() = default;

  static LadderPolynomial constant(Coefficient c);
  static LadderPolynomial annihilator(int mode);
  static LadderPolynomial creator(int mode);
  static LadderPolynomial monomial(const Monomial& m, Coefficient c = 1.0);

  const Terms& terms() const { return terms_; }
  Coefficient coefficient(const Monomial& m) const;
  int degree() const;
  bool empty() const { return terms_.empty(); }

  LadderPolynomial adjoint() const;

  LadderPolynomial& operator+=(const LadderPolynomial& rhs);
  LadderPolynomial& operator-=(const LadderPolynomial& rhs);
  LadderPolynomial& operator*=(Coefficient c);

  friend LadderPolynomial operator+(LadderPolynomial lhs, const LadderPolynomial& rhs) { return lhs += rhs; }
  friend LadderPolynomial operator-(LadderPolynomial lhs, const LadderPolynomial& rhs) { return lhs -= rhs; }
  friend LadderPolynomial operator*(LadderPolynomial p, Coefficient c) { return p *= c; }
  friend LadderPolynomial operator*(Coefficient c, LadderPolynomial p) { return p *= c; }

  /// Operator product, reduced to normal order with [a_j, a_k+] = delta_jk.
  friend LadderPolynomial operator*(const LadderPolynomial& lhs, const LadderPolynomial& rhs);

  std::string to_string() const;

 private:
  void add(const Monomial& m, Coefficient c);

  Terms terms_;
};

enum class Ladder { Annihilate, Create };

struct LadderSymbol {
  int mode;  // 1-based
  Ladder kind;
};

/// A product of ladder symbols in arbitrary order.
using OperatorWord = std::vector<LadderSymbol>;

LadderPolynomial normal_order(const OperatorWord& word);
LadderPolynomial normal_order(std::span<const LadderPolynomial> factors);

}  // namespace trisqueeze
