#pragma once

#include <string>
#include <utility>
#include <vector>

#include "tendo/rational.hpp"

namespace tendo {

/// Univariate polynomial with rational coefficients, stored low degree first.
/// The zero polynomial has degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coefficients);

  static Poly constant(const Rational& c);
  static Poly monomial(const Rational& c, int degree);
  /// (T - root)
  static Poly linear_factor(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  /// Coefficient of T^i, zero beyond the degree.
  Rational coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  Poly monic() const;
  Poly derivative() const;
  Rational evaluate(const Rational& t) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division: returns (quotient, remainder).
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);

/// True if the polynomial has no repeated factor over an algebraic closure.
bool is_squarefree(const Poly& f);

/// Human-readable form, e.g. "T^2 - 3/2*T + 1".
std::string to_string(const Poly& f);

}  // namespace tendo
