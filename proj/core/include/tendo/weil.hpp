#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "tendo/localfield.hpp"
#include "tendo/qform.hpp"

namespace tendo {

/// Eighth root of unity ζ₈^exponent, ζ₈ = e^{2πi/8}.
class Mu8 {
 public:
  constexpr Mu8() = default;
  constexpr explicit Mu8(int exponent) : exponent_(((exponent % 8) + 8) % 8) {}
  static Mu8 from_sign(int sign);
  /// Nearest eighth root of unity to z (z need not be on the unit circle).
  static Mu8 nearest(std::complex<double> z);

  constexpr int exponent() const noexcept { return exponent_; }
  bool is_sign() const noexcept { return exponent_ % 4 == 0; }
  /// ±1 value; throws unless is_sign().
  int sign() const;
  std::complex<double> value() const;
  Mu8 inverse() const { return Mu8(-exponent_); }
  Mu8 pow(int k) const { return Mu8(exponent_ * k); }

  friend Mu8 operator*(Mu8 a, Mu8 b) { return Mu8(a.exponent_ + b.exponent_); }
  Mu8& operator*=(Mu8 b) { return *this = *this * b; }
  friend constexpr bool operator==(Mu8, Mu8) = default;

 private:
  int exponent_ = 0;
};

/// "zeta8^k"
std::string to_string(Mu8 z);
/// Parses "zeta8^k"; also accepts "1" and "-1".
Mu8 parse_mu8(const std::string& text);

/// Additive character ψ(x) = e^{2πi λ(x)} with λ: Q_p → Q_p/Z_p the principal part.
struct AdditiveCharacter {
  Prime p;
  int conductor_exponent = 0;
};

/// λ(x) as a rational in [0, 1).
Rational principal_part(const Rational& x, const Prime& p);

/// Weil index of ⟨a⟩ from the frozen per-prime table.
Mu8 weil_rank1(const Rational& a, const Prime& p);
/// Product of rank-one indices over a diagonalization.
Mu8 weil_index(const QuadForm& q);
/// ε(1/2, χ_K, ψ) as the Weil index of the norm form of K.
Mu8 epsilon_half(const QuadraticAlgebra& k);

/// Primes covered by the frozen table.
std::vector<std::int64_t> weil_table_primes();
/// Table row for p in square_class_table(p) order, if p is covered.
std::optional<std::vector<Mu8>> weil_table_row(const Prime& p);

struct GaussOracleResult {
  std::complex<double> value;       // truncation level k
  std::complex<double> next_value;  // truncation level k + 1
  Mu8 snapped;
  double snap_distance = 0;
  bool stabilized = false;
  int level = 0;
};

/// Smallest truncation level at which the regularized integral has stabilized in theory.
int gauss_oracle_min_level(const Rational& a, const Prime& p);

/// |2a|^{1/2} ∫_{p^{-k} Z_p} ψ(a x²) dx evaluated as a finite exponential sum, compared with
/// level k + 1 and snapped to μ₈.
GaussOracleResult gauss_oracle(const Rational& a, const Prime& p, int k);
GaussOracleResult gauss_oracle(const Rational& a, const Prime& p);

/// Rank-two version for ⟨a, b⟩ summed jointly over pairs (x, y); intended for small p.
GaussOracleResult gauss_oracle_pair(const Rational& a, const Rational& b, const Prime& p);

inline constexpr double kSnapTolerance = 1e-6;

}  // namespace tendo
