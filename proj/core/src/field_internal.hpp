#pragma once

// Small helpers shared by the local-field sources: polynomial arithmetic over Q
// modulo a fixed polynomial and over F_p for residue fields.

#include <cstdint>
#include <vector>

#include "tendo/localfield.hpp"

namespace tendo::detail {

using Coeffs = std::vector<Rational>;
using FpPoly = std::vector<std::int64_t>;

/// a·b mod `modulus` (monic), inputs of length < deg(modulus); output has length deg(modulus).
Coeffs mul_mod(const Coeffs& a, const Coeffs& b, const Poly& modulus);

/// Residue-field arithmetic in F_p[s]/(modulus) with modulus monic of degree f (f = 1 gives F_p).
class ResidueField {
 public:
  ResidueField(std::int64_t p, FpPoly modulus);
  std::int64_t p() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(mod_.size()) - 1; }
  FpPoly mul(const FpPoly& a, const FpPoly& b) const;
  FpPoly pow(FpPoly a, const Integer& e) const;
  bool is_zero(const FpPoly& a) const;
  /// Quadratic character a^((q-1)/2) as ±1; a must be nonzero.
  int quadratic_character(const FpPoly& a) const;

 private:
  std::int64_t p_;
  FpPoly mod_;
};

ResidueField residue_field(const LocalField& field);

/// Irreducibility of a monic polynomial over F_p (Rabin-style gcd test).
bool irreducible_mod_p(const FpPoly& f, std::int64_t p);

/// Model-basis representatives of the residue field (digits for lifting).
std::vector<Coeffs> residue_digits(const LocalField& field);

/// Splits a nonzero model element as π^v · unit, returning (v, unit).
std::pair<int, Coeffs> split_uniformizer(const LocalField& field, const Coeffs& model);

/// Model-basis π^k (any sign of k).
Coeffs uniformizer_power(const LocalField& field, int k);

/// Search for w with v(w² - u) ≥ 2v(2)+1 over O_K; u a model unit.
bool unit_is_square_by_lifting(const LocalField& field, const Coeffs& unit);

}  // namespace tendo::detail
