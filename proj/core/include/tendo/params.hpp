#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tendo/endoscopy.hpp"
#include "tendo/localfield.hpp"

namespace tendo {

enum class SignType { Plus, Minus, None };

std::string to_string(SignType sign);
/// Accepts "+1", "-1", "none".
SignType sign_type_from_string(const std::string& text);

/// A formal constituent of a parameter: dimension, sign type (None iff not selfdual),
/// determinant character as a quadratic algebra, multiplicity, and a free label that
/// distinguishes constituents with equal numerical data.
struct FormalConstituent {
  int dim = 1;
  SignType sign = SignType::Plus;
  QuadraticAlgebra det_char;
  int mult = 1;
  std::string label;

  bool selfdual() const noexcept { return sign != SignType::None; }
};

struct FormalParameter {
  std::vector<FormalConstituent> constituents;

  /// Σ mult·dim, counting a non-selfdual constituent together with its dual.
  int total_dim() const;
};

/// Throws InvalidArgument on empty input, bad dimensions or multiplicities, a symplectic
/// constituent with odd dimension or nontrivial determinant, or mixed primes.
void validate(const FormalParameter& param);

/// All constituents selfdual, pairwise distinct, multiplicity one.
bool is_elliptic_param(const FormalParameter& param);

struct Classification {
  EndoscopicDatum datum;
  /// Number of constituents of sign -1, for comparison with the dimension sum n_S.
  int minus_count = 0;
  bool count_differs_from_dim() const noexcept { return minus_count != datum.symplectic_dim; }
};

/// n_S = Σ dims of sign -1 constituents, n_O = 2n - n_S, χ = ∏ det chars of sign +1 ones.
Classification classify(const FormalParameter& param);

/// For an irreducible parameter: true iff it does not come from SO(2n+1), i.e. sign +1.
bool hypothesis_even_so(const FormalParameter& param);

/// mult(σ : φ): zero when the groups differ; otherwise a symbolic value needing packet data.
struct MultShell {
  bool is_zero = false;
  std::string symbol;  // "0" or "requires-packet-data"
};
MultShell mult_shell(const std::string& sigma_tag, const FormalParameter& phi, const EndoscopicDatum& group_of_sigma);

}  // namespace tendo
