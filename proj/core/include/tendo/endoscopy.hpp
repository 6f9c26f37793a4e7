#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tendo/etale.hpp"
#include "tendo/gsnorm.hpp"
#include "tendo/localfield.hpp"
#include "tendo/qform.hpp"
#include "tendo/weil.hpp"

namespace tendo {

/// Elliptic endoscopic datum (n_O, n_S, χ) of the twisted GL(2n), with χ given by the
/// quadratic algebra K. Both parts are even and sum to 2n.
struct EndoscopicDatum {
  int orthogonal_dim = 0;
  int symplectic_dim = 0;
  QuadraticAlgebra character;

  int half_dim() const noexcept { return (orthogonal_dim + symplectic_dim) / 2; }
  bool is_simple() const noexcept { return orthogonal_dim == 0 || symplectic_dim == 0; }
  friend bool operator==(const EndoscopicDatum&, const EndoscopicDatum&) = default;
};

std::string to_string(const EndoscopicDatum& datum);
/// Throws InvalidArgument unless parity, sum and character constraints hold.
void validate(const EndoscopicDatum& datum, int half_dim);
std::vector<EndoscopicDatum> enumerate_elliptic_data(int half_dim, const Prime& p);

/// (n_O - 2)Hy ⊕ c·⟨1, -d⟩ with K = Q_p(√d).
QuadForm quasisplit_space(int orthogonal_dim, const QuadraticAlgebra& k, const SquareClass& scale);
/// Witt index ≥ dim/2 - 1.
bool is_quasisplit(const QuadForm& q);

/// Alternating Gram θ̃ on F^{2n}, basis ordered e_1, ..., e_n, e_{-n}, ..., e_{-1}.
Matrix theta_gram(int half_dim);
/// Regular nilpotent e_{-1} → ... → e_{-n} → e_n → ... → e_1 → 0 in the same basis.
Matrix regular_nilpotent_sp(int half_dim);
/// Class η of the rank-one form θ̃(v | N^{2n-1} v').
SquareClass eta_sp(int half_dim, const Prime& p);

/// The space m·Hy ⊕ ⟨y⟩ ⊕ ⟨y'⟩ (basis e_1..e_m, v, e_{-m}..e_{-1}, w) and a regular nilpotent
/// element of its orthogonal Lie algebra supported on m·Hy ⊕ ⟨y⟩.
struct OrthogonalNilpotent {
  QuadForm space;
  Matrix nilpotent;
};
OrthogonalNilpotent regular_nilpotent_so(int half_dim, const Rational& represented, const Rational& complement,
                                         const Prime& p);
/// η_{(V,q)} for V = (n-1)Hy ⊕ V' with y represented by the binary form V'.
SquareClass eta_so(const QuadForm& binary_part, const Rational& represented, int half_dim);

/// ½(δ + δᵀ)
QuadForm symmetrization(const Matrix& bilinear_gram, const Prime& p);
/// K = Q_p(√d±(q)).
QuadraticAlgebra discriminant_algebra(const QuadForm& q);

/// +1 iff ½(δ + δᵀ) is Witt equivalent to (-1)^n N_{K/F}.
int transfer_factor(const QuadForm& orthogonal_space, const Matrix& bilinear_gram, int half_dim);
/// ε(1/2, χ_K, ψ)⁻¹ · Δ
Mu8 transfer_factor_whittaker(const QuadForm& orthogonal_space, const Matrix& bilinear_gram, int half_dim);

struct ConstancyResult {
  bool passed = false;
  std::string reason;  // empty when passed
  Mu8 lhs;
  Mu8 rhs;
  std::optional<QuadraticAlgebra> character;
};

/// Compares the Whittaker-normalized transfer factor of (Norm(X, Y)⁻¹, δ_Y) with the Weil index
/// of 2(-1)^n q over an even orthogonal quasisplit ambient space.
ConstancyResult gs_constancy_check(const GSConfiguration& config);

/// Seeded fixture for the constancy check: V = (n-1)Hy ⊕ c⟨1, -d⟩ scrambled by a random
/// integral change of basis, with a very-regular random configuration on it.
struct ConstancyFixture {
  GSConfiguration config;
  QuadraticAlgebra character;
  SquareClass scale;
  int half_dim;
};
ConstancyFixture constancy_fixture(const Prime& p, int half_dim, const QuadraticAlgebra& k, Rng& rng);
/// Quadratic algebras admissible for the fixture at this n (split excluded for n = 1).
std::vector<QuadraticAlgebra> constancy_characters(const Prime& p, int half_dim);

/// det class of the trace forms of c1 and c2 agree.
bool separation_check(const EtaleAlgebra& algebra, const AlgebraElement& c1, const AlgebraElement& c2);

}  // namespace tendo
