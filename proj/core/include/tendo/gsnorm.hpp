#pragma once

#include <cstdint>
#include <optional>

#include "tendo/classes.hpp"
#include "tendo/localfield.hpp"
#include "tendo/matrix.hpp"
#include "tendo/sampling.hpp"

namespace tendo {

/// V₁ = H^∨ ⊕ V ⊕ H with q₁ given by [[0,0,I],[0,Q,0],[εI,0,0]].
///
/// Q is symmetric for ε = 1 and alternating for ε = -1. For the hermitian variant the
/// spaces carry complex structures (multiplication by √e) on V and on H; on H^∨ the
/// structure is -J_Hᵀ, and all maps are required to be E-linear.
struct AmbientSpace {
  Matrix form_gram;
  Prime p;
  int epsilon = 1;
  std::optional<Matrix> complex_v;
  std::optional<Matrix> complex_h;

  std::size_t dim() const noexcept { return form_gram.rows(); }
  bool is_hermitian() const noexcept { return complex_v.has_value(); }
  bool is_odd_orthogonal() const noexcept { return epsilon == 1 && !is_hermitian() && dim() % 2 == 1; }
  /// Gram of q₁ on V₁.
  Matrix gram_q1() const;
  /// Complex structure of H^∨, i.e. -J_Hᵀ.
  Matrix complex_dual() const;
};

/// Validates the form and the complex structures. An isotropic binary quadratic V is rejected.
AmbientSpace make_ambient(Matrix form_gram, const Prime& p, int epsilon, std::optional<Matrix> complex_v = std::nullopt,
                          std::optional<Matrix> complex_h = std::nullopt);

/// Pair (X, Y) with X ∈ Hom(V, H^∨) and Y ∈ Hom(H, H^∨), stored as raw matrices so that
/// corrupted configurations can be represented and rejected.
struct GSConfiguration {
  AmbientSpace ambient;
  Matrix to_dual;   // X
  Matrix h_to_dual; // Y
};

/// Y + εYᵀ + X·Q⁻¹·Xᵀ = 0, plus E-linearity in the hermitian case.
bool xy_condition(const GSConfiguration& config);
/// Sizes agree, Q has the right symmetry and is invertible, X and Y are invertible, closure holds.
bool is_admissible(const GSConfiguration& config);

struct RandomConfigOptions {
  std::int64_t entry_bound = 4;
  bool require_very_regular = true;
  int retry_budget = 10000;
};

GSConfiguration random_config(const AmbientSpace& ambient, Rng& rng, const RandomConfigOptions& options = {});
GSConfiguration random_config(const AmbientSpace& ambient, std::uint64_t seed, const RandomConfigOptions& options = {});

/// u(X, Y) = 1 + n(X, Y) on V₁ ordered (H^∨, V, H).
Matrix u_of_xy(const GSConfiguration& config);

struct Rigidification {
  Matrix delta;     // the bilinear form of Y on H
  Matrix isometry;  // Q⁻¹·Xᵀ : H → V
};
Rigidification rigidify(const GSConfiguration& config);

/// 1 + Q⁻¹·Xᵀ·Y⁻¹·X
Matrix gs_norm(const GSConfiguration& config);
/// Y = X·(γ - 1)⁻¹·Q⁻¹·Xᵀ
Matrix gs_section(const AmbientSpace& ambient, const Matrix& to_dual, const Matrix& group_element);

/// Regular semisimple with no eigenvalue ±1 (for -Norm in the odd orthogonal case, no eigenvalue -1).
bool norm_is_very_regular(const GSConfiguration& config);

/// Configuration realizing a twisted class directly: V = H, Q = -ε(δ + εδᵀ), X = εQ, Y = δ.
GSConfiguration config_from_twisted(const Matrix& bilinear_gram, const Prime& p, int epsilon,
                                    std::optional<Matrix> complex_structure = std::nullopt);

/// Checks that the norm of `config` is parametrized as predicted by the twisted parameter.
bool gs_param_check(const GSConfiguration& config, const ClassParameter& twisted);

}  // namespace tendo
