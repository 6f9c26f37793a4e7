#pragma once

#include <optional>
#include <string>

#include "tendo/etale.hpp"
#include "tendo/matrix.hpp"
#include "tendo/poly.hpp"
#include "tendo/qform.hpp"

namespace tendo {

enum class ClassKind { TglEven, TglOdd, SoEven, SoOdd, Sp, U, TglE };

std::string to_string(ClassKind kind);
ClassKind class_kind_from_string(const std::string& name);
/// Twisted general linear kinds parametrized by (L, L±, x, ...).
bool is_twisted_kind(ClassKind kind);

/// Parameter (L, L±, element, ...) of a very-regular stable class.
///
/// `element` is x for the twisted kinds and y (with y·τ(y) = 1) for the classical
/// groups. `form_scale` is the fixed (or, for Sp, anti-fixed) element defining the
/// trace form. `extra_square` is the extra line of the odd twisted kind and
/// `line_value` the extra line of the odd orthogonal kind.
struct ClassParameter {
  ClassKind kind;
  EtaleAlgebra algebra;
  AlgebraElement element;
  std::optional<AlgebraElement> form_scale;
  std::optional<Rational> extra_square;
  std::optional<Rational> line_value;
};

/// Throws InvalidArgument unless the parameter satisfies the conditions of its kind.
void validate(const ClassParameter& param);
/// Very-regular predicate for the kind (the odd extras do not enter).
bool is_very_regular(const ClassParameter& param);

/// Matrix realization of a class. `gram` is the bilinear form (twisted kinds) or the
/// invariant form (classical kinds); `group_element` is the classical group element;
/// `complex_structure` is multiplication by √e for the kinds over E = Q_p(√e).
struct ClassRepresentative {
  ClassKind kind;
  Matrix gram;
  std::optional<Matrix> group_element;
  std::optional<Matrix> complex_structure;
};

Matrix build_tgl_even(const ClassParameter& param);
Matrix build_tgl_odd(const ClassParameter& param);
struct OrthogonalRepresentative {
  QuadForm form;
  Matrix group_element;
};
OrthogonalRepresentative build_so_even(const ClassParameter& param);
OrthogonalRepresentative build_so_odd(const ClassParameter& param);
/// (alternating Gram, symplectic element)
std::pair<Matrix, Matrix> build_sp(const ClassParameter& param);
ClassRepresentative build_class(const ClassParameter& param);

/// Common step element e of an algebra whose towers are all F_i(√e) for one rational e.
std::optional<Rational> common_step(const EtaleAlgebra& algebra);

/// char_poly(δ⁻¹·δᵀ)
Poly twist_invariant(const Matrix& bilinear_gram);

/// Comparable fingerprint of a class.
struct ClassInvariant {
  ClassKind kind;
  Poly char_poly;
  std::optional<SquareClass> extra;
};
ClassInvariant class_invariant(const ClassParameter& param);

/// Whether the twisted class of `twisted` (even kind) corresponds to the even orthogonal
/// class of `orthogonal`: char_poly(-x/τ(x)) = char_poly(y).
bool corresponds(const ClassParameter& twisted, const ClassParameter& orthogonal);

/// No split tower, i.e. the centralizer torus is anisotropic.
bool is_elliptic(const ClassParameter& param);

enum class LieAlgebraKind { General, Orthogonal, Symplectic };

/// Basis of {A : Aᵀ·form + form·A = 0} (or all matrices for General).
std::vector<Matrix> lie_algebra_basis(LieAlgebraKind kind, const Matrix& form);

/// Product of the nonzero eigenvalues of 1 - Ad(g) on the Lie algebra.
Rational weyl_discriminant(const Matrix& group_element, LieAlgebraKind kind, const Matrix& form);
/// Same for the twisted action A ↦ -G⁻¹·Aᵀ·G of a bilinear form G on gl.
Rational twisted_weyl_discriminant(const Matrix& bilinear_gram);

}  // namespace tendo
