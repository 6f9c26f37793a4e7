#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tendo/localfield.hpp"
#include "tendo/matrix.hpp"
#include "tendo/poly.hpp"
#include "tendo/qform.hpp"

namespace tendo {

/// One factor L_i of an étale algebra: a base field F_i with either the split step
/// F_i × F_i or the quadratic field F_i(√d).
struct FactorTower {
  LocalField base;
  std::optional<FieldElement> step;  // empty for the split step

  static FactorTower split(LocalField base);
  /// Throws InvalidArgument if d is zero or a square in the base.
  static FactorTower quadratic(LocalField base, FieldElement d);

  bool is_split() const noexcept { return !step.has_value(); }
  int base_degree() const noexcept { return base.degree(); }
};

/// Per-factor coordinates. Split: the pair (first, second). Quadratic: first + second·√d.
struct FactorValue {
  FieldElement first;
  FieldElement second;
  friend bool operator==(const FactorValue&, const FactorValue&) = default;
};

struct AlgebraElement {
  std::vector<FactorValue> parts;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

enum class NormCoset { Same, Different, StableOnly };
std::string to_string(NormCoset c);

/// L = ∏ L_i with involution τ (swap on split factors, conjugation on quadratic ones).
/// The Q_p-basis is factor-major; inside a factor the step slot is major and the base
/// power basis minor.
class EtaleAlgebra {
 public:
  explicit EtaleAlgebra(std::vector<FactorTower> factors);

  const Prime& prime() const noexcept { return p_; }
  const std::vector<FactorTower>& factors() const noexcept { return factors_; }
  std::size_t factor_count() const noexcept { return factors_.size(); }
  /// Dimension over Q_p.
  int dim() const noexcept { return dim_; }
  /// Offset of factor i in the Q_p-basis.
  int offset(std::size_t i) const { return offsets_.at(i); }
  bool has_split_factor() const;

  AlgebraElement zero() const;
  AlgebraElement one() const;
  AlgebraElement from_rational(const Rational& r) const;
  /// The i-th Q_p-basis vector.
  AlgebraElement basis_element(int i) const;
  /// Validates shape.
  AlgebraElement element(std::vector<FactorValue> parts) const;
  /// τ-fixed element with the given base-field components.
  AlgebraElement fixed(const std::vector<FieldElement>& components) const;
  /// τ-anti-fixed element (τ(v) = -v) built from base-field components: (c, -c) on
  /// split factors, c·√d on quadratic ones.
  AlgebraElement anti_fixed(const std::vector<FieldElement>& components) const;

  Vector coordinates(const AlgebraElement& x) const;
  AlgebraElement from_coordinates(const Vector& v) const;

  AlgebraElement add(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement sub(const AlgebraElement& a, const AlgebraElement& b) const;
  AlgebraElement neg(const AlgebraElement& a) const;
  AlgebraElement scale(const Rational& s, const AlgebraElement& a) const;
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  bool is_invertible(const AlgebraElement& a) const;
  AlgebraElement inverse(const AlgebraElement& a) const;
  AlgebraElement tau(const AlgebraElement& a) const;
  bool is_fixed(const AlgebraElement& a) const { return tau(a) == a; }

  /// x·τ(x), an element of the fixed algebra.
  AlgebraElement norm_to_fixed(const AlgebraElement& x) const;
  /// Base-field component of a fixed element on factor i.
  FieldElement fixed_component(const AlgebraElement& fixed_elem, std::size_t i) const;
  /// N_{L±/Q_p} of a fixed element.
  Rational fixed_norm(const AlgebraElement& fixed_elem) const;
  Rational trace(const AlgebraElement& x) const;

  Matrix mult_matrix(const AlgebraElement& x) const;
  Poly char_poly(const AlgebraElement& x) const;
  /// Q_p[x] = L, i.e. the characteristic polynomial is squarefree.
  bool is_generator(const AlgebraElement& x) const;
  /// x/τ(x) - 1 and x/τ(x) + 1 both invertible.
  bool very_regular(const AlgebraElement& x) const;

  /// Gram of (v, v') ↦ tr(τ(v)·v'·x) on the Q_p-basis; no symmetry assumed.
  Matrix trace_form(const AlgebraElement& x) const;
  /// trace_form for invertible x.
  Matrix trace_form_bilinear(const AlgebraElement& x) const;
  /// Symmetric trace form for an invertible τ-fixed element.
  QuadForm trace_form_quadratic(const AlgebraElement& fixed_elem) const;

  /// Gram of (u, u') ↦ tr_{L±/Q_p}(u·u'·a) on the fixed algebra, basis factor-major with
  /// base powers minor; `fixed_elem` must be τ-fixed.
  Matrix fixed_trace_form(const AlgebraElement& fixed_elem) const;

  /// Whether two invertible fixed elements lie in the same coset of N_{L/L±}(L^×).
  NormCoset norm_coset_compare(const AlgebraElement& c1, const AlgebraElement& c2) const;

 private:
  void check(const AlgebraElement& a) const;

  std::vector<FactorTower> factors_;
  std::vector<int> offsets_;
  Prime p_;
  int dim_ = 0;
};

}  // namespace tendo
