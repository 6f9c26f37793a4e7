#pragma once

#include <string>
#include <vector>

#include "tendo/localfield.hpp"
#include "tendo/matrix.hpp"

namespace tendo {

/// Symmetry type of a bilinear Gram matrix.
enum class FormSymmetry { Symmetric, Alternating, General };

FormSymmetry classify_symmetry(const Matrix& gram);

/// Non-degenerate quadratic form over Q_p given by a symmetric Gram matrix.
/// The form is q(v) = vᵀ G v, with bilinear form q(v|v') = vᵀ G v'.
class QuadForm {
 public:
  QuadForm(Matrix gram, Prime p, std::string label = {});
  static QuadForm diagonal(const std::vector<Rational>& entries, const Prime& p, std::string label = {});

  const Matrix& gram() const noexcept { return gram_; }
  const Prime& prime() const noexcept { return p_; }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const std::string& label() const noexcept { return label_; }

  /// Value q(v).
  Rational value(const Vector& v) const;

  friend bool operator==(const QuadForm& a, const QuadForm& b) { return a.p_ == b.p_ && a.gram_ == b.gram_; }

 private:
  Matrix gram_;
  Prime p_;
  std::string label_;
};

/// Congruence diagonalization: basis_changeᵀ · G · basis_change = diag(entries).
struct Diagonalization {
  std::vector<Rational> entries;
  Matrix basis_change;
};

/// Symmetric elimination: first nonzero diagonal pivot, else e_i += e_j for the
/// first nonzero off-diagonal pair.
Diagonalization diagonalize(const Matrix& symmetric_gram);
Diagonalization diagonalize(const QuadForm& q);

/// Class of a form in the Witt group via its anisotropic kernel.
struct WittClass {
  int aniso_dim = 0;
  SquareClass det;
  int hasse = 1;
  const Prime& prime() const { return det.prime(); }
  friend bool operator==(const WittClass&, const WittClass&) = default;
};

struct FormInvariants {
  int dim = 0;
  SquareClass det;
  SquareClass dpm;
  int hasse = 1;
  int witt_index = 0;
  int aniso_dim = 0;
};

SquareClass determinant_class(const QuadForm& q);
/// d±(q) = (-1)^{n(n-1)/2} det q.
SquareClass discriminant(const QuadForm& q);
int hasse_invariant(const QuadForm& q);
/// ∏_{i<j} (a_i, a_j)_p
int hasse_of_diagonal(const std::vector<Rational>& entries, const Prime& p);
FormInvariants invariants(const QuadForm& q);

/// Isotropy criterion on the invariant triple of a form over Q_p.
bool is_isotropic(int dim, const SquareClass& det, int hasse);
bool is_isotropic(const QuadForm& q);

struct WittDecomposition {
  int witt_index = 0;
  WittClass kernel;
};

WittDecomposition witt_decompose(int dim, const SquareClass& det, int hasse);
WittDecomposition witt_decompose(const QuadForm& q);

/// Same dimension, determinant class and Hasse invariant.
bool equivalent(const QuadForm& a, const QuadForm& b);
bool witt_equivalent(const QuadForm& a, const QuadForm& b);

QuadForm direct_sum(const QuadForm& a, const QuadForm& b);
QuadForm scale(const Rational& c, const QuadForm& q);
/// k copies of the hyperbolic plane with Gram [[0,1],[1,0]].
QuadForm hyperbolic(int k, const Prime& p);
/// The norm form ⟨1, -d⟩ of K = Q_p[√d].
QuadForm norm_form(const QuadraticAlgebra& k);
/// Anisotropic diagonal form realizing a Witt class (empty form for the trivial class).
std::vector<Rational> realize_witt_class(const WittClass& w);

/// True iff q ⊕ ⟨-a⟩ is isotropic.
bool represents(const QuadForm& q, const Rational& a);

/// Isotropy decided by the explicit Hensel search (independent of the criterion).
bool is_isotropic_by_search(const QuadForm& q, int depth);

}  // namespace tendo
