#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tendo/matrix.hpp"
#include "tendo/poly.hpp"
#include "tendo/rational.hpp"

namespace tendo {

/// A rational prime, checked by trial division at construction.
class Prime {
 public:
  explicit Prime(std::int64_t p);
  std::int64_t value() const noexcept { return p_; }
  Integer integer() const { return Integer(static_cast<long>(p_)); }
  bool is_two() const noexcept { return p_ == 2; }
  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::int64_t p_;
};

/// p-adic valuation of a nonzero rational.
int valuation(const Rational& a, const Prime& p);
/// p-adic valuation of a nonzero integer.
int valuation(const Integer& a, const Prime& p);

/// Least positive quadratic non-residue modulo an odd prime.
std::int64_t least_nonresidue(const Prime& p);

/// Legendre symbol of a p-integral rational modulo an odd prime (0 when p divides it).
int legendre(const Rational& a, const Prime& p);

/// An element of Q_p^x / Q_p^x2 with a canonical representative:
/// {1, u, p, u p} for odd p (u the least non-residue), {±1, ±2, ±5, ±10} for p = 2.
class SquareClass {
 public:
  SquareClass(const Rational& a, const Prime& p);

  const Rational& representative() const noexcept { return rep_; }
  const Prime& prime() const noexcept { return p_; }
  bool is_trivial() const { return rep_ == 1; }
  /// Position in square_class_table(p).
  std::size_t index() const;

  SquareClass operator*(const SquareClass& other) const;
  SquareClass operator-() const;
  friend bool operator==(const SquareClass& a, const SquareClass& b) {
    return a.p_ == b.p_ && a.rep_ == b.rep_;
  }

 private:
  Rational rep_;
  Prime p_;
};

SquareClass square_class(const Rational& a, const Prime& p);
/// All square classes, trivial class first.
std::vector<SquareClass> square_class_table(const Prime& p);
std::string to_string(const SquareClass& c);

/// Hilbert symbol (a, b) over Q_p by the closed forms.
int hilbert_qp(const Rational& a, const Rational& b, const Prime& p);

/// How a defining polynomial is certified irreducible over Q_p.
enum class Certificate {
  DegreeOne,
  QuadraticNonsquareDisc,
  Eisenstein,
  UnramifiedIrreducibleModP,
};

std::string to_string(Certificate c);
Certificate certificate_from_string(const std::string& name);

/// Element of a local field: coordinates in the power basis 1, r, r², ... of the defining root r.
using FieldElement = std::vector<Rational>;

/// A finite extension Q_p[t]/(f) with a re-checked irreducibility certificate.
///
/// Arithmetic uses the power basis of the user's defining polynomial. Valuations and
/// residues go through an integral model: r = offset + scale·s with s a root of a monic
/// p-integral polynomial that is Eisenstein or irreducible modulo p.
class LocalField {
 public:
  static LocalField rationals(const Prime& p);
  /// Q_p(√d) for a non-square d, with the defining polynomial t² - d.
  static LocalField quadratic(const Prime& p, const Rational& d);
  /// Monic `defining` checked against `cert`.
  static LocalField from_poly(const Prime& p, const Poly& defining, Certificate cert);
  /// Tries each certificate in turn.
  static LocalField from_poly(const Prime& p, const Poly& defining);

  const Prime& prime() const noexcept { return p_; }
  const Poly& defining_poly() const noexcept { return poly_; }
  Certificate certificate() const noexcept { return cert_; }
  int degree() const noexcept { return poly_.degree(); }
  int ramification_index() const noexcept { return e_; }
  int residue_degree() const noexcept { return f_; }
  /// Cardinality of the residue field.
  Integer residue_cardinality() const;
  bool is_rationals() const noexcept { return degree() == 1; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_rational(const Rational& q) const;
  /// The root r of the defining polynomial (degree ≥ 2).
  FieldElement generator() const;
  /// Validates length.
  FieldElement element(std::vector<Rational> coords) const;

  bool is_zero(const FieldElement& x) const;
  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement scale(const Rational& s, const FieldElement& a) const;
  FieldElement inverse(const FieldElement& a) const;
  /// Matrix of v ↦ a v on the power basis.
  Matrix mult_matrix(const FieldElement& a) const;
  Rational trace(const FieldElement& a) const;
  Rational norm(const FieldElement& a) const;
  /// True if the element is a rational constant.
  bool is_rational(const FieldElement& a) const;

  /// Normalized valuation (uniformizer has valuation 1).
  int valuation(const FieldElement& a) const;
  /// Exact square test (Hensel search when p = 2).
  bool is_square(const FieldElement& a) const;

  friend bool operator==(const LocalField& a, const LocalField& b) {
    return a.p_ == b.p_ && a.poly_ == b.poly_;
  }

  // Integral model, for the oracle and tame symbols.
  enum class ModelKind { Trivial, Eisenstein, Unramified };
  ModelKind model_kind() const noexcept { return kind_; }
  const Poly& model_poly() const noexcept { return model_; }
  /// Coordinates in the model basis 1, s, s², ...
  std::vector<Rational> to_model(const FieldElement& a) const;
  FieldElement from_model(const std::vector<Rational>& m) const;
  std::vector<Rational> model_mul(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
  int model_valuation(const std::vector<Rational>& m) const;
  /// Uniformizer in model coordinates.
  std::vector<Rational> model_uniformizer() const;
  /// Residues of a model-integral element: coordinates mod p on 1, s̄, ..., s̄^{f-1}.
  std::vector<std::int64_t> model_residue(const std::vector<Rational>& m) const;
  /// Coefficients of the model polynomial reduced mod p (degree f when unramified).
  std::vector<std::int64_t> residue_modulus() const;

 private:
  LocalField(const Prime& p, Poly poly, Certificate cert);
  void build_model();

  Prime p_;
  Poly poly_;
  Certificate cert_;
  int e_ = 1;
  int f_ = 1;
  ModelKind kind_ = ModelKind::Trivial;
  Poly model_;
  Rational offset_;  // r = offset + scale·s
  Rational scale_ = 1;
};

/// Quadratic étale algebra over Q_p, K = Q_p[√d]; split when d is a square.
struct QuadraticAlgebra {
  SquareClass d;
  bool is_split() const { return d.is_trivial(); }
  const Prime& prime() const { return d.prime(); }
  friend bool operator==(const QuadraticAlgebra&, const QuadraticAlgebra&) = default;
};

/// Every quadratic étale algebra over Q_p, the split one first.
std::vector<QuadraticAlgebra> quadratic_algebras(const Prime& p);

enum class Solubility { Soluble, Insoluble, Inconclusive };
std::string to_string(Solubility s);

/// Result of the lifting search for a primitive zero of a diagonal form.
struct ZeroSearch {
  Solubility status = Solubility::Inconclusive;
  /// Hensel-certified approximate zero (user basis) when soluble.
  std::vector<FieldElement> witness;
  int levels = 0;
};

/// Searches for a nontrivial zero of Σ coeffs[i]·x_i² over `field`, lifting primitive
/// residue vectors one uniformizer digit at a time for at most `depth` levels.
ZeroSearch find_isotropic_vector(const LocalField& field, std::span<const FieldElement> coeffs, int depth);

/// Exhaustion depth v(4ab) + 2e + 1, computed after reducing a, b modulo squares of the uniformizer.
int solubility_budget(const LocalField& field, const FieldElement& a, const FieldElement& b);

/// Decides solubility of z² = a x² + b y² by certified search.
Solubility solubility_oracle(const FieldElement& a, const FieldElement& b, const LocalField& field, int depth);
Solubility solubility_oracle(const Rational& a, const Rational& b, const LocalField& field, int depth);

/// Hilbert symbol over a tamely ramified field (odd residue characteristic).
int hilbert_tame(const LocalField& field, const FieldElement& a, const FieldElement& b);
/// Dispatches to hilbert_qp or hilbert_tame; throws Unsupported for proper extensions of Q_2.
int hilbert_symbol(const LocalField& field, const FieldElement& a, const FieldElement& b);

/// True iff x is a norm from field(√d).
bool is_local_norm(const LocalField& field, const FieldElement& d, const FieldElement& x);

}  // namespace tendo
