#include "tendo/endoscopy.hpp"

#include "tendo/error.hpp"

namespace tendo {

namespace {

// Class of η for a symmetric rank-one Gram η·ℓℓᵀ.
SquareClass rank_one_class(const Matrix& gram, const Prime& p) {
  if (!gram.is_symmetric() || rank(gram) != 1) throw InternalError("expected a symmetric rank-one form");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i) != 0) return square_class(gram(i, i), p);
  throw InternalError("rank-one form with zero diagonal");
}

int sign_power(int k) { return k % 2 == 0 ? 1 : -1; }

std::size_t theta_position(int i, int half_dim) {
  return static_cast<std::size_t>(i > 0 ? i - 1 : 2 * half_dim + i);
}

}  // namespace

std::string to_string(const EndoscopicDatum& datum) {
  return "(" + std::to_string(datum.orthogonal_dim) + ", " + std::to_string(datum.symplectic_dim) + ", " +
         to_string(datum.character.d) + ")";
}

void validate(const EndoscopicDatum& datum, int half_dim) {
  require(datum.orthogonal_dim >= 0 && datum.symplectic_dim >= 0, "negative endoscopic dimensions");
  require(datum.orthogonal_dim % 2 == 0 && datum.symplectic_dim % 2 == 0, "endoscopic dimensions must be even");
  require(datum.orthogonal_dim + datum.symplectic_dim == 2 * half_dim, "endoscopic dimensions must sum to 2n");
  if (datum.orthogonal_dim == 0) require(datum.character.is_split(), "n_O = 0 forces the trivial character");
  if (datum.orthogonal_dim == 2) require(!datum.character.is_split(), "n_O = 2 forces a nontrivial character");
}

std::vector<EndoscopicDatum> enumerate_elliptic_data(int half_dim, const Prime& p) {
  require(half_dim >= 1, "n must be positive");
  std::vector<EndoscopicDatum> out;
  for (int orthogonal = 0; orthogonal <= 2 * half_dim; orthogonal += 2) {
    for (const auto& k : quadratic_algebras(p)) {
      EndoscopicDatum datum{orthogonal, 2 * half_dim - orthogonal, k};
      if (orthogonal == 0 && !k.is_split()) continue;
      if (orthogonal == 2 && k.is_split()) continue;
      out.push_back(datum);
    }
  }
  return out;
}

QuadForm quasisplit_space(int orthogonal_dim, const QuadraticAlgebra& k, const SquareClass& scale_class) {
  require(orthogonal_dim >= 2 && orthogonal_dim % 2 == 0, "n_O must be even and at least 2");
  require(scale_class.prime() == k.prime(), "scale and algebra over different primes");
  const QuadForm kernel = scale(scale_class.representative(), norm_form(k));
  if (orthogonal_dim == 2) return kernel;
  return direct_sum(hyperbolic(orthogonal_dim / 2 - 1, k.prime()), kernel);
}

bool is_quasisplit(const QuadForm& q) {
  return 2 * witt_decompose(q).witt_index + 2 >= static_cast<int>(q.dim());
}

Matrix theta_gram(int half_dim) {
  require(half_dim >= 1, "n must be positive");
  const auto size = static_cast<std::size_t>(2 * half_dim);
  Matrix out(size, size);
  for (int i = 1; i <= half_dim; ++i) {
    out(theta_position(i, half_dim), theta_position(-i, half_dim)) = sign_power(i);
    out(theta_position(-i, half_dim), theta_position(i, half_dim)) = sign_power(i + 1);
  }
  return out;
}

Matrix regular_nilpotent_sp(int half_dim) {
  require(half_dim >= 1, "n must be positive");
  const auto size = static_cast<std::size_t>(2 * half_dim);
  Matrix out(size, size);
  const auto map = [&](int from, int to) { out(theta_position(to, half_dim), theta_position(from, half_dim)) = 1; };
  for (int i = 2; i <= half_dim; ++i) map(i, i - 1);
  map(-half_dim, half_dim);
  for (int i = -half_dim + 1; i <= -1; ++i) map(i, i - 1);
  return out;
}

SquareClass eta_sp(int half_dim, const Prime& p) {
  const Matrix theta = theta_gram(half_dim);
  const Matrix nil = regular_nilpotent_sp(half_dim);
  if (!(nil.transpose() * theta + theta * nil).is_zero()) throw InternalError("N is not in the symplectic Lie algebra");
  return rank_one_class(theta * power(nil, static_cast<unsigned>(2 * half_dim - 1)), p);
}

OrthogonalNilpotent regular_nilpotent_so(int half_dim, const Rational& represented, const Rational& complement,
                                         const Prime& p) {
  require(half_dim >= 2, "the orthogonal construction needs n ≥ 2");
  require(represented != 0 && complement != 0, "line values must be nonzero");
  const int m = half_dim - 1;
  const auto size = static_cast<std::size_t>(2 * half_dim);
  // e_i at i-1, v at m, e_{-i} at 2m+1-i, w at 2m+1
  const auto pos = [m](int i) { return static_cast<std::size_t>(i > 0 ? i - 1 : 2 * m + 1 + i); };
  const auto line = static_cast<std::size_t>(m);
  const auto extra = static_cast<std::size_t>(2 * m + 1);
  Matrix gram(size, size);
  for (int i = 1; i <= m; ++i) {
    gram(pos(i), pos(-i)) = 1;
    gram(pos(-i), pos(i)) = 1;
  }
  gram(line, line) = represented;
  gram(extra, extra) = complement;
  Matrix nil(size, size);
  for (int i = 1; i < m; ++i) nil(pos(i + 1), pos(i)) = 1;
  nil(line, pos(m)) = 1;
  nil(pos(-m), line) = -represented;
  for (int i = -m; i < -1; ++i) nil(pos(i + 1), pos(i)) = -1;
  if (!(nil.transpose() * gram + gram * nil).is_zero()) throw InternalError("N is not in the orthogonal Lie algebra");
  return {QuadForm(gram, p), nil};
}

SquareClass eta_so(const QuadForm& binary_part, const Rational& represented, int half_dim) {
  require(binary_part.dim() == 2, "η_(V,q) needs the binary part of V");
  require(half_dim >= 1, "n must be positive");
  require(represented != 0 && represents(binary_part, represented), "value is not represented by the binary part");
  const Prime& p = binary_part.prime();
  if (half_dim == 1) return square_class(represented, p);
  const Rational complement = determinant(binary_part.gram()) / represented;
  const auto built = regular_nilpotent_so(half_dim, represented, complement, p);
  const QuadForm expected = direct_sum(hyperbolic(half_dim - 1, p), binary_part);
  if (!equivalent(built.space, expected)) throw InternalError("orthogonal nilpotent built on the wrong space");
  const Matrix top = power(built.nilpotent, static_cast<unsigned>(2 * half_dim - 2));
  if (top.is_zero() || !(top * built.nilpotent).is_zero()) throw InternalError("N is not regular nilpotent");
  return rank_one_class(built.space.gram() * top, p);
}

QuadForm symmetrization(const Matrix& bilinear_gram, const Prime& p) {
  require(bilinear_gram.is_square(), "bilinear Gram must be square");
  const Matrix sym = Rational(1, 2) * (bilinear_gram + bilinear_gram.transpose());
  require(determinant(sym) != 0, "symmetrization is degenerate (δ not very regular)");
  return QuadForm(sym, p);
}

QuadraticAlgebra discriminant_algebra(const QuadForm& q) { return QuadraticAlgebra{discriminant(q)}; }

int transfer_factor(const QuadForm& orthogonal_space, const Matrix& bilinear_gram, int half_dim) {
  require(orthogonal_space.dim() == static_cast<std::size_t>(2 * half_dim), "orthogonal space must have dimension 2n");
  require(bilinear_gram.rows() == orthogonal_space.dim(), "δ and V have different dimensions");
  const Prime& p = orthogonal_space.prime();
  const QuadForm sym = symmetrization(bilinear_gram, p);
  const QuadForm target = scale(sign_power(half_dim), norm_form(discriminant_algebra(orthogonal_space)));
  return witt_equivalent(sym, target) ? 1 : -1;
}

Mu8 transfer_factor_whittaker(const QuadForm& orthogonal_space, const Matrix& bilinear_gram, int half_dim) {
  const int delta = transfer_factor(orthogonal_space, bilinear_gram, half_dim);
  return epsilon_half(discriminant_algebra(orthogonal_space)).inverse() * Mu8::from_sign(delta);
}

ConstancyResult gs_constancy_check(const GSConfiguration& config) {
  ConstancyResult out;
  const auto& ambient = config.ambient;
  if (ambient.epsilon != 1 || ambient.is_hermitian() || ambient.dim() % 2 != 0) {
    out.reason = "ambient space is not even orthogonal";
    return out;
  }
  if (!is_admissible(config)) {
    out.reason = "configuration violates closure, symmetry or invertibility";
    return out;
  }
  const int half_dim = static_cast<int>(ambient.dim() / 2);
  const QuadForm q(ambient.form_gram, ambient.p);
  if (!is_quasisplit(q)) {
    out.reason = "SO(V, q) is not quasisplit";
    return out;
  }
  if (!norm_is_very_regular(config)) {
    out.reason = "norm is not very regular";
    return out;
  }
  const Matrix& delta = config.h_to_dual;
  const Matrix norm = gs_norm(config);
  // δ corresponds to Norm⁻¹: char_poly(Norm⁻¹) = char_poly(-δ^{-T}δ)
  if (char_poly(inverse(norm)) != char_poly(-(inverse(delta.transpose()) * delta))) {
    out.reason = "norm does not correspond to δ";
    return out;
  }
  out.character = discriminant_algebra(q);
  out.lhs = transfer_factor_whittaker(q, delta, half_dim);
  out.rhs = weil_index(scale(2 * sign_power(half_dim), q));
  out.passed = out.lhs == out.rhs;
  if (!out.passed) out.reason = "transfer factor differs from the Weil index";
  return out;
}

std::vector<QuadraticAlgebra> constancy_characters(const Prime& p, int half_dim) {
  std::vector<QuadraticAlgebra> out;
  for (const auto& k : quadratic_algebras(p))
    if (half_dim > 1 || !k.is_split()) out.push_back(k);
  return out;
}

ConstancyFixture constancy_fixture(const Prime& p, int half_dim, const QuadraticAlgebra& k, Rng& rng) {
  require(half_dim >= 1, "n must be positive");
  require(half_dim > 1 || !k.is_split(), "n = 1 with split K gives an isotropic binary space");
  const auto classes = square_class_table(p);
  const SquareClass scale_class = rng.pick(classes);
  const QuadForm base = quasisplit_space(2 * half_dim, k, scale_class);
  const Matrix change = random_invertible_matrix(rng, base.dim(), 2);
  AmbientSpace ambient = make_ambient(congruence(base.gram(), change), p, 1);
  GSConfiguration config = random_config(ambient, rng);
  return {std::move(config), k, scale_class, half_dim};
}

bool separation_check(const EtaleAlgebra& algebra, const AlgebraElement& c1, const AlgebraElement& c2) {
  return determinant_class(algebra.trace_form_quadratic(c1)) == determinant_class(algebra.trace_form_quadratic(c2));
}

}  // namespace tendo
