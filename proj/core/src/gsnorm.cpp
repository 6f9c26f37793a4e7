#include "tendo/gsnorm.hpp"

#include "tendo/error.hpp"
#include "tendo/qform.hpp"

namespace tendo {

namespace {

bool has_form_symmetry(const Matrix& gram, int epsilon) {
  return epsilon == 1 ? gram.is_symmetric() : gram.is_alternating();
}

// J with J² = e·I for a rational e; returns e.
std::optional<Rational> square_scalar(const Matrix& complex) {
  if (!complex.is_square() || complex.rows() == 0) return std::nullopt;
  const Matrix sq = complex * complex;
  const Rational e = sq(0, 0);
  if (sq != e * Matrix::identity(complex.rows())) return std::nullopt;
  return e;
}

// X ↦ (X + A⁻¹·X·B)/2, the projection onto maps intertwining B with A (A² = B² = e·I).
Matrix intertwine(const Matrix& m, const Matrix& target, const Matrix& source) {
  const Matrix target_inv = inverse(target);
  return Rational(1, 2) * (m + target_inv * m * source);
}

bool sizes_match(const GSConfiguration& config) {
  const std::size_t n = config.ambient.dim();
  const auto square_n = [n](const Matrix& m) { return m.rows() == n && m.cols() == n; };
  return n > 0 && config.ambient.form_gram.is_square() && square_n(config.to_dual) && square_n(config.h_to_dual);
}

void require_admissible(const GSConfiguration& config) {
  require(is_admissible(config), "configuration is not admissible (closure, invertibility or shape)");
}

Matrix form_inverse(const AmbientSpace& ambient) { return inverse(ambient.form_gram); }

}  // namespace

Matrix AmbientSpace::gram_q1() const {
  const std::size_t n = dim();
  Matrix out(3 * n, 3 * n);
  out.set_block(0, 2 * n, Matrix::identity(n));
  out.set_block(n, n, form_gram);
  out.set_block(2 * n, 0, Rational(epsilon) * Matrix::identity(n));
  return out;
}

Matrix AmbientSpace::complex_dual() const {
  require(complex_h.has_value(), "ambient space has no complex structure");
  return -complex_h->transpose();
}

AmbientSpace make_ambient(Matrix form_gram, const Prime& p, int epsilon, std::optional<Matrix> complex_v,
                          std::optional<Matrix> complex_h) {
  require(epsilon == 1 || epsilon == -1, "epsilon must be ±1");
  require(form_gram.is_square() && form_gram.rows() > 0, "form Gram must be a nonempty square matrix");
  require(has_form_symmetry(form_gram, epsilon), epsilon == 1 ? "form must be symmetric" : "form must be alternating");
  require(determinant(form_gram) != 0, "form must be non-degenerate");
  require(complex_v.has_value() == complex_h.has_value(), "complex structures must be given on both V and H");
  if (complex_v) {
    const auto ev = square_scalar(*complex_v);
    const auto eh = square_scalar(*complex_h);
    require(ev && eh && *ev == *eh && *ev != 0, "complex structures must square to the same scalar e");
    require(!square_class(*ev, p).is_trivial(), "complex structure scalar must be a non-square");
    require(complex_v->rows() == form_gram.rows() && complex_h->rows() == form_gram.rows(), "complex structure size");
    require(complex_v->transpose() * form_gram == -(form_gram * *complex_v), "form is not hermitian for J_V");
  } else if (epsilon == 1 && form_gram.rows() == 2) {
    require(!is_isotropic(QuadForm(form_gram, p)), "isotropic binary quadratic spaces are excluded");
  }
  return AmbientSpace{std::move(form_gram), p, epsilon, std::move(complex_v), std::move(complex_h)};
}

bool xy_condition(const GSConfiguration& config) {
  if (!sizes_match(config)) return false;
  const auto& a = config.ambient;
  const auto q_inv = try_inverse(a.form_gram);
  if (!q_inv) return false;
  const Matrix& x = config.to_dual;
  const Matrix& y = config.h_to_dual;
  if (!(y + Rational(a.epsilon) * y.transpose() + x * *q_inv * x.transpose()).is_zero()) return false;
  if (a.is_hermitian()) {
    const Matrix jd = a.complex_dual();
    if (x * *a.complex_v != jd * x || y * *a.complex_h != jd * y) return false;
  }
  return true;
}

bool is_admissible(const GSConfiguration& config) {
  if (!sizes_match(config)) return false;
  const auto& a = config.ambient;
  if (!has_form_symmetry(a.form_gram, a.epsilon)) return false;
  if (determinant(a.form_gram) == 0) return false;
  if (determinant(config.to_dual) == 0 || determinant(config.h_to_dual) == 0) return false;
  return xy_condition(config);
}

GSConfiguration random_config(const AmbientSpace& ambient, Rng& rng, const RandomConfigOptions& options) {
  const std::size_t n = ambient.dim();
  const Matrix q_inv = form_inverse(ambient);
  const Rational eps(ambient.epsilon);
  for (int attempt = 0; attempt < options.retry_budget; ++attempt) {
    Matrix x = random_integer_matrix(rng, n, n, options.entry_bound);
    const Matrix r = random_integer_matrix(rng, n, n, options.entry_bound);
    Matrix s = r - eps * r.transpose();  // S + εSᵀ = 0
    if (ambient.is_hermitian()) {
      const Matrix jd = ambient.complex_dual();
      x = intertwine(x, jd, *ambient.complex_v);
      s = intertwine(s, jd, *ambient.complex_h);
    }
    if (determinant(x) == 0) continue;
    Matrix y = Rational(-1, 2) * (x * q_inv * x.transpose()) + s;
    GSConfiguration config{ambient, std::move(x), std::move(y)};
    if (!is_admissible(config)) continue;
    if (options.require_very_regular && !norm_is_very_regular(config)) continue;
    return config;
  }
  throw InternalError("random_config: retry budget exhausted");
}

GSConfiguration random_config(const AmbientSpace& ambient, std::uint64_t seed, const RandomConfigOptions& options) {
  Rng rng(seed);
  try {
    return random_config(ambient, rng, options);
  } catch (const InternalError&) {
    throw InternalError("random_config: retry budget exhausted for seed " + std::to_string(seed));
  }
}

Matrix u_of_xy(const GSConfiguration& config) {
  require(xy_condition(config), "closure condition violated");
  const std::size_t n = config.ambient.dim();
  const Matrix x_prime = -(form_inverse(config.ambient) * config.to_dual.transpose());
  Matrix nil(3 * n, 3 * n);
  nil.set_block(0, n, config.to_dual);
  nil.set_block(0, 2 * n, config.h_to_dual);
  nil.set_block(n, 2 * n, x_prime);
  return Matrix::identity(3 * n) + nil;
}

Rigidification rigidify(const GSConfiguration& config) {
  require_admissible(config);
  return {config.h_to_dual, form_inverse(config.ambient) * config.to_dual.transpose()};
}

Matrix gs_norm(const GSConfiguration& config) {
  require_admissible(config);
  const std::size_t n = config.ambient.dim();
  return Matrix::identity(n) +
         form_inverse(config.ambient) * config.to_dual.transpose() * inverse(config.h_to_dual) * config.to_dual;
}

Matrix gs_section(const AmbientSpace& ambient, const Matrix& to_dual, const Matrix& group_element) {
  const std::size_t n = ambient.dim();
  require(to_dual.rows() == n && to_dual.cols() == n && determinant(to_dual) != 0, "X must be invertible");
  require(group_element.rows() == n && group_element.cols() == n, "group element has the wrong size");
  const auto shifted_inv = try_inverse(group_element - Matrix::identity(n));
  require(shifted_inv.has_value(), "section needs det(γ - 1) ≠ 0");
  return to_dual * *shifted_inv * form_inverse(ambient) * to_dual.transpose();
}

bool norm_is_very_regular(const GSConfiguration& config) {
  const Matrix norm = gs_norm(config);
  const std::size_t n = norm.rows();
  const Matrix g = config.ambient.is_odd_orthogonal() ? -norm : norm;
  if (determinant(g + Matrix::identity(n)) == 0) return false;
  if (!config.ambient.is_odd_orthogonal() && determinant(g - Matrix::identity(n)) == 0) return false;
  if (!config.ambient.is_hermitian()) return is_squarefree(char_poly(g));
  // Regular over E: the E-linear centralizer has Q_p-dimension dim V.
  const Matrix& j = *config.ambient.complex_v;
  Matrix condition(2 * n * n, n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    Matrix a(n, n);
    a(k / n, k % n) = 1;
    const Matrix c1 = a * g - g * a;
    const Matrix c2 = a * j - j * a;
    for (std::size_t i = 0; i < n * n; ++i) {
      condition(i, k) = c1(i / n, i % n);
      condition(n * n + i, k) = c2(i / n, i % n);
    }
  }
  return nullspace(condition).size() == n;
}

GSConfiguration config_from_twisted(const Matrix& bilinear_gram, const Prime& p, int epsilon,
                                    std::optional<Matrix> complex_structure) {
  require(epsilon == 1 || epsilon == -1, "epsilon must be ±1");
  const Rational eps(epsilon);
  Matrix form = -eps * (bilinear_gram + eps * bilinear_gram.transpose());
  auto ambient = make_ambient(form, p, epsilon, complex_structure, complex_structure);
  GSConfiguration config{std::move(ambient), eps * form, bilinear_gram};
  if (!is_admissible(config)) throw InternalError("config_from_twisted produced an inadmissible configuration");
  return config;
}

bool gs_param_check(const GSConfiguration& config, const ClassParameter& twisted) {
  require(is_twisted_kind(twisted.kind), "GS parameter check needs a twisted parameter");
  if (!is_admissible(config)) return false;
  const Matrix gram = build_class(twisted).gram;
  if (gram.rows() != config.ambient.dim()) return false;
  if (twist_invariant(config.h_to_dual) != twist_invariant(gram)) return false;
  require(norm_is_very_regular(config), "norm is not very regular");
  const auto& algebra = twisted.algebra;
  const AlgebraElement ratio = algebra.mul(algebra.tau(twisted.element), algebra.inverse(twisted.element));
  const Matrix norm = gs_norm(config);
  if (config.ambient.is_odd_orthogonal()) {
    return char_poly(-norm) == algebra.char_poly(ratio) * Poly::linear_factor(1);
  }
  const AlgebraElement predicted = algebra.scale(Rational(-config.ambient.epsilon), ratio);
  return char_poly(norm) == algebra.char_poly(predicted);
}

}  // namespace tendo
