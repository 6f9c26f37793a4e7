#include "tendo/classes.hpp"
#include "tendo/error.hpp"

namespace tendo {

namespace {

Vector flatten(const Matrix& m) {
  Vector out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m(i, j));
  return out;
}

Matrix unflatten(const Vector& v, std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = v[i * n + j];
  return out;
}

// Product of the nonzero eigenvalues of 1 - A, for A the matrix of `action` on `basis`.
template <class Action>
Rational discriminant_on(const std::vector<Matrix>& basis, Action action) {
  if (basis.empty()) return 1;
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  const Matrix embed = Matrix::from_columns(cols);
  const Matrix normal = embed.transpose() * embed;
  const std::size_t m = basis.size();
  Matrix ad(m, m);
  for (std::size_t k = 0; k < m; ++k) {
    const Vector image = flatten(action(basis[k]));
    const Vector coords = solve(normal, embed.transpose() * image);
    if (embed * coords != image) throw InvalidArgument("adjoint action leaves the Lie algebra");
    for (std::size_t i = 0; i < m; ++i) ad(i, k) = coords[i];
  }
  const Poly f = char_poly(Matrix::identity(m) - ad);
  int lowest = 0;
  while (f.coeff(lowest) == 0) ++lowest;
  const int nonzero = static_cast<int>(m) - lowest;
  return nonzero % 2 == 0 ? f.coeff(lowest) : -f.coeff(lowest);
}

}  // namespace

std::vector<Matrix> lie_algebra_basis(LieAlgebraKind kind, const Matrix& form) {
  const std::size_t n = form.rows();
  require(form.is_square(), "Lie algebra form must be square");
  std::vector<Matrix> out;
  if (kind == LieAlgebraKind::General) {
    for (std::size_t i = 0; i < n * n; ++i) {
      Vector v(n * n);
      v[i] = 1;
      out.push_back(unflatten(v, n));
    }
    return out;
  }
  if (kind == LieAlgebraKind::Orthogonal) require(form.is_symmetric(), "orthogonal Lie algebra needs a symmetric form");
  if (kind == LieAlgebraKind::Symplectic) require(form.is_alternating(), "symplectic Lie algebra needs an alternating form");
  // Linear map A ↦ Aᵀ·form + form·A on n² coordinates.
  Matrix condition(n * n, n * n);
  for (std::size_t k = 0; k < n * n; ++k) {
    Vector v(n * n);
    v[k] = 1;
    const Matrix a = unflatten(v, n);
    const Vector image = flatten(a.transpose() * form + form * a);
    for (std::size_t i = 0; i < n * n; ++i) condition(i, k) = image[i];
  }
  for (const auto& v : nullspace(condition)) out.push_back(unflatten(v, n));
  return out;
}

Rational weyl_discriminant(const Matrix& group_element, LieAlgebraKind kind, const Matrix& form) {
  const auto inv = try_inverse(group_element);
  require(inv.has_value(), "Weyl discriminant of a singular element");
  require(group_element.rows() == form.rows(), "element and form sizes differ");
  const auto basis = lie_algebra_basis(kind, form);
  return discriminant_on(basis, [&](const Matrix& a) { return group_element * a * *inv; });
}

Rational twisted_weyl_discriminant(const Matrix& bilinear_gram) {
  const auto inv = try_inverse(bilinear_gram);
  require(inv.has_value(), "twisted Weyl discriminant of a singular form");
  const auto basis = lie_algebra_basis(LieAlgebraKind::General, bilinear_gram);
  return discriminant_on(basis, [&](const Matrix& a) { return -(*inv * a.transpose() * bilinear_gram); });
}

}  // namespace tendo
