#include "tendo/qform.hpp"

#include <functional>
#include <utility>

#include "tendo/error.hpp"

namespace tendo {

FormSymmetry classify_symmetry(const Matrix& gram) {
  if (gram.is_symmetric()) return FormSymmetry::Symmetric;
  if (gram.is_alternating()) return FormSymmetry::Alternating;
  return FormSymmetry::General;
}

QuadForm::QuadForm(Matrix gram, Prime p, std::string label)
    : gram_(std::move(gram)), p_(p), label_(std::move(label)) {
  require(gram_.is_symmetric(), "quadratic form Gram must be symmetric");
  require(gram_.rows() > 0, "quadratic form must have positive dimension");
  require(determinant(gram_) != 0, "quadratic form must be non-degenerate");
}

QuadForm QuadForm::diagonal(const std::vector<Rational>& entries, const Prime& p, std::string label) {
  return QuadForm(Matrix::diagonal(entries), p, std::move(label));
}

Rational QuadForm::value(const Vector& v) const {
  const Vector gv = gram_ * v;
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * gv[i];
  return s;
}

Diagonalization diagonalize(const Matrix& gram) {
  require(gram.is_symmetric(), "diagonalize needs a symmetric Gram");
  const std::size_t n = gram.rows();
  Matrix m = gram;
  Matrix basis = Matrix::identity(n);
  // e_a += c·e_b on both the Gram and the basis.
  const auto add_multiple = [&](std::size_t a, std::size_t b, const Rational& c) {
    for (std::size_t r = 0; r < n; ++r) basis(r, a) += c * basis(r, b);
    for (std::size_t t = 0; t < n; ++t) m(a, t) += c * m(b, t);
    for (std::size_t t = 0; t < n; ++t) m(t, a) += c * m(t, b);
  };
  const auto swap_basis = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(basis(r, a), basis(r, b));
    for (std::size_t t = 0; t < n; ++t) std::swap(m(a, t), m(b, t));
    for (std::size_t t = 0; t < n; ++t) std::swap(m(t, a), m(t, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, pivot) == 0) ++pivot;
    if (pivot == n) {
      bool found = false;
      for (std::size_t i = k; i < n && !found; ++i) {
        for (std::size_t j = i + 1; j < n && !found; ++j) {
          if (m(i, j) == 0) continue;
          add_multiple(i, j, 1);
          pivot = i;
          found = true;
        }
      }
      if (!found) throw InvalidArgument("degenerate Gram matrix");
    }
    if (pivot != k) swap_basis(pivot, k);
    const Rational inv = 1 / m(k, k);
    for (std::size_t j = k + 1; j < n; ++j) {
      if (m(k, j) == 0) continue;
      add_multiple(j, k, -m(k, j) * inv);
    }
  }
  Diagonalization d;
  d.basis_change = std::move(basis);
  for (std::size_t i = 0; i < n; ++i) d.entries.push_back(m(i, i));
  return d;
}

Diagonalization diagonalize(const QuadForm& q) { return diagonalize(q.gram()); }

SquareClass determinant_class(const QuadForm& q) { return square_class(determinant(q.gram()), q.prime()); }

SquareClass discriminant(const QuadForm& q) {
  const std::size_t n = q.dim();
  const bool negate = ((n * (n - 1) / 2) % 2) == 1;
  const SquareClass det = determinant_class(q);
  return negate ? -det : det;
}

int hasse_of_diagonal(const std::vector<Rational>& entries, const Prime& p) {
  int s = 1;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j) s *= hilbert_qp(entries[i], entries[j], p);
  return s;
}

int hasse_invariant(const QuadForm& q) { return hasse_of_diagonal(diagonalize(q).entries, q.prime()); }

bool is_isotropic(int dim, const SquareClass& det, int hasse) {
  const Prime& p = det.prime();
  switch (dim) {
    case 0:
    case 1: return false;
    case 2: return det == square_class(-1, p);
    case 3: return hasse == hilbert_qp(-1, -det.representative(), p);
    case 4: return !det.is_trivial() || hasse == hilbert_qp(-1, -1, p);
    default: return true;
  }
}

bool is_isotropic(const QuadForm& q) {
  return is_isotropic(static_cast<int>(q.dim()), determinant_class(q), hasse_invariant(q));
}

WittDecomposition witt_decompose(int dim, const SquareClass& det, int hasse) {
  require(dim >= 0, "negative dimension");
  const Prime& p = det.prime();
  int index = 0;
  SquareClass d = det;
  int s = hasse;
  while (is_isotropic(dim, d, s)) {
    // q = Hy ⊕ q', det q = -det q', s(q) = s(q')·(-1, det q')
    dim -= 2;
    d = -d;
    s *= hilbert_qp(-1, d.representative(), p);
    ++index;
  }
  if (dim > 4 || (dim == 0 && (!d.is_trivial() || s != 1)) || (dim == 1 && s != 1)) {
    throw InternalError("invariant triple has no anisotropic realization");
  }
  return {index, WittClass{dim, d, s}};
}

WittDecomposition witt_decompose(const QuadForm& q) {
  const auto d = diagonalize(q);
  Rational det = 1;
  for (const auto& a : d.entries) det *= a;
  return witt_decompose(static_cast<int>(q.dim()), square_class(det, q.prime()),
                        hasse_of_diagonal(d.entries, q.prime()));
}

FormInvariants invariants(const QuadForm& q) {
  const auto d = diagonalize(q);
  Rational det = 1;
  for (const auto& a : d.entries) det *= a;
  const int dim = static_cast<int>(q.dim());
  const SquareClass det_class = square_class(det, q.prime());
  const SquareClass dpm = ((q.dim() * (q.dim() - 1) / 2) % 2) == 1 ? -det_class : det_class;
  const int hasse = hasse_of_diagonal(d.entries, q.prime());
  const auto w = witt_decompose(dim, det_class, hasse);
  FormInvariants out{dim, det_class, dpm, hasse, w.witt_index, w.kernel.aniso_dim};
  return out;
}

bool equivalent(const QuadForm& a, const QuadForm& b) {
  require(a.prime() == b.prime(), "forms over different primes");
  return a.dim() == b.dim() && determinant_class(a) == determinant_class(b) &&
         hasse_invariant(a) == hasse_invariant(b);
}

bool witt_equivalent(const QuadForm& a, const QuadForm& b) {
  require(a.prime() == b.prime(), "forms over different primes");
  return witt_decompose(a).kernel == witt_decompose(b).kernel;
}

QuadForm direct_sum(const QuadForm& a, const QuadForm& b) {
  require(a.prime() == b.prime(), "forms over different primes");
  return QuadForm(direct_sum(a.gram(), b.gram()), a.prime());
}

QuadForm scale(const Rational& c, const QuadForm& q) {
  require(c != 0, "scaling a form by zero");
  return QuadForm(c * q.gram(), q.prime());
}

QuadForm hyperbolic(int k, const Prime& p) {
  require(k >= 1, "hyperbolic space needs k >= 1");
  Matrix g(static_cast<std::size_t>(2 * k), static_cast<std::size_t>(2 * k));
  for (std::size_t i = 0; i < static_cast<std::size_t>(k); ++i) {
    g(2 * i, 2 * i + 1) = 1;
    g(2 * i + 1, 2 * i) = 1;
  }
  return QuadForm(std::move(g), p);
}

QuadForm norm_form(const QuadraticAlgebra& k) {
  return QuadForm::diagonal({Rational(1), -k.d.representative()}, k.prime());
}

std::vector<Rational> realize_witt_class(const WittClass& w) {
  const Prime& p = w.prime();
  if (w.aniso_dim == 0) {
    require(w.det.is_trivial() && w.hasse == 1, "inconsistent Witt class");
    return {};
  }
  const auto table = square_class_table(p);
  std::vector<Rational> entries(static_cast<std::size_t>(w.aniso_dim));
  std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t pos, std::size_t start) {
    if (pos == entries.size()) {
      Rational det = 1;
      for (const auto& a : entries) det *= a;
      return square_class(det, p) == w.det && hasse_of_diagonal(entries, p) == w.hasse &&
             !is_isotropic(w.aniso_dim, w.det, w.hasse);
    }
    for (std::size_t i = start; i < table.size(); ++i) {
      entries[pos] = table[i].representative();
      if (search(pos + 1, i)) return true;
    }
    return false;
  };
  if (!search(0, 0)) throw InvalidArgument("Witt class has no anisotropic realization");
  return entries;
}

bool represents(const QuadForm& q, const Rational& a) {
  require(a != 0, "representation of zero");
  return is_isotropic(direct_sum(q, QuadForm::diagonal({-a}, q.prime())));
}

bool is_isotropic_by_search(const QuadForm& q, int depth) {
  const LocalField field = LocalField::rationals(q.prime());
  std::vector<FieldElement> coeffs;
  for (const auto& a : diagonalize(q).entries) coeffs.push_back(field.from_rational(a));
  const auto result = find_isotropic_vector(field, coeffs, depth);
  if (result.status == Solubility::Inconclusive) throw Error("isotropy search inconclusive; raise the depth");
  return result.status == Solubility::Soluble;
}

}  // namespace tendo
