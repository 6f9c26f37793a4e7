#include "tendo/matrix.hpp"

#include <sstream>
#include <utility>

#include "tendo/error.hpp"

namespace tendo {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(std::span<const Rational> entries) {
  Matrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require(rows[r].size() == m.cols_, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns) {
  if (columns.empty()) return {};
  Matrix m(columns.front().size(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require(columns[c].size() == m.rows_, "ragged matrix columns");
    for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  require(r0 + m.rows_ <= rows_ && c0 + m.cols_ <= cols_, "block out of range");
  for (std::size_t r = 0; r < m.rows_; ++r)
    for (std::size_t c = 0; c < m.cols_; ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::is_alternating() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    if ((*this)(r, r) != 0) return false;
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != -(*this)(c, r)) return false;
  }
  return true;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, "matrix shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols_ == b.rows_, "matrix shape mismatch in *");
  Matrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) m(i, j) += x * b(k, j);
    }
  }
  return m;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require(a.cols_ == v.size(), "matrix-vector shape mismatch");
  Vector out(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    const Rational inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(const Matrix& input) {
  require(input.is_square(), "determinant of a non-square matrix");
  Matrix m = input;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    const Rational inv = 1 / m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::size_t rank(const Matrix& input) {
  Matrix m = input;
  return row_reduce(m).size();
}

std::optional<Matrix> try_inverse(const Matrix& input) {
  require(input.is_square(), "inverse of a non-square matrix");
  const std::size_t n = input.rows();
  Matrix aug(n, 2 * n);
  aug.set_block(0, 0, input);
  aug.set_block(0, n, Matrix::identity(n));
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw InvalidArgument("singular matrix has no inverse");
  return *std::move(inv);
}

std::vector<Vector> nullspace(const Matrix& input) {
  Matrix m = input;
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Vector solve(const Matrix& m, const Vector& b) {
  require(m.is_square() && m.rows() == b.size(), "solve shape mismatch");
  const std::size_t n = m.rows();
  Matrix aug(n, n + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < n; ++r) aug(r, n) = b[r];
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InvalidArgument("singular system");
  return aug.column(n);
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix congruence(const Matrix& gram, const Matrix& basis_change) {
  return basis_change.transpose() * gram * basis_change;
}

Matrix power(const Matrix& m, unsigned exponent) {
  require(m.is_square(), "power of a non-square matrix");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly char_poly(const Matrix& input) {
  require(input.is_square(), "characteristic polynomial of a non-square matrix");
  const std::size_t n = input.rows();
  Matrix h = input;
  // Similarity reduction to upper Hessenberg form.
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(m, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, m));
    }
    const Rational pivot_inv = 1 / h(m, m - 1);
    for (std::size_t j = m + 1; j < n; ++j) {
      if (h(j, m - 1) == 0) continue;
      const Rational u = h(j, m - 1) * pivot_inv;
      for (std::size_t c = 0; c < n; ++c) h(j, c) -= u * h(m, c);
      for (std::size_t r = 0; r < n; ++r) h(r, m) += u * h(r, j);
    }
  }
  // p_k = (T - h_kk) p_{k-1} - sum_i h_{k-i,k} (prod_{j=k-i+1..k} h_{j,j-1}) p_{k-i-1}  (1-based)
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(1));
  const Poly t = Poly::monomial(1, 1);
  for (std::size_t k = 1; k <= n; ++k) {
    Poly next = (t - Poly::constant(h(k - 1, k - 1))) * p[k - 1];
    Rational sub = 1;
    for (std::size_t i = 1; i < k; ++i) {
      sub *= h(k - i, k - i - 1);
      if (sub == 0) break;
      next -= Poly::constant(h(k - i - 1, k - 1) * sub) * p[k - i - 1];
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Matrix evaluate(const Poly& f, const Matrix& m) {
  require(m.is_square(), "polynomial evaluated at a non-square matrix");
  Matrix acc(m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.rows());
  for (int i = f.degree(); i >= 0; --i) acc = acc * m + f.coeff(i) * id;
  return acc;
}

std::string to_string(const Matrix& m) {
  std::ostringstream out;
  out << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? ", " : "") << m(r, c).get_str();
    out << "]";
  }
  out << "]";
  return out.str();
}

}  // namespace tendo
