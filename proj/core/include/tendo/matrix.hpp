#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tendo/poly.hpp"
#include "tendo/rational.hpp"

namespace tendo {

using Vector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> entries);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
  /// Matrix whose j-th column is columns[j].
  static Matrix from_columns(const std::vector<Vector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

  bool is_zero() const;
  bool is_symmetric() const;
  /// Mᵀ = -M with zero diagonal.
  bool is_alternating() const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Rational determinant(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> try_inverse(const Matrix& m);
/// Throws InvalidArgument on a singular matrix.
Matrix inverse(const Matrix& m);
/// Basis of {v : m v = 0}.
std::vector<Vector> nullspace(const Matrix& m);
/// Solves m x = b for square invertible m.
Vector solve(const Matrix& m, const Vector& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);
/// Pᵀ G P.
Matrix congruence(const Matrix& gram, const Matrix& basis_change);
Matrix power(const Matrix& m, unsigned exponent);

/// Characteristic polynomial det(T - m), computed by Hessenberg reduction.
Poly char_poly(const Matrix& m);
/// f(m) by Horner's rule.
Matrix evaluate(const Poly& f, const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace tendo
