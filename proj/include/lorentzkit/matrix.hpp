#ifndef LORENTZKIT_MATRIX_HPP
#define LORENTZKIT_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "lorentzkit/numberfield.hpp"

namespace lorentzkit {

using Vector = std::vector<QuadFieldElem>;

/// Dense row-major matrix over a single field. Sizes here are tiny (the
/// forms live on K^{n+1} for small n), so nothing is blocked or pooled.
class Matrix {
 public:
  Matrix() = default;
  /// rows x cols zero matrix.
  Matrix(const FieldDescriptor& field, std::size_t rows, std::size_t cols);
  /// From nested rows; every row must have the same length and every entry
  /// must lie in `field`.
  Matrix(const FieldDescriptor& field, const std::vector<Vector>& rows);

  static Matrix identity(const FieldDescriptor& field, std::size_t n);
  static Matrix diagonal(const FieldDescriptor& field, std::span<const QuadFieldElem> entries);

  const FieldDescriptor& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  QuadFieldElem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const QuadFieldElem& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  Matrix transpose() const;
  bool is_symmetric() const;
  bool is_identity() const;
  /// Entrywise Galois conjugate.
  Matrix conjugate() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const QuadFieldElem& s, const Matrix& m);
  friend Vector operator*(const Matrix& m, const Vector& v);
  friend bool operator==(const Matrix& x, const Matrix& y) = default;

 private:
  FieldDescriptor field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<QuadFieldElem> data_;
};

/// Exact determinant by Gaussian elimination over K.
QuadFieldElem determinant(const Matrix& m);

/// Exact inverse; throws DivisionByZero for singular input.
Matrix inverse(const Matrix& m);

QuadFieldElem dot(const Vector& x, const Vector& y);
/// x^T m y.
QuadFieldElem bilinear(const Matrix& m, const Vector& x, const Vector& y);
Vector scale(const QuadFieldElem& s, const Vector& v);
Vector conjugate(const Vector& v);

}  // namespace lorentzkit

#endif  // LORENTZKIT_MATRIX_HPP
