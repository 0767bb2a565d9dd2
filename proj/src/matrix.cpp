#include "lorentzkit/matrix.hpp"

#include <utility>

namespace lorentzkit {

namespace {

void require_field(const FieldDescriptor& f, const QuadFieldElem& x) {
  if (!(x.field() == f))
    throw Error(ErrorCode::FieldMismatch, "matrix entry in " + x.field().to_string() +
                                              ", expected " + f.to_string());
}

void require_shape(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::DimMismatch, what);
}

}  // namespace

Matrix::Matrix(const FieldDescriptor& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, QuadFieldElem(field, 0)) {}

Matrix::Matrix(const FieldDescriptor& field, const std::vector<Vector>& rows)
    : field_(field), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require_shape(row.size() == cols_, "ragged matrix rows");
    for (const auto& x : row) {
      require_field(field_, x);
      data_.push_back(x);
    }
  }
}

Matrix Matrix::identity(const FieldDescriptor& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = QuadFieldElem(field, 1);
  return m;
}

Matrix Matrix::diagonal(const FieldDescriptor& field, std::span<const QuadFieldElem> entries) {
  Matrix m(field, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    require_field(field, entries[i]);
    m(i, i) = entries[i];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& x = (*this)(i, j);
      if (i == j ? !x.is_one() : !x.is_zero()) return false;
    }
  return true;
}

Matrix Matrix::conjugate() const {
  Matrix c = *this;
  for (auto& x : c.data_) x = galois_conjugate(x);
  return c;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  require_shape(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix sum shape mismatch");
  Matrix r = x;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] += y.data_[k];
  return r;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  require_shape(x.rows_ == y.rows_ && x.cols_ == y.cols_, "matrix difference shape mismatch");
  Matrix r = x;
  for (std::size_t k = 0; k < r.data_.size(); ++k) r.data_[k] -= y.data_[k];
  return r;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  require_shape(x.cols_ == y.rows_, "matrix product shape mismatch");
  if (!(x.field_ == y.field_)) throw Error(ErrorCode::FieldMismatch, "matrix product across fields");
  Matrix r(x.field_, x.rows_, y.cols_);
  for (std::size_t i = 0; i < x.rows_; ++i)
    for (std::size_t k = 0; k < x.cols_; ++k) {
      const QuadFieldElem& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.cols_; ++j)
        if (!y(k, j).is_zero()) r(i, j) += xik * y(k, j);
    }
  return r;
}

Matrix operator*(const QuadFieldElem& s, const Matrix& m) {
  Matrix r = m;
  for (auto& x : r.data_) x = s * x;
  return r;
}

Vector operator*(const Matrix& m, const Vector& v) {
  require_shape(m.cols_ == v.size(), "matrix-vector shape mismatch");
  Vector r(m.rows_, QuadFieldElem(m.field_, 0));
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) r[i] += m(i, j) * v[j];
  return r;
}

QuadFieldElem determinant(const Matrix& m) {
  require_shape(m.is_square(), "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  QuadFieldElem det(m.field(), 1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return QuadFieldElem(m.field(), 0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    const QuadFieldElem inv = field_inv(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const QuadFieldElem factor = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) a(i, j) -= factor * a(k, j);
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  require_shape(m.is_square(), "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(m.field(), n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw Error(ErrorCode::DivisionByZero, "inverse of a singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    const QuadFieldElem pivot_inv = field_inv(a(k, k));
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= pivot_inv;
      inv(k, j) *= pivot_inv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const QuadFieldElem factor = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= factor * a(k, j);
        inv(i, j) -= factor * inv(k, j);
      }
    }
  }
  return inv;
}

QuadFieldElem dot(const Vector& x, const Vector& y) {
  require_shape(x.size() == y.size() && !x.empty(), "dot product length mismatch");
  QuadFieldElem s = x.front().zero();
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

QuadFieldElem bilinear(const Matrix& m, const Vector& x, const Vector& y) {
  require_shape(m.rows() == x.size() && m.cols() == y.size(), "bilinear form length mismatch");
  return dot(x, m * y);
}

Vector scale(const QuadFieldElem& s, const Vector& v) {
  Vector r = v;
  for (auto& x : r) x = s * x;
  return r;
}

Vector conjugate(const Vector& v) {
  Vector r = v;
  for (auto& x : r) x = galois_conjugate(x);
  return r;
}

}  // namespace lorentzkit
