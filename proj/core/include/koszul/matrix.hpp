#pragma once

#include <string>
#include <vector>

#include "koszul/errors.hpp"
#include "koszul/poly.hpp"

namespace koszul {

/// Dense row-major matrix. A map between free modules is stored as
/// target-rank x source-rank, so column j is the image of basis vector j.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {
    if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int i, int j) { return data_[idx(i, j)]; }
  const T& operator()(int i, int j) const { return data_[idx(i, j)]; }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!is_zero_entry(x)) return false;
    return true;
  }

  Matrix column_block(int first, int count) const {
    Matrix r(rows_, count);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
    return r;
  }

  Matrix row_block(int first, int count) const {
    Matrix r(count, cols_);
    for (int i = 0; i < count; ++i)
      for (int j = 0; j < cols_; ++j) r(i, j) = (*this)(first + i, j);
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_entry(x)) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const T& y = b(k, j);
          if (!is_zero_entry(y)) r(i, j) += x * y;
        }
      }
    return r;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  Matrix operator-() const {
    Matrix r = *this;
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static bool is_zero_entry(const T& x) {
    if constexpr (requires { x.is_zero(); }) {
      return x.is_zero();
    } else {
      return x == 0;
    }
  }

  std::size_t idx(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw DomainError("matrix index out of range");
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using PolyMatrix = Matrix<Poly>;

/// Horizontal concatenation; both need the same row count.
PolyMatrix hconcat(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix identity_matrix(const RingPtr& ring, int n);
PolyMatrix scalar_matrix(const RingPtr& ring, const QMatrix& q);
PolyMatrix parse_matrix(const std::vector<std::vector<std::string>>& rows, const RingPtr& ring);
std::vector<std::vector<std::string>> matrix_strings(const PolyMatrix& m);

/// Exact determinant by cofactor expansion along the sparsest row.
Poly determinant(const PolyMatrix& m, const RingPtr& ring);
Rational determinant(const QMatrix& m);

/// Square submatrix on the given row and column index lists.
PolyMatrix submatrix(const PolyMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols);

/// True when every nonzero entry is homogeneous.
bool entries_homogeneous(const PolyMatrix& m);

}  // namespace koszul
