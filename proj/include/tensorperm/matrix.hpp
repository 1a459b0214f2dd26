// Copyright 2026 The tensorperm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Dense row-major matrices over exact integers or complex doubles.
//
// Element access is 1-based, matching the index algebra. Integer matrices
// compare exactly with ==; complex matrices have no operator== and must be
// compared through approx_equal with an explicit tolerance.

#ifndef TENSORPERM_MATRIX_HPP
#define TENSORPERM_MATRIX_HPP

#include <complex>
#include <concepts>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "tensorperm/errors.hpp"
#include "tensorperm/index_algebra.hpp"

namespace tensorperm {

using Integer = std::int64_t;
using Complex = std::complex<double>;

template <class T>
concept Scalar = std::same_as<T, Integer> || std::same_as<T, Complex>;

template <Scalar T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(Index rows, Index cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(checked_size(rows, cols), fill) {}
  Matrix(Index rows, Index cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != checked_size(rows, cols)) {
      throw DimensionError("entry count " + std::to_string(data_.size()) +
                           " does not match " + std::to_string(rows) + "x" +
                           std::to_string(cols));
    }
  }

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const Index r = rows.size();
    const Index c = r == 0 ? 0 : rows.begin()->size();
    std::vector<T> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
      if (row.size() != c) throw DimensionError("ragged row list");
      data.insert(data.end(), row.begin(), row.end());
    }
    return Matrix(r, c, std::move(data));
  }

  [[nodiscard]] Index rows() const noexcept { return rows_; }
  [[nodiscard]] Index cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  // 1-based, unchecked.
  T& operator()(Index i, Index j) { return data_[(i - 1) * cols_ + (j - 1)]; }
  const T& operator()(Index i, Index j) const {
    return data_[(i - 1) * cols_ + (j - 1)];
  }

  // 1-based, checked.
  [[nodiscard]] const T& at(Index i, Index j) const {
    check(i, j);
    return (*this)(i, j);
  }
  T& at(Index i, Index j) {
    check(i, j);
    return (*this)(i, j);
  }

  [[nodiscard]] std::span<const T> row(Index i) const {
    return std::span<const T>(data_).subspan((i - 1) * cols_, cols_);
  }
  [[nodiscard]] std::span<T> row(Index i) {
    return std::span<T>(data_).subspan((i - 1) * cols_, cols_);
  }

  [[nodiscard]] std::span<const T> data() const noexcept { return data_; }
  [[nodiscard]] std::span<T> data() noexcept { return data_; }

  Matrix& operator+=(const Matrix& other) {
    require_same_shape(other);
    for (Index e = 0; e < data_.size(); ++e) data_[e] += other.data_[e];
    return *this;
  }
  Matrix& operator-=(const Matrix& other) {
    require_same_shape(other);
    for (Index e = 0; e < data_.size(); ++e) data_[e] -= other.data_[e];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (T& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend bool operator==(const Matrix& a, const Matrix& b)
    requires std::same_as<T, Integer>
  {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  static Index checked_size(Index rows, Index cols);

  void check(Index i, Index j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_) {
      throw RangeError("entry (" + std::to_string(i) + "," +
                       std::to_string(j) + ") outside " +
                       std::to_string(rows_) + "x" + std::to_string(cols_));
    }
  }
  void require_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
      throw DimensionError("shape mismatch: " + std::to_string(rows_) + "x" +
                           std::to_string(cols_) + " vs " +
                           std::to_string(other.rows_) + "x" +
                           std::to_string(other.cols_));
    }
  }

  Index rows_ = 0;
  Index cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using ComplexMatrix = Matrix<Complex>;

extern template class Matrix<Integer>;
extern template class Matrix<Complex>;

/// Kronecker product: the block matrix [a(i,j) * b]. The entry at row
/// p(i1-1)+i2, column r(j1-1)+j2 is a(i1,j1) * b(i2,j2) for b of shape p x r.
/// Throws CapacityError when either result extent exceeds dense_bound.
template <Scalar T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b,
               Index dense_bound = kDefaultDenseBound);

/// Kronecker product of a non-empty list, left to right.
template <Scalar T>
Matrix<T> kron_all(std::span<const Matrix<T>> factors,
                   Index dense_bound = kDefaultDenseBound);

template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b);

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a);

/// Matrix-vector product.
template <Scalar T>
std::vector<T> matvec(const Matrix<T>& a, std::span<const T> v);

template <Scalar T>
T trace(const Matrix<T>& a);

IntMatrix identity_matrix(Index n);

/// rows x cols with entry (i,j) = delta(i,j).
IntMatrix rect_identity(Index rows, Index cols);

/// E_ij of shape rows x cols: a single 1 at (one_row, one_col).
struct ElementarySpec {
  Index rows = 1;
  Index cols = 1;
  Index one_row = 1;
  Index one_col = 1;

  static ElementarySpec square(Index size, Index i, Index j) {
    return {size, size, i, j};
  }
};

IntMatrix elementary(const ElementarySpec& spec);

struct Position {
  Index row = 1;
  Index col = 1;
  friend bool operator==(const Position&, const Position&) = default;
};

/// Location of the single 1 of E_ij^(n) (x) E_kl^(p):
/// (p(i-1)+k, p(j-1)+l).
Position elementary_kron_index(Index n, Index p, Index i, Index j, Index k,
                               Index l);

/// Rank of the integer matrix, exact (fraction-free elimination).
Index exact_rank(const IntMatrix& m);

/// Rank of {E_ij^(n x m) (x) E_kl^(p x r)} flattened to vectors. Equals
/// n*m*p*r exactly when the products form a basis of the (np x mr) space.
/// Throws CapacityError when n*m*p*r exceeds dense_bound.
Index kron_basis_rank(Index n, Index m, Index p, Index r,
                      Index dense_bound = kDefaultDenseBound);

/// Exactly one 1 per row and per column, zeros elsewhere.
bool is_permutation_matrix(const IntMatrix& m);

/// Implicit form of a permutation matrix; throws PermutationError otherwise.
IndexPerm to_index_perm(const IntMatrix& m);

/// Dense materialization; throws CapacityError above dense_bound.
IntMatrix to_dense(const IndexPerm& perm,
                   Index dense_bound = kDefaultDenseBound);

ComplexMatrix to_complex(const IntMatrix& m);

/// max |a - b| <= tolerance entrywise, shapes equal.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tolerance);

/// Largest entrywise modulus of a - b; shapes must match.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_hermitian(const ComplexMatrix& m, double tolerance);

}  // namespace tensorperm

#endif  // TENSORPERM_MATRIX_HPP
