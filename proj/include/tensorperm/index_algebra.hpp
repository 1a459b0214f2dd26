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

// Multi-index flattening and permutations of tensor factor positions.
//
// Every index in this interface is 1-based: multi-index parts, linear
// indices, permutation images, and factor positions. Container storage is
// 0-based internally and never leaks.

#ifndef TENSORPERM_INDEX_ALGEBRA_HPP
#define TENSORPERM_INDEX_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "tensorperm/errors.hpp"

namespace tensorperm {

using Index = std::size_t;

/// Ordered factor dimensions (n1, ..., nk) of a tensor-product space.
class DimList {
 public:
  explicit DimList(std::vector<Index> dims);
  DimList(std::initializer_list<Index> dims)
      : DimList(std::vector<Index>(dims)) {}

  /// Number of factors k.
  [[nodiscard]] Index size() const noexcept { return dims_.size(); }
  /// Dimension of factor t, 1 <= t <= k.
  [[nodiscard]] Index dim(Index t) const;
  /// N = n1 * ... * nk.
  [[nodiscard]] Index product() const noexcept { return product_; }
  [[nodiscard]] std::span<const Index> dims() const noexcept { return dims_; }

  /// "3,2" style rendering.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const DimList&, const DimList&) = default;

 private:
  std::vector<Index> dims_;
  Index product_ = 1;
};

/// A permutation of the factor positions {1, ..., k}, stored as images.
class Sigma {
 public:
  explicit Sigma(std::vector<Index> images);
  Sigma(std::initializer_list<Index> images)
      : Sigma(std::vector<Index>(images)) {}

  static Sigma identity(Index k);
  /// (k, k-1, ..., 1).
  static Sigma reversal(Index k);

  [[nodiscard]] Index size() const noexcept { return images_.size(); }
  /// sigma(t), 1 <= t <= k.
  [[nodiscard]] Index image(Index t) const;
  [[nodiscard]] std::span<const Index> images() const noexcept {
    return images_;
  }
  [[nodiscard]] bool is_identity() const noexcept;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Sigma&, const Sigma&) = default;

 private:
  std::vector<Index> images_;
};

/// (sigma o tau)(t) = sigma(tau(t)).
Sigma compose(const Sigma& sigma, const Sigma& tau);

Sigma sigma_inverse(const Sigma& sigma);

/// Every permutation of {1..k} in lexicographic order of image lists.
std::vector<Sigma> all_sigmas(Index k);

/// (n_sigma(1), ..., n_sigma(k)): the factor dimensions after permuting.
DimList permute_dims(const DimList& dims, const Sigma& sigma);

/// One component per factor, each in 1..dims[t].
struct MultiIndex {
  std::vector<Index> parts;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<Index> p) : parts(std::move(p)) {}
  MultiIndex(std::initializer_list<Index> p) : parts(p) {}

  [[nodiscard]] Index size() const noexcept { return parts.size(); }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
};

/// Lexicographic linear position of idx:
///   s = n_k...n_2 (i_1 - 1) + n_k...n_3 (i_2 - 1) + ... + n_k (i_{k-1} - 1) + i_k.
/// Throws DimensionError on a length mismatch and RangeError naming the
/// first offending position otherwise.
Index flatten(const DimList& dims, const MultiIndex& idx);

/// Inverse of flatten; throws RangeError unless 1 <= s <= N.
MultiIndex unflatten(const DimList& dims, Index s);

/// The implicit form of a 0/1 permutation matrix: row r has its single 1 in
/// column col_of_row(r).
class IndexPerm {
 public:
  /// Throws PermutationError unless the columns form a bijection of 1..N.
  explicit IndexPerm(std::vector<Index> col_of_row);

  static IndexPerm identity(Index n);

  [[nodiscard]] Index size() const noexcept { return cols_.size(); }
  [[nodiscard]] Index col_of_row(Index r) const;
  /// Row holding the 1 of column c.
  [[nodiscard]] Index row_of_col(Index c) const;
  [[nodiscard]] std::span<const Index> cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_identity() const noexcept;

  /// Matrix inverse, which for a permutation matrix is its transpose.
  [[nodiscard]] IndexPerm inverse() const;

  /// out[r] = v[col_of_row(r)], i.e. the matrix-vector product, in O(N).
  template <class T>
  [[nodiscard]] std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_.size()) {
      throw DimensionError("vector length " + std::to_string(v.size()) +
                           " does not match permutation size " +
                           std::to_string(cols_.size()));
    }
    std::vector<T> out;
    out.reserve(v.size());
    for (Index c : cols_) out.push_back(v[c - 1]);
    return out;
  }

  friend bool operator==(const IndexPerm&, const IndexPerm&) = default;

 private:
  std::vector<Index> cols_;
};

/// Implicit matrix product: (a * b) has its row-r 1 at b.col_of_row(a.col_of_row(r)).
IndexPerm operator*(const IndexPerm& a, const IndexPerm& b);

/// The tensor permutation matrix U(sigma) over dims in implicit form.
/// Row r is unflattened over permute_dims(dims, sigma) into (i1..ik); its 1
/// sits at the column flattening (j1..jk) over dims, with j_sigma(t) = i_t.
/// Applied to a1 (x) ... (x) ak it yields a_sigma(1) (x) ... (x) a_sigma(k).
IndexPerm induced_index_perm(const DimList& dims, const Sigma& sigma);

}  // namespace tensorperm

#endif  // TENSORPERM_INDEX_ALGEBRA_HPP
