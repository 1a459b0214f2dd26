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

#include "tensorperm/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace tensorperm {
namespace {

void require_within_bound(Index rows, Index cols, Index dense_bound,
                          const char* what) {
  if (rows > dense_bound || cols > dense_bound) {
    throw CapacityError(std::string(what) + " would be " +
                        std::to_string(rows) + "x" + std::to_string(cols) +
                        ", exceeding the dense bound " +
                        std::to_string(dense_bound));
  }
}

Index checked_mul(Index a, Index b) {
  if (a != 0 && b > std::numeric_limits<Index>::max() / a) {
    throw CapacityError("matrix extent overflows the index range");
  }
  return a * b;
}

// a*b - c*d, throwing on overflow.
Integer cross_difference(Integer a, Integer b, Integer c, Integer d) {
  Integer ab = 0, cd = 0, out = 0;
  if (__builtin_mul_overflow(a, b, &ab) || __builtin_mul_overflow(c, d, &cd) ||
      __builtin_sub_overflow(ab, cd, &out)) {
    throw CapacityError("integer overflow during exact elimination");
  }
  return out;
}

}  // namespace

template <Scalar T>
Index Matrix<T>::checked_size(Index rows, Index cols) {
  return checked_mul(rows, cols);
}

template class Matrix<Integer>;
template class Matrix<Complex>;

template <Scalar T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b, Index dense_bound) {
  const Index rows = checked_mul(a.rows(), b.rows());
  const Index cols = checked_mul(a.cols(), b.cols());
  require_within_bound(rows, cols, dense_bound, "Kronecker product");
  // Output rows are produced in order, so entries are written sequentially.
  std::vector<T> data(rows * cols);
  T* dst = data.data();
  const Index bc = b.cols();
  for (Index i1 = 1; i1 <= a.rows(); ++i1) {
    const auto a_row = a.row(i1);
    for (Index i2 = 1; i2 <= b.rows(); ++i2) {
      const T* b_row = b.row(i2).data();
      for (const T& s : a_row) {
        for (Index j = 0; j < bc; ++j) dst[j] = s * b_row[j];
        dst += bc;
      }
    }
  }
  return Matrix<T>(rows, cols, std::move(data));
}

template <Scalar T>
Matrix<T> kron_all(std::span<const Matrix<T>> factors, Index dense_bound) {
  if (factors.empty()) throw DimensionError("empty Kronecker factor list");
  Matrix<T> acc = factors.front();
  for (Index t = 1; t < factors.size(); ++t) {
    acc = kron(acc, factors[t], dense_bound);
  }
  return acc;
}

template <Scalar T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  Matrix<T> out(a.rows(), b.cols());
  const Index nnz_b = static_cast<Index>(
      std::count_if(b.data().begin(), b.data().end(),
                    [](const T& x) { return x != T{}; }));
  if (nnz_b * 4 <= b.data().size()) {
    // Sparse right operand (permutation matrices): visit its nonzeros only,
    // stored row by row in compressed form.
    std::vector<Index> start(b.rows() + 1, 0);
    std::vector<std::pair<Index, T>> entries;
    entries.reserve(nnz_b);
    for (Index k = 1; k <= b.rows(); ++k) {
      const auto src = b.row(k);
      for (Index j = 0; j < src.size(); ++j) {
        if (src[j] != T{}) entries.emplace_back(j, src[j]);
      }
      start[k] = entries.size();
    }
    for (Index i = 1; i <= a.rows(); ++i) {
      auto dst = out.row(i);
      for (Index k = 1; k <= a.cols(); ++k) {
        const T s = a(i, k);
        if (s == T{}) continue;
        for (Index e = start[k - 1]; e < start[k]; ++e) {
          dst[entries[e].first] += s * entries[e].second;
        }
      }
    }
    return out;
  }
  for (Index i = 1; i <= a.rows(); ++i) {
    auto dst = out.row(i);
    for (Index k = 1; k <= a.cols(); ++k) {
      const T s = a(i, k);
      if (s == T{}) continue;
      const auto src = b.row(k);
      for (Index j = 0; j < b.cols(); ++j) dst[j] += s * src[j];
    }
  }
  return out;
}

template <Scalar T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index j = 1; j <= a.cols(); ++j) out(j, i) = a(i, j);
  }
  return out;
}

template <Scalar T>
std::vector<T> matvec(const Matrix<T>& a, std::span<const T> v) {
  if (v.size() != a.cols()) {
    throw DimensionError("vector length " + std::to_string(v.size()) +
                         " does not match " + std::to_string(a.cols()) +
                         " columns");
  }
  std::vector<T> out(a.rows());
  for (Index i = 1; i <= a.rows(); ++i) {
    const auto r = a.row(i);
    T acc{};
    for (Index j = 0; j < r.size(); ++j) acc += r[j] * v[j];
    out[i - 1] = acc;
  }
  return out;
}

template <Scalar T>
T trace(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionError("trace of a non-square matrix");
  T acc{};
  for (Index i = 1; i <= a.rows(); ++i) acc += a(i, i);
  return acc;
}

#define TENSORPERM_INSTANTIATE(T)                                         \
  template Matrix<T> kron(const Matrix<T>&, const Matrix<T>&, Index);     \
  template Matrix<T> kron_all(std::span<const Matrix<T>>, Index);         \
  template Matrix<T> matmul(const Matrix<T>&, const Matrix<T>&);          \
  template Matrix<T> transpose(const Matrix<T>&);                         \
  template std::vector<T> matvec(const Matrix<T>&, std::span<const T>);   \
  template T trace(const Matrix<T>&);

TENSORPERM_INSTANTIATE(Integer)
TENSORPERM_INSTANTIATE(Complex)
#undef TENSORPERM_INSTANTIATE

IntMatrix identity_matrix(Index n) { return rect_identity(n, n); }

IntMatrix rect_identity(Index rows, Index cols) {
  if (rows < 1 || cols < 1) {
    throw RangeError("identity extents must be at least 1");
  }
  IntMatrix out(rows, cols);
  for (Index i = 1; i <= std::min(rows, cols); ++i) out(i, i) = 1;
  return out;
}

IntMatrix elementary(const ElementarySpec& spec) {
  if (spec.rows < 1 || spec.cols < 1 || spec.one_row < 1 ||
      spec.one_row > spec.rows || spec.one_col < 1 ||
      spec.one_col > spec.cols) {
    throw RangeError("elementary matrix E_(" + std::to_string(spec.one_row) +
                     "," + std::to_string(spec.one_col) + ") outside " +
                     std::to_string(spec.rows) + "x" +
                     std::to_string(spec.cols));
  }
  IntMatrix out(spec.rows, spec.cols);
  out(spec.one_row, spec.one_col) = 1;
  return out;
}

Position elementary_kron_index(Index n, Index p, Index i, Index j, Index k,
                               Index l) {
  if (i < 1 || i > n || j < 1 || j > n) {
    throw RangeError("E_(" + std::to_string(i) + "," + std::to_string(j) +
                     ") outside order " + std::to_string(n));
  }
  if (k < 1 || k > p || l < 1 || l > p) {
    throw RangeError("E_(" + std::to_string(k) + "," + std::to_string(l) +
                     ") outside order " + std::to_string(p));
  }
  return {p * (i - 1) + k, p * (j - 1) + l};
}

Index exact_rank(const IntMatrix& m) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(m.rows());
  for (Index i = 1; i <= m.rows(); ++i) {
    const auto r = m.row(i);
    rows.emplace_back(r.begin(), r.end());
  }

  Index rank = 0;
  for (Index col = 0; col < m.cols() && rank < rows.size(); ++col) {
    Index pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    const auto& pr = rows[rank];
    const Integer pv = pr[col];
    for (Index r = rank + 1; r < rows.size(); ++r) {
      auto& row = rows[r];
      const Integer v = row[col];
      if (v == 0) continue;
      // row <- pv*row - v*pivot_row, then divide out the content.
      Integer g = 0;
      for (Index c = col; c < m.cols(); ++c) {
        row[c] = cross_difference(pv, row[c], v, pr[c]);
        g = std::gcd(g, row[c]);
      }
      if (g > 1) {
        for (Index c = col; c < m.cols(); ++c) row[c] /= g;
      }
    }
    ++rank;
  }
  return rank;
}

Index kron_basis_rank(Index n, Index m, Index p, Index r, Index dense_bound) {
  if (n < 1 || m < 1 || p < 1 || r < 1) {
    throw RangeError("basis dimensions must be at least 1");
  }
  const Index count = checked_mul(checked_mul(n, m), checked_mul(p, r));
  require_within_bound(count, count, dense_bound, "basis stack");

  // One row per product E_ij (x) E_kl, flattened row-major.
  IntMatrix stacked(count, count);
  Index row = 1;
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= m; ++j) {
      const IntMatrix a = elementary({n, m, i, j});
      for (Index k = 1; k <= p; ++k) {
        for (Index l = 1; l <= r; ++l) {
          const IntMatrix prod = kron(a, elementary({p, r, k, l}), count);
          std::copy(prod.data().begin(), prod.data().end(),
                    stacked.row(row).begin());
          ++row;
        }
      }
    }
  }
  return exact_rank(stacked);
}

bool is_permutation_matrix(const IntMatrix& m) {
  if (!m.is_square()) return false;
  std::vector<Index> col_count(m.cols(), 0);
  for (Index i = 1; i <= m.rows(); ++i) {
    Index ones = 0;
    for (Index j = 1; j <= m.cols(); ++j) {
      const Integer v = m(i, j);
      if (v == 1) {
        ++ones;
        ++col_count[j - 1];
      } else if (v != 0) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return std::all_of(col_count.begin(), col_count.end(),
                     [](Index c) { return c == 1; });
}

IndexPerm to_index_perm(const IntMatrix& m) {
  if (!is_permutation_matrix(m)) {
    throw PermutationError("matrix is not a permutation matrix");
  }
  std::vector<Index> cols(m.rows());
  for (Index i = 1; i <= m.rows(); ++i) {
    const auto r = m.row(i);
    cols[i - 1] =
        static_cast<Index>(std::find(r.begin(), r.end(), 1) - r.begin()) + 1;
  }
  return IndexPerm(std::move(cols));
}

IntMatrix to_dense(const IndexPerm& perm, Index dense_bound) {
  require_within_bound(perm.size(), perm.size(), dense_bound,
                       "permutation matrix");
  IntMatrix out(perm.size(), perm.size());
  for (Index r = 1; r <= perm.size(); ++r) out(r, perm.col_of_row(r)) = 1;
  return out;
}

ComplexMatrix to_complex(const IntMatrix& m) {
  std::vector<Complex> data;
  data.reserve(m.data().size());
  for (Integer v : m.data()) data.emplace_back(static_cast<double>(v), 0.0);
  return ComplexMatrix(m.rows(), m.cols(), std::move(data));
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("shape mismatch in comparison");
  }
  double worst = 0.0;
  for (Index e = 0; e < a.data().size(); ++e) {
    worst = std::max(worst, std::abs(a.data()[e] - b.data()[e]));
  }
  return worst;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b,
                  double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs_diff(a, b) <= tolerance;
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  if (!m.is_square()) return false;
  for (Index i = 1; i <= m.rows(); ++i) {
    for (Index j = i; j <= m.cols(); ++j) {
      if (std::abs(m(i, j) - std::conj(m(j, i))) > tolerance) return false;
    }
  }
  return true;
}

}  // namespace tensorperm
