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

#include "tensorperm/perm_matrix.hpp"

#include <array>

namespace tensorperm {
namespace {

void require_dense(Index order, Index dense_bound) {
  if (order > dense_bound) {
    throw CapacityError("matrix order " + std::to_string(order) +
                        " exceeds the dense bound " +
                        std::to_string(dense_bound));
  }
}

// All multi-indices of dims in lexicographic order, 0-based parts, packed
// N x k.
std::vector<Index> enumerate_multi_indices(const DimList& dims) {
  const Index k = dims.size();
  std::vector<Index> out;
  out.reserve(dims.product() * k);
  std::vector<Index> odo(k, 0);
  for (Index s = 0; s < dims.product(); ++s) {
    out.insert(out.end(), odo.begin(), odo.end());
    for (Index t = k; t-- > 0;) {
      if (++odo[t] < dims.dims()[t]) break;
      odo[t] = 0;
    }
  }
  return out;
}

}  // namespace

TensorPermSpec::TensorPermSpec(DimList dims, Sigma sigma)
    : dims_(std::move(dims)), sigma_(std::move(sigma)) {
  if (dims_.size() != sigma_.size()) {
    throw DimensionError("sigma has " + std::to_string(sigma_.size()) +
                         " positions but dims has " +
                         std::to_string(dims_.size()));
  }
}

TensorPermSpec TensorPermSpec::commutation(Index n, Index p) {
  return TensorPermSpec(DimList{n, p}, Sigma{2, 1});
}

std::string TcmLabel::to_string() const {
  return std::to_string(n) + "⊗" + std::to_string(p);
}

std::vector<TcmLabel> tcm_labels(Index order) {
  if (order < 1) throw RangeError("order must be at least 1");
  std::vector<TcmLabel> out;
  for (Index d = 1; d * d <= order; ++d) {
    if (order % d != 0) continue;
    out.push_back({d, order / d});
    if (d * d != order) out.push_back({order / d, d});
  }
  return out;
}

IndexPerm index_perm(const TensorPermSpec& spec) {
  return induced_index_perm(spec.dims(), spec.sigma());
}

IndexPerm tcm_perm(Index n, Index p) {
  return index_perm(TensorPermSpec::commutation(n, p));
}

IntMatrix build_delta(const TensorPermSpec& spec, Index dense_bound) {
  const Index n = spec.order();
  require_dense(n, dense_bound);
  const Index k = spec.dims().size();
  const std::vector<Index> row_idx = enumerate_multi_indices(spec.output_dims());
  const std::vector<Index> col_idx = enumerate_multi_indices(spec.dims());
  const auto images = spec.sigma().images();

  IntMatrix out(n, n);
  for (Index r = 0; r < n; ++r) {
    const Index* i = &row_idx[r * k];
    auto dst = out.row(r + 1);
    for (Index c = 0; c < n; ++c) {
      const Index* j = &col_idx[c * k];
      Integer entry = 1;
      for (Index t = 0; t < k && entry != 0; ++t) {
        entry *= i[t] == j[images[t] - 1] ? 1 : 0;
      }
      dst[c] = entry;
    }
  }
  return out;
}

IntMatrix build_elementary_sum(const TensorPermSpec& spec, Index dense_bound) {
  const Index n = spec.order();
  require_dense(n, dense_bound);
  const DimList& in_dims = spec.dims();
  const DimList out_dims = spec.output_dims();
  const Index k = in_dims.size();

  IntMatrix out(n, n);
  std::vector<Index> permuted(k);
  for (Index gamma = 1; gamma <= n; ++gamma) {
    const MultiIndex j = unflatten(in_dims, gamma);
    for (Index t = 1; t <= k; ++t) {
      permuted[t - 1] = j.parts[spec.sigma().image(t) - 1];
    }
    const Index row = flatten(out_dims, MultiIndex(permuted));
    const Index col = flatten(in_dims, j);
    // Accumulate rather than assign so a colliding term would surface as 2.
    out(row, col) += 1;
  }
  return out;
}

IntMatrix build_stride_rule(Index n, Index p, Index dense_bound) {
  if (n < 1 || p < 1) throw RangeError("n and p must be at least 1");
  const Index order = n * p;
  require_dense(order, dense_bound);
  IntMatrix out(order, order);
  Index row = 1;
  Index restart = 1;
  out(row, 1) = 1;
  for (Index col = 2; col <= order; ++col) {
    if (row + n <= order) {
      row += n;
    } else {
      ++restart;
      row = restart;
    }
    out(row, col) = 1;
  }
  return out;
}

IntMatrix build_stride_closed_form(Index n, Index p, Index dense_bound) {
  if (n < 1 || p < 1) throw RangeError("n and p must be at least 1");
  const Index order = n * p;
  require_dense(order, dense_bound);
  IntMatrix out(order, order);
  for (Index j = 1; j <= n; ++j) {
    for (Index l = 1; l <= p; ++l) out(n * (l - 1) + j, p * (j - 1) + l) = 1;
  }
  return out;
}

namespace {

void check_factors(const TensorPermSpec& spec,
                   std::span<const IntMatrix> factors) {
  const Index k = spec.dims().size();
  if (factors.size() != k) {
    throw DimensionError("expected " + std::to_string(k) + " factors, got " +
                         std::to_string(factors.size()));
  }
  for (Index t = 1; t <= k; ++t) {
    const IntMatrix& a = factors[t - 1];
    const Index d = spec.dims().dim(t);
    if (a.rows() != d || a.cols() != d) {
      throw DimensionError("factor " + std::to_string(t) + " must be " +
                           std::to_string(d) + "x" + std::to_string(d));
    }
  }
}

// (left, right) = (A1 (x) ... (x) Ak, A_sigma(1) (x) ... (x) A_sigma(k)).
std::pair<IntMatrix, IntMatrix> both_sides(const TensorPermSpec& spec,
                                           std::span<const IntMatrix> factors,
                                           Index dense_bound) {
  std::vector<IntMatrix> permuted;
  permuted.reserve(factors.size());
  for (Index t = 1; t <= factors.size(); ++t) {
    permuted.push_back(factors[spec.sigma().image(t) - 1]);
  }
  return {kron_all(factors, dense_bound),
          kron_all(std::span<const IntMatrix>(permuted), dense_bound)};
}

}  // namespace

bool conjugation_holds(const IndexPerm& u, const TensorPermSpec& spec,
                       std::span<const IntMatrix> factors, Index dense_bound) {
  check_factors(spec, factors);
  if (u.size() != spec.order()) {
    throw DimensionError("U must have order " + std::to_string(spec.order()));
  }
  require_dense(spec.order(), dense_bound);
  const auto [left, right] = both_sides(spec, factors, dense_bound);
  // A permutation matrix only moves entries:
  // (U L)(r, c) = L(col(r), c) and (R U)(r, c) = R(r, row(c)).
  const auto col = u.cols();
  const IndexPerm inverse = u.inverse();
  const auto row = inverse.cols();
  const Index n = spec.order();
  for (Index r = 1; r <= n; ++r) {
    const auto l_row = left.row(col[r - 1]);
    const auto r_row = right.row(r);
    for (Index c = 0; c < n; ++c) {
      if (l_row[c] != r_row[row[c] - 1]) return false;
    }
  }
  return true;
}

bool conjugation_holds(const IntMatrix& u, const TensorPermSpec& spec,
                       std::span<const IntMatrix> factors, Index dense_bound) {
  check_factors(spec, factors);
  if (u.rows() != spec.order() || u.cols() != spec.order()) {
    throw DimensionError("U must be square of order " +
                         std::to_string(spec.order()));
  }
  require_dense(spec.order(), dense_bound);
  if (is_permutation_matrix(u)) {
    return conjugation_holds(to_index_perm(u), spec, factors, dense_bound);
  }
  const auto [left, right] = both_sides(spec, factors, dense_bound);
  return matmul(u, left) == matmul(right, u);
}

bool commutation_conjugation_check(const TensorPermSpec& spec,
                                   std::span<const IntMatrix> factors,
                                   Index dense_bound) {
  return conjugation_holds(build_delta(spec, dense_bound), spec, factors,
                           dense_bound);
}

std::vector<TcmLabel> classify_tcm(const IntMatrix& m, Index dense_bound) {
  if (!m.is_square() || m.rows() == 0) {
    throw DimensionError("classification needs a non-empty square matrix");
  }
  require_dense(m.rows(), dense_bound);
  std::vector<TcmLabel> out;
  for (const TcmLabel& label : tcm_labels(m.rows())) {
    if (build_delta(TensorPermSpec::commutation(label.n, label.p),
                    dense_bound) == m) {
      out.push_back(label);
    }
  }
  return out;
}

std::string ClosureWitness::description() const {
  return "U_{" + left.to_string() + "}·U_{" + right.to_string() + "}";
}

ClosureReport closure_check(Index n, Index p, Index dense_bound) {
  if (n < 1 || p < 1) throw RangeError("n and p must be at least 1");
  require_dense(n * p, dense_bound);
  const std::array<TcmLabel, 3> labels{
      TcmLabel{n, p}, TcmLabel{p, n}, TcmLabel{1, n * p}};
  std::vector<IndexPerm> elements;
  for (const TcmLabel& l : labels) elements.push_back(tcm_perm(l.n, l.p));

  for (Index a = 0; a < labels.size(); ++a) {
    for (Index b = 0; b < labels.size(); ++b) {
      IndexPerm product = elements[a] * elements[b];
      bool inside = false;
      for (const IndexPerm& e : elements) inside = inside || e == product;
      if (!inside) {
        return {false, ClosureWitness{labels[a], labels[b], std::move(product)}};
      }
    }
  }
  return {};
}

}  // namespace tensorperm
