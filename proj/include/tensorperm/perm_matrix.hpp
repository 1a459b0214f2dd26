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

// Tensor permutation matrices U(sigma) for n1 (x) ... (x) nk.
//
// Three independent constructions are provided (entrywise delta formula,
// sum of elementary matrices over column multi-indices, and the stride walk
// for the two-factor case) together with the checks used to validate them.
//
// Naming: U_{n(x)p} consumes a (x) b with a of size n and emits b (x) a.

#ifndef TENSORPERM_PERM_MATRIX_HPP
#define TENSORPERM_PERM_MATRIX_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tensorperm/index_algebra.hpp"
#include "tensorperm/matrix.hpp"

namespace tensorperm {

/// Factor dimensions plus the permutation of factor positions.
class TensorPermSpec {
 public:
  /// Throws DimensionError when sigma and dims have different lengths.
  TensorPermSpec(DimList dims, Sigma sigma);

  /// The commutation case dims = (n, p), sigma = (2, 1).
  static TensorPermSpec commutation(Index n, Index p);

  [[nodiscard]] const DimList& dims() const noexcept { return dims_; }
  [[nodiscard]] const Sigma& sigma() const noexcept { return sigma_; }
  /// Matrix order N.
  [[nodiscard]] Index order() const noexcept { return dims_.product(); }
  /// Row-side factor dimensions (n_sigma(1), ..., n_sigma(k)).
  [[nodiscard]] DimList output_dims() const {
    return permute_dims(dims_, sigma_);
  }

 private:
  DimList dims_;
  Sigma sigma_;
};

/// Names the tensor commutation matrix U_{n(x)p}.
struct TcmLabel {
  Index n = 1;
  Index p = 1;

  [[nodiscard]] Index order() const noexcept { return n * p; }
  /// "3⊗2".
  [[nodiscard]] std::string to_string() const;

  friend auto operator<=>(const TcmLabel&, const TcmLabel&) = default;
};

/// Every factorization n*p = order as a label, in the order
/// (1,N), (N,1), (2,N/2), (N/2,2), ... by increasing smaller factor.
std::vector<TcmLabel> tcm_labels(Index order);

/// Implicit U(sigma); valid for any size the index range allows.
IndexPerm index_perm(const TensorPermSpec& spec);

/// U_{n(x)p} in implicit form.
IndexPerm tcm_perm(Index n, Index p);

/// Dense U(sigma) from the entry formula
///   U^{i1..ik}_{j1..jk} = delta(i1, j_sigma(1)) ... delta(ik, j_sigma(k)),
/// rows over output_dims(), columns over dims(). Evaluates every entry.
IntMatrix build_delta(const TensorPermSpec& spec,
                      Index dense_bound = kDefaultDenseBound);

/// Dense U(sigma) as the sum, over all column multi-indices (j1..jk), of
/// E^(N) at [flatten of (j_sigma(1)..j_sigma(k)) over output_dims()]
/// [flatten of (j1..jk) over dims()].
IntMatrix build_elementary_sum(const TensorPermSpec& spec,
                               Index dense_bound = kDefaultDenseBound);

/// U_{n(x)p} by the cursor walk: a 1 at (1,1); each next column goes down n
/// rows; when fewer rows remain, the next column restarts one row lower than
/// the previous restart; ends with the 1 at (np, np).
IntMatrix build_stride_rule(Index n, Index p,
                            Index dense_bound = kDefaultDenseBound);

/// U_{n(x)p} from the closed form: column p(j-1)+l has its 1 at row n(l-1)+j.
IntMatrix build_stride_closed_form(Index n, Index p,
                                   Index dense_bound = kDefaultDenseBound);

/// Matrix-free U(sigma) * v in O(N).
template <class T>
std::vector<T> apply(const TensorPermSpec& spec, std::span<const T> v) {
  if (v.size() != spec.order()) {
    throw DimensionError("vector length " + std::to_string(v.size()) +
                         " does not match order " +
                         std::to_string(spec.order()));
  }
  return index_perm(spec).apply(v);
}

/// True iff u * (A1 (x) ... (x) Ak) == (A_sigma(1) (x) ... (x) A_sigma(k)) * u
/// exactly, with dense products. u may be any square integer matrix of
/// order N; A_t must be dims[t] x dims[t].
bool conjugation_holds(const IntMatrix& u, const TensorPermSpec& spec,
                       std::span<const IntMatrix> factors,
                       Index dense_bound = kDefaultDenseBound);

/// The same check for an implicit permutation u, without materializing it.
bool conjugation_holds(const IndexPerm& u, const TensorPermSpec& spec,
                       std::span<const IntMatrix> factors,
                       Index dense_bound = kDefaultDenseBound);

/// conjugation_holds with u = build_delta(spec).
bool commutation_conjugation_check(const TensorPermSpec& spec,
                                   std::span<const IntMatrix> factors,
                                   Index dense_bound = kDefaultDenseBound);

/// Every label whose U_{n(x)p} equals m; empty when m is not a tensor
/// commutation matrix. Accepts arbitrary square integer matrices.
std::vector<TcmLabel> classify_tcm(const IntMatrix& m,
                                   Index dense_bound = kDefaultDenseBound);

struct ClosureWitness {
  TcmLabel left;
  TcmLabel right;
  IndexPerm product;

  /// "U_{3⊗2}·U_{3⊗2}".
  [[nodiscard]] std::string description() const;
};

struct ClosureReport {
  bool closed = true;
  std::optional<ClosureWitness> witness;
};

/// Whether {U_{n(x)p}, U_{p(x)n}, U_{1(x)np}} is closed under the matrix
/// product. Pairs are tried in that element order, left factor outermost;
/// the first product outside the set is returned as the witness.
ClosureReport closure_check(Index n, Index p,
                            Index dense_bound = kDefaultDenseBound);

}  // namespace tensorperm

#endif  // TENSORPERM_PERM_MATRIX_HPP
