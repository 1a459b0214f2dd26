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

// Pauli, Gell-Mann and generalized Gell-Mann bases, and the expansion of
// the swap matrix U_{n(x)n} over products lambda_a (x) lambda_b.

#ifndef TENSORPERM_GELLMANN_HPP
#define TENSORPERM_GELLMANN_HPP

#include <vector>

#include "tensorperm/matrix.hpp"

namespace tensorperm {

/// lambda_0 = I_n followed by n^2 - 1 Hermitian, traceless generators with
/// Tr(lambda_a lambda_b) = 2 delta_ab.
struct HermitianBasis {
  Index n = 0;
  ComplexMatrix lambda0;
  std::vector<ComplexMatrix> generators;

  /// lambda_a for 0 <= a <= n^2 - 1.
  [[nodiscard]] const ComplexMatrix& operator[](Index a) const {
    return a == 0 ? lambda0 : generators.at(a - 1);
  }
  [[nodiscard]] Index size() const noexcept { return generators.size() + 1; }
};

/// Generators for n >= 2 (DomainError otherwise).
///
/// Order: the symmetric E_jk + E_kj for j < k, then the antisymmetric
/// -i E_jk + i E_kj for j < k, then for d = 1..n-1 the diagonal
/// sqrt(2/(d(d+1))) diag(1,...,1,-d,0,...,0) with d leading ones. For n = 2
/// this is sigma1, sigma2, sigma3. For n = 3 the list is reordered to the
/// conventional lambda1..lambda8 numbering.
HermitianBasis generalized_gellmann(Index n);

/// sum_{i >= 1} lambda_i (x) lambda_i, of order n^2.
ComplexMatrix sum_lambda_kron(Index n,
                              Index dense_bound = kDefaultDenseBound);

/// Coefficients c_ab of U_{n(x)n} = sum_ab c_ab lambda_a (x) lambda_b.
struct SwapDecomposition {
  Index n = 0;
  double c00 = 0.0;
  /// (n^2) x (n^2), row a, column b, both 0-based basis labels; the (0,0)
  /// slot holds c00.
  std::vector<Complex> table;

  [[nodiscard]] Index basis_size() const noexcept { return n * n; }
  [[nodiscard]] Complex coefficient(Index a, Index b) const;
  /// sum_ab c_ab lambda_a (x) lambda_b.
  [[nodiscard]] ComplexMatrix reconstruct(const HermitianBasis& basis) const;
};

/// Projects U_{n(x)n} onto every lambda_a (x) lambda_b with the trace inner
/// product: c_ab = Tr(U (lambda_a (x) lambda_b)) / Tr((lambda_a (x) lambda_b)^2),
/// so divisors are n^2 for (0,0), 2n for mixed and 4 otherwise.
SwapDecomposition decompose_swap(Index n,
                                 Index dense_bound = kDefaultDenseBound);

}  // namespace tensorperm

#endif  // TENSORPERM_GELLMANN_HPP
