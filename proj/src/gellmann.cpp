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

#include "tensorperm/gellmann.hpp"

#include <array>
#include <cmath>

#include "tensorperm/perm_matrix.hpp"

namespace tensorperm {
namespace {

constexpr Complex kI{0.0, 1.0};

// Tr(a * b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex acc{};
  for (Index i = 1; i <= a.rows(); ++i) {
    for (Index k = 1; k <= a.cols(); ++k) {
      const Complex x = a(i, k);
      if (x == Complex{}) continue;
      acc += x * b(k, i);
    }
  }
  return acc;
}

}  // namespace

HermitianBasis generalized_gellmann(Index n) {
  if (n < 2) {
    throw DomainError("generalized Gell-Mann basis needs n >= 2, got " +
                      std::to_string(n));
  }
  HermitianBasis basis;
  basis.n = n;
  basis.lambda0 = to_complex(identity_matrix(n));

  std::vector<ComplexMatrix> symmetric;
  std::vector<ComplexMatrix> antisymmetric;
  for (Index j = 1; j <= n; ++j) {
    for (Index k = j + 1; k <= n; ++k) {
      ComplexMatrix s(n, n);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      symmetric.push_back(std::move(s));
      ComplexMatrix a(n, n);
      a(j, k) = -kI;
      a(k, j) = kI;
      antisymmetric.push_back(std::move(a));
    }
  }
  std::vector<ComplexMatrix> diagonal;
  for (Index d = 1; d < n; ++d) {
    const double scale = std::sqrt(2.0 / static_cast<double>(d * (d + 1)));
    ComplexMatrix m(n, n);
    for (Index i = 1; i <= d; ++i) m(i, i) = scale;
    m(d + 1, d + 1) = -static_cast<double>(d) * scale;
    diagonal.push_back(std::move(m));
  }

  if (n == 3) {
    // lambda1..lambda8: the (1,2) pair, lambda3, the (1,3) pair, the (2,3)
    // pair, lambda8.
    basis.generators = {symmetric[0], antisymmetric[0], diagonal[0],
                        symmetric[1], antisymmetric[1], symmetric[2],
                        antisymmetric[2], diagonal[1]};
    return basis;
  }
  for (auto* family : {&symmetric, &antisymmetric, &diagonal}) {
    for (auto& m : *family) basis.generators.push_back(std::move(m));
  }
  return basis;
}

ComplexMatrix sum_lambda_kron(Index n, Index dense_bound) {
  const HermitianBasis basis = generalized_gellmann(n);
  ComplexMatrix acc(n * n, n * n);
  for (const ComplexMatrix& g : basis.generators) {
    acc += kron(g, g, dense_bound);
  }
  return acc;
}

Complex SwapDecomposition::coefficient(Index a, Index b) const {
  const Index m = basis_size();
  if (a >= m || b >= m) {
    throw RangeError("basis label (" + std::to_string(a) + "," +
                     std::to_string(b) + ") outside 0.." +
                     std::to_string(m - 1));
  }
  return table[a * m + b];
}

ComplexMatrix SwapDecomposition::reconstruct(const HermitianBasis& basis) const {
  if (basis.n != n) throw DimensionError("basis order does not match");
  const Index m = basis_size();
  ComplexMatrix acc(n * n, n * n);
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      const Complex c = table[a * m + b];
      if (c == Complex{}) continue;
      acc += c * kron(basis[a], basis[b], n * n);
    }
  }
  return acc;
}

SwapDecomposition decompose_swap(Index n, Index dense_bound) {
  if (n < 2) {
    throw DomainError("swap decomposition needs n >= 2, got " +
                      std::to_string(n));
  }
  if (n * n > dense_bound) {
    throw CapacityError("swap order " + std::to_string(n * n) +
                        " exceeds the dense bound " +
                        std::to_string(dense_bound));
  }
  const HermitianBasis basis = generalized_gellmann(n);
  const ComplexMatrix swap =
      to_complex(build_delta(TensorPermSpec::commutation(n, n), dense_bound));

  const Index m = n * n;
  SwapDecomposition out;
  out.n = n;
  out.table.assign(m * m, Complex{});
  for (Index a = 0; a < m; ++a) {
    for (Index b = 0; b < m; ++b) {
      const ComplexMatrix term = kron(basis[a], basis[b], dense_bound);
      // Tr(lambda_a^2) is n for lambda0 and 2 otherwise.
      const double norm = (a == 0 ? static_cast<double>(n) : 2.0) *
                          (b == 0 ? static_cast<double>(n) : 2.0);
      out.table[a * m + b] = trace_of_product(swap, term) / norm;
    }
  }
  out.c00 = out.table[0].real();
  return out;
}

}  // namespace tensorperm
