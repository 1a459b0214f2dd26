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

// Text formats for permutation matrices.
//
//   Matrix Market: "%%MatrixMarket matrix coordinate integer general",
//                  "N N nnz", then 1-based "row col value" lines sorted by
//                  row then column.
//   Permutation:   "N" then col_of_row(1..N) space-separated.
//   Dense:         one line per row, entries space-separated.
//   Blocks:        display-only nested layout (see write_blocks).

#ifndef TENSORPERM_MATRIX_IO_HPP
#define TENSORPERM_MATRIX_IO_HPP

#include <iosfwd>

#include "tensorperm/index_algebra.hpp"
#include "tensorperm/matrix.hpp"
#include "tensorperm/perm_matrix.hpp"

namespace tensorperm {

/// Raised on malformed input text.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void write_matrix_market(std::ostream& out, const IntMatrix& m);
/// Reads the coordinate integer general flavour; comment lines after the
/// banner are skipped and duplicate coordinates are rejected.
IntMatrix read_matrix_market(std::istream& in,
                             Index dense_bound = kDefaultDenseBound);

void write_perm(std::ostream& out, const IndexPerm& perm);
IndexPerm read_perm(std::istream& in);

void write_dense(std::ostream& out, const IntMatrix& m);

/// Nested display of U(sigma): one block row per value of the leading row
/// factor (n_sigma(1) of them), one block column per value of the leading
/// column factor (n_1 of them). Block rows are separated by a blank line and
/// blocks within a row by two spaces.
void write_blocks(std::ostream& out, const IntMatrix& m,
                  const TensorPermSpec& spec);

}  // namespace tensorperm

#endif  // TENSORPERM_MATRIX_IO_HPP
