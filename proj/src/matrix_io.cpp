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

#include "tensorperm/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>

namespace tensorperm {
namespace {

constexpr const char* kBanner =
    "%%MatrixMarket matrix coordinate integer general";

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '%') continue;
    return true;
  }
  return false;
}

}  // namespace

void write_matrix_market(std::ostream& out, const IntMatrix& m) {
  Index nnz = 0;
  for (Integer v : m.data()) nnz += v != 0 ? 1 : 0;
  out << kBanner << '\n' << m.rows() << ' ' << m.cols() << ' ' << nnz << '\n';
  for (Index i = 1; i <= m.rows(); ++i) {
    for (Index j = 1; j <= m.cols(); ++j) {
      if (m(i, j) != 0) out << i << ' ' << j << ' ' << m(i, j) << '\n';
    }
  }
}

IntMatrix read_matrix_market(std::istream& in, Index dense_bound) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    std::istringstream banner(line);
    std::string tag, object, format, field, symmetry;
    banner >> tag >> object >> format >> field >> symmetry;
    if (tag != "%%MatrixMarket" || object != "matrix" ||
        format != "coordinate" || field != "integer" ||
        symmetry != "general") {
      throw ParseError("unsupported Matrix Market banner: " + line);
    }
  }
  if (!next_content_line(in, line)) throw ParseError("missing size line");
  Index rows = 0, cols = 0, nnz = 0;
  {
    std::istringstream size(line);
    if (!(size >> rows >> cols >> nnz) || rows == 0 || cols == 0) {
      throw ParseError("malformed size line: " + line);
    }
  }
  if (rows > dense_bound || cols > dense_bound) {
    throw CapacityError("Matrix Market matrix " + std::to_string(rows) + "x" +
                        std::to_string(cols) + " exceeds the dense bound " +
                        std::to_string(dense_bound));
  }
  IntMatrix m(rows, cols);
  std::set<std::pair<Index, Index>> seen;
  for (Index e = 0; e < nnz; ++e) {
    if (!next_content_line(in, line)) {
      throw ParseError("expected " + std::to_string(nnz) + " entries, got " +
                       std::to_string(e));
    }
    std::istringstream entry(line);
    Index i = 0, j = 0;
    Integer v = 0;
    if (!(entry >> i >> j >> v)) throw ParseError("malformed entry: " + line);
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError("entry outside the matrix: " + line);
    }
    if (!seen.emplace(i, j).second) {
      throw ParseError("duplicate entry: " + line);
    }
    m(i, j) = v;
  }
  if (next_content_line(in, line)) {
    throw ParseError("trailing data after " + std::to_string(nnz) +
                     " entries");
  }
  return m;
}

void write_perm(std::ostream& out, const IndexPerm& perm) {
  out << perm.size() << '\n';
  for (Index r = 0; r < perm.size(); ++r) {
    if (r != 0) out << ' ';
    out << perm.cols()[r];
  }
  out << '\n';
}

IndexPerm read_perm(std::istream& in) {
  Index n = 0;
  if (!(in >> n)) throw ParseError("missing permutation size");
  std::vector<Index> cols(n);
  for (Index r = 0; r < n; ++r) {
    if (!(in >> cols[r])) {
      throw ParseError("expected " + std::to_string(n) + " columns");
    }
  }
  return IndexPerm(std::move(cols));
}

void write_dense(std::ostream& out, const IntMatrix& m) {
  for (Index i = 1; i <= m.rows(); ++i) {
    const auto r = m.row(i);
    for (Index j = 0; j < r.size(); ++j) {
      if (j != 0) out << ' ';
      out << r[j];
    }
    out << '\n';
  }
}

void write_blocks(std::ostream& out, const IntMatrix& m,
                  const TensorPermSpec& spec) {
  if (m.rows() != spec.order() || m.cols() != spec.order()) {
    throw DimensionError("matrix does not match the spec order");
  }
  const Index block_rows = spec.output_dims().dim(1);
  const Index block_cols = spec.dims().dim(1);
  const Index sub_rows = m.rows() / block_rows;
  const Index sub_cols = m.cols() / block_cols;
  for (Index br = 0; br < block_rows; ++br) {
    if (br != 0) out << '\n';
    for (Index i = 1; i <= sub_rows; ++i) {
      const auto r = m.row(br * sub_rows + i);
      for (Index j = 0; j < r.size(); ++j) {
        if (j != 0) out << (j % sub_cols == 0 ? "  " : " ");
        out << r[j];
      }
      out << '\n';
    }
  }
}

}  // namespace tensorperm
