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

#include "tensorperm/index_algebra.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tensorperm {
namespace {

std::string join(std::span<const Index> values) {
  std::string out;
  for (Index v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

// Strides of the lexicographic (last index fastest) layout, 0-based positions.
std::vector<Index> strides_of(std::span<const Index> dims) {
  std::vector<Index> strides(dims.size());
  Index acc = 1;
  for (Index t = dims.size(); t-- > 0;) {
    strides[t] = acc;
    acc *= dims[t];
  }
  return strides;
}

}  // namespace

DimList::DimList(std::vector<Index> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw DimensionError("a dimension list needs at least one factor");
  }
  for (Index t = 0; t < dims_.size(); ++t) {
    if (dims_[t] == 0) {
      throw RangeError("dimension at position " + std::to_string(t + 1) +
                       " must be at least 1");
    }
    if (product_ > std::numeric_limits<Index>::max() / dims_[t]) {
      throw CapacityError("product of dimensions " + join(dims_) +
                          " overflows the index range");
    }
    product_ *= dims_[t];
  }
}

Index DimList::dim(Index t) const {
  if (t < 1 || t > dims_.size()) {
    throw RangeError("factor position " + std::to_string(t) +
                     " outside 1.." + std::to_string(dims_.size()));
  }
  return dims_[t - 1];
}

std::string DimList::to_string() const { return join(dims_); }

Sigma::Sigma(std::vector<Index> images) : images_(std::move(images)) {
  if (images_.empty()) {
    throw PermutationError("sigma is not a permutation: empty image list");
  }
  std::vector<bool> seen(images_.size(), false);
  for (Index v : images_) {
    if (v < 1 || v > images_.size() || seen[v - 1]) {
      throw PermutationError("sigma is not a permutation of 1.." +
                             std::to_string(images_.size()) + ": " +
                             join(images_));
    }
    seen[v - 1] = true;
  }
}

Sigma Sigma::identity(Index k) {
  std::vector<Index> images(k);
  std::iota(images.begin(), images.end(), Index{1});
  return Sigma(std::move(images));
}

Sigma Sigma::reversal(Index k) {
  std::vector<Index> images(k);
  for (Index t = 0; t < k; ++t) images[t] = k - t;
  return Sigma(std::move(images));
}

Index Sigma::image(Index t) const {
  if (t < 1 || t > images_.size()) {
    throw RangeError("factor position " + std::to_string(t) +
                     " outside 1.." + std::to_string(images_.size()));
  }
  return images_[t - 1];
}

bool Sigma::is_identity() const noexcept {
  for (Index t = 0; t < images_.size(); ++t) {
    if (images_[t] != t + 1) return false;
  }
  return true;
}

std::string Sigma::to_string() const { return join(images_); }

Sigma compose(const Sigma& sigma, const Sigma& tau) {
  if (sigma.size() != tau.size()) {
    throw DimensionError("cannot compose permutations of " +
                         std::to_string(sigma.size()) + " and " +
                         std::to_string(tau.size()) + " positions");
  }
  std::vector<Index> images(sigma.size());
  for (Index t = 1; t <= sigma.size(); ++t) {
    images[t - 1] = sigma.image(tau.image(t));
  }
  return Sigma(std::move(images));
}

Sigma sigma_inverse(const Sigma& sigma) {
  std::vector<Index> images(sigma.size());
  for (Index t = 1; t <= sigma.size(); ++t) images[sigma.image(t) - 1] = t;
  return Sigma(std::move(images));
}

std::vector<Sigma> all_sigmas(Index k) {
  std::vector<Index> images(k);
  std::iota(images.begin(), images.end(), Index{1});
  std::vector<Sigma> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

DimList permute_dims(const DimList& dims, const Sigma& sigma) {
  if (dims.size() != sigma.size()) {
    throw DimensionError("sigma has " + std::to_string(sigma.size()) +
                         " positions but dims has " +
                         std::to_string(dims.size()));
  }
  std::vector<Index> out(dims.size());
  for (Index t = 1; t <= dims.size(); ++t) {
    out[t - 1] = dims.dim(sigma.image(t));
  }
  return DimList(std::move(out));
}

Index flatten(const DimList& dims, const MultiIndex& idx) {
  if (idx.size() != dims.size()) {
    throw DimensionError("multi-index has " + std::to_string(idx.size()) +
                         " parts but dims has " +
                         std::to_string(dims.size()));
  }
  Index s = 0;
  for (Index t = 0; t < dims.size(); ++t) {
    const Index part = idx.parts[t];
    const Index n = dims.dims()[t];
    if (part < 1 || part > n) {
      throw RangeError("multi-index part at position " +
                       std::to_string(t + 1) + " is " + std::to_string(part) +
                       ", outside 1.." + std::to_string(n));
    }
    s = s * n + (part - 1);
  }
  return s + 1;
}

MultiIndex unflatten(const DimList& dims, Index s) {
  if (s < 1 || s > dims.product()) {
    throw RangeError("linear index " + std::to_string(s) + " outside 1.." +
                     std::to_string(dims.product()));
  }
  std::vector<Index> parts(dims.size());
  Index rest = s - 1;
  for (Index t = dims.size(); t-- > 0;) {
    const Index n = dims.dims()[t];
    parts[t] = rest % n + 1;
    rest /= n;
  }
  return MultiIndex(std::move(parts));
}

IndexPerm::IndexPerm(std::vector<Index> col_of_row)
    : cols_(std::move(col_of_row)) {
  std::vector<bool> seen(cols_.size(), false);
  for (Index r = 0; r < cols_.size(); ++r) {
    const Index c = cols_[r];
    if (c < 1 || c > cols_.size() || seen[c - 1]) {
      throw PermutationError("column list is not a bijection of 1.." +
                             std::to_string(cols_.size()) + " (row " +
                             std::to_string(r + 1) + ")");
    }
    seen[c - 1] = true;
  }
}

IndexPerm IndexPerm::identity(Index n) {
  std::vector<Index> cols(n);
  std::iota(cols.begin(), cols.end(), Index{1});
  return IndexPerm(std::move(cols));
}

Index IndexPerm::col_of_row(Index r) const {
  if (r < 1 || r > cols_.size()) {
    throw RangeError("row " + std::to_string(r) + " outside 1.." +
                     std::to_string(cols_.size()));
  }
  return cols_[r - 1];
}

Index IndexPerm::row_of_col(Index c) const {
  if (c < 1 || c > cols_.size()) {
    throw RangeError("column " + std::to_string(c) + " outside 1.." +
                     std::to_string(cols_.size()));
  }
  const auto it = std::find(cols_.begin(), cols_.end(), c);
  return static_cast<Index>(it - cols_.begin()) + 1;
}

bool IndexPerm::is_identity() const noexcept {
  for (Index r = 0; r < cols_.size(); ++r) {
    if (cols_[r] != r + 1) return false;
  }
  return true;
}

IndexPerm IndexPerm::inverse() const {
  std::vector<Index> inv(cols_.size());
  for (Index r = 0; r < cols_.size(); ++r) inv[cols_[r] - 1] = r + 1;
  return IndexPerm(std::move(inv));
}

IndexPerm operator*(const IndexPerm& a, const IndexPerm& b) {
  if (a.size() != b.size()) {
    throw DimensionError("cannot multiply permutations of order " +
                         std::to_string(a.size()) + " and " +
                         std::to_string(b.size()));
  }
  std::vector<Index> cols(a.size());
  for (Index r = 0; r < a.size(); ++r) {
    cols[r] = b.cols()[a.cols()[r] - 1];
  }
  return IndexPerm(std::move(cols));
}

IndexPerm induced_index_perm(const DimList& dims, const Sigma& sigma) {
  const DimList out_dims = permute_dims(dims, sigma);
  const std::vector<Index> in_strides = strides_of(dims.dims());
  const Index k = dims.size();

  // Stride in the input layout contributed by output position t: the part
  // i_t lands in input position sigma(t).
  std::vector<Index> step(k);
  for (Index t = 0; t < k; ++t) step[t] = in_strides[sigma.images()[t] - 1];

  // Walk the output multi-indices lexicographically as an odometer,
  // keeping the 0-based input column offset in sync.
  std::vector<Index> odo(k, 0);
  std::vector<Index> cols;
  cols.reserve(dims.product());
  Index col = 0;
  for (Index r = 0; r < dims.product(); ++r) {
    cols.push_back(col + 1);
    for (Index t = k; t-- > 0;) {
      if (++odo[t] < out_dims.dims()[t]) {
        col += step[t];
        break;
      }
      col -= (odo[t] - 1) * step[t];
      odo[t] = 0;
    }
  }
  return IndexPerm(std::move(cols));
}

}  // namespace tensorperm
