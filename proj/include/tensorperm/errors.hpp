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

#ifndef TENSORPERM_ERRORS_HPP
#define TENSORPERM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>

namespace tensorperm {

/// Rows/columns a dense matrix may have unless the caller overrides it.
inline constexpr std::size_t kDefaultDenseBound = 4096;

/// An index or multi-index component lies outside its admissible range.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Operand shapes or list lengths do not conform.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A factor-position list is not a bijection of 1..k.
class PermutationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The argument is outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A dense result would exceed the configured bound or the index range.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace tensorperm

#endif  // TENSORPERM_ERRORS_HPP
