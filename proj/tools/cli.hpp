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

#ifndef TPM_CLI_HPP
#define TPM_CLI_HPP

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tensorperm/perm_matrix.hpp"

namespace tpm {

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;
inline constexpr int kCapacity = 3;
}  // namespace exit_code

/// Runs the command line (without the program name). Data goes to out,
/// diagnostics to err. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err);

/// Parses "3,2" into {3, 2}; throws std::invalid_argument on anything but
/// comma-separated positive decimal integers.
std::vector<tensorperm::Index> parse_index_list(const std::string& text,
                                                const std::string& what);

struct BenchResult {
  double implicit_ns = 0.0;
  /// Empty when the order exceeds the dense bound.
  std::optional<double> dense_ns;
};

/// Mean wall time per application of U(sigma) to a vector, implicit and
/// dense, over reps repetitions each.
BenchResult run_bench(const tensorperm::TensorPermSpec& spec, std::size_t reps,
                      tensorperm::Index dense_bound);

}  // namespace tpm

#endif  // TPM_CLI_HPP
