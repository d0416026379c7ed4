// Copyright 2026 The snakebox Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Snake validation that recomputes everything from the initial permutation
// and the transition list. Nothing here calls into the constructors.

#ifndef SNAKEBOX_VERIFIER_HPP_
#define SNAKEBOX_VERIFIER_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "snakebox/permutation.hpp"
#include "snakebox/snake.hpp"

namespace snakebox {

enum class VerifyMode { kStructural, kFullDistance };

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string witness;  // empty iff passed
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::kStructural;
  std::vector<CheckResult> checks;
  std::uint64_t pairs_checked = 0;

  bool passed() const;
  const CheckResult* Find(const std::string& name) const;
};

// Check names, in report order.
inline constexpr const char* kCheckClosure = "closure";
inline constexpr const char* kCheckDistinct = "distinct";
inline constexpr const char* kCheckOddEven = "odd-transitions-even-codewords";
inline constexpr const char* kCheckDistance = "pairwise-distance";
inline constexpr const char* kCheckSize = "declared-size";

// `declared_size` defaults to the transition count.
VerificationReport VerifySnake(const Snake& snake, VerifyMode mode,
                               std::optional<std::uint64_t> declared_size = std::nullopt);

// Same as VerifySnake, with the pairwise check run by the serial kernel.
VerificationReport VerifySnakeSerial(const Snake& snake, VerifyMode mode,
                                     std::optional<std::uint64_t> declared_size = std::nullopt);

// Even permutations of the snake's length that the snake never visits.
std::vector<Permutation> MissingCodewords(const Snake& snake);

struct BoundReport {
  std::uint64_t size = 0;
  std::uint64_t half_group = 0;  // N!/2
  bool even_index_present = false;
  bool within_half_group = true;
  bool within_even_index_bound = true;  // vacuous without even indices
  std::string detail;

  bool passed() const { return within_half_group && within_even_index_bound; }
};
BoundReport CheckUpperBounds(const Snake& snake);

void WriteReport(std::ostream& os, const VerificationReport& report);
void WriteReport(std::ostream& os, const BoundReport& report);

}  // namespace snakebox

#endif  // SNAKEBOX_VERIFIER_HPP_
