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

// All-pairs Kendall distance screening over a packed codeword table. The
// serial kernel is the reference; the OpenMP kernel must return the same
// pair.

#ifndef SNAKEBOX_DISTANCE_KERNELS_HPP_
#define SNAKEBOX_DISTANCE_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

namespace snakebox {

// Row-major table of `rows` permutations of length `length`, values 1-based.
struct CodewordTable {
  std::span<const std::uint8_t> values;
  int length = 0;

  std::size_t rows() const { return length == 0 ? 0 : values.size() / length; }
  std::span<const std::uint8_t> row(std::size_t r) const {
    return values.subspan(r * length, length);
  }
};

struct ClosePair {
  std::size_t first = 0;
  std::size_t second = 0;
  int distance = 0;
};

// Kendall distance between two rows, counting no further than `cap`.
int CappedKendallDistance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int cap);

// The lexicographically first pair (i < j) at distance below `min_distance`.
std::optional<ClosePair> FindClosePairSerial(const CodewordTable& table, int min_distance);
std::optional<ClosePair> FindClosePairParallel(const CodewordTable& table, int min_distance);

}  // namespace snakebox

#endif  // SNAKEBOX_DISTANCE_KERNELS_HPP_
