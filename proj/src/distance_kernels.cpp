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

#include "snakebox/distance_kernels.hpp"

#include <array>
#include <atomic>
#include <limits>
#include <vector>

#include <omp.h>

namespace snakebox {
namespace {

constexpr int kMaxRow = 16;

// Where each value sits in `row`.
std::array<std::uint8_t, kMaxRow + 1> Positions(std::span<const std::uint8_t> row) {
  std::array<std::uint8_t, kMaxRow + 1> where{};
  for (std::size_t k = 0; k < row.size(); ++k) where[row[k]] = static_cast<std::uint8_t>(k);
  return where;
}

int CappedFromPositions(std::span<const std::uint8_t> a, const std::array<std::uint8_t, kMaxRow + 1>& where_b,
                        int cap) {
  std::array<std::uint8_t, kMaxRow> relative{};
  const std::size_t n = a.size();
  for (std::size_t k = 0; k < n; ++k) relative[k] = where_b[a[k]];
  int inversions = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      inversions += relative[i] > relative[j];
      if (inversions >= cap) return cap;
    }
  }
  return inversions;
}

// First j > i whose distance to row i is below min_distance.
std::optional<ClosePair> ScanRow(const CodewordTable& table, std::size_t i, int min_distance) {
  const auto where = Positions(table.row(i));
  for (std::size_t j = i + 1; j < table.rows(); ++j) {
    const int d = CappedFromPositions(table.row(j), where, min_distance);
    if (d < min_distance) return ClosePair{i, j, d};
  }
  return std::nullopt;
}

}  // namespace

int CappedKendallDistance(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b, int cap) {
  return CappedFromPositions(a, Positions(b), cap);
}

std::optional<ClosePair> FindClosePairSerial(const CodewordTable& table, int min_distance) {
  for (std::size_t i = 0; i < table.rows(); ++i) {
    if (auto hit = ScanRow(table, i, min_distance)) return hit;
  }
  return std::nullopt;
}

std::optional<ClosePair> FindClosePairParallel(const CodewordTable& table, int min_distance) {
  const auto rows = static_cast<std::ptrdiff_t>(table.rows());
  std::vector<std::optional<ClosePair>> hits(table.rows());
  // Rows past the earliest hit cannot change the answer.
  std::atomic<std::ptrdiff_t> earliest{std::numeric_limits<std::ptrdiff_t>::max()};
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    if (i > earliest.load(std::memory_order_relaxed)) continue;
    hits[i] = ScanRow(table, static_cast<std::size_t>(i), min_distance);
    if (hits[i]) {
      std::ptrdiff_t seen = earliest.load();
      while (i < seen && !earliest.compare_exchange_weak(seen, i)) {
      }
    }
  }
  for (const auto& hit : hits) {
    if (hit) return hit;
  }
  return std::nullopt;
}

}  // namespace snakebox
