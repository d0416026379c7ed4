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

#include "snakebox/verifier.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "snakebox/distance_kernels.hpp"

namespace snakebox {
namespace {

using Row = std::span<const std::uint8_t>;

std::string RowString(Row row) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < row.size(); ++k) os << (k ? "," : "") << int(row[k]);
  os << ']';
  return os.str();
}

bool RowIsEven(Row row) {
  int inversions = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    for (std::size_t j = i + 1; j < row.size(); ++j) inversions += row[i] > row[j];
  }
  return inversions % 2 == 0;
}

// The walk, materialized: row k is the codeword before transition k.
struct Walk {
  int length = 0;
  std::vector<std::uint8_t> table;
  std::vector<std::uint8_t> final_state;
  std::optional<std::size_t> bad_index;  // first transition outside 2..N

  Row row(std::size_t k) const { return Row(table).subspan(k * length, length); }
  std::size_t rows() const { return length ? table.size() / length : 0; }
};

Walk WalkSnake(const Snake& snake) {
  Walk walk;
  walk.length = snake.length;
  const auto start = snake.initial.entries();
  std::vector<std::uint8_t> state(start.begin(), start.end());
  walk.table.reserve(snake.transitions.size() * state.size());
  for (std::size_t k = 0; k < snake.transitions.size(); ++k) {
    walk.table.insert(walk.table.end(), state.begin(), state.end());
    const int i = snake.transitions[k].index;
    if (i < 2 || i > walk.length) {
      walk.bad_index = k;
      break;
    }
    std::rotate(state.begin(), state.begin() + (i - 1), state.begin() + i);
  }
  walk.final_state = std::move(state);
  return walk;
}

CheckResult Closure(const Snake& snake, const Walk& walk) {
  CheckResult r{kCheckClosure, true, ""};
  if (snake.initial.size() != snake.length) {
    r = {kCheckClosure, false,
         "initial permutation has length " + std::to_string(snake.initial.size()) + ", expected " +
             std::to_string(snake.length)};
  } else if (walk.bad_index) {
    r = {kCheckClosure, false,
         "transition " + std::to_string(*walk.bad_index) + " has index " +
             std::to_string(snake.transitions[*walk.bad_index].index) + " outside 2.." +
             std::to_string(snake.length)};
  } else if (snake.transitions.empty()) {
    r = {kCheckClosure, false, "empty transition list"};
  } else if (!std::equal(walk.final_state.begin(), walk.final_state.end(),
                         snake.initial.entries().begin())) {
    r = {kCheckClosure, false,
         "walk ends at " + RowString(walk.final_state) + ", not at the initial " +
             RowString(snake.initial.entries())};
  }
  return r;
}

CheckResult Distinct(const Walk& walk) {
  const auto hash = [&](std::size_t k) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t v : walk.row(k)) h = (h ^ v) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  };
  const auto equal = [&](std::size_t a, std::size_t b) {
    return std::ranges::equal(walk.row(a), walk.row(b));
  };
  std::unordered_set<std::size_t, decltype(hash), decltype(equal)> seen(walk.rows(), hash, equal);
  for (std::size_t k = 0; k < walk.rows(); ++k) {
    const auto [it, inserted] = seen.insert(k);
    if (!inserted) {
      return {kCheckDistinct, false,
              "codewords " + std::to_string(*it) + " and " + std::to_string(k) + " are both " +
                  RowString(walk.row(k))};
    }
  }
  return {kCheckDistinct, true, ""};
}

CheckResult OddEven(const Snake& snake, const Walk& walk) {
  for (std::size_t k = 0; k < snake.transitions.size(); ++k) {
    const int i = snake.transitions[k].index;
    if (i % 2 == 0) {
      return {kCheckOddEven, false,
              "transition " + std::to_string(k) + " is t_" + std::to_string(i)};
    }
  }
  for (std::size_t k = 0; k < walk.rows(); ++k) {
    if (!RowIsEven(walk.row(k))) {
      return {kCheckOddEven, false,
              "codeword " + std::to_string(k) + " " + RowString(walk.row(k)) + " is odd"};
    }
  }
  return {kCheckOddEven, true, ""};
}

CheckResult Distance(const Walk& walk, bool parallel, std::uint64_t& pairs) {
  const CodewordTable table{walk.table, walk.length};
  const auto rows = static_cast<std::uint64_t>(table.rows());
  pairs = rows * (rows ? rows - 1 : 0) / 2;
  const auto hit = parallel ? FindClosePairParallel(table, 2) : FindClosePairSerial(table, 2);
  if (!hit) return {kCheckDistance, true, ""};
  return {kCheckDistance, false,
          "codewords " + std::to_string(hit->first) + " " + RowString(table.row(hit->first)) +
              " and " + std::to_string(hit->second) + " " + RowString(table.row(hit->second)) +
              " are at distance " + std::to_string(hit->distance)};
}

VerificationReport Verify(const Snake& snake, VerifyMode mode, std::optional<std::uint64_t> declared,
                          bool parallel) {
  VerificationReport report;
  report.mode = mode;
  const Walk walk = WalkSnake(snake);
  report.checks.push_back(Closure(snake, walk));
  report.checks.push_back(Distinct(walk));
  report.checks.push_back(OddEven(snake, walk));
  if (mode == VerifyMode::kFullDistance) {
    report.checks.push_back(Distance(walk, parallel, report.pairs_checked));
  }
  const std::uint64_t expected = declared.value_or(snake.transitions.size());
  CheckResult size{kCheckSize, true, ""};
  if (expected != snake.transitions.size()) {
    size = {kCheckSize, false,
            "declared " + std::to_string(expected) + ", found " +
                std::to_string(snake.transitions.size()) + " transitions"};
  }
  report.checks.push_back(size);
  return report;
}

std::uint64_t HalfGroup(int length) {
  std::uint64_t f = 1;
  for (int k = 2; k <= length; ++k) f *= k;
  return f / 2;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::ranges::all_of(checks, [](const CheckResult& c) { return c.passed; });
}

const CheckResult* VerificationReport::Find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerificationReport VerifySnake(const Snake& snake, VerifyMode mode,
                               std::optional<std::uint64_t> declared_size) {
  return Verify(snake, mode, declared_size, true);
}

VerificationReport VerifySnakeSerial(const Snake& snake, VerifyMode mode,
                                     std::optional<std::uint64_t> declared_size) {
  return Verify(snake, mode, declared_size, false);
}

std::vector<Permutation> MissingCodewords(const Snake& snake) {
  const Walk walk = WalkSnake(snake);
  const int n = snake.length;
  std::vector<bool> visited(Factorial(n), false);
  for (std::size_t k = 0; k < walk.rows(); ++k) {
    const Row row = walk.row(k);
    visited[RankOf(Permutation(std::vector<int>(row.begin(), row.end())))] = true;
  }
  std::vector<std::uint8_t> state(n);
  std::iota(state.begin(), state.end(), std::uint8_t{1});
  std::vector<Permutation> missing;
  do {
    if (!RowIsEven(state)) continue;
    const Permutation p(std::vector<int>(state.begin(), state.end()));
    if (!visited[RankOf(p)]) missing.push_back(p);
  } while (std::next_permutation(state.begin(), state.end()));
  return missing;
}

BoundReport CheckUpperBounds(const Snake& snake) {
  BoundReport r;
  const int n = snake.length;
  r.size = snake.transitions.size();
  r.half_group = HalfGroup(n);
  r.within_half_group = r.size <= r.half_group;
  r.even_index_present = std::ranges::any_of(snake.transitions, [](Transition t) { return t.index % 2 == 0; });
  std::ostringstream detail;
  detail << "M=" << r.size << " <= " << r.half_group << (r.within_half_group ? " ok" : " violated");
  if (r.even_index_present && n >= 2) {
    // M <= N!/2 - C(floor(N/2)-1, 2)/(N-1), compared after scaling by N-1.
    const std::uint64_t m = n / 2 - 1;
    const std::uint64_t binom = m >= 2 ? m * (m - 1) / 2 : 0;
    r.within_even_index_bound = r.size * (n - 1) + binom <= r.half_group * (n - 1);
    detail << "; even-index bound M <= " << r.half_group << " - " << binom << "/" << (n - 1)
           << (r.within_even_index_bound ? " ok" : " violated");
  } else {
    detail << "; no even-index transition";
  }
  r.detail = detail.str();
  return r;
}

void WriteReport(std::ostream& os, const VerificationReport& report) {
  os << "mode " << (report.mode == VerifyMode::kFullDistance ? "full" : "structural") << '\n';
  for (const CheckResult& c : report.checks) {
    os << (c.passed ? "PASS " : "FAIL ") << c.name;
    if (!c.passed) os << ": " << c.witness;
    os << '\n';
  }
  if (report.mode == VerifyMode::kFullDistance) os << "pairs " << report.pairs_checked << '\n';
  os << "result " << (report.passed() ? "ok" : "failed") << '\n';
}

void WriteReport(std::ostream& os, const BoundReport& report) {
  os << (report.passed() ? "PASS " : "FAIL ") << "upper-bounds: " << report.detail << '\n';
}

}  // namespace snakebox
