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


#include <map>
#include <set>
#include <stdexcept>

#include <omp.h>

#include "doctest.h"
#include "snakebox/chain.hpp"
#include "snakebox/verifier.hpp"
#include "support.hpp"

using namespace snakebox;

namespace {

std::size_t CountIndex(const Chain& chain, int index) {
  return std::count_if(chain.transitions.begin(), chain.transitions.end(),
                       [&](Transition t) { return t.index == index; });
}

Snake AsSnake(const Chain& chain, int length) {
  return Snake{length, "chain", chain.codewords.front(), chain.transitions};
}

}  // namespace

TEST_CASE("the S_5 chain matches the reference sequence") {
  const ChainSet chains = BuildAllChains(2);
  REQUIRE(chains.size() == 1);
  const auto expected = testing::LoadPermutations("s5_snake.txt");
  CHECK(chains.chain(0).codewords == expected);
}

TEST_CASE("each tree edge contributes three t_{2n+1} steps") {
  for (int n = 2; n <= 3; ++n) {
    const int length = LengthFor(n);
    const std::size_t edges = BuildMergeTree(n).edges.size();
    const ChainSet chains = BuildAllChains(n);
    for (const Chain& chain : chains.chains()) {
      CHECK(CountIndex(chain, length) == 3 * edges);
      CHECK(CountIndex(chain, length - 2) + CountIndex(chain, length) == chain.size());
    }
  }
  const ChainSet small = BuildAllChains(2);
  const Chain& only = small.chain(0);
  CHECK(CountIndex(only, 5) == 27);
  CHECK(CountIndex(only, 3) == 30);
}

TEST_CASE("chain sizes follow the class count") {
  for (int n = 2; n <= 4; ++n) {
    const int length = LengthFor(n);
    const std::size_t expected = static_cast<std::size_t>(length * (length - 1) - 1) * (length - 2);
    const ChainSet chains = BuildAllChains(n);
    CHECK(chains.size() == static_cast<int>(Factorial(length - 3) / 2));
    for (const Chain& chain : chains.chains()) CHECK(chain.size() == expected);
  }
}

TEST_CASE("S_7 chains carry the reference names in order") {
  const ChainSet chains = BuildAllChains(3);
  const auto names = testing::LoadRows("s7_chain_names.txt");
  REQUIRE(chains.size() == static_cast<int>(names.size()));
  for (int id = 0; id < chains.size(); ++id) {
    CHECK(chains.chain(id).name.StartingFrom(4) == names[id]);
    CHECK(chains.FindByName(Cycle(names[id])) == id);
  }
}

TEST_CASE("S_7 chains partition the even permutations outside class [2,1]") {
  const ChainSet chains = BuildAllChains(3);
  std::set<Permutation> covered;
  for (const Chain& chain : chains.chains()) {
    std::map<ClassLabel, int> per_class;
    for (const Permutation& p : chain.codewords) {
      CHECK(covered.insert(p).second);
      ++per_class[ClassOf(p)];
    }
    CHECK(per_class.size() == 41);
    for (const auto& [label, count] : per_class) CHECK(count == 5);
  }
  CHECK(covered.size() == 2460);
  ForEachEvenPermutation(7, [&](const Permutation& p) {
    const bool linkage = p(6) == 2 && p(7) == 1;
    CHECK(covered.count(p) == (linkage ? 0u : 1u));
    CHECK(chains.ChainOf(p).has_value() == !linkage);
  });
}

TEST_CASE("every S_7 chain is itself a snake") {
  const ChainSet chains = BuildAllChains(3);
  for (const Chain& chain : chains.chains()) {
    const auto report = VerifySnake(AsSnake(chain, 7), VerifyMode::kFullDistance);
    CHECK(report.passed());
  }
}

TEST_CASE("parallel and serial chain builders agree") {
  // More threads than cores still exercises the shared state.
  omp_set_num_threads(4);
  const ChainSet parallel = BuildAllChains(3);
  const ChainSet serial = BuildAllChainsSerial(3);
  REQUIRE(parallel.size() == serial.size());
  for (int id = 0; id < parallel.size(); ++id) {
    CHECK(parallel.chain(id).codewords == serial.chain(id).codewords);
    CHECK(parallel.chain(id).transitions == serial.chain(id).transitions);
  }
}

TEST_CASE("chain splicing rejects bad input") {
  CHECK_THROWS_AS(ChainInProgress(EnumerateNecklaces(2, {1, 3}).front()), std::invalid_argument);
  ChainInProgress chain(EnumerateNecklaces(2, {1, 2}).front());
  CHECK_THROWS_AS(chain.SpliceEdge({3, 4, 5}), ConstructionError);
  chain.SpliceEdge({1, 2, 3});
  CHECK(chain.size() == 9);
  CHECK_THROWS_AS(chain.SpliceEdge({1, 2, 3}), ConstructionError);
}

TEST_CASE("overlapping chains are rejected") {
  const Chain chain = BuildAllChains(2).chain(0);
  CHECK_THROWS_AS(ChainSet(2, {chain, chain}), ConstructionError);
}
