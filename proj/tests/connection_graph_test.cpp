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


#include <set>
#include <stdexcept>

#include "doctest.h"
#include "snakebox/connection_graph.hpp"
#include "support.hpp"

using namespace snakebox;

TEST_CASE("S_7 linkages are the twelve reference [2,1]-necklaces") {
  const auto linkages = EnumerateLinkages(3);
  std::set<testing::Vec> got;
  for (const Necklace& l : linkages) got.insert(l.DisplayName(4));
  const auto rows = testing::LoadRows("s7_linkage_names.txt");
  CHECK(got == std::set<testing::Vec>(rows.begin(), rows.end()));
}

TEST_CASE("splice sites have the documented shape") {
  const Necklace linkage = NecklaceOf(Permutation{3, 7, 4, 5, 6, 2, 1});
  const SpliceSite site = SpliceSiteFor(linkage, 6);
  CHECK(site.linkage_codeword == Permutation{3, 7, 4, 5, 6, 2, 1});
  CHECK(site.first_exit == Permutation{3, 7, 4, 5, 1, 6, 2});
  CHECK(site.second_exit == Permutation{3, 7, 4, 5, 2, 1, 6});
  CHECK_THROWS_AS(SpliceSiteFor(EnumerateNecklaces(3, {1, 2}).front(), 6), std::invalid_argument);
}

TEST_CASE("closed-form endpoints agree with tracing") {
  for (int n = 3; n <= 4; ++n) {
    const ChainSet chains = BuildAllChains(n);
    const int length = LengthFor(n);
    int mismatches = 0;
    for (const Necklace& linkage : EnumerateLinkages(n)) {
      for (int x = 3; x <= length; ++x) {
        const auto traced = TraceEndpoints(linkage, x, chains);
        const auto formula = MConnectionEndpoints(linkage, x);
        if (x <= 5) {
          mismatches += formula.has_value() || traced.first != traced.second;
          continue;
        }
        mismatches += !formula || chains.FindByName(formula->first) != traced.first ||
                      chains.FindByName(formula->second) != traced.second;
      }
    }
    CAPTURE(n);
    CHECK(mismatches == 0);
  }
}

TEST_CASE("M[x] needs 3 <= x <= 2n+1") {
  const Necklace linkage = EnumerateLinkages(3).front();
  CHECK_THROWS_AS(MConnectionEndpoints(linkage, 2), std::out_of_range);
  CHECK_THROWS_AS(MConnectionEndpoints(linkage, 8), std::out_of_range);
}

TEST_CASE("tracing rejects codewords outside every chain") {
  const ChainSet chains = BuildAllChains(3);
  CHECK_THROWS_AS(TraceChainOf(Permutation{3, 7, 4, 5, 6, 2, 1}, chains), std::invalid_argument);
}

TEST_CASE("the S_7 chain graph") {
  const ChainSet chains = BuildAllChains(3);
  const ChainGraph graph = BuildChainGraph(chains);
  CHECK(graph.vertex_count() == 12);
  CHECK(graph.linkages().size() == 12);
  std::size_t traced_edges = 0;
  for (const Necklace& linkage : graph.linkages()) {
    for (int x = 6; x <= 7; ++x) {
      const auto ends = TraceEndpoints(linkage, x, chains);
      traced_edges += ends.first != ends.second;
    }
  }
  CHECK(graph.edges().size() == traced_edges);
  for (const ConnectionEdge& e : graph.edges()) {
    CHECK(e.first != e.second);
    CHECK((e.sign == 6 || e.sign == 7));
    CHECK(graph.Find(e.label, e.sign) == &e);
  }
  CHECK(graph.Find(0, 5) == nullptr);
  // Components are keyed by the positions of 6 and 7 written from 4.
  CHECK(graph.components()[0] == ComponentIndex{3, 4});
  CHECK_THROWS_AS(BuildChainGraph(BuildAllChains(2)), std::invalid_argument);
}
