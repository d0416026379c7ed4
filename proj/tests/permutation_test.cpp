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
#include "snakebox/permutation.hpp"
#include "support.hpp"

using namespace snakebox;
using testing::Vec;

TEST_CASE("push-to-the-top matches hand examples") {
  const Permutation p{3, 1, 4, 5, 2};
  CHECK(ApplyTransition(p, {3}) == Permutation{4, 3, 1, 5, 2});
  CHECK(ApplyTransition(p, {5}) == Permutation{2, 3, 1, 4, 5});
  CHECK(ApplyInverse(Permutation{4, 3, 1, 5, 2}, {3}) == p);
  CHECK(TransitionBetween(p, Permutation{4, 3, 1, 5, 2}) == 3);
  CHECK(TransitionBetween(p, p) == 0);
}

TEST_CASE("transition index outside 2..n is rejected") {
  const Permutation p = Permutation::Identity(5);
  CHECK_THROWS_AS(ApplyTransition(p, {1}), std::out_of_range);
  CHECK_THROWS_AS(ApplyTransition(p, {6}), std::out_of_range);
  CHECK_THROWS_AS(ApplyInverse(p, {0}), std::out_of_range);
}

TEST_CASE("malformed permutations are rejected") {
  CHECK_THROWS_AS(Permutation(Vec{1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(Vec{0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(Vec{1, 2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(KendallDistance(Permutation::Identity(4), Permutation::Identity(5)),
                  std::invalid_argument);
}

TEST_CASE("kendall distance equals breadth-first distance on S_5") {
  const auto all = testing::AllPermutations(5);
  for (const Vec& source : {all.front(), all[37], all.back()}) {
    const auto dist = testing::BfsDistances(source);
    for (const Vec& q : all) CHECK(KendallDistance(Permutation(source), Permutation(q)) == dist.at(q));
  }
}

TEST_CASE("kendall distance is a metric on S_4") {
  const auto all = testing::AllPermutations(4);
  for (const Vec& a : all) {
    const Permutation pa(a);
    for (const Vec& b : all) {
      const Permutation pb(b);
      const int ab = KendallDistance(pa, pb);
      CHECK((ab == 0) == (a == b));
      CHECK(ab == KendallDistance(pb, pa));
      for (const Vec& c : all) {
        CHECK(KendallDistance(pa, Permutation(c)) <= ab + KendallDistance(pb, Permutation(c)));
      }
    }
  }
}

TEST_CASE("transition and inverse laws hold on S_5") {
  for (const Vec& v : testing::AllPermutations(5)) {
    const Permutation p(v);
    for (int i = 2; i <= 5; ++i) {
      const Permutation q = ApplyTransition(p, {i});
      CHECK(testing::ToVec(q) == testing::PushToTop(v, i));
      CHECK(ApplyInverse(q, {i}) == p);
      CHECK(ApplyTransition(ApplyInverse(p, {i}), {i}) == p);
      CHECK(TransitionBetween(p, q) == i);
      // i applications of t_i return to the start.
      Permutation r = p;
      for (int k = 0; k < i; ++k) r = ApplyTransition(r, {i});
      CHECK(r == p);
    }
  }
}

TEST_CASE("odd transitions keep parity and even transitions flip it on S_5") {
  for (const Vec& v : testing::AllPermutations(5)) {
    const Permutation p(v);
    CHECK(IsEven(p) == (testing::Inversions(v) % 2 == 0));
    for (int i = 2; i <= 5; ++i) {
      const bool same = IsEven(ApplyTransition(p, {i})) == IsEven(p);
      CHECK(same == (i % 2 == 1));
    }
  }
}

TEST_CASE("distinct even permutations are at distance at least two") {
  std::vector<Permutation> even;
  ForEachEvenPermutation(5, [&](const Permutation& p) { even.push_back(p); });
  REQUIRE(even.size() == 60);
  for (std::size_t i = 0; i < even.size(); ++i) {
    for (std::size_t j = i + 1; j < even.size(); ++j) CHECK(KendallDistance(even[i], even[j]) >= 2);
  }
}

TEST_CASE("rank and unrank are inverse bijections") {
  std::set<std::uint64_t> ranks;
  for (const Vec& v : testing::AllPermutations(6)) {
    const Permutation p(v);
    const auto r = RankOf(p);
    CHECK(Unrank(r, 6) == p);
    ranks.insert(r);
  }
  CHECK(ranks.size() == 720);
  CHECK(*ranks.rbegin() == 719);
}

TEST_CASE("keys round-trip") {
  const Permutation p{7, 2, 5, 1, 3, 6, 4};
  CHECK(Permutation::FromKey(p.Key(), 7) == p);
}

TEST_CASE("compose and inverse") {
  const Permutation p{2, 3, 1, 5, 4};
  CHECK(Compose(p, Inverse(p)) == Permutation::Identity(5));
  CHECK(Compose(Inverse(p), p) == Permutation::Identity(5));
}

TEST_CASE("cycles are stored minimum first and relabel values") {
  const Cycle c({5, 3, 7});
  CHECK(c.elements() == Vec{3, 7, 5});
  CHECK(c.StartingFrom(7) == Vec{7, 5, 3});
  CHECK(c.Apply(3) == 7);
  CHECK(c.Apply(5) == 3);
  CHECK(c.Apply(4) == 4);
  CHECK(Relabel(Cycle({3, 6}), Vec{4, 6, 5, 3, 7}) == Vec{4, 3, 5, 6, 7});
  CHECK_THROWS_AS(Cycle({1, 1}), std::invalid_argument);
}

TEST_CASE("factorial") {
  CHECK(Factorial(0) == 1);
  CHECK(Factorial(7) == 5040);
  CHECK(Factorial(11) == 39916800);
}
