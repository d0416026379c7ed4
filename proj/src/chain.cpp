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

#include "snakebox/chain.hpp"

#include <algorithm>

namespace snakebox {

ChainInProgress::ChainInProgress(const Necklace& start)
    : length_(start.length()), name_(start.name()), start_(start.Representative()) {
  if (start.label() != ClassLabel{1, 2}) {
    throw std::invalid_argument("a chain starts from a [1,2]-necklace, got " + start.ToString());
  }
  const auto codewords = start.Codewords();
  for (std::size_t k = 0; k < codewords.size(); ++k) {
    Link(codewords[k], codewords[(k + 1) % codewords.size()]);
  }
  necklaces_.emplace(start.label(), start);
}

void ChainInProgress::SpliceEdge(const HyperEdge& edge) {
  int present = 0;
  int role = 0;
  const auto vertices = edge.Vertices();
  for (int k = 0; k < 3; ++k) {
    if (Contains(vertices[k])) {
      ++present;
      role = k;
    }
  }
  if (present != 1) {
    throw ConstructionError("merge edge " + edge.ToString() + " meets " + std::to_string(present) +
                            " classes already in the chain, expected exactly 1");
  }
  const HyperEdge e = edge.Rotated(role);  // [e.x, e.y] is the present class
  const Transition rotate{length_ - 2};
  const Transition full{length_};

  // Split point [beta, z, x, y] and its current successor [z, beta, x, y].
  const Permutation split = necklaces_.at({e.x, e.y}).WithLast(e.z);
  const Permutation resume = next_.at(split.Key());
  if (resume != ApplyTransition(split, rotate)) {
    throw ConstructionError("split point " + split.ToString() + " for edge " + edge.ToString() +
                            " was already used");
  }

  // t_{2n+1}, the [z,x]-necklace, t_{2n+1}, the [y,z]-necklace, t_{2n+1}.
  Permutation current = split;
  for (int leg = 0; leg < 2; ++leg) {
    Permutation entry = ApplyTransition(current, full);
    const Necklace necklace = NecklaceOf(entry);
    necklaces_.emplace(necklace.label(), necklace);
    Link(current, entry);
    current = entry;
    for (int step = 0; step < length_ - 3; ++step) {
      Permutation following = ApplyTransition(current, rotate);
      Link(current, following);
      current = following;
    }
  }
  const Permutation back = ApplyTransition(current, full);
  if (back != resume) {
    throw ConstructionError("splice of edge " + edge.ToString() + " does not close at " +
                            resume.ToString());
  }
  Link(current, back);
}

Chain ChainInProgress::Finish() const {
  Chain chain{name_, {}, {}};
  chain.codewords.reserve(next_.size());
  chain.transitions.reserve(next_.size());
  Permutation p = start_;
  do {
    const Permutation& q = next_.at(p.Key());
    chain.codewords.push_back(p);
    chain.transitions.push_back({TransitionBetween(p, q)});
    p = q;
  } while (p != start_ && chain.codewords.size() <= next_.size());
  if (chain.codewords.size() != next_.size()) {
    throw ConstructionError("chain c" + name_.ToString() + " is not a single cycle");
  }
  return chain;
}

Chain BuildChain(const MergeTree& tree, const Necklace& start) {
  ChainInProgress chain(start);
  for (const HyperEdge& e : tree.edges) chain.SpliceEdge(e);
  return chain.Finish();
}

ChainSet::ChainSet(int n, std::vector<Chain> chains)
    : n_(n), chains_(std::move(chains)), owner_(Factorial(LengthFor(n)), -1) {
  for (std::size_t id = 0; id < chains_.size(); ++id) {
    for (const Permutation& p : chains_[id].codewords) {
      auto& slot = owner_[RankOf(p)];
      if (slot != -1) {
        throw ConstructionError("chains c" + chains_[slot].name.ToString() + " and c" +
                                chains_[id].name.ToString() + " share " + p.ToString());
      }
      slot = static_cast<std::int32_t>(id);
    }
  }
}

std::optional<int> ChainSet::ChainOf(const Permutation& p) const {
  if (p.size() != LengthFor(n_)) return std::nullopt;
  const std::int32_t id = owner_[RankOf(p)];
  if (id < 0) return std::nullopt;
  return id;
}

std::optional<int> ChainSet::FindByName(const Cycle& name) const {
  const auto it = std::lower_bound(chains_.begin(), chains_.end(), name,
                                   [](const Chain& c, const Cycle& v) { return c.name < v; });
  if (it == chains_.end() || it->name != name) return std::nullopt;
  return static_cast<int>(it - chains_.begin());
}

ChainSet BuildAllChainsSerial(int n) {
  const MergeTree tree = BuildMergeTree(n);
  const auto starts = EnumerateNecklaces(n, {1, 2});
  std::vector<Chain> chains;
  chains.reserve(starts.size());
  for (const Necklace& start : starts) chains.push_back(BuildChain(tree, start));
  return ChainSet(n, std::move(chains));
}

ChainSet BuildAllChains(int n) {
  const MergeTree tree = BuildMergeTree(n);
  const auto starts = EnumerateNecklaces(n, {1, 2});
  const auto count = static_cast<std::ptrdiff_t>(starts.size());
  std::vector<Chain> chains(starts.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    try {
      chains[k] = BuildChain(tree, starts[k]);
    } catch (...) {
#pragma omp critical(snakebox_chain_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return ChainSet(n, std::move(chains));
}

}  // namespace snakebox
