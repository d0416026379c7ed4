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

// Chains: one necklace from every class except [2,1], merged into a single
// cyclic snake by walking the merge tree.

#ifndef SNAKEBOX_CHAIN_HPP_
#define SNAKEBOX_CHAIN_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "snakebox/merge_tree.hpp"
#include "snakebox/partition.hpp"
#include "snakebox/permutation.hpp"

namespace snakebox {

// Raised when a construction step finds its structural precondition broken.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Chain {
  Cycle name;  // front cycle of the chain's [1,2]-necklace
  // Cyclic order starting at [name, 1, 2]; transitions[k] maps codewords[k]
  // to codewords[(k + 1) % size].
  std::vector<Permutation> codewords;
  std::vector<Transition> transitions;

  std::size_t size() const { return codewords.size(); }
};

// A chain under construction, kept as a successor map.
class ChainInProgress {
 public:
  explicit ChainInProgress(const Necklace& start);

  // Merges the two missing necklaces of `edge` in after the codeword
  // [beta, z, x, y] of the single present class [x, y]. Throws
  // ConstructionError unless exactly one of the edge's classes is present.
  void SpliceEdge(const HyperEdge& edge);

  bool Contains(ClassLabel label) const { return necklaces_.count(label) != 0; }
  std::size_t size() const { return next_.size(); }
  const Permutation& start() const { return start_; }
  // Materializes the cycle starting from the start necklace's representative.
  Chain Finish() const;

 private:
  void Link(const Permutation& from, const Permutation& to) { next_[from.Key()] = to; }

  int length_;
  Cycle name_;
  Permutation start_;
  std::map<ClassLabel, Necklace> necklaces_;
  std::unordered_map<std::uint64_t, Permutation> next_;
};

// Grows the chain c[alpha] from the [1,2]-necklace `start`.
Chain BuildChain(const MergeTree& tree, const Necklace& start);

// All (2n-2)!/2 chains with an owner lookup over A_{2n+1}.
class ChainSet {
 public:
  ChainSet(int n, std::vector<Chain> chains);

  int n() const { return n_; }
  const std::vector<Chain>& chains() const { return chains_; }
  const Chain& chain(int id) const { return chains_.at(id); }
  int size() const { return static_cast<int>(chains_.size()); }

  // Owning chain id, or nullopt for permutations outside every chain (odd
  // ones and class [2,1]).
  std::optional<int> ChainOf(const Permutation& p) const;
  std::optional<int> FindByName(const Cycle& name) const;

 private:
  int n_;
  std::vector<Chain> chains_;
  std::vector<std::int32_t> owner_;  // by Lehmer rank
};

// Chains are built concurrently; ids follow the sorted [1,2]-necklaces.
ChainSet BuildAllChains(int n);
// Single-threaded reference for the above.
ChainSet BuildAllChainsSerial(int n);

}  // namespace snakebox

#endif  // SNAKEBOX_CHAIN_HPP_
