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

#include "snakebox/snake.hpp"

#include <stdexcept>

namespace snakebox {

std::vector<Permutation> Snake::Codewords() const {
  std::vector<Permutation> out;
  out.reserve(transitions.size());
  Permutation p = initial;
  for (Transition t : transitions) {
    out.push_back(p);
    p = ApplyTransition(p, t);
  }
  return out;
}

CyclicSequence::CyclicSequence(int length)
    : length_(length), next_(Factorial(length), kAbsent) {
  if (length > 12) throw std::invalid_argument("cyclic sequences are limited to length 12");
}

Permutation CyclicSequence::Next(const Permutation& p) const {
  const std::uint32_t r = next_[RankOf(p)];
  if (r == kAbsent) throw std::out_of_range(p.ToString() + " has no successor");
  return Unrank(r, length_);
}

void CyclicSequence::Link(const Permutation& from, const Permutation& to) {
  next_[RankOf(from)] = static_cast<std::uint32_t>(RankOf(to));
}

void CyclicSequence::AddCycle(const std::vector<Permutation>& codewords) {
  for (std::size_t k = 0; k < codewords.size(); ++k) {
    Link(codewords[k], codewords[(k + 1) % codewords.size()]);
  }
}

void CyclicSequence::AddSnake(const Snake& snake) { AddCycle(snake.Codewords()); }

Snake CyclicSequence::ToSnake(const Permutation& start, std::string construction) const {
  Snake snake{length_, std::move(construction), start, {}};
  Permutation p = start;
  do {
    const Permutation q = Next(p);
    const int index = TransitionBetween(p, q);
    if (index == 0) {
      throw std::logic_error(p.ToString() + " -> " + q.ToString() + " is not a p-transition");
    }
    snake.transitions.push_back({index});
    p = q;
  } while (p != start && snake.transitions.size() <= next_.size());
  return snake;
}

}  // namespace snakebox
