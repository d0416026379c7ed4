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

#include "snakebox/connection_graph.hpp"

#include <algorithm>
#include <exception>
#include <ostream>
#include <stdexcept>

namespace snakebox {

std::vector<Necklace> EnumerateLinkages(int n) { return EnumerateNecklaces(n, {2, 1}); }

SpliceSite SpliceSiteFor(const Necklace& linkage, int x) {
  if (linkage.label() != ClassLabel{2, 1}) {
    throw std::invalid_argument("linkage must lie in class [2,1], got " + linkage.ToString());
  }
  const Permutation site = linkage.WithLast(x);
  std::vector<int> alpha = site.ToVector();
  alpha.resize(alpha.size() - 3);
  auto with_tail = [&](std::initializer_list<int> tail) {
    std::vector<int> v = alpha;
    v.insert(v.end(), tail);
    return Permutation(v);
  };
  return {site, with_tail({1, x, 2}), with_tail({2, 1, x})};
}

std::optional<std::pair<Cycle, Cycle>> MConnectionEndpoints(const Necklace& linkage, int x) {
  const int length = linkage.length();
  if (x < 3 || x > length) {
    throw std::out_of_range("M[x] needs 3 <= x <= " + std::to_string(length) + ", got " +
                            std::to_string(x));
  }
  if (x <= 5) return std::nullopt;
  std::vector<int> shift;
  for (int v = 5; v <= (x % 2 == 0 ? x : x - 2); ++v) shift.push_back(v);
  if (x % 2 == 1) shift.push_back(x);
  const Cycle swap_three({3, x});
  const Cycle sigma(shift);
  const auto& name = linkage.name().elements();
  return std::make_pair(Cycle(Relabel(swap_three, name)), Cycle(Relabel(sigma, name)));
}

int TraceChainOf(const Permutation& p, const ChainSet& chains) {
  const auto id = chains.ChainOf(p);
  if (!id) throw std::invalid_argument(p.ToString() + " is not in any chain");
  return *id;
}

std::pair<int, int> TraceEndpoints(const Necklace& linkage, int x, const ChainSet& chains) {
  const SpliceSite site = SpliceSiteFor(linkage, x);
  return {TraceChainOf(site.first_exit, chains), TraceChainOf(site.second_exit, chains)};
}

ComponentIndex ComponentOf(const Cycle& name, int n) {
  const auto from_four = name.StartingFrom(4);
  const auto at = [&](int v) {
    return static_cast<int>(std::find(from_four.begin(), from_four.end(), v) - from_four.begin()) + 1;
  };
  return {at(2 * n), at(2 * n + 1)};
}

const ConnectionEdge* ChainGraph::Find(int label, int sign) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(label, sign),
                                   [](const ConnectionEdge& e, const std::pair<int, int>& key) {
                                     return std::make_pair(e.label, e.sign) < key;
                                   });
  if (it == edges_.end() || it->label != label || it->sign != sign) return nullptr;
  return &*it;
}

ChainGraph BuildChainGraph(const ChainSet& chains) {
  const int n = chains.n();
  if (n < 3) throw std::invalid_argument("the chain graph needs n >= 3");
  const int length = LengthFor(n);

  ChainGraph graph;
  graph.n_ = n;
  graph.vertex_count_ = chains.size();
  graph.linkages_ = EnumerateLinkages(n);
  for (const Chain& c : chains.chains()) {
    graph.components_.push_back(ComponentOf(c.name, n));
    graph.chain_names_.push_back(c.name);
  }

  const auto count = static_cast<std::ptrdiff_t>(graph.linkages_.size());
  std::vector<std::vector<ConnectionEdge>> per_linkage(graph.linkages_.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t label = 0; label < count; ++label) {
    try {
      const Necklace& linkage = graph.linkages_[label];
      for (int x = 6; x <= length; ++x) {
        const auto names = MConnectionEndpoints(linkage, x);
        const auto first = chains.FindByName(names->first);
        const auto second = chains.FindByName(names->second);
        const auto traced = TraceEndpoints(linkage, x, chains);
        if (!first || !second || *first != traced.first || *second != traced.second) {
          throw ConstructionError("M[" + std::to_string(x) + "] through " + linkage.ToString() +
                                  ": closed form gives c" + names->first.ToString() + ", c" +
                                  names->second.ToString() + " but tracing finds c" +
                                  chains.chain(traced.first).name.ToString() + ", c" +
                                  chains.chain(traced.second).name.ToString());
        }
        if (*first != *second) {
          per_linkage[label].push_back({x, static_cast<int>(label), *first, *second});
        }
      }
    } catch (...) {
#pragma omp critical(snakebox_graph_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& edges : per_linkage) {
    graph.edges_.insert(graph.edges_.end(), edges.begin(), edges.end());
  }
  return graph;
}

void WriteGraph(std::ostream& os, const ChainGraph& graph, const ChainSet& chains) {
  os << "vertices " << graph.vertex_count() << '\n';
  for (int id = 0; id < chains.size(); ++id) {
    const ComponentIndex c = graph.components()[id];
    os << id << ' ' << chains.chain(id).name << " C" << c.i << ',' << c.j << '\n';
  }
  os << "edges " << graph.edges().size() << '\n';
  for (const ConnectionEdge& e : graph.edges()) {
    os << "M[" << e.sign << "] " << graph.linkages()[e.label].name() << ' ' << e.first << ' '
       << e.second << '\n';
  }
}

}  // namespace snakebox
