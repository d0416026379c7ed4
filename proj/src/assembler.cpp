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

#include "snakebox/assembler.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace snakebox {
namespace {

// Positions 2..2*level-1 wrap around cyclically.
int Wrap(int position, int level) {
  const int width = 2 * level - 2;
  return ((position - 2) % width + width) % width + 2;
}

ComponentIndex Projected(const Cycle& name, int level) {
  return {ProjectedPosition(name, level, 2 * level), ProjectedPosition(name, level, 2 * level + 1)};
}

std::string Describe(ComponentIndex c) {
  return "C(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")";
}

// True when `edges` is one cycle through every vertex.
template <class Key>
bool IsHamiltonianCycle(const std::set<Key>& vertices, const std::vector<std::pair<Key, Key>>& edges) {
  if (edges.size() != vertices.size() || vertices.size() < 3) return false;
  std::map<Key, std::vector<Key>> adjacent;
  for (const auto& [a, b] : edges) {
    if (a == b || !vertices.count(a) || !vertices.count(b)) return false;
    adjacent[a].push_back(b);
    adjacent[b].push_back(a);
  }
  for (const Key& v : vertices) {
    if (adjacent[v].size() != 2) return false;
  }
  std::size_t seen = 1;
  Key previous = *vertices.begin();
  Key current = adjacent[previous][0];
  while (current != *vertices.begin()) {
    const auto& nb = adjacent[current];
    const Key following = nb[0] == previous ? nb[1] : nb[0];
    previous = current;
    current = following;
    ++seen;
  }
  return seen == vertices.size();
}

struct Context {
  std::vector<int> chains;
  std::vector<int> linkages;
  std::optional<int> occupied;  // linkage already used by an outer level
};

const ConnectionEdge& RequireEdge(const ChainGraph& graph, int label, int sign) {
  const ConnectionEdge* e = graph.Find(label, sign);
  if (e == nullptr) {
    throw ConstructionError("linkage " + graph.linkages()[label].ToString() + " has no M[" +
                            std::to_string(sign) + "]-connection between distinct chains");
  }
  return *e;
}

// The 12-edge cycle on one G_7-shaped component.
std::vector<ConnectionEdge> BaseCycle(const ChainGraph& graph, const Context& ctx) {
  if (ctx.chains.size() != 12 || ctx.linkages.size() != 12) {
    throw ConstructionError("a level-3 component needs 12 chains and 12 linkages, got " +
                            std::to_string(ctx.chains.size()) + " and " +
                            std::to_string(ctx.linkages.size()));
  }
  std::vector<ConnectionEdge> cycle;
  std::vector<std::pair<int, int>> ends;
  for (int label : ctx.linkages) {
    const ComponentIndex at = Projected(graph.linkages()[label].name(), 3);
    const int sign = at.j == Wrap(at.i - 1, 3) ? 6 : 7;
    cycle.push_back(RequireEdge(graph, label, sign));
    ends.emplace_back(cycle.back().first, cycle.back().second);
  }
  if (!IsHamiltonianCycle(std::set<int>(ctx.chains.begin(), ctx.chains.end()), ends)) {
    throw ConstructionError("level-3 edges through " + graph.chain_names()[ctx.chains[0]].ToString() +
                            " do not form a cycle over the component's chains");
  }
  return cycle;
}

struct LevelCycle {
  std::vector<ComponentCycleEdge> edges;
  std::map<ComponentIndex, Context> components;
};

std::vector<int> RuleFor(ComponentIndex at, int level) {
  const auto [i, j] = at;
  if (j == Wrap(i - 1, level)) return {Wrap(i - 2, level), Wrap(i - 3, level), 2 * level};
  if (j == Wrap(i - 2, level)) return {Wrap(i - 1, level), Wrap(i + 1, level), 2 * level + 1};
  return {Wrap(j + 1, level), Wrap(j + 2, level), 2 * level + 1};
}

LevelCycle BuildLevelCycle(const ChainGraph& graph, int level, const Context& ctx) {
  LevelCycle out;
  for (int id : ctx.chains) out.components[Projected(graph.chain_names()[id], level)].chains.push_back(id);
  std::map<ComponentIndex, std::vector<int>> pools;
  for (int label : ctx.linkages) pools[Projected(graph.linkages()[label].name(), level)].push_back(label);

  const auto expected = static_cast<std::size_t>((2 * level - 2) * (2 * level - 3));
  if (out.components.size() != expected || pools.size() != expected) {
    throw ConstructionError("level " + std::to_string(level) + " expects " +
                            std::to_string(expected) + " components, found " +
                            std::to_string(out.components.size()));
  }

  std::vector<std::pair<ComponentIndex, ComponentIndex>> ends;
  for (const auto& [at, pool] : pools) {
    out.components.at(at).linkages = pool;
    const auto rule = RuleFor(at, level);
    const auto pick = std::find_if(pool.begin(), pool.end(), [&](int label) {
      const Cycle& name = graph.linkages()[label].name();
      return ProjectedPosition(name, level, 3) == rule[0] &&
             ProjectedPosition(name, level, 2 * level - 1) == rule[1];
    });
    if (pick == pool.end()) {
      throw ConstructionError("no linkage in L" + Describe(at).substr(1) + " at level " +
                              std::to_string(level) + " has 3 at position " +
                              std::to_string(rule[0]) + " and " + std::to_string(2 * level - 1) +
                              " at position " + std::to_string(rule[1]));
    }
    const ConnectionEdge& e = RequireEdge(graph, *pick, rule[2]);
    ComponentCycleEdge ce{Projected(graph.chain_names()[e.first], level),
                          Projected(graph.chain_names()[e.second], level), e};
    out.edges.push_back(ce);
    ends.emplace_back(ce.from, ce.to);
  }
  std::set<ComponentIndex> keys;
  for (const auto& [at, _] : out.components) keys.insert(at);
  if (!IsHamiltonianCycle(keys, ends)) {
    throw ConstructionError("level-" + std::to_string(level) +
                            " component edges do not form a cycle through every component");
  }
  return out;
}

void Select(const ChainGraph& graph, int level, const Context& ctx, std::vector<ConnectionEdge>& out) {
  if (level == 3) {
    auto cycle = BaseCycle(graph, ctx);
    auto drop = std::max_element(cycle.begin(), cycle.end(),
                                 [](const auto& a, const auto& b) { return a.label < b.label; });
    if (ctx.occupied) {
      drop = std::find_if(cycle.begin(), cycle.end(),
                          [&](const ConnectionEdge& e) { return e.label == *ctx.occupied; });
      if (drop == cycle.end()) throw ConstructionError("occupied linkage is outside its component");
    }
    cycle.erase(drop);
    out.insert(out.end(), cycle.begin(), cycle.end());
    return;
  }

  LevelCycle lc = BuildLevelCycle(graph, level, ctx);
  auto group_of = [&](int label) { return Projected(graph.linkages()[label].name(), level); };
  auto drop = std::max_element(lc.edges.begin(), lc.edges.end(), [](const auto& a, const auto& b) {
    return a.edge.label < b.edge.label;
  });
  if (ctx.occupied) {
    // The outer level already took a linkage of this component; the cycle
    // edge drawn from the same pool goes instead.
    const ComponentIndex taken = group_of(*ctx.occupied);
    drop = std::find_if(lc.edges.begin(), lc.edges.end(),
                        [&](const ComponentCycleEdge& e) { return group_of(e.edge.label) == taken; });
    if (drop == lc.edges.end()) throw ConstructionError("occupied linkage is outside its component");
  }
  const ComponentIndex dropped_group = group_of(drop->edge.label);
  for (auto& [at, sub] : lc.components) {
    if (at == dropped_group) {
      sub.occupied = ctx.occupied;
    } else {
      const auto used = std::find_if(lc.edges.begin(), lc.edges.end(),
                                     [&](const ComponentCycleEdge& e) { return group_of(e.edge.label) == at; });
      sub.occupied = used->edge.label;
    }
    Select(graph, level - 1, sub, out);
  }
  for (auto it = lc.edges.begin(); it != lc.edges.end(); ++it) {
    if (it != drop) out.push_back(it->edge);
  }
}

Context WholeGraph(const ChainGraph& graph) {
  Context ctx;
  ctx.chains.resize(graph.vertex_count());
  std::iota(ctx.chains.begin(), ctx.chains.end(), 0);
  ctx.linkages.resize(graph.linkages().size());
  std::iota(ctx.linkages.begin(), ctx.linkages.end(), 0);
  return ctx;
}

void CheckSpanningTree(const ChainGraph& graph, const std::vector<ConnectionEdge>& edges) {
  const int v = graph.vertex_count();
  if (static_cast<int>(edges.size()) != v - 1) {
    throw ConstructionError("selection has " + std::to_string(edges.size()) + " edges for " +
                            std::to_string(v) + " chains");
  }
  std::set<int> labels;
  std::vector<int> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const ConnectionEdge& e : edges) {
    if (!labels.insert(e.label).second) {
      throw ConstructionError("linkage " + graph.linkages()[e.label].ToString() + " used twice");
    }
    const int a = find(e.first);
    const int b = find(e.second);
    if (a == b) throw ConstructionError("selection contains a cycle");
    parent[a] = b;
  }
}

}  // namespace

int ProjectedPosition(const Cycle& name, int level, int value) {
  int position = 0;
  for (int v : name.StartingFrom(4)) {
    if (v > 2 * level + 1) continue;
    ++position;
    if (v == value) return position;
  }
  throw std::invalid_argument("value " + std::to_string(value) + " not in " + name.ToString());
}

std::vector<ConnectionEdge> ChainCycleS7(const ChainGraph& graph) {
  if (graph.n() != 3) throw std::invalid_argument("the chain cycle is defined for n = 3");
  return BaseCycle(graph, WholeGraph(graph));
}

std::vector<ComponentCycleEdge> ComponentCycle(const ChainGraph& graph) {
  if (graph.n() < 4) throw std::invalid_argument("component cycles need n >= 4");
  return BuildLevelCycle(graph, graph.n(), WholeGraph(graph)).edges;
}

SpanningSelection SelectSpanningTreeS7(const ChainGraph& graph) {
  if (graph.n() != 3) throw std::invalid_argument("SelectSpanningTreeS7 needs n = 3");
  return SelectSpanningTree(graph);
}

SpanningSelection SelectSpanningTree(const ChainGraph& graph) {
  if (graph.n() < 3) throw std::invalid_argument("spanning selection needs n >= 3");
  SpanningSelection selection;
  Select(graph, graph.n(), WholeGraph(graph), selection.edges);
  std::sort(selection.edges.begin(), selection.edges.end(),
            [](const ConnectionEdge& a, const ConnectionEdge& b) { return a.label < b.label; });
  CheckSpanningTree(graph, selection.edges);
  return selection;
}

void SpliceConnection(CyclicSequence& sequence, const SpliceSite& site) {
  const int length = sequence.length();
  const Permutation& link = site.linkage_codeword;
  const Permutation resume = ApplyTransition(link, {length - 2});
  const Permutation first_entry = ApplyTransition(link, {length});
  const Permutation second_entry = ApplyTransition(site.first_exit, {length});
  if (sequence.Next(link) != resume || sequence.Next(site.first_exit) != first_entry ||
      sequence.Next(site.second_exit) != second_entry) {
    throw ConstructionError("splice site at " + link.ToString() + " is no longer intact");
  }
  sequence.Link(link, first_entry);
  sequence.Link(site.first_exit, second_entry);
  sequence.Link(site.second_exit, resume);
}

Snake SpliceChains(const ChainSet& chains, const ChainGraph& graph,
                   const std::vector<ConnectionEdge>& edges) {
  CyclicSequence sequence(LengthFor(chains.n()));
  for (const Chain& c : chains.chains()) sequence.AddCycle(c.codewords);
  for (const Necklace& linkage : graph.linkages()) sequence.AddCycle(linkage.Codewords());
  for (const ConnectionEdge& e : edges) {
    SpliceConnection(sequence, SpliceSiteFor(graph.linkages()[e.label], e.sign));
  }
  return sequence.ToSnake(chains.chain(0).codewords.front(), "he");
}

HeAssembly AssembleHe(int n) {
  if (n < 2) throw std::invalid_argument("the construction needs n >= 2");
  ChainSet chains = BuildAllChains(n);
  if (n == 2) {
    const Chain& only = chains.chain(0);
    Snake snake{LengthFor(n), "he", only.codewords.front(), only.transitions};
    return {std::move(chains), {}, std::move(snake)};
  }
  const ChainGraph graph = BuildChainGraph(chains);
  SpanningSelection selection = SelectSpanningTree(graph);
  Snake snake = SpliceChains(chains, graph, selection.edges);
  const auto expected = Factorial(LengthFor(n)) / 2 - 2 * n + 1;
  if (snake.size() != expected) {
    throw ConstructionError("assembled snake has " + std::to_string(snake.size()) +
                            " codewords, expected " + std::to_string(expected));
  }
  return {std::move(chains), std::move(selection), std::move(snake)};
}

Snake AssembleHeSnake(int n) { return AssembleHe(n).snake; }

}  // namespace snakebox
