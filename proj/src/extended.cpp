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

#include "snakebox/extended.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "snakebox/assembler.hpp"
#include "snakebox/partition.hpp"

namespace snakebox {
namespace {

using Clock = std::chrono::steady_clock;

bool IsOdd(const std::vector<int>& values) {
  int inversions = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) inversions += values[i] > values[j];
  }
  return inversions % 2 == 1;
}

int SiteValue(const Permutation& p) { return p(p.size() - 2); }

// Whether the step c -> t_b(c) would be an insertion site.
bool OpensSite(const Permutation& c) { return SiteValue(c) > 5; }

std::uint64_t TargetSize(int n) { return Factorial(LengthFor(n)) / 2 - 2 * n + 3; }

struct Attempt {
  std::optional<ExtendedAssembly> assembly;
  std::size_t rewrites = 0;
  std::size_t matching = 0;
  std::map<int, std::size_t> sites_per_x;
  bool timed_out = false;
};

// Applies every rewrite that opens a new site, sweeping until none does.
// Sets `timed_out` and stops early once `deadline` passes.
// TODO: revisit only pivots near newly opened sites; full sweeps are too slow at n = 5.
std::vector<SewRewrite> GreedyRewrites(CyclicSequence& sequence, const Permutation& start,
                                       Clock::time_point deadline, bool& timed_out) {
  std::vector<SewRewrite> applied;
  std::size_t visited = 0;
  for (bool changed = true; changed;) {
    changed = false;
    std::vector<Permutation> order;
    Permutation p = start;
    do {
      order.push_back(p);
      p = sequence.Next(p);
    } while (p != start);
    for (const Permutation& pivot : order) {
      if (++visited % 1024 == 0 && Clock::now() > deadline) {
        timed_out = true;
        return applied;
      }
      const SewRewrite r = SewRewriteAt(pivot);
      if (!OpensSite(r.pivot) && !OpensSite(r.insert_after) && !OpensSite(r.segment_last)) continue;
      if (!SewApplicable(sequence, r)) continue;
      ApplySewRewrite(sequence, r);
      applied.push_back(r);
      changed = true;
    }
  }
  return applied;
}

// Maximum matching over chains, one site per usable pair.
std::vector<ChainPair> MatchChains(const std::vector<InsertionSite>& sites, const ChainSet& chains) {
  std::vector<ChainPair> candidates;
  std::set<std::pair<int, int>> seen;
  for (const InsertionSite& site : sites) {
    const SpliceSite splice = SpliceSiteFor(NecklaceOf(site.codeword), site.x);
    const auto a = chains.ChainOf(splice.first_exit);
    const auto b = chains.ChainOf(splice.second_exit);
    if (!a || !b || *a == *b) continue;
    if (!seen.insert(std::minmax(*a, *b)).second) continue;
    candidates.push_back({site, *a, *b});
  }
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  Graph g(chains.size());
  for (const ChainPair& c : candidates) boost::add_edge(c.first, c.second, g);
  std::vector<boost::graph_traits<Graph>::vertex_descriptor> mate(chains.size());
  boost::edmonds_maximum_cardinality_matching(g, mate.data());

  std::vector<ChainPair> pairs;
  for (const ChainPair& c : candidates) {
    if (mate[c.first] == static_cast<std::size_t>(c.second)) pairs.push_back(c);
  }
  return pairs;
}

Attempt RunAttempt(int n, const Snake& inner, const EmbeddingMap& f, const ChainSet& chains,
                   const std::optional<Permutation>& pivot, Clock::time_point deadline) {
  Attempt attempt;
  const Snake embedded = EmbedInnerSnake(n, inner, f);
  CyclicSequence sequence(embedded.length);
  sequence.AddSnake(embedded);

  std::vector<SewRewrite> rewrites;
  if (pivot) {
    const SewRewrite r = SewRewriteAt(*pivot);
    ApplySewRewrite(sequence, r);
    rewrites.push_back(r);
  } else {
    rewrites = GreedyRewrites(sequence, embedded.initial, deadline, attempt.timed_out);
  }
  attempt.rewrites = rewrites.size();
  if (attempt.timed_out) return attempt;

  const Snake rewritten = sequence.ToSnake(embedded.initial, "extended");
  const auto sites = FindInsertionSites(rewritten);
  for (const InsertionSite& s : sites) ++attempt.sites_per_x[s.x];
  std::vector<ChainPair> pairs = MatchChains(sites, chains);
  attempt.matching = pairs.size();
  if (2 * pairs.size() != static_cast<std::size_t>(chains.size())) return attempt;

  for (const Chain& c : chains.chains()) sequence.AddCycle(c.codewords);
  for (const ChainPair& pair : pairs) InsertChainPair(sequence, pair.site, chains);
  Snake snake = sequence.ToSnake(embedded.initial, "extended");
  if (snake.size() != TargetSize(n)) {
    throw ConstructionError("extended snake has " + std::to_string(snake.size()) +
                            " codewords, expected " + std::to_string(TargetSize(n)));
  }
  attempt.assembly = ExtendedAssembly{std::move(snake), std::move(rewrites), std::move(pairs), {}, f};
  return attempt;
}

}  // namespace

EmbeddingMap::EmbeddingMap(std::vector<int> image) : image_(std::move(image)) {
  const int m = static_cast<int>(image_.size());
  std::vector<int> sorted = image_;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> expected(m);
  std::iota(expected.begin(), expected.end(), 3);
  if (m < 3 || m % 2 == 0 || sorted != expected) {
    throw std::invalid_argument("an embedding map must send 1.." + std::to_string(m) +
                                " onto 3.." + std::to_string(m + 2));
  }
  if (!IsOdd(image_)) {
    throw std::invalid_argument("embedding map " + FormatSequence(image_) +
                                " would produce odd codewords");
  }
}

Permutation EmbeddingMap::Embed(const Permutation& inner) const {
  if (inner.size() != inner_length()) {
    throw std::invalid_argument("cannot embed " + inner.ToString() + " with a map on " +
                                std::to_string(inner_length()) + " symbols");
  }
  std::vector<int> out;
  out.reserve(inner.size() + 2);
  for (int k = 1; k <= inner.size(); ++k) out.push_back((*this)(inner(k)));
  out.push_back(2);
  out.push_back(1);
  return Permutation(out);
}

std::vector<EmbeddingMap> EmbeddingMap::AllValid(int n) {
  std::vector<int> image(2 * n - 1);
  std::iota(image.begin(), image.end(), 3);
  std::vector<EmbeddingMap> maps;
  do {
    if (IsOdd(image)) maps.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return maps;
}

Snake EmbedInnerSnake(int n, const Snake& inner, const EmbeddingMap& f) {
  if (inner.length != 2 * n - 1 || f.inner_length() != 2 * n - 1) {
    throw std::invalid_argument("inner snake and map must both act on " + std::to_string(2 * n - 1) +
                                " symbols");
  }
  return Snake{LengthFor(n), "extended", f.Embed(inner.initial), inner.transitions};
}

SewRewrite SewRewriteAt(const Permutation& p) {
  const Transition a{p.size() - 4};
  const Transition b{p.size() - 2};
  const Permutation first = ApplyTransition(p, a);
  const Permutation after = ApplyInverse(first, b);
  return {p, first, ApplyInverse(ApplyTransition(p, b), a), after, ApplyTransition(after, a)};
}

bool SewIdentityHolds(const Permutation& p) {
  const SewRewrite r = SewRewriteAt(p);
  return ApplyTransition(r.segment_last, {p.size() - 2}) == r.insert_before;
}

bool SewApplicable(const CyclicSequence& sequence, const SewRewrite& r) {
  const Transition b{r.pivot.size() - 2};
  const Permutation resume = ApplyTransition(r.pivot, b);
  for (const Permutation* p : {&r.pivot, &r.segment_last, &r.insert_after}) {
    if (!sequence.Contains(*p)) return false;
  }
  if (sequence.Next(r.pivot) != r.segment_first || sequence.Next(r.segment_last) != resume ||
      sequence.Next(r.insert_after) != r.insert_before || !SewIdentityHolds(r.pivot)) {
    return false;
  }
  if (r.insert_after == r.pivot) return false;
  for (Permutation p = r.segment_first;; p = sequence.Next(p)) {
    if (p == r.insert_after || p == r.insert_before) return false;
    if (p == r.segment_last) break;
  }
  return true;
}

void ApplySewRewrite(CyclicSequence& sequence, const SewRewrite& r) {
  if (!SewApplicable(sequence, r)) {
    throw ConstructionError("sew rewrite at " + r.pivot.ToString() + " does not apply");
  }
  sequence.Link(r.pivot, ApplyTransition(r.pivot, {r.pivot.size() - 2}));
  sequence.Link(r.insert_after, r.segment_first);
  sequence.Link(r.segment_last, r.insert_before);
}

Snake ApplySewRewrite(const Snake& snake, const SewRewrite& r) {
  CyclicSequence sequence(snake.length);
  sequence.AddSnake(snake);
  ApplySewRewrite(sequence, r);
  return sequence.ToSnake(snake.initial, snake.construction);
}

std::vector<InsertionSite> FindInsertionSites(const Snake& snake) {
  std::vector<InsertionSite> sites;
  const int b = snake.length - 2;
  Permutation p = snake.initial;
  for (Transition t : snake.transitions) {
    if (t.index == b && p(snake.length - 1) == 2 && p(snake.length) == 1 && OpensSite(p)) {
      sites.push_back({p, SiteValue(p)});
    }
    p = ApplyTransition(p, t);
  }
  return sites;
}

void InsertChainPair(CyclicSequence& sequence, const InsertionSite& site, const ChainSet& chains) {
  if (site.x <= 5 || SiteValue(site.codeword) != site.x) {
    throw ConstructionError("no insertion site at " + site.codeword.ToString());
  }
  const SpliceSite splice = SpliceSiteFor(NecklaceOf(site.codeword), site.x);
  const auto a = chains.ChainOf(splice.first_exit);
  const auto b = chains.ChainOf(splice.second_exit);
  if (!a || !b || *a == *b) {
    throw ConstructionError("insertion site " + site.codeword.ToString() +
                            " does not reach two distinct chains");
  }
  SpliceConnection(sequence, splice);
}

std::string ExtendedReport::ToText() const {
  std::ostringstream os;
  os << "extended n=" << n << ' ' << (resolved ? "resolved" : "unresolved") << '\n'
     << "maps_tried " << maps_tried << '\n'
     << "rewrites_applied " << rewrites_applied << '\n'
     << "matching_attempts " << matching_attempts << '\n'
     << "chains " << chains << '\n'
     << "best_matching_pairs " << best_matching << '\n';
  for (const auto& [x, count] : sites_per_x) os << "sites x=" << x << ' ' << count << '\n';
  os << "budget_exhausted " << (budget_exhausted ? "yes" : "no") << '\n'
     << "seconds " << seconds << '\n';
  return os.str();
}

ExtendedUnresolved::ExtendedUnresolved(ExtendedReport report)
    : std::runtime_error("extended construction unresolved for n=" + std::to_string(report.n)),
      report_(std::move(report)) {}

EmbeddingMap GoldenMapS7() { return EmbeddingMap({5, 6, 3, 7, 4}); }

Permutation GoldenPivotS7() { return {3, 5, 6, 7, 4, 2, 1}; }

std::optional<ExtendedAssembly> TryAssembleExtended(int n, const ExtendedOptions& options,
                                                    ExtendedReport& report) {
  if (n < 3) throw std::invalid_argument("the extended construction needs n >= 3");
  const auto started = Clock::now();
  report = ExtendedReport{};
  report.n = n;
  const ChainSet chains = BuildAllChains(n);
  const Snake inner = AssembleHeSnake(n - 1);
  report.chains = chains.size();

  auto finish = [&](const Attempt& attempt) {
    report.rewrites_applied = attempt.rewrites;
    ++report.matching_attempts;
    if (attempt.matching >= report.best_matching) {
      report.best_matching = attempt.matching;
      report.sites_per_x = attempt.sites_per_x;
    }
    report.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  };

  if (options.golden && n == 3) {
    ++report.maps_tried;
    Attempt attempt = RunAttempt(n, inner, GoldenMapS7(), chains, GoldenPivotS7(), Clock::time_point::max());
    finish(attempt);
    if (!attempt.assembly) throw ConstructionError("the known S_7 ingredients no longer match");
    report.resolved = true;
    attempt.assembly->report = report;
    return std::move(attempt.assembly);
  }

  for (const EmbeddingMap& f : EmbeddingMap::AllValid(n)) {
    if (options.max_maps != 0 && report.maps_tried >= options.max_maps) break;
    if (Clock::now() - started > options.budget) {
      report.budget_exhausted = true;
      break;
    }
    ++report.maps_tried;
    Attempt attempt = RunAttempt(n, inner, f, chains, std::nullopt, started + options.budget);
    if (attempt.timed_out) {
      report.rewrites_applied = attempt.rewrites;
      report.budget_exhausted = true;
      break;
    }
    finish(attempt);
    if (attempt.assembly) {
      report.resolved = true;
      attempt.assembly->report = report;
      return std::move(attempt.assembly);
    }
  }
  report.seconds = std::chrono::duration<double>(Clock::now() - started).count();
  return std::nullopt;
}

ExtendedAssembly AssembleExtended(int n, const ExtendedOptions& options) {
  ExtendedReport report;
  auto assembly = TryAssembleExtended(n, options, report);
  if (!assembly) throw ExtendedUnresolved(std::move(report));
  return std::move(*assembly);
}

Snake AssembleExtendedSnake(int n) { return AssembleExtended(n).snake; }

}  // namespace snakebox
