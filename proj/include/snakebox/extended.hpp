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

// The extended construction. A snake over S_{2n-1} is relabeled into class
// [2,1] of S_{2n+1}, rewritten so that more of its steps are t_{2n-1}, and
// then every chain is spliced in, two at a time, at steps
// [alpha,x,2,1] -> [x,alpha,2,1] with x > 5.
//
// With a = 2n-3 and b = 2n-1, a sew rewrite at pivot p needs the steps
//   p -> t_a(p),  t_a^-1 t_b(p) -> t_b(p),  A -> B
// where A = t_b^-1 t_a(p) and B = t_a t_b^-1 t_a(p). The segment
// t_a(p) .. t_a^-1 t_b(p) is cut out and reinserted between A and B. The
// three removed steps are t_a and the three new ones are t_b.

#ifndef SNAKEBOX_EXTENDED_HPP_
#define SNAKEBOX_EXTENDED_HPP_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "snakebox/chain.hpp"
#include "snakebox/connection_graph.hpp"
#include "snakebox/snake.hpp"

namespace snakebox {

// Bijection {1..2n-1} -> {3..2n+1}; image[v-1] = f(v).
class EmbeddingMap {
 public:
  // Throws std::invalid_argument unless `image` is a bijection onto 3..2n+1
  // whose relabeled codewords, with tail (2,1), are even.
  explicit EmbeddingMap(std::vector<int> image);

  int operator()(int v) const { return image_[v - 1]; }
  const std::vector<int>& image() const { return image_; }
  int inner_length() const { return static_cast<int>(image_.size()); }
  Permutation Embed(const Permutation& inner) const;

  // Parity-valid maps for inner length 2n-1, in lexicographic order of image.
  static std::vector<EmbeddingMap> AllValid(int n);

 private:
  std::vector<int> image_;
};

// Relabels `inner` by `f` and appends (2,1). Transition indices are kept.
Snake EmbedInnerSnake(int n, const Snake& inner, const EmbeddingMap& f);

struct SewRewrite {
  Permutation pivot;
  Permutation segment_first;  // t_a(p)
  Permutation segment_last;   // t_a^-1 t_b(p)
  Permutation insert_after;   // A
  Permutation insert_before;  // B
};

// Rewrite data for pivot `p` at length 2n+1. Does not check applicability.
SewRewrite SewRewriteAt(const Permutation& p);

// Checks t_b t_a^-1 t_b(p) == t_a t_b^-1 t_a(p), the identity that makes
// the reinsertion a pair of valid steps.
bool SewIdentityHolds(const Permutation& p);

// True when the three required steps exist in `sequence` and neither A nor B
// lies in the cut segment (or is the pivot).
bool SewApplicable(const CyclicSequence& sequence, const SewRewrite& r);

// Applies `r`; throws ConstructionError and leaves `sequence` unchanged when
// it does not apply.
void ApplySewRewrite(CyclicSequence& sequence, const SewRewrite& r);
Snake ApplySewRewrite(const Snake& snake, const SewRewrite& r);

// A step [alpha,x,2,1] -> [x,alpha,2,1] with x > 5.
struct InsertionSite {
  Permutation codeword;
  int x = 0;
};
std::vector<InsertionSite> FindInsertionSites(const Snake& snake);

// Splices the two chains owned by the exits of `site`. Throws
// ConstructionError if the step is absent or both exits share a chain.
void InsertChainPair(CyclicSequence& sequence, const InsertionSite& site, const ChainSet& chains);

struct ChainPair {
  InsertionSite site;
  int first = 0;   // chain holding [alpha,1,x,2]
  int second = 0;  // chain holding [alpha,2,1,x]
};

// Statistics for one full search; also the failure report.
struct ExtendedReport {
  int n = 0;
  bool resolved = false;
  std::size_t maps_tried = 0;
  std::size_t rewrites_applied = 0;  // in the last or successful attempt
  std::size_t matching_attempts = 0;
  std::size_t chains = 0;
  std::size_t best_matching = 0;  // pairs
  std::map<int, std::size_t> sites_per_x;  // in the best attempt
  bool budget_exhausted = false;
  double seconds = 0;

  std::string ToText() const;
};

class ExtendedUnresolved : public std::runtime_error {
 public:
  explicit ExtendedUnresolved(ExtendedReport report);
  const ExtendedReport& report() const { return report_; }

 private:
  ExtendedReport report_;
};

struct ExtendedOptions {
  // Use the known n = 3 map and pivot instead of searching.
  bool golden = true;
  std::chrono::seconds budget{25 * 60};
  std::size_t max_maps = 0;  // 0 means all
};

struct ExtendedAssembly {
  Snake snake;
  std::vector<SewRewrite> rewrites;
  std::vector<ChainPair> pairs;
  ExtendedReport report;
  std::optional<EmbeddingMap> map;
};

// Known n = 3 ingredients.
EmbeddingMap GoldenMapS7();
Permutation GoldenPivotS7();

// Runs the construction. Returns nothing and fills `report` when no map
// leads to a perfect matching.
std::optional<ExtendedAssembly> TryAssembleExtended(int n, const ExtendedOptions& options,
                                                    ExtendedReport& report);

// Throws ExtendedUnresolved on failure.
ExtendedAssembly AssembleExtended(int n, const ExtendedOptions& options = {});
Snake AssembleExtendedSnake(int n);

}  // namespace snakebox

#endif  // SNAKEBOX_EXTENDED_HPP_
