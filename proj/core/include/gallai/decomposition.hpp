#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gallai/mixed_graph.hpp"
#include "gallai/multigraph.hpp"

namespace gallai {

// The signature of a dominance U over V: each element u of U (a source
// vertex) mapped to the colors it shows toward all of V. Two directed edges
// are signature-equivalent exactly when these maps are equal, which forces a
// shared initial block.
struct Signature {
  std::vector<std::pair<int, ColorSet>> entries;  // sorted by element

  static Signature singleton(int u, ColorSet s) { return Signature{{{u, s}}}; }
  ColorSet image_union() const {
    ColorSet acc;
    for (const auto& [u, s] : entries) acc |= s;
    return acc;
  }

  friend bool operator==(const Signature&, const Signature&) = default;
};

// Does U dominate V? U and V must be disjoint, nonempty, sorted vertex sets
// (throws std::invalid_argument otherwise). Singleton vs singleton requires
// more than one color and min(U) < min(V); otherwise every u in U must see
// all of V in one fixed color set, with more than one color across the pair.
// Returns the signature on success.
std::optional<Signature> dominates(const ColoredMultigraph& g,
                                   const std::vector<int>& U,
                                   const std::vector<int>& V);

// The level sequence: level 0 has singleton blocks, directed edges on pairs
// with two or more colors (lower vertex first) and undirected edges on
// single-color pairs. Each next level merges the weak components of the
// directed part and recomputes edges by dominance over the merged vertex
// sets. The sequence stops at the first level with no directed edges.
struct DecompositionSequence {
  ColoredMultigraph source;
  std::vector<MixedGraph> levels;
  // tau[level][block]: colors the block's base root uses to dominate at
  // level 0, pulled up through root children. Empty or a 2-set for
  // decompositions of reduced maximal Gallai inputs.
  std::vector<std::vector<ColorSet>> tau_table;
};

DecompositionSequence decompose(const ColoredMultigraph& g);

ColorSet tau(const DecompositionSequence& seq, int level, int block);

struct TreePropertyReport {
  bool passed = true;
  int failed_clause = 0;  // 1: completeness, 2: color counts, 3: rooted
                          // trees, 4: signature coherence
  std::string detail;
};

// Check one level: (1) every block pair carries exactly one edge, (2) one
// color on undirected and two on directed edges, (3) each weak component is
// a transitive rooted tree, (4) edges (U,V),(V,W) force (U,V) and (U,W) into
// the same signature class. Stops at the first violated clause.
TreePropertyReport verify_tree_property(const MixedGraph& level);
TreePropertyReport verify_tree_property(const DecompositionSequence& seq, int level);

struct PruneReport {
  bool passed = true;
  int mismatch_level = -1;
  std::string detail;
};

// Remove one level-`level` block and compare: the remaining graph's own
// decomposition, translated back to original vertex ids, must reproduce
// every level k <= level of the full decomposition once the blocks lying
// inside the removed set are added back. Throws std::invalid_argument when
// the block id is invalid or the block covers every vertex.
PruneReport prune_block(const ColoredMultigraph& g, const DecompositionSequence& seq,
                        int level, int block_id);

}  // namespace gallai
