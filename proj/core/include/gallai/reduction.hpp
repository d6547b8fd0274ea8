#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gallai/multigraph.hpp"

namespace gallai {

// A pair {u,v} is isolated when every outside vertex w sees u and v with the
// same single color: colors(u,w) == colors(v,w) and |colors(u,w)| == 1.
// With no outside vertices (n == 2) the condition is vacuously true.
bool is_isolated_pair(const ColoredMultigraph& g, int u, int v);
std::optional<std::pair<int, int>> find_isolated_pair(const ColoredMultigraph& g);
bool is_reduced(const ColoredMultigraph& g);

struct ReduceResult {
  ColoredMultigraph graph;
  // Original vertex id -> vertex id in `graph`. Collapsing keeps the
  // lowest-index member of each merged group as the survivor.
  std::vector<int> merge_map;
};

// Repeatedly collapse the lexicographically first isolated pair until none
// remains. A complete 2-vertex multigraph therefore collapses to one vertex.
ReduceResult reduce(const ColoredMultigraph& g);

// Is any (pair, color) addition possible without creating a rainbow
// triangle? Maximality is relative to the graph's own palette.
bool is_maximal(const ColoredMultigraph& g);

// Greedy closure: sweep colors in palette order and, per color, pairs in
// lexicographic order, adding whenever the graph stays rainbow-free; repeat
// until a full sweep adds nothing. Throws std::invalid_argument on
// non-Gallai input.
ColoredMultigraph maximal_closure(const ColoredMultigraph& g);

}  // namespace gallai
