#pragma once

#include <string>

#include "gallai/mixed_graph.hpp"
#include "gallai/multigraph.hpp"

namespace gallai {

// Graphviz exports. Multigraphs render as undirected graphs with the color
// list on each edge. Mixed graphs render as digraphs: undirected edges use
// dir=none with the single color, directed edges carry both colors plus a
// tail mark of sigma_class + 1 tick strokes, so edges of one signature class
// can be spotted at a glance.
std::string to_dot(const ColoredMultigraph& g);
std::string to_dot(const MixedGraph& m);

}  // namespace gallai
