#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gallai/color.hpp"

namespace gallai {

// One block of a decomposition level: a set of source vertices. At level 0
// blocks are singletons; above that, `children` lists the previous level's
// block ids that merged into this one. `root_child` is the child dominating
// all the others (unset when the merged component is not a rooted tree), and
// `base_root` is the source vertex reached by following root children down
// to level 0.
struct Block {
  int id = 0;
  int level = 0;
  std::vector<int> members;
  std::vector<int> children;
  std::optional<int> root_child;
  int base_root = -1;

  friend bool operator==(const Block&, const Block&) = default;
};

struct UndirectedEdge {
  int a = 0, b = 0;  // a < b
  ColorSet colors;   // a single color in valid graphs

  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
};

struct DirectedEdge {
  int from = 0, to = 0;
  ColorSet colors;      // exactly two colors in valid graphs
  int sigma_class = 0;  // edges with equal signatures share a class id

  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// A mixed graph on blocks: each block pair carries at most one undirected or
// directed edge (decompositions of well-behaved inputs carry exactly one).
// Directed edges are grouped into signature classes; two edges may share a
// class only if they share the initial block.
struct MixedGraph {
  int level = 0;
  Palette palette;
  std::vector<Block> blocks;
  std::vector<UndirectedEdge> undirected;
  std::vector<DirectedEdge> directed;

  int node_count() const { return static_cast<int>(blocks.size()); }

  // Nodes 0..count-1 as singleton blocks; used for construction inputs whose
  // blocks are abstract vertices.
  static MixedGraph abstract_nodes(int count, Palette palette);

  const DirectedEdge* find_directed(int from, int to) const;
  const UndirectedEdge* find_undirected(int a, int b) const;
  // How many edges (of either kind, either direction) join the pair.
  int edges_between(int a, int b) const;

  // Union of colors over the node's outgoing directed edges.
  ColorSet out_colors(int node) const;
  // The common color set of the node's outgoing edges; nullopt when the node
  // has none or they disagree.
  std::optional<ColorSet> uniform_out_colors(int node) const;

  // Connected components of the directed part (directions ignored,
  // undirected edges disregarded), each sorted, ordered by smallest node.
  std::vector<std::vector<int>> weak_components() const;

  // Renumber sigma classes deterministically: classes ordered by their
  // lexicographically smallest (from, to) edge.
  void canonicalize_sigma_classes();

  friend bool operator==(const MixedGraph&, const MixedGraph&) = default;
};

struct RootedTreeCheck {
  bool is_tree = false;
  std::optional<int> root;
  std::string reason;         // empty when is_tree
  std::vector<int> witness;   // offending nodes when not
};

// Is the directed part a transitive spanning rooted tree: antisymmetric,
// transitive, every node's ancestor set totally ordered, and one root with an
// edge to every other node? A single node with no edges qualifies.
RootedTreeCheck check_rooted_tree(const MixedGraph& m);
bool is_rooted_tree(const MixedGraph& m);
std::optional<int> tree_root(const MixedGraph& m);

// Color pair on the root's outgoing edges. Empty for a single-node tree.
// Throws std::invalid_argument when there is no root or the root's edges
// disagree.
ColorSet tau_of_tree(const MixedGraph& m);

}  // namespace gallai
