#pragma once

#include <functional>
#include <map>
#include <vector>

#include "gallai/decomposition.hpp"
#include "gallai/mixed_graph.hpp"
#include "gallai/multigraph.hpp"

namespace gallai {

// Partition of elements (vertices of a realized tree, or nodes of a mixed
// graph) under the closure of "joined by a color outside the working pair".
// Signatures toward a dominated set must be constant on these classes.
struct TildePartition {
  std::vector<std::vector<int>> classes;  // sorted, ordered by least element
  std::vector<std::pair<int, int>> generating_pairs;

  int class_of(int element) const;
  int class_count() const { return static_cast<int>(classes.size()); }
};

// Vertex-level relation on a realized tree: u ~ v when colors(u,v) is not
// contained in two_colors. Throws unless |two_colors| == 2.
TildePartition tilde_classes(const ColoredMultigraph& g, ColorSet two_colors);

// Node-level analogue over a mixed graph's own edge colors (undirected and
// directed edges both count).
TildePartition tilde_classes(const MixedGraph& m, ColorSet two_colors);

// All ways to pick one of the two colors per class such that both colors are
// used, lifted to element-level signatures. Exactly 2^k - 2 results for k
// classes; elements of a class share their color.
std::vector<Signature> signature_choices(const TildePartition& partition,
                                         ColorSet two_colors);

// Complete uniformly colored multigraph: every pair carries exactly `colors`.
ColoredMultigraph uniform_clique(int size, ColorSet colors,
                                 const Palette& palette);

// Inputs of the realization map: a complete mixed base, one leaf multigraph
// per node, and one signature per directed edge (entries keyed by the
// source leaf's local vertex indices).
struct LeafAssignment {
  int node;  // block id in the base
  ColoredMultigraph graph;
};

struct SignatureAssignment {
  int from;
  int to;
  Signature signature;
};

struct ConstructionSpec {
  MixedGraph base;
  std::vector<LeafAssignment> leaves;
  std::vector<SignatureAssignment> signatures;
};

// Realizes a construction spec as a complete multigraph: leaves are copied
// in base node order, undirected base edges color all cross pairs with their
// single color, and each directed edge colors cross pairs by the source
// vertex's signature value. Dominating leaves (nodes with out-edges) must be
// uniform on the out-edge's two colors and have at least two vertices; other
// leaves may be any Gallai multigraph, which is what lets realizations nest.
// Signatures must be nonempty subsets of the edge's colors, jointly onto
// them, and identical across edges sharing a signature class.
// Throws std::invalid_argument on any violation. The output is Gallai
// whenever every realization of the base is; this function does not check.
ColoredMultigraph gamma(const ConstructionSpec& spec);

struct DeltaTOptions {
  // Emit only the tree whose signature classes are exactly the generated
  // relation instead of every coarsening of it.
  bool restrict_to_generated = false;
};

// Adjoins a new root with directed two_colors edges to every node and
// enumerates the valid signature partitions on the new edges: weak
// components of m are merged whenever some color between them leaves
// two_colors, and every coarsening of the resulting partition is emitted.
// Existing edges, colors and classes are inherited. Output nodes are
// renumbered 0..n with the root last; one rooted tree per partition.
std::vector<MixedGraph> delta_t(const MixedGraph& m, ColorSet two_colors,
                                const DeltaTOptions& options = {});

// Substitutes a rooted tree for every node of the base: directed edges and
// their classes survive inside the trees, and every cross pair becomes
// undirected, colored by the base's single color or, across a directed base
// edge, by the source node's signature value. Signatures are keyed by the
// base's signature class ids; each maps the source tree's nodes to single
// colors of the edge pair, onto it, constant on the tree's tilde classes.
// Dominating slots need trees with at least two nodes whose tau equals the
// out-edge colors. Throws std::invalid_argument on any violation.
MixedGraph delta_f(const MixedGraph& base, const std::vector<MixedGraph>& trees,
                   const std::map<int, Signature>& class_signatures);

// Undirected mixed-graph mirror of a simple multigraph that uses at most two
// colors in total; the seed shape for family iteration. Throws on a pair
// with several colors or a palette usage beyond two colors.
MixedGraph gallai_graph_base(const ColoredMultigraph& outer);

// Every simple Gallai coloring (one color per pair, no rainbow triangle) on
// 1..size_bound vertices, one representative per isomorphism class (vertex
// and color permutations), built by nesting smaller members inside
// two-colored outer graphs. Deterministic order: size, then canonical code.
std::vector<ColoredMultigraph> simple_gallai_family(int size_bound,
                                                    const Palette& palette);

// Bounded closure of the seed family under delta_t (every color pair) and
// delta_f (every slot assignment of relabeled family trees), deduplicated by
// mixed-graph canonical code, truncated at size_bound nodes, iterated at
// most depth rounds. Deterministic order: node count, then canonical code.
std::vector<MixedGraph> iterate_m_prime(int size_bound, const Palette& palette,
                                        int depth);

// Every delta_f output over the base with slot trees drawn from the family's
// rooted trees under all palette relabelings, all signature choices, and
// total size at most size_bound. Not deduplicated.
std::vector<MixedGraph> enumerate_delta_f(const std::vector<MixedGraph>& family,
                                          const MixedGraph& base,
                                          int size_bound);

// Every gamma realization of the base with uniform leaves of total size at
// most max_vertices: dominating slots get cliques on the out-colors (size 2
// and up), other slots get single points or cliques uniform on any one- or
// two-color set, and directed edges range over all onto single-color
// signatures per class. max_leaf additionally caps each single leaf (0 means
// no per-leaf cap). A rainbow triangle in any realization survives in one
// with every leaf at size 2 or below, so max_vertices = 2 * node count with
// max_leaf = 2 is witness-complete for rainbow hunting.
void enumerate_gamma_realizations(
    const MixedGraph& base, int max_vertices,
    const std::function<void(const ColoredMultigraph&)>& sink,
    int max_leaf = 0);

}  // namespace gallai
