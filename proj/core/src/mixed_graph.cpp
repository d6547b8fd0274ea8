#include "gallai/mixed_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "gallai/union_find.hpp"

namespace gallai {

MixedGraph MixedGraph::abstract_nodes(int count, Palette palette) {
  MixedGraph m;
  m.palette = std::move(palette);
  for (int i = 0; i < count; ++i)
    m.blocks.push_back(Block{i, 0, {i}, {}, std::nullopt, i});
  return m;
}

const DirectedEdge* MixedGraph::find_directed(int from, int to) const {
  for (const auto& e : directed)
    if (e.from == from && e.to == to) return &e;
  return nullptr;
}

const UndirectedEdge* MixedGraph::find_undirected(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : undirected)
    if (e.a == a && e.b == b) return &e;
  return nullptr;
}

int MixedGraph::edges_between(int a, int b) const {
  int count = 0;
  if (find_undirected(a, b)) ++count;
  if (find_directed(a, b)) ++count;
  if (find_directed(b, a)) ++count;
  return count;
}

ColorSet MixedGraph::out_colors(int node) const {
  ColorSet acc;
  for (const auto& e : directed)
    if (e.from == node) acc |= e.colors;
  return acc;
}

std::optional<ColorSet> MixedGraph::uniform_out_colors(int node) const {
  std::optional<ColorSet> common;
  for (const auto& e : directed) {
    if (e.from != node) continue;
    if (!common)
      common = e.colors;
    else if (*common != e.colors)
      return std::nullopt;
  }
  return common;
}

std::vector<std::vector<int>> MixedGraph::weak_components() const {
  UnionFind uf(node_count());
  // Block ids are positions 0..count-1 everywhere in this project.
  std::vector<int> index(node_count());
  for (int i = 0; i < node_count(); ++i) index[blocks[i].id] = i;
  for (const auto& e : directed) uf.unite(index[e.from], index[e.to]);
  auto groups = uf.groups();
  for (auto& g : groups)
    for (int& x : g) x = blocks[x].id;
  return groups;
}

void MixedGraph::canonicalize_sigma_classes() {
  std::sort(directed.begin(), directed.end(),
            [](const DirectedEdge& x, const DirectedEdge& y) {
              return std::pair(x.from, x.to) < std::pair(y.from, y.to);
            });
  std::map<int, int> renumber;
  for (auto& e : directed) {
    auto [it, fresh] = renumber.emplace(e.sigma_class, static_cast<int>(renumber.size()));
    e.sigma_class = it->second;
    (void)fresh;
  }
}

RootedTreeCheck check_rooted_tree(const MixedGraph& m) {
  RootedTreeCheck out;
  int n = m.node_count();
  if (n == 0) {
    out.reason = "empty graph";
    return out;
  }

  for (const auto& e : m.directed)
    if (m.find_directed(e.to, e.from)) {
      out.reason = "mutual directed edges";
      out.witness = {e.from, e.to};
      return out;
    }
  for (const auto& e : m.directed)
    for (const auto& f : m.directed)
      if (e.to == f.from && e.from != f.to && !m.find_directed(e.from, f.to)) {
        out.reason = "not transitive";
        out.witness = {e.from, e.to, f.to};
        return out;
      }
  // Ancestor sets must be chains, otherwise the transitive reduction has a
  // node with two incomparable parents.
  for (const auto& b : m.blocks) {
    std::vector<int> ancestors;
    for (const auto& e : m.directed)
      if (e.to == b.id) ancestors.push_back(e.from);
    for (std::size_t i = 0; i < ancestors.size(); ++i)
      for (std::size_t j = i + 1; j < ancestors.size(); ++j)
        if (!m.find_directed(ancestors[i], ancestors[j]) &&
            !m.find_directed(ancestors[j], ancestors[i])) {
          out.reason = "incomparable ancestors";
          out.witness = {ancestors[i], ancestors[j], b.id};
          return out;
        }
  }

  std::optional<int> root;
  for (const auto& b : m.blocks) {
    bool reaches_all = true;
    for (const auto& c : m.blocks)
      if (c.id != b.id && !m.find_directed(b.id, c.id)) {
        reaches_all = false;
        break;
      }
    if (reaches_all) {
      root = b.id;
      break;
    }
  }
  if (!root) {
    out.reason = "no root reaching every node";
    return out;
  }
  out.is_tree = true;
  out.root = root;
  return out;
}

bool is_rooted_tree(const MixedGraph& m) { return check_rooted_tree(m).is_tree; }

std::optional<int> tree_root(const MixedGraph& m) {
  auto check = check_rooted_tree(m);
  return check.is_tree ? check.root : std::nullopt;
}

ColorSet tau_of_tree(const MixedGraph& m) {
  auto root = tree_root(m);
  if (!root)
    throw std::invalid_argument("tau_of_tree: not a rooted tree");
  if (m.node_count() == 1) return ColorSet();
  auto colors = m.uniform_out_colors(*root);
  if (!colors)
    throw std::invalid_argument("tau_of_tree: root edges disagree on colors");
  return *colors;
}

}  // namespace gallai
