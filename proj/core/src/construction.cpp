#include "gallai/construction.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "gallai/canonical.hpp"
#include "gallai/reduction.hpp"
#include "gallai/union_find.hpp"

namespace gallai {

namespace {

std::pair<int, int> two_colors_of(ColorSet s) {
  if (s.size() != 2)
    throw std::invalid_argument("expected exactly two colors");
  auto v = s.values();
  return {v[0], v[1]};
}

std::map<int, int> position_of_nodes(const MixedGraph& m) {
  std::map<int, int> pos;
  for (int i = 0; i < m.node_count(); ++i) {
    if (!pos.emplace(m.blocks[i].id, i).second)
      throw std::invalid_argument("duplicate node id in mixed graph");
  }
  return pos;
}

// Singleton-block mixed graph mirroring a simple multigraph; only undirected
// edges. Shared by gallai_graph_base and the family seeding, which does not
// impose the two-color limit.
MixedGraph undirected_mirror(const ColoredMultigraph& g) {
  MixedGraph m = MixedGraph::abstract_nodes(g.vertex_count(), g.palette());
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u) {
      ColorSet s = g.colors(u, v);
      if (s.size() != 1)
        throw std::invalid_argument("mirror requires one color per pair");
      m.undirected.push_back({u, v, s});
    }
  return m;
}

ColoredMultigraph relabel_colors(const ColoredMultigraph& g,
                                 const std::vector<int>& perm) {
  ColoredMultigraph h(g.vertex_count(), g.palette());
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u) {
      ColorSet t;
      for (int k : g.colors(u, v).values()) t.add(perm[k]);
      h.set_colors(u, v, t);
    }
  return h;
}

MixedGraph relabel_colors(const MixedGraph& m, const std::vector<int>& perm) {
  MixedGraph h = m;
  auto remap = [&](ColorSet s) {
    ColorSet t;
    for (int k : s.values()) t.add(perm[k]);
    return t;
  };
  for (auto& e : h.undirected) e.colors = remap(e.colors);
  for (auto& e : h.directed) e.colors = remap(e.colors);
  return h;
}

// Exact (label-sensitive) keys used when expanding color relabelings of an
// isomorphism-class representative; canonical codes would collapse them.
std::string exact_key(const ColoredMultigraph& g) {
  std::string key;
  key.push_back(static_cast<char>(g.vertex_count()));
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u)
      key.push_back(static_cast<char>(g.colors(u, v).bits()));
  return key;
}

std::string exact_key(const MixedGraph& m) {
  std::string key;
  key.push_back(static_cast<char>(m.node_count()));
  auto und = m.undirected;
  std::sort(und.begin(), und.end(), [](const auto& a, const auto& b) {
    return std::tie(a.a, a.b, a.colors) < std::tie(b.a, b.b, b.colors);
  });
  for (const auto& e : und) {
    key.push_back('u');
    key.push_back(static_cast<char>(e.a));
    key.push_back(static_cast<char>(e.b));
    key.push_back(static_cast<char>(e.colors.bits()));
  }
  for (const auto& e : m.directed) {
    key.push_back('d');
    key.push_back(static_cast<char>(e.from));
    key.push_back(static_cast<char>(e.to));
    key.push_back(static_cast<char>(e.colors.bits()));
    key.push_back(static_cast<char>(e.sigma_class));
  }
  return key;
}

std::vector<std::vector<int>> palette_permutations(const Palette& palette) {
  std::vector<int> perm(palette.size());
  for (int i = 0; i < palette.size(); ++i) perm[i] = i;
  std::vector<std::vector<int>> all;
  do {
    all.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return all;
}

void for_each_set_partition(
    int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> rgs(k, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == k) {
      f(rgs);
      return;
    }
    for (int v = 0; v <= used; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(used, v + 1));
    }
  };
  if (k == 0) {
    f(rgs);
    return;
  }
  rec(rec, 1, 1);  // rgs[0] is pinned to 0
}

}  // namespace

int TildePartition::class_of(int element) const {
  for (int i = 0; i < static_cast<int>(classes.size()); ++i)
    if (std::binary_search(classes[i].begin(), classes[i].end(), element))
      return i;
  throw std::out_of_range("element not in partition");
}

TildePartition tilde_classes(const ColoredMultigraph& g, ColorSet two_colors) {
  two_colors_of(two_colors);
  const int n = g.vertex_count();
  UnionFind uf(n);
  TildePartition p;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (!g.colors(u, v).subset_of(two_colors)) {
        uf.unite(u, v);
        p.generating_pairs.push_back({u, v});
      }
  p.classes = uf.groups();
  return p;
}

TildePartition tilde_classes(const MixedGraph& m, ColorSet two_colors) {
  two_colors_of(two_colors);
  auto pos = position_of_nodes(m);
  UnionFind uf(m.node_count());
  std::set<std::pair<int, int>> pairs;
  auto consider = [&](int a, int b, ColorSet colors) {
    if (colors.subset_of(two_colors)) return;
    int i = pos.at(a), j = pos.at(b);
    if (i > j) std::swap(i, j);
    uf.unite(i, j);
    pairs.insert({i, j});
  };
  for (const auto& e : m.undirected) consider(e.a, e.b, e.colors);
  for (const auto& e : m.directed) consider(e.from, e.to, e.colors);
  TildePartition p;
  // Positions translate back to ids so callers can look elements up directly.
  for (auto gpair : pairs)
    p.generating_pairs.push_back(
        {m.blocks[gpair.first].id, m.blocks[gpair.second].id});
  for (auto& grp : uf.groups()) {
    std::vector<int> ids;
    for (int i : grp) ids.push_back(m.blocks[i].id);
    std::sort(ids.begin(), ids.end());
    p.classes.push_back(std::move(ids));
  }
  std::sort(p.classes.begin(), p.classes.end());
  return p;
}

std::vector<Signature> signature_choices(const TildePartition& partition,
                                         ColorSet two_colors) {
  auto [c0, c1] = two_colors_of(two_colors);
  const int k = partition.class_count();
  if (k > 20) throw std::invalid_argument("too many classes to enumerate");
  std::vector<Signature> out;
  if (k == 0) return out;
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Signature sig;
    for (int i = 0; i < k; ++i) {
      ColorSet value = ColorSet::single((mask >> i) & 1 ? c1 : c0);
      for (int element : partition.classes[i])
        sig.entries.push_back({element, value});
    }
    std::sort(sig.entries.begin(), sig.entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.push_back(std::move(sig));
  }
  return out;
}

ColoredMultigraph uniform_clique(int size, ColorSet colors,
                                 const Palette& palette) {
  ColoredMultigraph g(size, palette);
  for (int v = 1; v < size; ++v)
    for (int u = 0; u < v; ++u) g.set_colors(u, v, colors);
  return g;
}

namespace {

struct BaseInfo {
  std::map<int, int> pos;            // node id -> position
  std::vector<ColorSet> out_colors;  // per position; empty if none
  std::vector<bool> dominating;
};

// Shared validation for gamma and delta_f: one edge per node pair, edge
// color arities, and per-node consistency of out-edge colors.
BaseInfo analyze_base(const MixedGraph& base) {
  BaseInfo info;
  info.pos = position_of_nodes(base);
  const int k = base.node_count();
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i)
      if (base.edges_between(base.blocks[i].id, base.blocks[j].id) != 1)
        throw std::invalid_argument("base is not a complete mixed graph");
  info.out_colors.assign(k, ColorSet{});
  info.dominating.assign(k, false);
  for (const auto& e : base.directed) {
    if (e.colors.size() != 2)
      throw std::invalid_argument("directed base edge needs two colors");
    int p = info.pos.at(e.from);
    if (info.dominating[p] && !(info.out_colors[p] == e.colors))
      throw std::invalid_argument("node has out-edges with differing colors");
    info.dominating[p] = true;
    info.out_colors[p] = e.colors;
  }
  return info;
}

// Signature classes of the base's directed edges: class id -> edges, with
// same-source and same-color requirements enforced.
std::map<int, std::vector<const DirectedEdge*>> signature_classes(
    const MixedGraph& base) {
  std::map<int, std::vector<const DirectedEdge*>> classes;
  for (const auto& e : base.directed) classes[e.sigma_class].push_back(&e);
  for (auto& [id, edges] : classes) {
    for (const auto* e : edges) {
      if (e->from != edges.front()->from)
        throw std::invalid_argument("signature class spans several sources");
      if (!(e->colors == edges.front()->colors))
        throw std::invalid_argument("signature class mixes edge colors");
    }
  }
  return classes;
}

void validate_signature_entries(const Signature& sig,
                                const std::vector<int>& expected_keys,
                                ColorSet edge_colors, bool single_valued) {
  if (sig.entries.size() != expected_keys.size())
    throw std::invalid_argument("signature does not cover the source");
  ColorSet used;
  for (std::size_t i = 0; i < expected_keys.size(); ++i) {
    const auto& [key, value] = sig.entries[i];
    if (key != expected_keys[i])
      throw std::invalid_argument("signature does not cover the source");
    if (value.empty() || !value.subset_of(edge_colors))
      throw std::invalid_argument("signature value outside edge colors");
    if (single_valued && value.size() != 1)
      throw std::invalid_argument("signature value must be a single color");
    used |= value;
  }
  if (!(used == edge_colors))
    throw std::invalid_argument("signature is not onto the edge colors");
}

}  // namespace

ColoredMultigraph gamma(const ConstructionSpec& spec) {
  const MixedGraph& base = spec.base;
  const int k = base.node_count();
  if (k < 1) throw std::invalid_argument("empty base");
  BaseInfo info = analyze_base(base);

  std::vector<const ColoredMultigraph*> leaf(k, nullptr);
  for (const auto& la : spec.leaves) {
    auto it = info.pos.find(la.node);
    if (it == info.pos.end())
      throw std::invalid_argument("leaf assigned to unknown node");
    if (leaf[it->second])
      throw std::invalid_argument("node has two leaves");
    leaf[it->second] = &la.graph;
  }
  for (int p = 0; p < k; ++p) {
    if (!leaf[p]) throw std::invalid_argument("node lacks a leaf");
    leaf[p]->validate();
    if (!(leaf[p]->palette() == base.palette))
      throw std::invalid_argument("leaf palette differs from base palette");
    if (info.dominating[p]) {
      if (leaf[p]->vertex_count() < 2)
        throw std::invalid_argument("dominating leaf needs two vertices");
      if (!is_uniformly_colored(*leaf[p], info.out_colors[p]))
        throw std::invalid_argument(
            "dominating leaf must be uniform on the out-edge colors");
    } else if (!is_gallai(*leaf[p])) {
      throw std::invalid_argument("leaf has a rainbow triangle");
    }
  }

  auto classes = signature_classes(base);
  std::map<std::pair<int, int>, const Signature*> sig_of_edge;
  for (const auto& sa : spec.signatures) {
    if (!base.find_directed(sa.from, sa.to))
      throw std::invalid_argument("signature on a non-directed edge");
    if (!sig_of_edge.emplace(std::pair{sa.from, sa.to}, &sa.signature).second)
      throw std::invalid_argument("edge has two signatures");
  }
  for (const auto& e : base.directed) {
    auto it = sig_of_edge.find({e.from, e.to});
    if (it == sig_of_edge.end())
      throw std::invalid_argument("directed edge lacks a signature");
    int p = info.pos.at(e.from);
    std::vector<int> keys(leaf[p]->vertex_count());
    for (int i = 0; i < leaf[p]->vertex_count(); ++i) keys[i] = i;
    validate_signature_entries(*it->second, keys, e.colors, false);
  }
  for (const auto& [id, edges] : classes) {
    const Signature* first = sig_of_edge.at({edges.front()->from,
                                             edges.front()->to});
    for (const auto* e : edges)
      if (!(*sig_of_edge.at({e->from, e->to}) == *first))
        throw std::invalid_argument(
            "signatures differ within a signature class");
  }

  std::vector<int> offset(k + 1, 0);
  for (int p = 0; p < k; ++p)
    offset[p + 1] = offset[p] + leaf[p]->vertex_count();
  ColoredMultigraph g(offset[k], base.palette);

  for (int p = 0; p < k; ++p)
    for (int v = 1; v < leaf[p]->vertex_count(); ++v)
      for (int u = 0; u < v; ++u)
        g.set_colors(offset[p] + u, offset[p] + v, leaf[p]->colors(u, v));

  for (const auto& e : base.undirected) {
    int pu = info.pos.at(e.a), pv = info.pos.at(e.b);
    for (int x = 0; x < leaf[pu]->vertex_count(); ++x)
      for (int y = 0; y < leaf[pv]->vertex_count(); ++y)
        g.set_colors(offset[pu] + x, offset[pv] + y, e.colors);
  }
  for (const auto& e : base.directed) {
    int pu = info.pos.at(e.from), pv = info.pos.at(e.to);
    const Signature& sig = *sig_of_edge.at({e.from, e.to});
    for (int x = 0; x < leaf[pu]->vertex_count(); ++x)
      for (int y = 0; y < leaf[pv]->vertex_count(); ++y)
        g.set_colors(offset[pu] + x, offset[pv] + y, sig.entries[x].second);
  }
  return g;
}

std::vector<MixedGraph> delta_t(const MixedGraph& m, ColorSet two_colors,
                                const DeltaTOptions& options) {
  two_colors_of(two_colors);
  const int n = m.node_count();
  if (n < 1) throw std::invalid_argument("empty mixed graph");
  auto pos = position_of_nodes(m);

  auto components = m.weak_components();
  std::vector<int> comp_of(n, -1);
  for (int c = 0; c < static_cast<int>(components.size()); ++c)
    for (int id : components[c]) comp_of[pos.at(id)] = c;

  // Components joined by any color outside the pair must share a signature;
  // coarsenings of the resulting partition are all valid.
  UnionFind uf(static_cast<int>(components.size()));
  auto join = [&](int a, int b, ColorSet colors) {
    if (colors.subset_of(two_colors)) return;
    int ca = comp_of[pos.at(a)], cb = comp_of[pos.at(b)];
    if (ca != cb) uf.unite(ca, cb);
  };
  for (const auto& e : m.undirected) join(e.a, e.b, e.colors);
  for (const auto& e : m.directed) join(e.from, e.to, e.colors);

  auto merged = uf.groups();
  const int k = static_cast<int>(merged.size());
  std::vector<int> block_of(n, -1);
  for (int b = 0; b < k; ++b)
    for (int comp : merged[b])
      for (int id : components[comp]) block_of[pos.at(id)] = b;

  const int root = n;
  int inherited_max = 0;
  for (const auto& e : m.directed)
    inherited_max = std::max(inherited_max, e.sigma_class + 1);

  std::vector<MixedGraph> out;
  auto emit = [&](const std::vector<int>& rgs) {
    MixedGraph t = MixedGraph::abstract_nodes(n + 1, m.palette);
    for (const auto& e : m.undirected)
      t.undirected.push_back({pos.at(e.a), pos.at(e.b), e.colors});
    int part_classes = 0;
    for (int b = 0; b < k; ++b) part_classes = std::max(part_classes, rgs[b] + 1);
    for (const auto& e : m.directed)
      t.directed.push_back({pos.at(e.from), pos.at(e.to), e.colors,
                            part_classes + e.sigma_class});
    for (int v = 0; v < n; ++v)
      t.directed.push_back({root, v, two_colors, rgs[block_of[v]]});
    t.canonicalize_sigma_classes();
    out.push_back(std::move(t));
  };

  if (options.restrict_to_generated) {
    std::vector<int> identity(k);
    for (int b = 0; b < k; ++b) identity[b] = b;
    emit(identity);
  } else {
    for_each_set_partition(k, emit);
  }
  return out;
}

MixedGraph delta_f(const MixedGraph& base, const std::vector<MixedGraph>& trees,
                   const std::map<int, Signature>& class_signatures) {
  const int k = base.node_count();
  if (k < 1) throw std::invalid_argument("empty base");
  BaseInfo info = analyze_base(base);
  if (static_cast<int>(trees.size()) != k)
    throw std::invalid_argument("need one tree per base node");

  std::vector<std::map<int, int>> tree_pos(k);
  for (int p = 0; p < k; ++p) {
    if (!(trees[p].palette == base.palette))
      throw std::invalid_argument("tree palette differs from base palette");
    if (!is_rooted_tree(trees[p]))
      throw std::invalid_argument("slot graph is not a rooted tree");
    tree_pos[p] = position_of_nodes(trees[p]);
    if (info.dominating[p]) {
      if (trees[p].node_count() < 2)
        throw std::invalid_argument("dominating slot needs a tree of size two");
      if (!(tau_of_tree(trees[p]) == info.out_colors[p]))
        throw std::invalid_argument("tree tau differs from out-edge colors");
    }
  }

  auto classes = signature_classes(base);
  for (const auto& [id, edges] : classes) {
    auto it = class_signatures.find(id);
    if (it == class_signatures.end())
      throw std::invalid_argument("signature class lacks a signature");
    int p = info.pos.at(edges.front()->from);
    std::vector<int> keys;
    for (const auto& b : trees[p].blocks) keys.push_back(b.id);
    std::sort(keys.begin(), keys.end());
    validate_signature_entries(it->second, keys, edges.front()->colors, true);
    TildePartition tp = tilde_classes(trees[p], edges.front()->colors);
    for (const auto& cls : tp.classes) {
      ColorSet first;
      for (std::size_t i = 0; i < it->second.entries.size(); ++i)
        if (it->second.entries[i].first == cls.front())
          first = it->second.entries[i].second;
      for (int element : cls)
        for (const auto& [key, value] : it->second.entries)
          if (key == element && !(value == first))
            throw std::invalid_argument(
                "signature not constant on a tilde class");
    }
  }

  std::vector<int> offset(k + 1, 0);
  for (int p = 0; p < k; ++p) offset[p + 1] = offset[p] + trees[p].node_count();
  MixedGraph out = MixedGraph::abstract_nodes(offset[k], base.palette);

  int class_offset = 0;
  for (int p = 0; p < k; ++p) {
    const MixedGraph& t = trees[p];
    for (const auto& e : t.undirected) {
      int a = offset[p] + tree_pos[p].at(e.a);
      int b = offset[p] + tree_pos[p].at(e.b);
      out.undirected.push_back({std::min(a, b), std::max(a, b), e.colors});
    }
    int local_max = 0;
    for (const auto& e : t.directed) {
      out.directed.push_back({offset[p] + tree_pos[p].at(e.from),
                              offset[p] + tree_pos[p].at(e.to), e.colors,
                              class_offset + e.sigma_class});
      local_max = std::max(local_max, e.sigma_class + 1);
    }
    class_offset += local_max;
  }

  auto signature_value = [&](const Signature& sig, int key) {
    for (const auto& [entry_key, value] : sig.entries)
      if (entry_key == key) return value;
    throw std::invalid_argument("signature misses a tree node");
  };
  for (int j = 1; j < k; ++j)
    for (int i = 0; i < j; ++i) {
      int idu = base.blocks[i].id, idv = base.blocks[j].id;
      if (const UndirectedEdge* e = base.find_undirected(idu, idv)) {
        for (int x = 0; x < trees[i].node_count(); ++x)
          for (int y = 0; y < trees[j].node_count(); ++y)
            out.undirected.push_back({offset[i] + x, offset[j] + y, e->colors});
      } else {
        const DirectedEdge* de = base.find_directed(idu, idv);
        if (!de) de = base.find_directed(idv, idu);
        int pu = info.pos.at(de->from), pv = info.pos.at(de->to);
        const Signature& sig = class_signatures.at(de->sigma_class);
        for (int xi = 0; xi < trees[pu].node_count(); ++xi) {
          ColorSet color = signature_value(sig, trees[pu].blocks[xi].id);
          for (int y = 0; y < trees[pv].node_count(); ++y) {
            int a = offset[pu] + xi, b = offset[pv] + y;
            out.undirected.push_back({std::min(a, b), std::max(a, b), color});
          }
        }
      }
    }
  std::sort(out.undirected.begin(), out.undirected.end(),
            [](const auto& a, const auto& b) {
              return std::tie(a.a, a.b, a.colors) < std::tie(b.a, b.b, b.colors);
            });
  out.canonicalize_sigma_classes();
  return out;
}

MixedGraph gallai_graph_base(const ColoredMultigraph& outer) {
  ColorSet used;
  for (int v = 1; v < outer.vertex_count(); ++v)
    for (int u = 0; u < v; ++u) {
      ColorSet s = outer.colors(u, v);
      if (s.size() != 1)
        throw std::invalid_argument("outer graph must be simple");
      used |= s;
    }
  if (used.size() > 2)
    throw std::invalid_argument("outer graph uses more than two colors");
  return undirected_mirror(outer);
}

std::vector<ColoredMultigraph> simple_gallai_family(int size_bound,
                                                    const Palette& palette) {
  if (size_bound < 1) throw std::invalid_argument("size bound must be positive");
  std::vector<ColoredMultigraph> family{ColoredMultigraph(1, palette)};
  std::set<CanonicalCode> seen{canonical_form(family[0])};

  // Per-slot leaves are family representatives under every color relabeling;
  // the family itself stays one-per-isomorphism-class.
  auto perms = palette_permutations(palette);
  std::vector<std::vector<ColoredMultigraph>> pool(size_bound + 1);
  auto fill_pool = [&](int size) {
    std::set<std::string> keys;
    for (const auto& g : family) {
      if (g.vertex_count() != size) continue;
      for (const auto& perm : perms) {
        ColoredMultigraph h = relabel_colors(g, perm);
        if (keys.insert(exact_key(h)).second) pool[size].push_back(h);
      }
    }
  };
  fill_pool(1);

  for (int n = 2; n <= size_bound; ++n) {
    std::map<CanonicalCode, ColoredMultigraph> batch;
    for (int k = 2; k <= n; ++k) {
      // Outer colors can be pinned to the first two palette entries: slot
      // relabelings restore every variant up to whole-graph isomorphism.
      const int npairs = pair_count(k);
      const int second = palette.size() > 1 ? 1 : 0;
      for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << npairs); ++mask) {
        ColoredMultigraph outer(k, palette);
        for (int p = 0; p < npairs; ++p) {
          int color = (mask >> p) & 1 ? second : 0;
          int j = 1, rest = p;
          while (rest >= j) rest -= j, ++j;
          outer.set_colors(rest, j, ColorSet::single(color));
        }
        ConstructionSpec spec;
        spec.base = undirected_mirror(outer);
        spec.leaves.resize(k, {0, ColoredMultigraph(1, palette)});
        auto rec = [&](auto&& self, int slot, int remaining) -> void {
          if (slot == k) {
            if (remaining != 0) return;
            ColoredMultigraph g = gamma(spec);
            batch.emplace(canonical_form(g), g);
            return;
          }
          int max_size = remaining - (k - slot - 1);
          for (int s = 1; s <= max_size; ++s)
            for (const auto& leaf : pool[s]) {
              spec.leaves[slot] = {slot, leaf};
              self(self, slot + 1, remaining - s);
            }
        };
        rec(rec, 0, n);
      }
    }
    for (auto& [code, g] : batch)
      if (seen.insert(code).second) family.push_back(std::move(g));
    fill_pool(n);
  }
  return family;
}

std::vector<MixedGraph> enumerate_delta_f(const std::vector<MixedGraph>& family,
                                          const MixedGraph& base,
                                          int size_bound) {
  const int k = base.node_count();
  BaseInfo info;
  try {
    info = analyze_base(base);
  } catch (const std::invalid_argument&) {
    return {};  // no tree assignment can realize an inconsistent base
  }

  auto perms = palette_permutations(base.palette);
  std::vector<MixedGraph> trees;
  {
    std::set<std::string> keys;
    for (const auto& m : family) {
      if (m.node_count() > size_bound || !is_rooted_tree(m)) continue;
      for (const auto& perm : perms) {
        MixedGraph t = relabel_colors(m, perm);
        if (keys.insert(exact_key(t)).second) trees.push_back(std::move(t));
      }
    }
  }

  std::vector<std::vector<const MixedGraph*>> slot_options(k);
  for (int p = 0; p < k; ++p)
    for (const auto& t : trees) {
      if (info.dominating[p]) {
        if (t.node_count() < 2 || !(tau_of_tree(t) == info.out_colors[p]))
          continue;
      }
      slot_options[p].push_back(&t);
    }

  auto classes = signature_classes(base);
  std::vector<MixedGraph> out;
  std::vector<const MixedGraph*> chosen(k, nullptr);

  auto realize = [&]() {
    std::vector<MixedGraph> slot_trees;
    for (int p = 0; p < k; ++p) slot_trees.push_back(*chosen[p]);
    // Independent signature choice per class; the product of all options.
    std::vector<int> class_ids;
    std::vector<std::vector<Signature>> options;
    for (const auto& [id, edges] : classes) {
      int p = info.pos.at(edges.front()->from);
      auto choices = signature_choices(
          tilde_classes(slot_trees[p], edges.front()->colors),
          edges.front()->colors);
      if (choices.empty()) return;
      class_ids.push_back(id);
      options.push_back(std::move(choices));
    }
    std::vector<std::size_t> idx(class_ids.size(), 0);
    while (true) {
      std::map<int, Signature> assignment;
      for (std::size_t c = 0; c < class_ids.size(); ++c)
        assignment.emplace(class_ids[c], options[c][idx[c]]);
      out.push_back(delta_f(base, slot_trees, assignment));
      std::size_t c = 0;
      while (c < idx.size() && ++idx[c] == options[c].size()) idx[c++] = 0;
      if (c == idx.size()) break;
    }
  };

  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == k) {
      realize();
      return;
    }
    int reserve = 0;
    for (int q = slot + 1; q < k; ++q) reserve += info.dominating[q] ? 2 : 1;
    for (const auto* t : slot_options[slot]) {
      if (t->node_count() > remaining - reserve) continue;
      chosen[slot] = t;
      self(self, slot + 1, remaining - t->node_count());
    }
  };
  rec(rec, 0, size_bound);
  return out;
}

std::vector<MixedGraph> iterate_m_prime(int size_bound, const Palette& palette,
                                        int depth) {
  if (size_bound < 1 || depth < 0)
    throw std::invalid_argument("bounds must be positive");
  std::map<CanonicalCode, MixedGraph> family;
  for (const auto& g : simple_gallai_family(size_bound, palette)) {
    MixedGraph m = undirected_mirror(g);
    family.emplace(canonical_form(m), std::move(m));
  }

  std::vector<ColorSet> color_pairs;
  for (int b = 1; b < palette.size(); ++b)
    for (int a = 0; a < b; ++a)
      color_pairs.push_back(ColorSet::of({a, b}));

  for (int round = 0; round < depth; ++round) {
    std::vector<MixedGraph> snapshot_copy;
    snapshot_copy.reserve(family.size());
    for (const auto& [code, m] : family) snapshot_copy.push_back(m);

    bool grew = false;
    auto add = [&](MixedGraph&& m) {
      CanonicalCode code = canonical_form(m);
      if (family.emplace(code, std::move(m)).second) grew = true;
    };
    for (const auto& m : snapshot_copy) {
      if (m.node_count() < size_bound)
        for (ColorSet pair : color_pairs)
          for (auto& t : delta_t(m, pair)) add(std::move(t));
      for (auto& f : enumerate_delta_f(snapshot_copy, m, size_bound))
        add(std::move(f));
    }
    if (!grew) break;
  }

  std::vector<MixedGraph> out;
  out.reserve(family.size());
  for (auto& [code, m] : family) out.push_back(std::move(m));
  std::stable_sort(out.begin(), out.end(),
                   [](const MixedGraph& a, const MixedGraph& b) {
                     return a.node_count() < b.node_count();
                   });
  return out;
}

void enumerate_gamma_realizations(
    const MixedGraph& base, int max_vertices,
    const std::function<void(const ColoredMultigraph&)>& sink, int max_leaf) {
  const int k = base.node_count();
  BaseInfo info;
  try {
    info = analyze_base(base);
  } catch (const std::invalid_argument&) {
    return;  // no leaf assignment can realize an inconsistent base
  }
  const Palette& palette = base.palette;
  const int leaf_cap =
      max_leaf > 0 ? std::min(max_leaf, max_vertices) : max_vertices;

  std::vector<std::vector<ColoredMultigraph>> options(k);
  for (int p = 0; p < k; ++p) {
    if (info.dominating[p]) {
      for (int s = 2; s <= leaf_cap; ++s)
        options[p].push_back(uniform_clique(s, info.out_colors[p], palette));
    } else {
      options[p].push_back(ColoredMultigraph(1, palette));
      for (int s = 2; s <= leaf_cap; ++s)
        for (std::uint32_t bits = 1;
             bits < (std::uint32_t{1} << palette.size()); ++bits) {
          ColorSet colors(bits);
          if (colors.size() > 2) continue;
          options[p].push_back(uniform_clique(s, colors, palette));
        }
    }
  }

  auto classes = signature_classes(base);
  ConstructionSpec spec;
  spec.base = base;
  spec.leaves.assign(k, {0, ColoredMultigraph(1, palette)});

  auto with_leaves = [&]() {
    std::vector<int> class_ids;
    std::vector<std::vector<Signature>> sig_options;
    for (const auto& [id, edges] : classes) {
      int p = info.pos.at(edges.front()->from);
      auto choices =
          signature_choices(tilde_classes(spec.leaves[p].graph,
                                          edges.front()->colors),
                            edges.front()->colors);
      if (choices.empty()) return;
      class_ids.push_back(id);
      sig_options.push_back(std::move(choices));
    }
    std::vector<std::size_t> idx(class_ids.size(), 0);
    while (true) {
      spec.signatures.clear();
      for (const auto& e : base.directed) {
        std::size_t c = std::find(class_ids.begin(), class_ids.end(),
                                  e.sigma_class) -
                        class_ids.begin();
        spec.signatures.push_back({e.from, e.to, sig_options[c][idx[c]]});
      }
      sink(gamma(spec));
      std::size_t c = 0;
      while (c < idx.size() && ++idx[c] == sig_options[c].size()) idx[c++] = 0;
      if (c == idx.size() || idx.empty()) break;
    }
  };

  auto rec = [&](auto&& self, int slot, int remaining) -> void {
    if (slot == k) {
      with_leaves();
      return;
    }
    int reserve = 0;
    for (int q = slot + 1; q < k; ++q) reserve += info.dominating[q] ? 2 : 1;
    for (const auto& leaf : options[slot]) {
      if (leaf.vertex_count() > remaining - reserve) continue;
      spec.leaves[slot] = {base.blocks[slot].id, leaf};
      self(self, slot + 1, remaining - leaf.vertex_count());
    }
  };
  rec(rec, 0, max_vertices);
}

}  // namespace gallai
