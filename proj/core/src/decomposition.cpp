#include "gallai/decomposition.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gallai {

namespace {

void check_block_sets(const ColoredMultigraph& g, const std::vector<int>& U,
                      const std::vector<int>& V) {
  if (U.empty() || V.empty())
    throw std::invalid_argument("dominates: blocks must be nonempty");
  auto check_sorted = [&](const std::vector<int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i] < 0 || xs[i] >= g.vertex_count())
        throw std::invalid_argument("dominates: vertex out of range");
      if (i > 0 && xs[i - 1] >= xs[i])
        throw std::invalid_argument("dominates: blocks must be sorted and distinct");
    }
  };
  check_sorted(U);
  check_sorted(V);
  for (int u : U)
    if (std::binary_search(V.begin(), V.end(), u))
      throw std::invalid_argument("dominates: blocks overlap");
}

}  // namespace

std::optional<Signature> dominates(const ColoredMultigraph& g,
                                   const std::vector<int>& U,
                                   const std::vector<int>& V) {
  check_block_sets(g, U, V);
  if (g.colors_between(U, V).size() <= 1) return std::nullopt;

  if (U.size() == 1 && V.size() == 1) {
    if (U[0] > V[0]) return std::nullopt;
    return Signature::singleton(U[0], g.colors(U[0], V[0]));
  }

  Signature sig;
  for (int u : U) {
    ColorSet toward = g.colors_between({u}, V);
    for (int v : V)
      if (g.colors(u, v) != toward) return std::nullopt;
    sig.entries.emplace_back(u, toward);
  }
  return sig;
}

namespace {

// Assign sigma class ids: edges sorted by (from, to); equal (initial block,
// signature) pairs share a class, classes numbered by first appearance.
void assign_sigma_classes(MixedGraph& m, std::vector<Signature> sigs) {
  std::vector<std::size_t> order(m.directed.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return std::pair(m.directed[x].from, m.directed[x].to) <
           std::pair(m.directed[y].from, m.directed[y].to);
  });
  std::vector<std::pair<int, Signature>> keys;
  std::vector<DirectedEdge> sorted;
  for (std::size_t i : order) {
    DirectedEdge e = m.directed[i];
    std::pair<int, Signature> key{e.from, std::move(sigs[i])};
    int cls = -1;
    for (std::size_t k = 0; k < keys.size(); ++k)
      if (keys[k] == key) {
        cls = static_cast<int>(k);
        break;
      }
    if (cls < 0) {
      cls = static_cast<int>(keys.size());
      keys.push_back(std::move(key));
    }
    e.sigma_class = cls;
    sorted.push_back(e);
  }
  m.directed = std::move(sorted);
}

}  // namespace

DecompositionSequence decompose(const ColoredMultigraph& g) {
  g.validate();
  DecompositionSequence seq;
  seq.source = g;

  int n = g.vertex_count();
  MixedGraph m0;
  m0.level = 0;
  m0.palette = g.palette();
  for (int i = 0; i < n; ++i) m0.blocks.push_back(Block{i, 0, {i}, {}, std::nullopt, i});
  std::vector<Signature> sigs;
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      ColorSet cs = g.colors(u, v);
      if (cs.size() == 1)
        m0.undirected.push_back(UndirectedEdge{u, v, cs});
      else {
        m0.directed.push_back(DirectedEdge{u, v, cs, 0});
        sigs.push_back(Signature::singleton(u, cs));
      }
    }
  std::sort(m0.undirected.begin(), m0.undirected.end(),
            [](const UndirectedEdge& x, const UndirectedEdge& y) {
              return std::pair(x.a, x.b) < std::pair(y.a, y.b);
            });
  assign_sigma_classes(m0, std::move(sigs));
  seq.levels.push_back(std::move(m0));

  std::vector<ColorSet> tau0(n);
  for (const auto& e : seq.levels[0].directed) tau0[e.from] |= e.colors;
  seq.tau_table.push_back(std::move(tau0));

  while (!seq.levels.back().directed.empty()) {
    const MixedGraph& prev = seq.levels.back();
    const std::vector<ColorSet>& prev_tau = seq.tau_table.back();
    auto comps = prev.weak_components();

    MixedGraph next;
    next.level = prev.level + 1;
    next.palette = g.palette();
    std::vector<ColorSet> next_tau;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      Block b;
      b.id = static_cast<int>(i);
      b.level = next.level;
      b.children = comps[i];
      for (int child : comps[i])
        b.members.insert(b.members.end(), prev.blocks[child].members.begin(),
                         prev.blocks[child].members.end());
      std::sort(b.members.begin(), b.members.end());
      for (int child : comps[i]) {
        bool reaches_all = true;
        for (int other : comps[i])
          if (other != child && !prev.find_directed(child, other)) {
            reaches_all = false;
            break;
          }
        if (reaches_all) {
          b.root_child = child;
          break;
        }
      }
      b.base_root = b.root_child ? prev.blocks[*b.root_child].base_root : b.members[0];
      next_tau.push_back(b.root_child ? prev_tau[*b.root_child] : ColorSet());
      next.blocks.push_back(std::move(b));
    }

    std::vector<Signature> next_sigs;
    for (int q = 0; q < next.node_count(); ++q)
      for (int p = 0; p < q; ++p) {
        const auto& P = next.blocks[p].members;
        const auto& Q = next.blocks[q].members;
        ColorSet cs = g.colors_between(P, Q);
        if (cs.size() == 1) {
          next.undirected.push_back(UndirectedEdge{p, q, cs});
          continue;
        }
        if (auto sig = dominates(g, P, Q)) {
          next.directed.push_back(DirectedEdge{p, q, cs, 0});
          next_sigs.push_back(std::move(*sig));
        }
        if (auto sig = dominates(g, Q, P)) {
          next.directed.push_back(DirectedEdge{q, p, cs, 0});
          next_sigs.push_back(std::move(*sig));
        }
      }
    assign_sigma_classes(next, std::move(next_sigs));
    seq.levels.push_back(std::move(next));
    seq.tau_table.push_back(std::move(next_tau));
  }
  return seq;
}

ColorSet tau(const DecompositionSequence& seq, int level, int block) {
  if (level < 0 || level >= static_cast<int>(seq.levels.size()))
    throw std::invalid_argument("tau: level out of range");
  const auto& taus = seq.tau_table[level];
  if (block < 0 || block >= static_cast<int>(taus.size()))
    throw std::invalid_argument("tau: block out of range");
  return taus[block];
}

namespace {

std::string node_list(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// Clause 3: the directed part must be antisymmetric and transitive, every
// node's ancestors must form a chain, and each weak component needs a root
// with an edge to all of its other nodes.
std::pair<bool, std::string> check_rooted_tree_components(const MixedGraph& m) {
  for (const auto& e : m.directed)
    if (m.find_directed(e.to, e.from))
      return {false, "mutual directed edges between " + node_list({e.from, e.to})};
  for (const auto& e : m.directed)
    for (const auto& f : m.directed)
      if (e.to == f.from && e.from != f.to && !m.find_directed(e.from, f.to))
        return {false, "missing transitive edge " + node_list({e.from, f.to})};
  for (const auto& b : m.blocks) {
    std::vector<int> ancestors;
    for (const auto& e : m.directed)
      if (e.to == b.id) ancestors.push_back(e.from);
    for (std::size_t i = 0; i < ancestors.size(); ++i)
      for (std::size_t j = i + 1; j < ancestors.size(); ++j)
        if (!m.find_directed(ancestors[i], ancestors[j]) &&
            !m.find_directed(ancestors[j], ancestors[i]))
          return {false, "incomparable ancestors " +
                             node_list({ancestors[i], ancestors[j]}) + " of node " +
                             std::to_string(b.id)};
  }
  for (const auto& comp : m.weak_components()) {
    bool has_root = false;
    for (int candidate : comp) {
      bool reaches_all = true;
      for (int other : comp)
        if (other != candidate && !m.find_directed(candidate, other)) {
          reaches_all = false;
          break;
        }
      if (reaches_all) {
        has_root = true;
        break;
      }
    }
    if (!has_root)
      return {false, "component " + node_list(comp) + " has no root"};
  }
  return {true, ""};
}

}  // namespace

TreePropertyReport verify_tree_property(const MixedGraph& m) {
  auto fail = [](int clause, std::string detail) {
    return TreePropertyReport{false, clause, std::move(detail)};
  };

  for (const auto& b : m.blocks)
    for (const auto& c : m.blocks) {
      if (b.id >= c.id) continue;
      int count = m.edges_between(b.id, c.id);
      if (count != 1)
        return fail(1, "blocks " + node_list({b.id, c.id}) + " carry " +
                           std::to_string(count) + " edges");
    }

  for (const auto& e : m.undirected)
    if (e.colors.size() != 1)
      return fail(2, "undirected edge " + node_list({e.a, e.b}) + " carries " +
                         std::to_string(e.colors.size()) + " colors");
  for (const auto& e : m.directed)
    if (e.colors.size() != 2)
      return fail(2, "directed edge " + node_list({e.from, e.to}) + " carries " +
                         std::to_string(e.colors.size()) + " colors");

  auto tree = check_rooted_tree_components(m);
  if (!tree.first) return fail(3, tree.second);

  for (const auto& e : m.directed)
    for (const auto& f : m.directed) {
      if (e.to != f.from) continue;
      const DirectedEdge* uw = m.find_directed(e.from, f.to);
      if (!uw)
        return fail(4, "edges " + node_list({e.from, e.to}) + " and " +
                           node_list({f.from, f.to}) + " lack a closing edge");
      if (uw->sigma_class != e.sigma_class)
        return fail(4, "edges (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                           ") and (" + std::to_string(uw->from) + "," +
                           std::to_string(uw->to) + ") are in different signature classes");
    }
  return TreePropertyReport{};
}

TreePropertyReport verify_tree_property(const DecompositionSequence& seq, int level) {
  if (level < 0 || level >= static_cast<int>(seq.levels.size()))
    throw std::invalid_argument("verify_tree_property: level out of range");
  return verify_tree_property(seq.levels[level]);
}

PruneReport prune_block(const ColoredMultigraph& g, const DecompositionSequence& seq,
                        int level, int block_id) {
  if (level < 0 || level >= static_cast<int>(seq.levels.size()))
    throw std::invalid_argument("prune_block: level out of range");
  const auto& blocks = seq.levels[level].blocks;
  if (block_id < 0 || block_id >= static_cast<int>(blocks.size()))
    throw std::invalid_argument("prune_block: block out of range");
  const std::vector<int>& removed = blocks[block_id].members;

  std::vector<int> rest;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (!std::binary_search(removed.begin(), removed.end(), v)) rest.push_back(v);
  if (rest.empty())
    throw std::invalid_argument("prune_block: block covers every vertex");

  DecompositionSequence pruned = decompose(induced_subgraph(g, rest));

  for (int k = 0; k <= level; ++k) {
    std::set<std::vector<int>> full;
    for (const auto& b : seq.levels[k].blocks) full.insert(b.members);

    std::set<std::vector<int>> expected;
    int hk = std::min<int>(k, static_cast<int>(pruned.levels.size()) - 1);
    for (const auto& b : pruned.levels[hk].blocks) {
      std::vector<int> original;
      for (int local : b.members) original.push_back(rest[local]);
      expected.insert(std::move(original));
    }
    for (const auto& b : seq.levels[k].blocks) {
      bool inside = std::includes(removed.begin(), removed.end(),
                                  b.members.begin(), b.members.end());
      if (inside) expected.insert(b.members);
    }

    if (full != expected) {
      PruneReport r;
      r.passed = false;
      r.mismatch_level = k;
      r.detail = "partition mismatch after removing block " + std::to_string(block_id) +
                 " at level " + std::to_string(level);
      return r;
    }
  }
  return PruneReport{};
}

}  // namespace gallai
