#include "gallai/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace gallai {

namespace {

// Groups element ids by invariant key; classes come back ordered by key so
// every isomorphic graph produces the same class layout.
template <typename Key>
std::vector<std::vector<int>> group_by_key(const std::vector<Key>& keys) {
  std::map<Key, std::vector<int>> buckets;
  for (int i = 0; i < static_cast<int>(keys.size()); ++i)
    buckets[keys[i]].push_back(i);
  std::vector<std::vector<int>> classes;
  classes.reserve(buckets.size());
  for (auto& [key, members] : buckets) classes.push_back(std::move(members));
  return classes;
}

// Calls f(arrangement) for every concatenation of per-class permutations.
// Only permutations that keep elements inside their invariant class are
// candidates, which is exact because isomorphisms preserve the classes.
template <typename F>
void for_each_class_arrangement(std::vector<std::vector<int>> classes, F&& f) {
  std::vector<int> arrangement;
  auto rec = [&](auto&& self, std::size_t ci) -> void {
    if (ci == classes.size()) {
      arrangement.clear();
      for (const auto& cls : classes)
        arrangement.insert(arrangement.end(), cls.begin(), cls.end());
      f(arrangement);
      return;
    }
    auto& cls = classes[ci];
    std::sort(cls.begin(), cls.end());
    do {
      self(self, ci + 1);
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  rec(rec, 0);
}

// Bitmask remap table for a color arrangement: sigma[k] is the old color
// placed at new index k.
std::vector<std::uint32_t> color_remap_table(const std::vector<int>& sigma) {
  const int c = static_cast<int>(sigma.size());
  std::vector<std::uint32_t> lut(std::size_t{1} << c, 0);
  for (std::uint32_t mask = 0; mask < lut.size(); ++mask) {
    std::uint32_t out = 0;
    for (int k = 0; k < c; ++k)
      if (mask & (std::uint32_t{1} << sigma[k])) out |= std::uint32_t{1} << k;
    lut[mask] = out;
  }
  return lut;
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

// Color invariant: how often the color appears in pairs of each size.
// Preserved by every isomorphism, so color permutations may be restricted
// to these classes.
std::vector<std::vector<int>> color_classes_of(const ColoredMultigraph& g) {
  const int c = g.palette().size();
  std::vector<std::vector<int>> keys(c, std::vector<int>(c + 1, 0));
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u) {
      ColorSet s = g.colors(u, v);
      for (int k : s.values()) keys[k][s.size()] += 1;
    }
  return group_by_key(keys);
}

// Vertex invariant: the multiset, over the other endpoints, of the pair
// size together with the color-class profile of the pair. Using class ids
// rather than colors keeps the key stable under allowed color relabelings.
std::vector<std::vector<int>> vertex_classes_of(
    const ColoredMultigraph& g, const std::vector<std::vector<int>>& ccls) {
  const int c = g.palette().size();
  std::vector<int> class_of_color(c, 0);
  for (int ci = 0; ci < static_cast<int>(ccls.size()); ++ci)
    for (int k : ccls[ci]) class_of_color[k] = ci;
  const int n = g.vertex_count();
  std::vector<std::vector<int>> keys(n);
  for (int u = 0; u < n; ++u) {
    std::vector<std::vector<int>> entries;
    for (int v = 0; v < n; ++v) {
      if (v == u) continue;
      ColorSet s = g.colors(u, v);
      std::vector<int> entry{s.size()};
      std::vector<int> profile;
      for (int k : s.values()) profile.push_back(class_of_color[k]);
      std::sort(profile.begin(), profile.end());
      entry.insert(entry.end(), profile.begin(), profile.end());
      entries.push_back(std::move(entry));
    }
    std::sort(entries.begin(), entries.end());
    for (const auto& e : entries) {
      keys[u].insert(keys[u].end(), e.begin(), e.end());
      keys[u].push_back(-1);
    }
  }
  return group_by_key(keys);
}

struct BestRelabel {
  std::vector<int> pi;     // new vertex position -> old vertex
  std::vector<int> sigma;  // new color index -> old color
  std::vector<std::uint8_t> matrix;
};

BestRelabel minimize_relabel(const ColoredMultigraph& g) {
  const int n = g.vertex_count();
  const int pc = pair_count(n);
  auto ccls = color_classes_of(g);
  auto vcls = vertex_classes_of(g, ccls);

  BestRelabel best;
  std::vector<std::uint8_t> cand(pc);
  for_each_class_arrangement(ccls, [&](const std::vector<int>& sigma) {
    auto lut = color_remap_table(sigma);
    for_each_class_arrangement(vcls, [&](const std::vector<int>& pi) {
      int p = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
          cand[p++] =
              static_cast<std::uint8_t>(lut[g.colors(pi[i], pi[j]).bits()]);
      if (best.matrix.empty() || cand < best.matrix) {
        best.matrix = cand;
        best.pi = pi;
        best.sigma = sigma;
      }
    });
  });
  return best;
}

}  // namespace

ColoredMultigraph canonical_relabel(const ColoredMultigraph& g) {
  if (g.palette().size() > 8)
    throw std::invalid_argument("canonical_relabel: palette too large");
  BestRelabel best = minimize_relabel(g);
  const int n = g.vertex_count();
  ColoredMultigraph h(n, g.palette());
  std::vector<int> new_color(g.palette().size());
  for (int k = 0; k < g.palette().size(); ++k) new_color[best.sigma[k]] = k;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      ColorSet s = g.colors(best.pi[i], best.pi[j]);
      ColorSet t;
      for (int k : s.values()) t.add(new_color[k]);
      h.set_colors(i, j, t);
    }
  return h;
}

CanonicalCode canonical_form(const ColoredMultigraph& g) {
  if (g.palette().size() > 8)
    throw std::invalid_argument("canonical_form: palette too large");
  BestRelabel best = minimize_relabel(g);
  std::vector<std::uint8_t> bytes;
  bytes.reserve(best.matrix.size() + 2);
  bytes.push_back(static_cast<std::uint8_t>(g.vertex_count()));
  bytes.push_back(static_cast<std::uint8_t>(g.palette().size()));
  bytes.insert(bytes.end(), best.matrix.begin(), best.matrix.end());
  return to_hex(bytes);
}

std::uint64_t canonical_code_u64(const ColoredMultigraph& g) {
  const int c = g.palette().size();
  const int pc = pair_count(g.vertex_count());
  if (c > 8 || pc * c > 64)
    throw std::invalid_argument("canonical_code_u64: graph does not pack");
  BestRelabel best = minimize_relabel(g);
  std::uint64_t code = 0;
  for (int p = 0; p < pc; ++p)
    code |= static_cast<std::uint64_t>(best.matrix[p]) << (p * c);
  return code;
}

namespace {

// Mixed pair encoding: kind 0 none, 1 undirected, 2 low->high, 3 high->low.
struct MixedPair {
  int kind = 0;
  ColorSet colors;
  int sigma_class = -1;  // original class id for directed pairs
};

struct MixedView {
  int n = 0;
  std::vector<MixedPair> pairs;  // indexed by pair_index over node positions
};

MixedView view_of(const MixedGraph& m) {
  MixedView v;
  v.n = m.node_count();
  v.pairs.resize(pair_count(v.n));
  std::map<int, int> node_pos;
  for (int i = 0; i < v.n; ++i) node_pos[m.blocks[i].id] = i;
  auto at = [&](int a, int b) -> MixedPair& {
    int i = node_pos.at(a), j = node_pos.at(b);
    return v.pairs[pair_index(std::min(i, j), std::max(i, j))];
  };
  for (const auto& e : m.undirected) {
    MixedPair& p = at(e.a, e.b);
    if (p.kind != 0)
      throw std::invalid_argument("canonical_form: multiple edges on a pair");
    p.kind = 1;
    p.colors = e.colors;
  }
  for (const auto& e : m.directed) {
    MixedPair& p = at(e.from, e.to);
    if (p.kind != 0)
      throw std::invalid_argument("canonical_form: multiple edges on a pair");
    int i = node_pos.at(e.from), j = node_pos.at(e.to);
    p.kind = i < j ? 2 : 3;
    p.colors = e.colors;
    p.sigma_class = e.sigma_class;
  }
  return v;
}

const MixedPair& pair_between(const MixedView& v, int i, int j) {
  return v.pairs[pair_index(std::min(i, j), std::max(i, j))];
}

// Kind of the pair as seen from position i: flips the direction bit so the
// value is relative, not dependent on index order.
int kind_from(const MixedView& v, int i, int j) {
  const MixedPair& p = pair_between(v, i, j);
  if (p.kind < 2) return p.kind;
  bool out = (i < j) == (p.kind == 2);
  return out ? 2 : 3;
}

}  // namespace

CanonicalCode canonical_form(const MixedGraph& m) {
  const int c = m.palette.size();
  if (c > 8) throw std::invalid_argument("canonical_form: palette too large");
  MixedView view = view_of(m);
  const int n = view.n;

  std::vector<std::vector<int>> color_keys(c, std::vector<int>(2 * (c + 1), 0));
  for (const MixedPair& p : view.pairs)
    for (int k : p.colors.values())
      color_keys[k][(p.kind == 1 ? 0 : c + 1) + p.colors.size()] += 1;
  auto ccls = group_by_key(color_keys);
  std::vector<int> class_of_color(c, 0);
  for (int ci = 0; ci < static_cast<int>(ccls.size()); ++ci)
    for (int k : ccls[ci]) class_of_color[k] = ci;

  std::vector<std::vector<int>> node_keys(n);
  for (int i = 0; i < n; ++i) {
    std::vector<std::vector<int>> entries;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      const MixedPair& p = pair_between(view, i, j);
      std::vector<int> entry{kind_from(view, i, j), p.colors.size()};
      std::vector<int> profile;
      for (int k : p.colors.values()) profile.push_back(class_of_color[k]);
      std::sort(profile.begin(), profile.end());
      entry.insert(entry.end(), profile.begin(), profile.end());
      entries.push_back(std::move(entry));
    }
    std::sort(entries.begin(), entries.end());
    for (const auto& e : entries) {
      node_keys[i].insert(node_keys[i].end(), e.begin(), e.end());
      node_keys[i].push_back(-1);
    }
  }
  auto ncls = group_by_key(node_keys);

  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> cand;
  for_each_class_arrangement(ccls, [&](const std::vector<int>& sigma) {
    auto lut = color_remap_table(sigma);
    for_each_class_arrangement(ncls, [&](const std::vector<int>& pi) {
      cand.clear();
      std::vector<int> class_renumber;
      std::vector<int> class_first;  // original class id -> new id
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
          const MixedPair& p = pair_between(view, pi[i], pi[j]);
          cand.push_back(static_cast<std::uint8_t>(kind_from(view, pi[i], pi[j])));
          cand.push_back(static_cast<std::uint8_t>(lut[p.colors.bits()]));
          if (p.kind >= 2) {
            auto it = std::find(class_first.begin(), class_first.end(),
                                p.sigma_class);
            int id;
            if (it == class_first.end()) {
              id = static_cast<int>(class_first.size());
              class_first.push_back(p.sigma_class);
            } else {
              id = static_cast<int>(it - class_first.begin());
            }
            class_renumber.push_back(id);
          }
        }
      for (int id : class_renumber)
        cand.push_back(static_cast<std::uint8_t>(id));
      if (best.empty() || cand < best) best = cand;
    });
  });

  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(n));
  bytes.push_back(static_cast<std::uint8_t>(c));
  bytes.insert(bytes.end(), best.begin(), best.end());
  return to_hex(bytes);
}

}  // namespace gallai
