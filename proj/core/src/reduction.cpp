#include "gallai/reduction.hpp"

#include <stdexcept>

namespace gallai {

bool is_isolated_pair(const ColoredMultigraph& g, int u, int v) {
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    ColorSet cu = g.colors(u, w);
    if (cu.size() != 1 || cu != g.colors(v, w)) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> find_isolated_pair(const ColoredMultigraph& g) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (is_isolated_pair(g, u, v)) return std::make_pair(u, v);
  return std::nullopt;
}

bool is_reduced(const ColoredMultigraph& g) {
  return !find_isolated_pair(g).has_value();
}

namespace {

// Drop vertex v; the survivor u already sees the rest exactly as v did.
ColoredMultigraph collapse(const ColoredMultigraph& g, int v) {
  std::vector<int> keep;
  for (int w = 0; w < g.vertex_count(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

}  // namespace

ReduceResult reduce(const ColoredMultigraph& g) {
  ColoredMultigraph cur = g;
  // map[original] = current index, updated as vertices disappear.
  std::vector<int> map(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i) map[i] = i;

  while (cur.vertex_count() > 1) {
    auto pair = find_isolated_pair(cur);
    if (!pair) break;
    auto [u, v] = *pair;  // u < v, u survives
    for (int& m : map) {
      if (m == v)
        m = u;
      else if (m > v)
        --m;
    }
    cur = collapse(cur, v);
  }
  return ReduceResult{std::move(cur), std::move(map)};
}

bool is_maximal(const ColoredMultigraph& g) {
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v) {
      ColorSet present = g.colors(u, v);
      for (int c = 0; c < g.palette().size(); ++c)
        if (!present.contains(c) && !addition_creates_rainbow(g, u, v, c))
          return false;
    }
  return true;
}

ColoredMultigraph maximal_closure(const ColoredMultigraph& g) {
  if (!is_gallai(g))
    throw std::invalid_argument("maximal_closure: input has a rainbow triangle");
  ColoredMultigraph cur = g;
  bool added = true;
  while (added) {
    added = false;
    for (int c = 0; c < cur.palette().size(); ++c)
      for (int u = 0; u < cur.vertex_count(); ++u)
        for (int v = u + 1; v < cur.vertex_count(); ++v) {
          ColorSet s = cur.colors(u, v);
          if (s.contains(c) || addition_creates_rainbow(cur, u, v, c)) continue;
          s.add(c);
          cur.set_colors(u, v, s);
          added = true;
        }
  }
  return cur;
}

}  // namespace gallai
