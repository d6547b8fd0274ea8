#include "gallai/multigraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gallai {

Palette::Palette(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty())
    throw std::invalid_argument("palette must not be empty");
  if (labels_.size() > ColorSet::max_colors)
    throw std::invalid_argument("palette exceeds " +
                                std::to_string(ColorSet::max_colors) + " colors");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty())
      throw std::invalid_argument("palette labels must be nonempty");
    for (std::size_t j = i + 1; j < labels_.size(); ++j)
      if (labels_[i] == labels_[j])
        throw std::invalid_argument("duplicate palette label: " + labels_[i]);
  }
}

Palette Palette::letters(int count) {
  if (count < 1 || count > 26)
    throw std::invalid_argument("letter palettes support 1..26 colors");
  std::vector<std::string> labels;
  for (int i = 0; i < count; ++i) labels.push_back(std::string(1, char('A' + i)));
  return Palette(std::move(labels));
}

std::optional<int> Palette::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::vector<std::string> Palette::names(ColorSet s) const {
  std::vector<std::string> out;
  for (int c : s.values()) out.push_back(label(c));
  return out;
}

ColoredMultigraph::ColoredMultigraph(int vertex_count, Palette palette)
    : n_(vertex_count), palette_(std::move(palette)), pair_colors_(pair_count(vertex_count)) {
  if (vertex_count < 1)
    throw std::invalid_argument("multigraph needs at least one vertex");
}

ColorSet ColoredMultigraph::colors(int u, int v) const {
  if (u > v) std::swap(u, v);
  return pair_colors_[pair_index(u, v)];
}

void ColoredMultigraph::set_colors(int u, int v, ColorSet s) {
  if (u > v) std::swap(u, v);
  if (u == v || u < 0 || v >= n_)
    throw std::invalid_argument("set_colors: bad vertex pair");
  pair_colors_[pair_index(u, v)] = s;
}

ColorSet ColoredMultigraph::colors_between(const std::vector<int>& us,
                                           const std::vector<int>& vs) const {
  if (us.empty() || vs.empty())
    throw std::invalid_argument("colors_between: empty vertex set");
  ColorSet acc;
  for (int u : us)
    for (int v : vs) {
      if (u == v)
        throw std::invalid_argument("colors_between: sets overlap");
      acc |= colors(u, v);
    }
  return acc;
}

bool ColoredMultigraph::is_complete() const {
  for (const ColorSet& s : pair_colors_)
    if (s.empty()) return false;
  return true;
}

void ColoredMultigraph::validate() const {
  ColorSet full = palette_.full();
  for (int v = 1; v < n_; ++v)
    for (int u = 0; u < v; ++u) {
      ColorSet s = pair_colors_[pair_index(u, v)];
      if (s.empty())
        throw std::invalid_argument("pair {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} has no color");
      if (!s.subset_of(full))
        throw std::invalid_argument("pair {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} uses colors outside the palette");
    }
}

std::optional<std::array<int, 3>> rainbow_selection(ColorSet ab, ColorSet ac, ColorSet bc) {
  // Hall's condition for a system of distinct representatives of three sets.
  if (ab.empty() || ac.empty() || bc.empty()) return std::nullopt;
  if ((ab | ac).size() < 2 || (ab | bc).size() < 2 || (ac | bc).size() < 2)
    return std::nullopt;
  if ((ab | ac | bc).size() < 3) return std::nullopt;
  for (int x : ab.values())
    for (int y : ac.values()) {
      if (y == x) continue;
      for (int z : bc.values())
        if (z != x && z != y) return std::array<int, 3>{x, y, z};
    }
  return std::nullopt;  // unreachable once Hall's condition holds
}

std::vector<Triangle> rainbow_triangles(const ColoredMultigraph& g,
                                        std::optional<std::size_t> limit) {
  std::vector<Triangle> out;
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        auto sel = rainbow_selection(g.colors(a, b), g.colors(a, c), g.colors(b, c));
        if (sel) {
          out.push_back(Triangle{{a, b, c}, *sel});
          if (limit && out.size() >= *limit) return out;
        }
      }
  return out;
}

bool is_gallai(const ColoredMultigraph& g) {
  return rainbow_triangles(g, 1).empty();
}

bool addition_creates_rainbow(const ColoredMultigraph& g, int u, int v, int color) {
  ColorSet added = ColorSet::single(color);
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (w == u || w == v) continue;
    ColorSet s = g.colors(u, w).minus(added);
    ColorSet t = g.colors(v, w).minus(added);
    // Need a in s, b in t with a != b; fails only if both collapse to the
    // same singleton (or either is empty).
    if (!s.empty() && !t.empty() && !(s == t && s.size() == 1)) return true;
  }
  return false;
}

ColoredMultigraph induced_subgraph(const ColoredMultigraph& g, const std::vector<int>& vertices) {
  if (vertices.empty())
    throw std::invalid_argument("induced_subgraph: vertex set must be nonempty");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || vertices[i] >= g.vertex_count())
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (i > 0 && vertices[i - 1] >= vertices[i])
      throw std::invalid_argument("induced_subgraph: vertices must be sorted and distinct");
  }
  ColoredMultigraph h(static_cast<int>(vertices.size()), g.palette());
  for (std::size_t j = 1; j < vertices.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      h.set_colors(static_cast<int>(i), static_cast<int>(j),
                   g.colors(vertices[i], vertices[j]));
  return h;
}

bool is_uniformly_colored(const ColoredMultigraph& g) {
  if (g.vertex_count() <= 1) return true;
  ColorSet first = g.colors(0, 1);
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u)
      if (g.colors(u, v) != first) return false;
  return true;
}

bool is_uniformly_colored(const ColoredMultigraph& g, ColorSet colors) {
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u)
      if (g.colors(u, v) != colors) return false;
  return true;
}

}  // namespace gallai
