#pragma once

#include <array>
#include <optional>
#include <vector>

#include "gallai/color.hpp"

namespace gallai {

// Index of the unordered pair {u,v}, u < v, in the flat triangular layout
// (0,1),(0,2),(1,2),(0,3),(1,3),(2,3),...
constexpr int pair_index(int u, int v) { return v * (v - 1) / 2 + u; }
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// A complete loop-free edge-colored multigraph: every unordered vertex pair
// carries a nonempty set of colors (parallel edges are distinctly colored,
// so a color set per pair is the whole structure).
class ColoredMultigraph {
 public:
  ColoredMultigraph() = default;
  ColoredMultigraph(int vertex_count, Palette palette);

  int vertex_count() const { return n_; }
  const Palette& palette() const { return palette_; }

  ColorSet colors(int u, int v) const;
  void set_colors(int u, int v, ColorSet s);

  // Union of colors over all pairs u in us, v in vs. Pairs inside one side
  // are not counted. Throws std::invalid_argument when a side is empty or
  // the sets overlap.
  ColorSet colors_between(const std::vector<int>& us, const std::vector<int>& vs) const;

  bool is_complete() const;  // every pair nonempty
  // Throws std::invalid_argument when a pair is empty or a color falls
  // outside the palette.
  void validate() const;

  friend bool operator==(const ColoredMultigraph&, const ColoredMultigraph&) = default;

 private:
  int n_ = 0;
  Palette palette_;
  std::vector<ColorSet> pair_colors_;
};

// A rainbow triangle witness: three vertices (ascending) plus one chosen
// color per pair, pairwise distinct. Witness colors are listed for the pairs
// (v0,v1), (v0,v2), (v1,v2).
struct Triangle {
  std::array<int, 3> vertices;
  std::array<int, 3> witness;
};

// One color from each of the three sets, pairwise distinct, if possible.
std::optional<std::array<int, 3>> rainbow_selection(ColorSet ab, ColorSet ac, ColorSet bc);

// All vertex triples admitting a rainbow selection, in ascending triple
// order, each with one witness. `limit` truncates the scan.
std::vector<Triangle> rainbow_triangles(const ColoredMultigraph& g,
                                        std::optional<std::size_t> limit = std::nullopt);

bool is_gallai(const ColoredMultigraph& g);

// Would adding `color` to the pair {u,v} complete a rainbow triangle?
bool addition_creates_rainbow(const ColoredMultigraph& g, int u, int v, int color);

// Restriction to `vertices` (must be nonempty, sorted, distinct), renumbered
// 0..k-1 preserving order. Throws std::invalid_argument otherwise.
ColoredMultigraph induced_subgraph(const ColoredMultigraph& g, const std::vector<int>& vertices);

// Every pair carries the identical color set (vacuously true for n <= 1).
bool is_uniformly_colored(const ColoredMultigraph& g);
// Every pair carries exactly the given color set.
bool is_uniformly_colored(const ColoredMultigraph& g, ColorSet colors);

}  // namespace gallai
