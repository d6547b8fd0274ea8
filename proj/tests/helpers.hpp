#pragma once

#include <tuple>
#include <vector>

#include "gallai/multigraph.hpp"

namespace gallai::testutil {

// Build a complete multigraph from (u, v, colors) triples. Pairs not listed
// keep empty sets, so list them all unless the test wants a validate error.
inline ColoredMultigraph make(
    int n, const Palette& palette,
    const std::vector<std::tuple<int, int, std::vector<int>>>& pairs) {
  ColoredMultigraph g(n, palette);
  for (const auto& [u, v, cs] : pairs) {
    ColorSet s;
    for (int c : cs) s |= ColorSet::single(c);
    g.set_colors(u, v, s);
  }
  return g;
}

inline Palette abc() { return Palette::letters(3); }

// The recurring worked example: [01] = {A,B}, [02] = {A}, [12] = {B}.
// Gallai, reduced, not maximal (B fits on [02], A fits on [12]).
inline ColoredMultigraph g3() {
  return make(3, abc(), {{0, 1, {0, 1}}, {0, 2, {0}}, {1, 2, {1}}});
}

}  // namespace gallai::testutil
