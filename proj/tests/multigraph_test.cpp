#include <doctest.h>

#include <stdexcept>

#include "gallai/multigraph.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace gallai;
using testutil::make;

namespace {

ColorSet cs(std::initializer_list<int> colors) { return ColorSet::of(colors); }

}  // namespace

TEST_CASE("rainbow selection picks distinct colors exactly when possible") {
  // Three disjoint singletons: the selection is forced.
  auto sel = rainbow_selection(cs({0}), cs({1}), cs({2}));
  REQUIRE(sel.has_value());
  CHECK((*sel)[0] == 0);
  CHECK((*sel)[1] == 1);
  CHECK((*sel)[2] == 2);

  // Two colors across three sets cannot give three distinct picks.
  CHECK_FALSE(rainbow_selection(cs({0, 1}), cs({0, 1}), cs({0, 1})).has_value());
  CHECK_FALSE(rainbow_selection(cs({0}), cs({0}), cs({1})).has_value());

  // Shared pair {A,B} everywhere plus a C unlocks it.
  CHECK(rainbow_selection(cs({0, 1}), cs({0, 1}), cs({2})).has_value());

  // Two equal singletons block regardless of the third set.
  CHECK_FALSE(rainbow_selection(cs({2}), cs({2}), cs({0, 1})).has_value());

  // Empty set: no triangle to speak of.
  CHECK_FALSE(rainbow_selection(ColorSet(), cs({0}), cs({1})).has_value());

  // Selections returned are members of their sets and pairwise distinct.
  auto wide = rainbow_selection(cs({0, 1}), cs({1, 2}), cs({0, 2}));
  REQUIRE(wide.has_value());
  CHECK(cs({0, 1}).contains((*wide)[0]));
  CHECK(cs({1, 2}).contains((*wide)[1]));
  CHECK(cs({0, 2}).contains((*wide)[2]));
  CHECK((*wide)[0] != (*wide)[1]);
  CHECK((*wide)[0] != (*wide)[2]);
  CHECK((*wide)[1] != (*wide)[2]);
}

TEST_CASE("triangle scan reports ordered witnesses and honors the limit") {
  // [01]=A, [02]=B, [12]=C and a fourth vertex seeing everyone in A: the
  // only rainbow triangle is {0,1,2}.
  auto g = make(4, testutil::abc(),
                {{0, 1, {0}}, {0, 2, {1}}, {1, 2, {2}},
                 {0, 3, {0}}, {1, 3, {0}}, {2, 3, {0}}});
  auto tris = rainbow_triangles(g);
  REQUIRE(tris.size() == 1);
  CHECK(tris[0].vertices == std::array<int, 3>{0, 1, 2});
  CHECK_FALSE(is_gallai(g));

  // Two disjoint-ish rainbows; the limit keeps only the first in triple order.
  auto h = make(4, testutil::abc(),
                {{0, 1, {0}}, {0, 2, {1}}, {1, 2, {2}},
                 {0, 3, {1}}, {1, 3, {2}}, {2, 3, {0}}});
  auto all = rainbow_triangles(h);
  CHECK(all.size() > 1);
  auto first = rainbow_triangles(h, 1);
  REQUIRE(first.size() == 1);
  CHECK(first[0].vertices == all[0].vertices);

  CHECK(rainbow_triangles(testutil::g3()).empty());
  CHECK(is_gallai(testutil::g3()));
}

TEST_CASE("gallai check agrees with the explicit selection oracle") {
  auto palette = testutil::abc();
  oracle::enumerate_colorings(3, palette, 2, [&](const ColoredMultigraph& g) {
    CHECK(is_gallai(g) == !oracle::has_rainbow(g));
  });
}

TEST_CASE("addition blocking matches an add-then-scan check") {
  auto g = testutil::g3();
  // C on [01] would make [01]∋C, [02]=A, [12]=B rainbow.
  CHECK(addition_creates_rainbow(g, 0, 1, 2));
  // B on [02] only repeats a color already on [01].
  CHECK_FALSE(addition_creates_rainbow(g, 0, 2, 1));

  // Cross-check every single addition against the oracle.
  auto palette = testutil::abc();
  oracle::enumerate_colorings(4, palette, 1, [&](const ColoredMultigraph& h) {
    if (oracle::has_rainbow(h)) return;
    for (int u = 0; u < 4; ++u)
      for (int v = u + 1; v < 4; ++v)
        for (int c = 0; c < palette.size(); ++c) {
          if (h.colors(u, v).contains(c)) continue;
          ColoredMultigraph added = h;
          added.set_colors(u, v, h.colors(u, v) | ColorSet::single(c));
          CHECK(addition_creates_rainbow(h, u, v, c) ==
                oracle::has_rainbow(added));
        }
  });
}

TEST_CASE("induced subgraph keeps pair colors and validates its input") {
  auto g = make(4, testutil::abc(),
                {{0, 1, {0, 1}}, {0, 2, {0}}, {0, 3, {1}},
                 {1, 2, {1}}, {1, 3, {0}}, {2, 3, {0, 1}}});
  auto sub = induced_subgraph(g, {0, 2, 3});
  REQUIRE(sub.vertex_count() == 3);
  CHECK(sub.colors(0, 1) == g.colors(0, 2));
  CHECK(sub.colors(0, 2) == g.colors(0, 3));
  CHECK(sub.colors(1, 2) == g.colors(2, 3));
  CHECK(sub.palette() == g.palette());

  CHECK_THROWS_AS(induced_subgraph(g, {2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {0, 4}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(g, {}), std::invalid_argument);
}

TEST_CASE("colors_between unions over the cross pairs only") {
  auto g = make(4, testutil::abc(),
                {{0, 1, {0}}, {0, 2, {1}}, {0, 3, {1}},
                 {1, 2, {1}}, {1, 3, {0}}, {2, 3, {2}}});
  CHECK(g.colors_between({0}, {1}) == ColorSet::of({0}));
  CHECK(g.colors_between({0, 1}, {2, 3}) == ColorSet::of({0, 1}));
  // The internal pair [23]=C never contributes.
  CHECK_FALSE(g.colors_between({0, 1}, {2, 3}).contains(2));
  CHECK_THROWS_AS(g.colors_between({0, 1}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(g.colors_between({}, {1}), std::invalid_argument);
}

TEST_CASE("validate rejects incomplete and out-of-palette graphs") {
  ColoredMultigraph empty_pair(3, testutil::abc());
  empty_pair.set_colors(0, 1, ColorSet::single(0));
  empty_pair.set_colors(0, 2, ColorSet::single(0));
  CHECK_FALSE(empty_pair.is_complete());
  CHECK_THROWS_AS(empty_pair.validate(), std::invalid_argument);

  ColoredMultigraph foreign(2, Palette::letters(2));
  foreign.set_colors(0, 1, ColorSet::single(3));
  CHECK_THROWS_AS(foreign.validate(), std::invalid_argument);

  CHECK(testutil::g3().is_complete());
  CHECK_NOTHROW(testutil::g3().validate());

  ColoredMultigraph point(1, testutil::abc());
  CHECK(point.is_complete());
  CHECK_NOTHROW(point.validate());
}

TEST_CASE("uniformly colored predicates") {
  auto palette = testutil::abc();
  auto ab = ColorSet::of({0, 1});
  auto g = make(3, palette, {{0, 1, {0, 1}}, {0, 2, {0, 1}}, {1, 2, {0, 1}}});
  CHECK(is_uniformly_colored(g));
  CHECK(is_uniformly_colored(g, ab));
  CHECK_FALSE(is_uniformly_colored(g, ColorSet::of({0, 2})));
  CHECK_FALSE(is_uniformly_colored(testutil::g3()));
  CHECK_FALSE(is_uniformly_colored(testutil::g3(), ab));

  // One vertex has no pairs, so both readings hold vacuously.
  ColoredMultigraph point(1, palette);
  CHECK(is_uniformly_colored(point));
  CHECK(is_uniformly_colored(point, ab));
}
