#include "gallai/cliques.hpp"

#include "gallai/reduction.hpp"
#include "gallai/union_find.hpp"

namespace gallai {

DoubleEdgeCliques double_edge_cliques(const ColoredMultigraph& g) {
  DoubleEdgeCliques out;
  auto fail = [&](std::string reason, std::vector<int> witness) {
    out.classes.clear();
    out.violation = DoubleEdgeCliques::Violation{std::move(reason), std::move(witness)};
    return out;
  };

  auto rainbow = rainbow_triangles(g, 1);
  if (!rainbow.empty()) {
    const Triangle& t = rainbow.front();
    return fail("not gallai", {t.vertices[0], t.vertices[1], t.vertices[2]});
  }
  if (auto iso = find_isolated_pair(g))
    return fail("not reduced", {iso->first, iso->second});
  if (!is_maximal(g)) {
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = u + 1; v < g.vertex_count(); ++v)
        for (int c = 0; c < g.palette().size(); ++c)
          if (!g.colors(u, v).contains(c) && !addition_creates_rainbow(g, u, v, c))
            return fail("not maximal", {u, v});
  }

  int n = g.vertex_count();
  auto two = [&](int u, int v) { return g.colors(u, v).size() == 2; };

  // Transitivity of the two-edge relation, with a witness triple on failure.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        if (two(a, b) && two(b, c) && !two(a, c))
          return fail("not transitive", {a, b, c});
      }

  UnionFind uf(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (two(u, v)) uf.unite(u, v);

  for (const auto& members : uf.groups()) {
    CliqueClass cls;
    cls.vertices = members;
    if (members.size() > 1) {
      ColorSet label = g.colors(members[0], members[1]);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          if (g.colors(members[i], members[j]) != label)
            return fail("not uniformly colored",
                        {members[0], members[1], members[i], members[j]});
      cls.label = label;
    }
    out.classes.push_back(std::move(cls));
  }
  return out;
}

}  // namespace gallai
