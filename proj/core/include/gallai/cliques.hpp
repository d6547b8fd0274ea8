#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gallai/multigraph.hpp"

namespace gallai {

struct CliqueClass {
  std::vector<int> vertices;
  // The common 2-color set of the class; unset for singletons.
  std::optional<ColorSet> label;
};

struct DoubleEdgeCliques {
  std::vector<CliqueClass> classes;

  struct Violation {
    std::string reason;         // "not gallai", "not reduced", "not maximal",
                                // "not transitive", "not uniformly colored"
    std::vector<int> witness;   // vertices involved (triple where applicable)
  };
  std::optional<Violation> violation;

  bool ok() const { return !violation.has_value(); }
};

// In a reduced maximal Gallai multigraph, the relation "u,v joined by exactly
// two colors" partitions the vertices into cliques, each uniformly colored by
// one 2-color set. Verifies the preconditions and that structure, reporting
// the first violation instead of classes when something fails.
DoubleEdgeCliques double_edge_cliques(const ColoredMultigraph& g);

}  // namespace gallai
