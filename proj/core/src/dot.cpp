#include "gallai/dot.hpp"

#include <sstream>

namespace gallai {

namespace {

std::string joined(const std::vector<std::string>& parts) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += ",";
    out += p;
  }
  return out;
}

std::string joined(const std::vector<int>& parts) {
  std::string out;
  for (int p : parts) {
    if (!out.empty()) out += ",";
    out += std::to_string(p);
  }
  return out;
}

}  // namespace

std::string to_dot(const ColoredMultigraph& g) {
  std::ostringstream out;
  out << "graph multigraph {\n  node [shape=circle];\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u)
      out << "  " << u << " -- " << v << " [label=\""
          << joined(g.palette().names(g.colors(u, v))) << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const MixedGraph& m) {
  std::ostringstream out;
  out << "digraph level" << m.level << " {\n  node [shape=box];\n";
  for (const Block& b : m.blocks)
    out << "  b" << b.id << " [label=\"{" << joined(b.members) << "}\"];\n";
  for (const UndirectedEdge& e : m.undirected)
    out << "  b" << e.a << " -> b" << e.b << " [dir=none, label=\""
        << joined(m.palette.names(e.colors)) << "\"];\n";
  for (const DirectedEdge& e : m.directed) {
    out << "  b" << e.from << " -> b" << e.to << " [label=\""
        << joined(m.palette.names(e.colors)) << "\", taillabel=\"";
    for (int i = 0; i <= e.sigma_class; ++i) out << "|";
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace gallai
