#include "gallai/json_io.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gallai {

namespace {

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

void check_keys(const json& j, const char* what,
                std::initializer_list<const char*> keys) {
  if (!j.is_object()) fail(std::string(what) + " must be a JSON object");
  for (const char* key : keys)
    if (!j.contains(key))
      fail(std::string(what) + " is missing field \"" + key + "\"");
  for (const auto& [key, value] : j.items())
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) {
          return key == k;
        }) == keys.end())
      fail(std::string(what) + " has unknown field \"" + key + "\"");
}

int int_field(const json& j, const char* key, const char* what) {
  const json& v = j.at(key);
  if (!v.is_number_integer())
    fail(std::string(what) + " field \"" + key + "\" must be an integer");
  return v.get<int>();
}

Palette palette_field(const json& j, const char* what) {
  const json& v = j.at("palette");
  if (!v.is_array() || v.empty())
    fail(std::string(what) + " needs a nonempty \"palette\" array");
  std::vector<std::string> labels;
  for (const json& name : v) {
    if (!name.is_string()) fail("palette entries must be strings");
    labels.push_back(name.get<std::string>());
  }
  return Palette(std::move(labels));
}

int color_id(const Palette& palette, const json& v, const char* what) {
  if (!v.is_string())
    fail(std::string(what) + " must name a color as a string");
  auto id = palette.index_of(v.get<std::string>());
  if (!id) fail("unknown color \"" + v.get<std::string>() + "\"");
  return *id;
}

ColorSet color_set(const Palette& palette, const json& v, const char* what) {
  if (!v.is_array() || v.empty())
    fail(std::string(what) + " must be a nonempty array of colors");
  ColorSet s;
  for (const json& name : v) {
    int id = color_id(palette, name, what);
    if (s.contains(id))
      fail(std::string(what) + " repeats color \"" + palette.label(id) + "\"");
    s.add(id);
  }
  return s;
}

std::vector<int> sorted_vertices(const json& v, const char* what) {
  if (!v.is_array() || v.empty())
    fail(std::string(what) + " must be a nonempty array");
  std::vector<int> out;
  for (const json& x : v) {
    if (!x.is_number_integer())
      fail(std::string(what) + " entries must be integers");
    out.push_back(x.get<int>());
    if (out.back() < 0) fail(std::string(what) + " entries must be >= 0");
    if (out.size() > 1 && out[out.size() - 2] >= out.back())
      fail(std::string(what) + " must be sorted and distinct");
  }
  return out;
}

json block_to_json(const Block& b) {
  json j;
  j["id"] = b.id;
  j["vertices"] = b.members;
  if (b.root_child)
    j["root_child"] = *b.root_child;
  else
    j["root_child"] = nullptr;
  if (b.base_root >= 0)
    j["base_root"] = b.base_root;
  else
    j["base_root"] = nullptr;
  return j;
}

}  // namespace

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    fail(std::string("malformed JSON: ") + err.what());
  }
}

json to_json(const ColoredMultigraph& g) {
  json j;
  j["palette"] = g.palette().labels();
  j["vertices"] = g.vertex_count();
  json edges = json::array();
  for (int v = 1; v < g.vertex_count(); ++v)
    for (int u = 0; u < v; ++u) {
      json e;
      e["u"] = u;
      e["v"] = v;
      e["colors"] = g.palette().names(g.colors(u, v));
      edges.push_back(std::move(e));
    }
  j["edges"] = std::move(edges);
  return j;
}

json to_json(const MixedGraph& m) {
  json j;
  j["palette"] = m.palette.labels();
  j["level"] = m.level;
  json blocks = json::array();
  for (const Block& b : m.blocks) blocks.push_back(block_to_json(b));
  j["blocks"] = std::move(blocks);
  json undirected = json::array();
  for (const UndirectedEdge& e : m.undirected) {
    if (e.colors.size() != 1)
      fail("undirected edge must carry exactly one color");
    json je;
    je["a"] = e.a;
    je["b"] = e.b;
    je["color"] = m.palette.label(e.colors.min_color());
    undirected.push_back(std::move(je));
  }
  j["undirected"] = std::move(undirected);
  json directed = json::array();
  for (const DirectedEdge& e : m.directed) {
    json je;
    je["from"] = e.from;
    je["to"] = e.to;
    je["colors"] = m.palette.names(e.colors);
    je["sigma_class"] = e.sigma_class;
    directed.push_back(std::move(je));
  }
  j["directed"] = std::move(directed);
  return j;
}

json to_json(const DecompositionSequence& seq) {
  json j;
  j["palette"] = seq.source.palette().labels();
  j["vertices"] = seq.source.vertex_count();
  json levels = json::array();
  for (const MixedGraph& m : seq.levels) levels.push_back(to_json(m));
  j["levels"] = std::move(levels);
  json tau = json::array();
  for (const auto& level : seq.tau_table) {
    json row = json::array();
    for (ColorSet s : level) row.push_back(seq.source.palette().names(s));
    tau.push_back(std::move(row));
  }
  j["tau"] = std::move(tau);
  return j;
}

json to_json(const CensusRecord& record) {
  json j;
  j["vertices"] = record.vertex_count;
  j["palette_size"] = record.palette_size;
  j["multiplicity_cap"] = record.multiplicity_cap;
  j["total_labeled"] = record.total_labeled;
  j["gallai_labeled"] = record.gallai_labeled;
  j["reduced_labeled"] = record.reduced_labeled;
  j["reduced_maximal_labeled"] = record.reduced_maximal_labeled;
  j["total_iso"] = record.total_iso;
  j["gallai_iso"] = record.gallai_iso;
  j["reduced_iso"] = record.reduced_iso;
  j["reduced_maximal_iso"] = record.reduced_maximal_iso;
  return j;
}

ColoredMultigraph multigraph_from_json(const json& j) {
  check_keys(j, "multigraph", {"palette", "vertices", "edges"});
  Palette palette = palette_field(j, "multigraph");
  int n = int_field(j, "vertices", "multigraph");
  if (n < 1) fail("multigraph needs at least one vertex");
  ColoredMultigraph g(n, palette);

  const json& edges = j.at("edges");
  if (!edges.is_array()) fail("\"edges\" must be an array");
  std::vector<bool> seen(pair_count(n), false);
  for (const json& e : edges) {
    check_keys(e, "edge", {"u", "v", "colors"});
    int u = int_field(e, "u", "edge");
    int v = int_field(e, "v", "edge");
    if (!(0 <= u && u < v && v < n))
      fail("edge endpoints must satisfy 0 <= u < v < vertices");
    int p = pair_index(u, v);
    if (seen[p]) fail("pair {" + std::to_string(u) + "," + std::to_string(v) +
                      "} appears twice");
    seen[p] = true;
    g.set_colors(u, v, color_set(palette, e.at("colors"), "edge \"colors\""));
  }
  for (bool s : seen)
    if (!s) fail("every vertex pair must appear exactly once");
  return g;
}

MixedGraph mixed_graph_from_json(const json& j) {
  check_keys(j, "mixed graph",
             {"palette", "level", "blocks", "undirected", "directed"});
  MixedGraph m;
  m.palette = palette_field(j, "mixed graph");
  m.level = int_field(j, "level", "mixed graph");
  if (m.level < 0) fail("\"level\" must be >= 0");

  const json& blocks = j.at("blocks");
  if (!blocks.is_array() || blocks.empty())
    fail("\"blocks\" must be a nonempty array");
  std::set<int> ids;
  for (const json& jb : blocks) {
    check_keys(jb, "block", {"id", "vertices", "root_child", "base_root"});
    Block b;
    b.id = int_field(jb, "id", "block");
    b.level = m.level;
    if (b.id < 0 || !ids.insert(b.id).second)
      fail("block ids must be distinct and >= 0");
    b.members = sorted_vertices(jb.at("vertices"), "block \"vertices\"");
    if (!jb.at("root_child").is_null())
      b.root_child = int_field(jb, "root_child", "block");
    if (!jb.at("base_root").is_null())
      b.base_root = int_field(jb, "base_root", "block");
    m.blocks.push_back(std::move(b));
  }
  std::sort(m.blocks.begin(), m.blocks.end(),
            [](const Block& x, const Block& y) { return x.id < y.id; });

  std::set<std::pair<int, int>> pairs;
  auto claim_pair = [&](int a, int b) {
    if (a == b) fail("edge endpoints must differ");
    if (!ids.count(a) || !ids.count(b)) fail("edge references unknown block id");
    if (!pairs.insert({std::min(a, b), std::max(a, b)}).second)
      fail("two edges on one block pair");
  };

  const json& undirected = j.at("undirected");
  if (!undirected.is_array()) fail("\"undirected\" must be an array");
  for (const json& je : undirected) {
    check_keys(je, "undirected edge", {"a", "b", "color"});
    UndirectedEdge e;
    e.a = int_field(je, "a", "undirected edge");
    e.b = int_field(je, "b", "undirected edge");
    if (e.a >= e.b) fail("undirected edge needs a < b");
    claim_pair(e.a, e.b);
    e.colors =
        ColorSet::single(color_id(m.palette, je.at("color"), "edge \"color\""));
    m.undirected.push_back(e);
  }

  const json& directed = j.at("directed");
  if (!directed.is_array()) fail("\"directed\" must be an array");
  for (const json& je : directed) {
    check_keys(je, "directed edge", {"from", "to", "colors", "sigma_class"});
    DirectedEdge e;
    e.from = int_field(je, "from", "directed edge");
    e.to = int_field(je, "to", "directed edge");
    claim_pair(e.from, e.to);
    e.colors = color_set(m.palette, je.at("colors"), "edge \"colors\"");
    e.sigma_class = int_field(je, "sigma_class", "directed edge");
    if (e.sigma_class < 0) fail("\"sigma_class\" must be >= 0");
    m.directed.push_back(e);
  }
  return m;
}

ConstructionSpec construction_spec_from_json(const json& j) {
  check_keys(j, "construction spec",
             {"palette", "level", "blocks", "undirected", "directed", "leaves",
              "signatures"});
  json base_doc;
  for (const char* key : {"palette", "level", "blocks", "undirected", "directed"})
    base_doc[key] = j.at(key);

  ConstructionSpec spec;
  spec.base = mixed_graph_from_json(base_doc);

  const json& leaves = j.at("leaves");
  if (!leaves.is_array()) fail("\"leaves\" must be an array");
  for (const json& jl : leaves) {
    check_keys(jl, "leaf", {"vertex", "graph"});
    LeafAssignment leaf;
    leaf.node = int_field(jl, "vertex", "leaf");
    leaf.graph = multigraph_from_json(jl.at("graph"));
    spec.leaves.push_back(std::move(leaf));
  }

  const json& signatures = j.at("signatures");
  if (!signatures.is_array()) fail("\"signatures\" must be an array");
  for (const json& js : signatures) {
    check_keys(js, "signature", {"edge", "map"});
    const json& edge = js.at("edge");
    if (!edge.is_array() || edge.size() != 2 ||
        !edge[0].is_number_integer() || !edge[1].is_number_integer())
      fail("signature \"edge\" must be a [from, to] pair of block ids");
    SignatureAssignment sig;
    sig.from = edge[0].get<int>();
    sig.to = edge[1].get<int>();
    const json& map = js.at("map");
    if (!map.is_object() || map.empty())
      fail("signature \"map\" must be a nonempty object");
    for (const auto& [key, value] : map.items()) {
      if (key.empty() ||
          key.find_first_not_of("0123456789") != std::string::npos)
        fail("signature map keys must be leaf vertex indices");
      ColorSet s = value.is_string()
                       ? ColorSet::single(
                             color_id(spec.base.palette, value, "signature"))
                       : color_set(spec.base.palette, value, "signature map");
      sig.signature.entries.push_back({std::stoi(key), s});
    }
    std::sort(sig.signature.entries.begin(), sig.signature.entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    spec.signatures.push_back(std::move(sig));
  }
  return spec;
}

}  // namespace gallai
