#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gallai/census.hpp"
#include "gallai/construction.hpp"
#include "gallai/decomposition.hpp"
#include "gallai/dot.hpp"
#include "gallai/json_io.hpp"
#include "gallai/reduction.hpp"

namespace {

using gallai::json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  buf << in.rdbuf();
  return buf.str();
}

gallai::ColoredMultigraph load_multigraph(const std::string& path) {
  return gallai::multigraph_from_json(gallai::parse_text(read_input(path)));
}

gallai::MixedGraph load_mixed_graph(const std::string& path) {
  return gallai::mixed_graph_from_json(gallai::parse_text(read_input(path)));
}

// Reports print indented; family members print one compact line each.
void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }
void emit_line(const json& doc) { std::cout << doc.dump() << "\n"; }

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

gallai::ColorSet color_pair(const gallai::Palette& palette,
                            const std::string& csv) {
  gallai::ColorSet s;
  for (const std::string& name : split_csv(csv)) {
    auto id = palette.index_of(name);
    if (!id) throw std::invalid_argument("unknown color \"" + name + "\"");
    s.add(*id);
  }
  if (s.size() != 2)
    throw std::invalid_argument("--colors needs exactly two distinct colors");
  return s;
}

int run_check(const std::string& input) {
  auto g = load_multigraph(input);
  auto witnesses = gallai::rainbow_triangles(g, std::nullopt);
  bool gal = witnesses.empty();
  json out;
  out["gallai"] = gal;
  out["reduced"] = gallai::is_reduced(g);
  out["maximal"] = gal && gallai::is_maximal(g);
  json list = json::array();
  for (const auto& t : witnesses) {
    json w;
    w["vertices"] = t.vertices;
    json colors = json::array();
    for (int c : t.witness) colors.push_back(g.palette().label(c));
    w["colors"] = std::move(colors);
    list.push_back(std::move(w));
  }
  out["rainbow_witnesses"] = std::move(list);
  emit(out);
  return 0;
}

int run_reduce(const std::string& input) {
  auto g = load_multigraph(input);
  auto result = gallai::reduce(g);
  if (result.graph.vertex_count() != g.vertex_count())
    std::cerr << "collapsed " << g.vertex_count() << " vertices to "
              << result.graph.vertex_count() << "\n";
  emit(gallai::to_json(result.graph));
  return 0;
}

int run_maximalize(const std::string& input) {
  auto g = load_multigraph(input);
  if (!gallai::is_gallai(g)) {
    std::cerr << "error: input has a rainbow triangle\n";
    return 2;
  }
  emit(gallai::to_json(gallai::maximal_closure(g)));
  return 0;
}

int run_decompose(const std::string& input, const std::string& dot_dir) {
  auto g = load_multigraph(input);
  auto seq = gallai::decompose(g);
  if (!dot_dir.empty()) {
    std::filesystem::create_directories(dot_dir);
    for (std::size_t k = 0; k < seq.levels.size(); ++k) {
      auto file = std::filesystem::path(dot_dir) /
                  ("level_" + std::to_string(k) + ".dot");
      std::ofstream out(file);
      out << gallai::to_dot(seq.levels[k]);
      std::cerr << "wrote " << file.string() << "\n";
    }
  }
  emit(gallai::to_json(seq));
  return 0;
}

int run_construct(const std::string& input, bool all, int max_size) {
  json doc = gallai::parse_text(read_input(input));
  if (all) {
    auto base = gallai::mixed_graph_from_json(doc);
    int bound = max_size > 0 ? max_size : 2 * base.node_count();
    gallai::enumerate_gamma_realizations(
        base, bound,
        [](const gallai::ColoredMultigraph& g) { emit_line(gallai::to_json(g)); });
    return 0;
  }
  auto spec = gallai::construction_spec_from_json(doc);
  emit(gallai::to_json(gallai::gamma(spec)));
  return 0;
}

int run_delta_t(const std::string& input, const std::string& colors,
                bool restrict_sigma) {
  auto m = load_mixed_graph(input);
  gallai::DeltaTOptions options;
  options.restrict_to_generated = restrict_sigma;
  for (const auto& out : gallai::delta_t(m, color_pair(m.palette, colors), options))
    emit_line(gallai::to_json(out));
  return 0;
}

int run_delta_f(const std::string& input, int max_size) {
  auto base = load_mixed_graph(input);
  auto family = gallai::iterate_m_prime(max_size, base.palette, max_size);
  for (const auto& out : gallai::enumerate_delta_f(family, base, max_size))
    emit_line(gallai::to_json(out));
  return 0;
}

int run_enumerate(const std::string& palette_csv, int max_size, int cap,
                  bool all) {
  gallai::Palette palette(split_csv(palette_csv));
  gallai::CensusOptions options;
  options.representatives = all;
  auto result = gallai::enumerate_census(max_size, palette, cap,
                                         gallai::bounds_from_env(), options);
  if (all) {
    emit_line(gallai::to_json(result.record));
    for (const auto& g : result.reduced_maximal_representatives)
      emit_line(gallai::to_json(g));
  } else {
    emit(gallai::to_json(result.record));
  }
  return 0;
}

int run_verify_completeness(int vertices, int colors) {
  auto report = gallai::completeness_check(
      vertices, gallai::Palette::letters(colors), gallai::bounds_from_env());
  json out;
  out["passed"] = report.passed;
  out["reduced_maximal_classes"] = report.reduced_maximal_classes;
  out["realization_classes"] = report.realization_classes;
  out["family_size"] = report.family_size;
  json missing = json::array();
  for (const auto& g : report.missing) missing.push_back(gallai::to_json(g));
  out["missing"] = std::move(missing);
  emit(out);
  return report.passed ? 0 : 1;
}

int run_roundtrip(const std::string& input) {
  auto g = load_multigraph(input);
  auto report = gallai::roundtrip_check(g);
  json out;
  out["passed"] = report.passed;
  out["detail"] = report.detail;
  emit(out);
  if (report.passed) return 0;
  return report.detail.rfind("precondition:", 0) == 0 ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gallai multigraph toolkit: rainbow-triangle checks, reduction, "
               "decomposition, constructions, and exhaustive verification"};
  app.require_subcommand(1);

  std::string input, dot_dir, colors, palette_csv = "A,B,C";
  int max_size = 0, cap = 2, vertices = 0, color_count = 0;
  bool all = false, restrict_sigma = false;

  auto* check = app.add_subcommand("check", "Report gallai/reduced/maximal status");
  check->add_option("input", input, "multigraph JSON file, - for stdin")->required();

  auto* reduce = app.add_subcommand("reduce", "Collapse isolated pairs");
  reduce->add_option("input", input)->required();

  auto* maximalize =
      app.add_subcommand("maximalize", "Greedy closure to a maximal supergraph");
  maximalize->add_option("input", input)->required();

  auto* decompose =
      app.add_subcommand("decompose", "Compute the level sequence of mixed graphs");
  decompose->add_option("input", input)->required();
  decompose->add_option("--dot", dot_dir, "write one DOT file per level into this directory");

  auto* construct = app.add_subcommand(
      "construct", "Realize a construction spec (or, with --all, every "
                   "realization of a bare mixed graph)");
  construct->add_option("input", input)->required();
  construct->add_flag("--all", all, "enumerate every leaf and signature choice");
  construct->add_option("--max-size", max_size,
                        "vertex bound for --all (default: twice the node count)");

  auto* delta_t = app.add_subcommand(
      "delta-t", "Attach a new dominating root; emit the derived trees");
  delta_t->add_option("input", input)->required();
  delta_t->add_option("--colors", colors, "the two root colors, e.g. A,B")->required();
  delta_t->add_flag("--restrict-sigma", restrict_sigma,
                    "emit only the generated signature relation, no coarsenings");

  auto* delta_f = app.add_subcommand(
      "delta-f", "Substitute rooted trees from the iterated family for base nodes");
  delta_f->add_option("input", input)->required();
  delta_f->add_option("--max-size", max_size, "node bound for outputs and the tree family")
      ->required();

  auto* enumerate = app.add_subcommand(
      "enumerate", "Exhaustive census of Gallai colorings at a fixed size");
  enumerate->add_option("--palette", palette_csv, "comma-separated color labels");
  enumerate->add_option("--max-size", max_size, "number of vertices")->required();
  enumerate->add_option("--multiplicity-cap", cap, "max colors per pair (default 2)");
  enumerate->add_flag("--all", all,
                      "stream reduced maximal representatives after the record");

  auto* verify = app.add_subcommand(
      "verify-completeness",
      "Check every reduced maximal class is constructible");
  verify->add_option("--vertices", vertices)->required();
  verify->add_option("--colors", color_count)->required();

  auto* roundtrip = app.add_subcommand(
      "roundtrip", "Decompose, rebuild, and compare a reduced maximal graph");
  roundtrip->add_option("input", input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(input);
    if (*reduce) return run_reduce(input);
    if (*maximalize) return run_maximalize(input);
    if (*decompose) return run_decompose(input, dot_dir);
    if (*construct) return run_construct(input, all, max_size);
    if (*delta_t) return run_delta_t(input, colors, restrict_sigma);
    if (*delta_f) return run_delta_f(input, max_size);
    if (*enumerate) return run_enumerate(palette_csv, max_size, cap, all);
    if (*verify) return run_verify_completeness(vertices, color_count);
    if (*roundtrip) return run_roundtrip(input);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
