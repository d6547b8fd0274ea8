#include "gallai/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

#include "gallai/canonical.hpp"
#include "gallai/construction.hpp"
#include "gallai/decomposition.hpp"
#include "gallai/reduction.hpp"

namespace gallai {

SearchBounds bounds_from_env() {
  SearchBounds bounds;
  const char* raw = std::getenv("GALLAI_MAX_SEARCH");
  if (!raw) return bounds;
  std::string value(raw);
  auto comma = value.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("GALLAI_MAX_SEARCH must be \"vertices,colors\"");
  try {
    bounds.max_vertices = std::stoi(value.substr(0, comma));
    bounds.max_colors = std::stoi(value.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("GALLAI_MAX_SEARCH must be \"vertices,colors\"");
  }
  if (bounds.max_vertices < 1 || bounds.max_colors < 1)
    throw std::invalid_argument("GALLAI_MAX_SEARCH bounds must be positive");
  return bounds;
}

namespace {

int pop(std::uint32_t bits) { return std::popcount(bits); }

// Hall's condition for a system of distinct representatives of three
// nonempty sets: a rainbow selection exists exactly when every two sets
// cover two colors and all three cover three.
bool rainbow_possible(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return pop(a | b) >= 2 && pop(a | c) >= 2 && pop(b | c) >= 2 &&
         pop(a | b | c) >= 3;
}

struct PairTable {
  std::vector<int> u, v;  // endpoint per pair index
  explicit PairTable(int n) {
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) {
        u.push_back(i);
        v.push_back(j);
      }
  }
};

std::uint32_t mask_at(const std::vector<std::uint32_t>& assign, int a, int b) {
  return assign[pair_index(std::min(a, b), std::max(a, b))];
}

bool masks_reduced(const std::vector<std::uint32_t>& assign, int n) {
  if (n < 2) return true;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      bool isolated = true;
      for (int w = 0; w < n && isolated; ++w) {
        if (w == u || w == v) continue;
        std::uint32_t s = mask_at(assign, u, w);
        if (s != mask_at(assign, v, w) || pop(s) != 1) isolated = false;
      }
      if (isolated) return false;
    }
  return true;
}

bool masks_maximal(const std::vector<std::uint32_t>& assign, int n,
                   int colors) {
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      std::uint32_t have = mask_at(assign, u, v);
      for (int c = 0; c < colors; ++c) {
        std::uint32_t bit = std::uint32_t{1} << c;
        if (have & bit) continue;
        bool blocked = false;
        for (int w = 0; w < n && !blocked; ++w) {
          if (w == u || w == v) continue;
          std::uint32_t s = mask_at(assign, u, w) & ~bit;
          std::uint32_t t = mask_at(assign, v, w) & ~bit;
          if (s && t && !(s == t && pop(s) == 1)) blocked = true;
        }
        if (!blocked) return false;  // color c fits on uv without a rainbow
      }
    }
  return true;
}

ColoredMultigraph graph_from_masks(const std::vector<std::uint32_t>& assign,
                                   int n, const Palette& palette) {
  ColoredMultigraph g(n, palette);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      g.set_colors(u, v, ColorSet(mask_at(assign, u, v)));
  return g;
}

// Burnside over simultaneous vertex and color permutations: a coloring fixed
// by (pi, sigma) is free exactly on pair orbits of pi, with the orbit's color
// set fixed by sigma iterated orbit-length times.
std::uint64_t burnside_total_iso(int n, int colors,
                                 const std::vector<std::uint32_t>& choices) {
  const int pairs = pair_count(n);
  PairTable table(n);

  std::vector<int> pi(n), sigma(colors);
  std::uint64_t sum = 0, elements = 0;
  for (int i = 0; i < n; ++i) pi[i] = i;
  do {
    std::vector<int> pair_image(pairs);
    for (int p = 0; p < pairs; ++p) {
      int a = pi[table.u[p]], b = pi[table.v[p]];
      pair_image[p] = pair_index(std::min(a, b), std::max(a, b));
    }
    for (int i = 0; i < colors; ++i) sigma[i] = i;
    do {
      std::vector<std::uint32_t> sigma_map(std::size_t{1} << colors);
      for (std::uint32_t m = 0; m < sigma_map.size(); ++m) {
        std::uint32_t out = 0;
        for (int k = 0; k < colors; ++k)
          if (m & (std::uint32_t{1} << k)) out |= std::uint32_t{1} << sigma[k];
        sigma_map[m] = out;
      }
      std::uint64_t product = 1;
      std::vector<bool> visited(pairs, false);
      for (int p = 0; p < pairs && product > 0; ++p) {
        if (visited[p]) continue;
        int length = 0, q = p;
        while (!visited[q]) {
          visited[q] = true;
          q = pair_image[q];
          ++length;
        }
        std::uint64_t fixed = 0;
        for (std::uint32_t m : choices) {
          std::uint32_t image = m;
          for (int step = 0; step < length; ++step) image = sigma_map[image];
          if (image == m) ++fixed;
        }
        product *= fixed;
      }
      sum += product;
      ++elements;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  } while (std::next_permutation(pi.begin(), pi.end()));
  return sum / elements;
}

std::uint64_t sorted_unique_count(std::vector<std::uint64_t>& codes) {
  std::sort(codes.begin(), codes.end());
  codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
  return codes.size();
}

}  // namespace

CensusResult enumerate_census(int vertex_count, const Palette& palette,
                              int multiplicity_cap, const SearchBounds& bounds,
                              const CensusOptions& options) {
  if (vertex_count < 1) throw std::invalid_argument("need at least one vertex");
  if (multiplicity_cap < 1) throw std::invalid_argument("cap must be positive");
  if (vertex_count > bounds.max_vertices ||
      palette.size() > bounds.max_colors)
    throw std::invalid_argument("census request exceeds search bounds");

  const int n = vertex_count;
  const int colors = palette.size();
  const int pairs = pair_count(n);

  std::vector<std::uint32_t> choices;
  for (std::uint32_t m = 1; m < (std::uint32_t{1} << colors); ++m)
    if (pop(m) <= multiplicity_cap) choices.push_back(m);

  CensusResult result;
  CensusRecord& rec = result.record;
  rec.vertex_count = n;
  rec.palette_size = colors;
  rec.multiplicity_cap = multiplicity_cap;
  rec.total_labeled = 1;
  for (int p = 0; p < pairs; ++p) rec.total_labeled *= choices.size();
  rec.total_iso = burnside_total_iso(n, colors, choices);

  std::vector<std::uint32_t> assign(pairs, 0);
  std::vector<std::uint64_t> gallai_codes, reduced_codes;
  std::map<std::uint64_t, ColoredMultigraph> rm_reps;

  auto leaf = [&]() {
    rec.gallai_labeled += 1;
    bool need_code = options.iso_counts;
    bool reduced = masks_reduced(assign, n);
    bool rm = false;
    if (reduced) {
      rec.reduced_labeled += 1;
      rm = masks_maximal(assign, n, colors);
      if (rm) {
        rec.reduced_maximal_labeled += 1;
        need_code = need_code || options.representatives;
      }
    }
    if (!need_code) return;
    ColoredMultigraph g = graph_from_masks(assign, n, palette);
    std::uint64_t code = canonical_code_u64(g);
    if (options.iso_counts) {
      gallai_codes.push_back(code);
      if (reduced) reduced_codes.push_back(code);
    }
    if (rm && !rm_reps.count(code)) rm_reps.emplace(code, canonical_relabel(g));
  };

  auto rec_pair = [&](auto&& self, int p, int i, int j) -> void {
    if (p == pairs) {
      leaf();
      return;
    }
    for (std::uint32_t m : choices) {
      bool ok = true;
      for (int w = 0; w < i && ok; ++w)
        if (rainbow_possible(mask_at(assign, w, i), mask_at(assign, w, j), m))
          ok = false;
      if (!ok) continue;
      assign[p] = m;
      if (i + 1 < j)
        self(self, p + 1, i + 1, j);
      else
        self(self, p + 1, 0, j + 1);
    }
  };
  rec_pair(rec_pair, 0, 0, 1);

  if (options.iso_counts) {
    rec.gallai_iso = sorted_unique_count(gallai_codes);
    rec.reduced_iso = sorted_unique_count(reduced_codes);
  }
  rec.reduced_maximal_iso = rm_reps.size();
  if (options.representatives)
    for (auto& [code, g] : rm_reps)
      result.reduced_maximal_representatives.push_back(std::move(g));
  return result;
}

CompletenessReport completeness_check(int vertex_bound, const Palette& palette,
                                      const SearchBounds& bounds) {
  if (vertex_bound < 1 || vertex_bound > bounds.max_vertices ||
      palette.size() > bounds.max_colors)
    throw std::invalid_argument("completeness request exceeds search bounds");

  CompletenessReport report;
  auto family = iterate_m_prime(vertex_bound, palette, vertex_bound);
  report.family_size = static_cast<int>(family.size());

  std::set<CanonicalCode> realized;
  for (const auto& base : family)
    enumerate_gamma_realizations(base, vertex_bound,
                                 [&](const ColoredMultigraph& g) {
                                   realized.insert(canonical_form(g));
                                 });
  report.realization_classes = realized.size();

  CensusOptions options;
  options.iso_counts = false;
  for (int n = 1; n <= vertex_bound; ++n) {
    auto census =
        enumerate_census(n, palette, palette.size(), bounds, options);
    for (const auto& g : census.reduced_maximal_representatives) {
      report.reduced_maximal_classes += 1;
      if (!realized.count(canonical_form(g))) report.missing.push_back(g);
    }
  }
  report.passed = report.missing.empty();
  return report;
}

RoundtripReport roundtrip_check(const ColoredMultigraph& g) {
  if (!is_gallai(g))
    return {false, "precondition: graph has a rainbow triangle"};
  if (!is_reduced(g))
    return {false, "precondition: graph has an isolated pair"};
  if (!is_maximal(g))
    return {false, "precondition: graph is not maximal"};

  DecompositionSequence seq = decompose(g);
  int level = std::min<int>(1, static_cast<int>(seq.levels.size()) - 1);
  const MixedGraph& base = seq.levels[level];

  ConstructionSpec spec;
  spec.base = base;
  std::vector<int> order;
  std::map<int, const Block*> block_of;
  for (const Block& b : base.blocks) {
    block_of[b.id] = &b;
    order.insert(order.end(), b.members.begin(), b.members.end());
    spec.leaves.push_back({b.id, induced_subgraph(g, b.members)});
  }
  for (const DirectedEdge& e : base.directed) {
    const Block& source = *block_of.at(e.from);
    const Block& target = *block_of.at(e.to);
    Signature sig;
    for (int i = 0; i < static_cast<int>(source.members.size()); ++i)
      sig.entries.push_back(
          {i, g.colors_between({source.members[i]}, target.members)});
    spec.signatures.push_back({e.from, e.to, sig});
  }

  ColoredMultigraph out(1, g.palette());
  try {
    out = gamma(spec);
  } catch (const std::invalid_argument& err) {
    return {false, std::string("construction rejected the rebuilt inputs: ") +
                       err.what()};
  }
  if (out.vertex_count() != g.vertex_count())
    return {false, "realization has the wrong vertex count"};
  for (int b = 1; b < out.vertex_count(); ++b)
    for (int a = 0; a < b; ++a)
      if (!(out.colors(a, b) == g.colors(order[a], order[b])))
        return {false, "realization differs at a vertex pair"};
  return {true, ""};
}

}  // namespace gallai
