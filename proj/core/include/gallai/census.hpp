#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gallai/multigraph.hpp"

namespace gallai {

// Hard ceiling for exhaustive searches; callers must pass wider bounds
// explicitly to go beyond it.
struct SearchBounds {
  int max_vertices = 5;
  int max_colors = 4;
};

// Reads GALLAI_MAX_SEARCH ("vertices,colors") or falls back to the default
// bounds. Throws std::invalid_argument on a malformed value.
SearchBounds bounds_from_env();

struct CensusRecord {
  int vertex_count = 0;
  int palette_size = 0;
  int multiplicity_cap = 0;
  // Complete multigraphs with 1..cap colors per pair, then the Gallai ones,
  // the reduced Gallai ones, and the reduced maximal Gallai ones.
  std::uint64_t total_labeled = 0;
  std::uint64_t gallai_labeled = 0;
  std::uint64_t reduced_labeled = 0;
  std::uint64_t reduced_maximal_labeled = 0;
  // Same classes up to simultaneous vertex and color relabeling.
  std::uint64_t total_iso = 0;
  std::uint64_t gallai_iso = 0;
  std::uint64_t reduced_iso = 0;
  std::uint64_t reduced_maximal_iso = 0;
};

struct CensusOptions {
  // Isomorphism counts for the Gallai and reduced classes cost one canonical
  // code per Gallai graph; switch off to count labeled classes only.
  bool iso_counts = true;
  bool representatives = true;
};

struct CensusResult {
  CensusRecord record;
  // One canonically relabeled representative per reduced maximal class,
  // ordered by canonical code.
  std::vector<ColoredMultigraph> reduced_maximal_representatives;
};

// Exhaustive depth-first walk over all complete edge-colored multigraphs on
// vertex_count vertices with nonempty color sets of size at most
// multiplicity_cap per pair. Branches that already contain a rainbow
// triangle are cut, so only Gallai graphs reach the leaves; total counts are
// computed arithmetically (labeled) and by Burnside (isomorphism classes).
// Throws when the request exceeds bounds.
CensusResult enumerate_census(int vertex_count, const Palette& palette,
                              int multiplicity_cap,
                              const SearchBounds& bounds = {},
                              const CensusOptions& options = {});

struct CompletenessReport {
  bool passed = false;
  std::uint64_t reduced_maximal_classes = 0;
  std::uint64_t realization_classes = 0;
  int family_size = 0;
  // Reduced maximal census members missing from the realized family; any
  // entry points at an implementation bug.
  std::vector<ColoredMultigraph> missing;
};

// Checks that every reduced maximal Gallai multigraph on at most
// vertex_bound vertices (no multiplicity cap, up to isomorphism) appears
// among the realizations of iterate_m_prime(vertex_bound, palette,
// vertex_bound) with at most vertex_bound vertices.
CompletenessReport completeness_check(int vertex_bound, const Palette& palette,
                                      const SearchBounds& bounds = {});

struct RoundtripReport {
  bool passed = false;
  std::string detail;  // empty on success, else the reason or precondition
};

// Rebuilds g from its own decomposition: the level-one mixed graph as base,
// the induced subgraphs on its blocks as leaves, and the signatures read
// from g, then realizes that and compares pair by pair (vertices taken
// in block order). Inputs must be Gallai, reduced, and maximal; violations
// are reported in the result instead of thrown.
RoundtripReport roundtrip_check(const ColoredMultigraph& g);

}  // namespace gallai
