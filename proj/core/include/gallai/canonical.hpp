#pragma once

#include <cstdint>
#include <string>

#include "gallai/mixed_graph.hpp"
#include "gallai/multigraph.hpp"

namespace gallai {

// Canonical codes are complete isomorphism invariants: two graphs get the
// same code exactly when some simultaneous vertex and palette relabeling
// maps one onto the other. Codes are computed by exhaustive minimization
// over relabelings, pruned to permutations that respect cheap invariant
// classes (exact, since isomorphisms preserve the classes).
using CanonicalCode = std::string;

// The lexicographically least relabeling of g under vertex x color
// permutations.
ColoredMultigraph canonical_relabel(const ColoredMultigraph& g);

// Hex string over [n, palette size, color-set bitmask per pair].
CanonicalCode canonical_form(const ColoredMultigraph& g);

// Same invariant packed into 64 bits (palette-size bits per pair, no
// header); callers must scope the values by (n, palette size). Throws when
// the packing does not fit.
std::uint64_t canonical_code_u64(const ColoredMultigraph& g);

// Mixed-graph analogue over [n, palette size, per-pair edge kind and colors,
// signature class pattern]. Requires at most one edge per block pair.
CanonicalCode canonical_form(const MixedGraph& m);

}  // namespace gallai
