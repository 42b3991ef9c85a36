#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pentagon/graph.hpp"

namespace pentagon {

// Isomorphism-invariant canonical form. canonical_edges serializes the order
// (8 bytes, big-endian) followed by the upper-triangle adjacency bits of the
// relabeled graph, column by column; byte equality of certificates is exactly
// isomorphism. relabeling maps original ids to canonical ids.
struct CanonicalCertificate {
    std::vector<std::uint8_t> canonical_edges;
    std::vector<int> relabeling;
    std::uint64_t hash = 0;
};

// Iterated color refinement plus backtracking individualization over the
// first non-singleton color class, taking the lexicographically least edge
// string. Deterministic and permutation-invariant.
CanonicalCertificate canonical_certificate(const Graph& g);

// Variant with an initial vertex coloring (smaller color = earlier cell).
// Certificates of equally-colored graphs are byte-equal iff the graphs are
// isomorphic by a color-preserving map, provided the color classes are used
// consistently (used for orbit computation).
CanonicalCertificate canonical_certificate(const Graph& g,
                                           std::span<const int> initial_colors);

bool is_isomorphic(const Graph& g, const Graph& h);

// Automorphism orbits: same orbit_id iff some automorphism maps one vertex to
// the other.
struct OrbitPartition {
    std::vector<int> orbit_id;
    int orbit_count = 0;
};

// Exact small-graph computation comparing certificates of vertex-marked
// colorings. Throws TooLargeError above max_order.
OrbitPartition orbit_partition(const Graph& g, int max_order = 64);

bool is_vertex_transitive(const Graph& g, int max_order = 64);

}  // namespace pentagon
