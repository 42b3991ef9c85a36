#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "pentagon/graph.hpp"

namespace pentagon {

// Chordless cycle in canonical orientation: vertices[0] is the minimum id on
// the cycle and vertices[1] < vertices[k-1] breaks the direction tie.
struct InducedCycle {
    std::vector<int> vertices;

    int length() const { return int(vertices.size()); }
    std::vector<Edge> edges() const;  // consecutive pairs, wrap-around
    bool contains_edge(const Edge& e) const;

    // Checks all invariants against the host graph: consecutive adjacency,
    // chordlessness, canonical orientation.
    bool valid_in(const Graph& g) const;

    friend auto operator<=>(const InducedCycle&, const InducedCycle&) = default;
};

// All induced k-cycles of g, sorted lexicographically by vertex sequence.
// Throws KTooSmallError if k < 3.
std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, int k);

// Same, but gives up (returns nullopt) once more than `cap` cycles exist.
std::optional<std::vector<InducedCycle>> enumerate_induced_cycles_capped(
    const Graph& g, int k, std::size_t cap);

// Reference implementation over all k-subsets of V(g): keeps sets whose
// induced subgraph is 2-regular and connected. Intended for small orders;
// output format identical to enumerate_induced_cycles.
std::vector<InducedCycle> oracle_induced_cycles(const Graph& g, int k);

bool cycles_share_edge(const InducedCycle& a, const InducedCycle& b);

}  // namespace pentagon
