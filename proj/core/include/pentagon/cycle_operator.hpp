#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pentagon/cycles.hpp"
#include "pentagon/graph.hpp"

namespace pentagon {

// Edge-intersection graph of the induced k-cycles of the input: output vertex
// i stands for provenance[i], and two vertices are adjacent exactly when the
// corresponding cycles share at least one input edge. The output is simple
// (no diagonal). Vertex numbering follows enumerate_induced_cycles order.
struct OperatorResult {
    Graph output;
    std::vector<InducedCycle> provenance;
    int k = 5;
};

OperatorResult cycle_operator(const Graph& g, int k = 5);

// Gives up (nullopt) when the input has more than max_cycles induced k-cycles.
std::optional<OperatorResult> cycle_operator_capped(const Graph& g, int k,
                                                    std::size_t max_cycles);

// Neighbor list of an output vertex, ascending. Labels on res.output carry
// the provenance cycle notation.
std::vector<int> hat_neighbors(const OperatorResult& res, int hat_vertex);

// Number of induced 5-cycles of res.output containing the edge {u,v}.
// Throws NotAnEdgeError when u,v are not adjacent in the output.
int edge_pentagon_count(const OperatorResult& res, int u, int v);

}  // namespace pentagon
