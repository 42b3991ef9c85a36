#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string_view>
#include <vector>

#include "pentagon/graph.hpp"

namespace pentagon {

// Throws TooSmallError if n < 3.
Graph cycle(int n);
Graph complete(int n);
Graph petersen();

// Fixed adjacency tables with the conventional labelings: the dodecahedron
// uses labels 1..15 and a..e, the icosahedron a, 1..10, b (vertex ids 0="a",
// 1..10, 11="b").
Graph dodecahedron();
Graph icosahedron();

// Triangle with one pendant edge (T_{3,1}).
Graph tadpole31();

// An induced T_{3,1}: the sorted 4-set plus its pendant (degree-1-in-set)
// vertex.
struct InducedTadpole {
    std::array<int, 4> vertices;
    int pendant = -1;

    friend auto operator<=>(const InducedTadpole&, const InducedTadpole&) = default;
};

// All 4-sets inducing T_{3,1}, sorted lexicographically by vertex set.
std::vector<InducedTadpole> enumerate_induced_tadpoles(const Graph& g);

// Icosahedron with h hat vertices, hat i joined to the 4 vertices of the i-th
// induced tadpole in enumeration order. Hats are pairwise nonadjacent.
// Throws TooManyHatsError when h exceeds the tadpole count (60).
Graph hatted_icosahedron(int h);

// The one-hat variant drawn in the reference figure: hat "v" on the tadpole
// {3,4,9,b}. Isomorphic to hatted_icosahedron(1).
Graph hatted_icosahedron_paper();

// Zoo lookup: "empty", "cycle:<n>", "complete:<n>", "petersen",
// "dodecahedron", "icosahedron", "tadpole31", "hatted-icosahedron:<h>",
// "I1-paper". Returns nullopt for unknown names.
std::optional<Graph> named_graph(std::string_view name);

}  // namespace pentagon
