#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pentagon/bitset.hpp"
#include "pentagon/errors.hpp"

namespace pentagon {

// Unordered vertex pair, stored as (min, max).
struct Edge {
    int u = 0;
    int v = 0;

    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on dense vertex ids 0..order-1, with set-semantics
// adjacency (duplicate input edges collapse). Immutable after construction;
// "modifications" build new graphs, so values are safely shareable across
// threads. Optional per-vertex display labels are cosmetic only.
class Graph {
public:
    Graph() = default;  // the empty graph (order 0)
    Graph(int order, std::span<const Edge> edges, std::vector<std::string> labels = {});

    // Throws OutOfRangeError for an endpoint >= order, SelfLoopError for (v,v).
    static Graph from_edge_list(int order, std::span<const std::pair<int, int>> edges);

    int order() const { return order_; }
    int size() const { return size_; }  // edge count

    int degree(int v) const;
    bool has_edge(int u, int v) const;
    const Bitset& row(int v) const;

    std::vector<int> neighbors(int v) const;  // ascending vertex ids
    std::vector<Edge> edge_list() const;      // sorted

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int v) const;  // display label; falls back to the id

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;

    int order_ = 0;
    int size_ = 0;
    std::vector<Bitset> adj_;
    std::vector<std::string> labels_;
};

// Subgraph induced by the vertex set vs, relabeled 0..|vs|-1 by ascending
// original id. Duplicates in vs collapse.
Graph induced_subgraph(const Graph& g, std::span<const int> vs);

// Relabels g: old vertex v becomes perm[v]. perm must be a bijection.
Graph apply_permutation(const Graph& g, std::span<const int> perm);

// Shortest-path distance by BFS; nullopt when unreachable.
std::optional<int> distance(const Graph& g, int u, int v);

// All pairs {x,y} at distance exactly 3 where each is the unique vertex at
// distance 3 from the other. Sorted.
std::vector<Edge> copolar_pairs(const Graph& g);

}  // namespace pentagon
