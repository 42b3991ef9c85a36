#include "pentagon/cycle_operator.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace pentagon {

namespace {

OperatorResult build_result(const Graph& g, int k, std::vector<InducedCycle> cycles) {
    const int c = int(cycles.size());

    // inverted index: input edge -> cycles through it; linking within each
    // bucket avoids the all-pairs edge-set comparison
    std::unordered_map<std::uint64_t, std::vector<int>> buckets;
    buckets.reserve(std::size_t(c) * k);
    auto key = [](const Edge& e) {
        return (std::uint64_t(std::uint32_t(e.u)) << 32) | std::uint32_t(e.v);
    };
    for (int i = 0; i < c; ++i)
        for (const Edge& e : cycles[i].edges()) buckets[key(e)].push_back(i);

    std::vector<Edge> out_edges;
    for (const auto& [_, ids] : buckets)
        for (std::size_t a = 0; a < ids.size(); ++a)
            for (std::size_t b = a + 1; b < ids.size(); ++b)
                out_edges.emplace_back(ids[a], ids[b]);
    std::sort(out_edges.begin(), out_edges.end());
    out_edges.erase(std::unique(out_edges.begin(), out_edges.end()), out_edges.end());

    // provenance notation: concatenated input labels, multi-character tokens
    // braced ("17b{10}5"); plain ids when the input is unlabeled
    std::vector<std::string> labels;
    labels.reserve(c);
    for (const InducedCycle& cyc : cycles) {
        std::string s;
        for (int v : cyc.vertices) {
            std::string tok = g.label(v);
            if (tok.size() == 1)
                s += tok;
            else
                s += "{" + tok + "}";
        }
        labels.push_back(std::move(s));
    }

    OperatorResult res;
    res.output = Graph(c, out_edges, std::move(labels));
    res.provenance = std::move(cycles);
    res.k = k;
    return res;
}

}  // namespace

OperatorResult cycle_operator(const Graph& g, int k) {
    return build_result(g, k, enumerate_induced_cycles(g, k));
}

std::optional<OperatorResult> cycle_operator_capped(const Graph& g, int k,
                                                    std::size_t max_cycles) {
    auto cycles = enumerate_induced_cycles_capped(g, k, max_cycles);
    if (!cycles) return std::nullopt;
    return build_result(g, k, std::move(*cycles));
}

std::vector<int> hat_neighbors(const OperatorResult& res, int hat_vertex) {
    return res.output.neighbors(hat_vertex);  // range-checked by the graph
}

int edge_pentagon_count(const OperatorResult& res, int u, int v) {
    if (!res.output.has_edge(u, v))
        throw NotAnEdgeError("{" + std::to_string(u) + "," + std::to_string(v) +
                             "} is not an edge of the operator output");
    const Edge e(u, v);
    int count = 0;
    for (const InducedCycle& cyc : enumerate_induced_cycles(res.output, 5))
        if (cyc.contains_edge(e)) ++count;
    return count;
}

}  // namespace pentagon
