#include "pentagon/zoo.hpp"

#include <algorithm>
#include <charconv>
#include <string>

namespace pentagon {

Graph cycle(int n) {
    if (n < 3) throw TooSmallError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    edges.reserve(n);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

Graph complete(int n) {
    if (n < 0) throw Error("complete graph order must be nonnegative");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        edges.emplace_back(i, 5 + i);                // spokes
    }
    return Graph(10, edges);
}

Graph dodecahedron() {
    // ids 0..14 carry labels "1".."15", ids 15..19 labels "a".."e".
    // Inner pentagon 1..5, second pentagon a..e, outer 10-cycle 6..15,
    // spokes 1-7, 2-9, 3-11, 4-13, 5-15 and a-6, b-8, c-10, d-12, e-14.
    static const std::pair<int, int> table[] = {
        {0, 1},   {1, 2},   {2, 3},   {3, 4},   {4, 0},    // pentagon 1..5
        {15, 16}, {16, 17}, {17, 18}, {18, 19}, {19, 15},  // pentagon a..e
        {5, 6},   {6, 7},   {7, 8},   {8, 9},   {9, 10},   // outer cycle 6..15
        {10, 11}, {11, 12}, {12, 13}, {13, 14}, {14, 5},
        {0, 6},   {1, 8},   {2, 10},  {3, 12},  {4, 14},   // numeric spokes
        {15, 5},  {16, 7},  {17, 9},  {18, 11}, {19, 13},  // letter spokes
    };
    std::vector<Edge> edges;
    for (auto [a, b] : table) edges.emplace_back(a, b);
    std::vector<std::string> labels;
    for (int i = 1; i <= 15; ++i) labels.push_back(std::to_string(i));
    for (char c = 'a'; c <= 'e'; ++c) labels.push_back(std::string(1, c));
    return Graph(20, edges, std::move(labels));
}

Graph icosahedron() {
    // ids: 0="a", 1..10 numeric, 11="b". Top pentagon 1..5 around apex a,
    // bottom pentagon 6..10 around apex b, zigzag band between them.
    static const std::pair<int, int> table[] = {
        {1, 2},  {2, 3},  {3, 4},  {4, 5},  {5, 1},    // top pentagon
        {0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},    // apex a
        {6, 7},  {7, 8},  {8, 9},  {9, 10}, {10, 6},   // bottom pentagon
        {11, 6}, {11, 7}, {11, 8}, {11, 9}, {11, 10},  // apex b
        {5, 6},  {5, 10}, {4, 10}, {4, 9},  {3, 9},    // band
        {3, 8},  {2, 8},  {2, 7},  {1, 7},  {1, 6},
    };
    std::vector<Edge> edges;
    for (auto [a, b] : table) edges.emplace_back(a, b);
    std::vector<std::string> labels{"a"};
    for (int i = 1; i <= 10; ++i) labels.push_back(std::to_string(i));
    labels.push_back("b");
    return Graph(12, edges, std::move(labels));
}

Graph tadpole31() {
    static const std::pair<int, int> table[] = {{0, 1}, {1, 2}, {0, 2}, {0, 3}};
    std::vector<Edge> edges;
    for (auto [a, b] : table) edges.emplace_back(a, b);
    return Graph(4, edges);
}

std::vector<InducedTadpole> enumerate_induced_tadpoles(const Graph& g) {
    std::vector<InducedTadpole> out;
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        g.row(x).for_each([&](int y) {
            if (y <= x) return;
            g.row(y).for_each([&](int z) {
                if (z <= y || !g.has_edge(x, z)) return;
                // triangle x < y < z; try each pendant
                for (int corner : {x, y, z})
                    g.row(corner).for_each([&](int u) {
                        if (u == x || u == y || u == z) return;
                        int adj = int(g.has_edge(u, x)) + int(g.has_edge(u, y)) +
                                  int(g.has_edge(u, z));
                        if (adj != 1) return;
                        // u's unique triangle neighbor is `corner`
                        if (!g.has_edge(u, corner)) return;
                        std::array<int, 4> vs{x, y, z, u};
                        std::sort(vs.begin(), vs.end());
                        out.push_back({vs, u});
                    });
            });
        });
    std::sort(out.begin(), out.end());
    return out;
}

Graph hatted_icosahedron(int h) {
    if (h < 0) throw Error("hat count must be nonnegative");
    Graph ico = icosahedron();
    auto tadpoles = enumerate_induced_tadpoles(ico);
    if (h > int(tadpoles.size()))
        throw TooManyHatsError("icosahedron has only " +
                               std::to_string(tadpoles.size()) + " induced tadpoles");
    std::vector<Edge> edges = ico.edge_list();
    std::vector<std::string> labels = ico.labels();
    for (int i = 0; i < h; ++i) {
        for (int v : tadpoles[i].vertices) edges.emplace_back(12 + i, v);
        labels.push_back("v" + std::to_string(i + 1));
    }
    return Graph(12 + h, edges, std::move(labels));
}

Graph hatted_icosahedron_paper() {
    Graph ico = icosahedron();
    std::vector<Edge> edges = ico.edge_list();
    for (int v : {3, 4, 9, 11}) edges.emplace_back(12, v);
    std::vector<std::string> labels = ico.labels();
    labels.push_back("v");
    return Graph(13, edges, std::move(labels));
}

namespace {

std::optional<int> parse_int(std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return value;
}

}  // namespace

std::optional<Graph> named_graph(std::string_view name) {
    if (name == "empty") return Graph();
    if (name == "petersen") return petersen();
    if (name == "dodecahedron") return dodecahedron();
    if (name == "icosahedron") return icosahedron();
    if (name == "tadpole31" || name == "tadpole") return tadpole31();
    if (name == "I1-paper") return hatted_icosahedron_paper();
    auto suffix = [&](std::string_view prefix) -> std::optional<int> {
        if (!name.starts_with(prefix)) return std::nullopt;
        return parse_int(name.substr(prefix.size()));
    };
    if (auto n = suffix("cycle:")) return cycle(*n);
    if (auto n = suffix("complete:")) return complete(*n);
    if (auto n = suffix("hatted-icosahedron:")) return hatted_icosahedron(*n);
    return std::nullopt;
}

}  // namespace pentagon
