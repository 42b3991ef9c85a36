#include "pentagon/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace pentagon {

Graph::Graph(int order, std::span<const Edge> edges, std::vector<std::string> labels)
    : order_(order) {
    if (order < 0) throw Error("graph order must be nonnegative");
    adj_.assign(order, Bitset(order));
    for (const Edge& e : edges) {
        if (e.u == e.v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= order)
            throw OutOfRangeError("edge endpoint " + std::to_string(e.v) +
                                  " outside 0.." + std::to_string(order - 1));
        if (!adj_[e.u].test(e.v)) {
            adj_[e.u].set(e.v);
            adj_[e.v].set(e.u);
            ++size_;
        }
    }
    if (!labels.empty()) {
        if (int(labels.size()) != order)
            throw Error("label count does not match order");
        labels_ = std::move(labels);
    }
}

Graph Graph::from_edge_list(int order, std::span<const std::pair<int, int>> edges) {
    std::vector<Edge> es;
    es.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) throw SelfLoopError("self-loop at vertex " + std::to_string(a));
        es.emplace_back(a, b);
    }
    return Graph(order, es);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order_)
        throw OutOfRangeError("vertex " + std::to_string(v) + " outside 0.." +
                              std::to_string(order_ - 1));
}

int Graph::degree(int v) const {
    check_vertex(v);
    return adj_[v].count();
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
}

const Bitset& Graph::row(int v) const {
    check_vertex(v);
    return adj_[v];
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    adj_[v].for_each([&](int u) { out.push_back(u); });
    return out;
}

std::vector<Edge> Graph::edge_list() const {
    std::vector<Edge> out;
    out.reserve(size_);
    for (int u = 0; u < order_; ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    std::sort(out.begin(), out.end());
    return out;
}

std::string Graph::label(int v) const {
    check_vertex(v);
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

Graph induced_subgraph(const Graph& g, std::span<const int> vs) {
    std::vector<int> sel(vs.begin(), vs.end());
    std::sort(sel.begin(), sel.end());
    sel.erase(std::unique(sel.begin(), sel.end()), sel.end());
    for (int v : sel)
        if (v < 0 || v >= g.order())
            throw OutOfRangeError("vertex " + std::to_string(v) + " not in graph");

    std::vector<int> newid(g.order(), -1);
    for (std::size_t i = 0; i < sel.size(); ++i) newid[sel[i]] = int(i);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sel.size(); ++i)
        g.row(sel[i]).for_each([&](int u) {
            if (newid[u] > int(i)) edges.emplace_back(int(i), newid[u]);
        });

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(sel.size());
        for (int v : sel) labels.push_back(g.labels()[v]);
    }
    return Graph(int(sel.size()), edges, std::move(labels));
}

Graph apply_permutation(const Graph& g, std::span<const int> perm) {
    const int n = g.order();
    if (int(perm.size()) != n) throw Error("permutation size mismatch");
    std::vector<char> seen(n, 0);
    for (int p : perm) {
        if (p < 0 || p >= n || seen[p]) throw Error("not a permutation");
        seen[p] = 1;
    }
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (int u = 0; u < n; ++u)
        g.row(u).for_each([&](int v) {
            if (u < v) edges.emplace_back(perm[u], perm[v]);
        });
    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.resize(n);
        for (int v = 0; v < n; ++v) labels[perm[v]] = g.labels()[v];
    }
    return Graph(n, edges, std::move(labels));
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order())
        throw OutOfRangeError("distance endpoint outside graph");
    if (u == v) return 0;
    std::vector<int> dist(g.order(), -1);
    dist[u] = 0;
    std::queue<int> q;
    q.push(u);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        int found = -1;
        g.row(x).for_each([&](int y) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                if (y == v) found = dist[y];
                q.push(y);
            }
        });
        if (found >= 0) return found;
    }
    return std::nullopt;
}

std::vector<Edge> copolar_pairs(const Graph& g) {
    const int n = g.order();
    // partner[x] = the unique vertex at distance 3 from x, or -1.
    std::vector<int> partner(n, -1);
    std::vector<int> dist(n);
    for (int x = 0; x < n; ++x) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[x] = 0;
        std::queue<int> q;
        q.push(x);
        while (!q.empty()) {
            int a = q.front();
            q.pop();
            g.row(a).for_each([&](int b) {
                if (dist[b] < 0) {
                    dist[b] = dist[a] + 1;
                    q.push(b);
                }
            });
        }
        int at3 = -1, count = 0;
        for (int y = 0; y < n; ++y)
            if (dist[y] == 3) {
                at3 = y;
                ++count;
            }
        if (count == 1) partner[x] = at3;
    }
    std::vector<Edge> out;
    for (int x = 0; x < n; ++x)
        if (partner[x] > x && partner[partner[x]] == x)
            out.emplace_back(x, partner[x]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pentagon
