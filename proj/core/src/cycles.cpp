#include "pentagon/cycles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace pentagon {

std::vector<Edge> InducedCycle::edges() const {
    std::vector<Edge> out;
    const int k = length();
    out.reserve(k);
    for (int i = 0; i < k; ++i) out.emplace_back(vertices[i], vertices[(i + 1) % k]);
    return out;
}

bool InducedCycle::contains_edge(const Edge& e) const {
    const int k = length();
    for (int i = 0; i < k; ++i)
        if (Edge(vertices[i], vertices[(i + 1) % k]) == e) return true;
    return false;
}

bool InducedCycle::valid_in(const Graph& g) const {
    const int k = length();
    if (k < 3) return false;
    for (int v : vertices)
        if (v < 0 || v >= g.order()) return false;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
            if (vertices[i] == vertices[j]) return false;
            if (g.has_edge(vertices[i], vertices[j]) != consecutive) return false;
        }
    if (vertices[0] != *std::min_element(vertices.begin(), vertices.end())) return false;
    if (vertices[1] >= vertices[k - 1]) return false;
    return true;
}

bool cycles_share_edge(const InducedCycle& a, const InducedCycle& b) {
    for (const Edge& e : a.edges())
        if (b.contains_edge(e)) return true;
    return false;
}

namespace {

// DFS path extension anchored at the minimum vertex v0. Paths grow through
// ids > v0; an extension adjacent to a non-consecutive path vertex would form
// a chord and is pruned via a running forbidden mask. A cycle closes at depth
// k-1 on a neighbor of v0, and only the orientation with path[1] < path[k-1]
// is emitted, so output is canonical and duplicate-free by construction.
// The sink returns false to abort (used by the capped variant).
template <typename Sink>
bool enumerate_cycles(const Graph& g, int k, Sink&& sink) {
    if (k < 3) throw KTooSmallError("cycle length must be at least 3");
    const int n = g.order();
    if (n < k) return true;
    const int words = (n + 63) / 64;

    std::vector<std::uint64_t> forbid(std::size_t(k + 1) * words, 0);
    std::vector<std::uint64_t> cand(std::size_t(k + 1) * words, 0);
    std::vector<std::uint64_t> above(words), inpath(words);
    std::vector<int> path(k);

    auto words_of = [&](int v) { return g.row(v).words().data(); };

    // returns false when the sink aborted
    auto extend = [&](auto&& self, int depth) -> bool {
        const std::uint64_t* last = words_of(path[depth - 1]);
        const std::uint64_t* anchor = words_of(path[0]);
        const std::uint64_t* fb = &forbid[std::size_t(depth) * words];
        std::uint64_t* cd = &cand[std::size_t(depth) * words];

        if (depth == k - 1) {
            // closing vertex: adjacent to both ends, no chords
            for (int w = 0; w < words; ++w)
                cd[w] = last[w] & anchor[w] & above[w] & ~inpath[w] & ~fb[w];
        } else if (depth == 1) {
            for (int w = 0; w < words; ++w) cd[w] = anchor[w] & above[w];
        } else {
            // middle vertex: must avoid the anchor's neighborhood
            for (int w = 0; w < words; ++w)
                cd[w] = last[w] & ~anchor[w] & above[w] & ~inpath[w] & ~fb[w];
        }

        if (depth == k - 1) {
            for (int w = 0; w < words; ++w) {
                std::uint64_t bits = cd[w];
                while (bits) {
                    int v = w * 64 + std::countr_zero(bits);
                    bits &= bits - 1;
                    if (path[1] < v) {
                        path[k - 1] = v;
                        if (!sink(path)) return false;
                    }
                }
            }
            return true;
        }

        // the next level additionally forbids neighbors of path[depth-1];
        // the anchor's neighborhood is handled by the mode masks instead
        std::uint64_t* fnext = &forbid[std::size_t(depth + 1) * words];
        if (depth == 1)
            for (int w = 0; w < words; ++w) fnext[w] = 0;
        else
            for (int w = 0; w < words; ++w) fnext[w] = fb[w] | last[w];

        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = cd[w];
            while (bits) {
                int v = w * 64 + std::countr_zero(bits);
                bits &= bits - 1;
                path[depth] = v;
                inpath[w] |= std::uint64_t(1) << (v & 63);
                bool keep = self(self, depth + 1);
                inpath[w] &= ~(std::uint64_t(1) << (v & 63));
                if (!keep) return false;
            }
        }
        return true;
    };

    for (int v0 = 0; v0 + k <= n; ++v0) {
        for (int w = 0; w < words; ++w) above[w] = 0;
        for (int i = v0 + 1; i < n; ++i) above[i >> 6] |= std::uint64_t(1) << (i & 63);
        std::fill(inpath.begin(), inpath.end(), 0);
        inpath[v0 >> 6] |= std::uint64_t(1) << (v0 & 63);
        std::fill(forbid.begin(), forbid.begin() + 2 * words, 0);
        path[0] = v0;
        if (!extend(extend, 1)) return false;
    }
    return true;
}

}  // namespace

std::vector<InducedCycle> enumerate_induced_cycles(const Graph& g, int k) {
    std::vector<InducedCycle> out;
    enumerate_cycles(g, k, [&](const std::vector<int>& path) {
        out.push_back(InducedCycle{path});
        return true;
    });
    return out;
}

std::optional<std::vector<InducedCycle>> enumerate_induced_cycles_capped(
    const Graph& g, int k, std::size_t cap) {
    std::vector<InducedCycle> out;
    bool complete = enumerate_cycles(g, k, [&](const std::vector<int>& path) {
        if (out.size() >= cap) return false;
        out.push_back(InducedCycle{path});
        return true;
    });
    if (!complete) return std::nullopt;
    return out;
}

std::vector<InducedCycle> oracle_induced_cycles(const Graph& g, int k) {
    if (k < 3) throw KTooSmallError("cycle length must be at least 3");
    const int n = g.order();
    std::vector<InducedCycle> out;
    if (n < k) return out;

    std::vector<int> comb(k);
    for (int i = 0; i < k; ++i) comb[i] = i;

    std::vector<int> within;  // neighbors within the subset, per member
    for (;;) {
        // check the induced subgraph is 2-regular and connected
        bool ok = true;
        std::vector<std::array<int, 2>> nbr(k);
        for (int i = 0; i < k && ok; ++i) {
            int cnt = 0;
            for (int j = 0; j < k; ++j) {
                if (i == j) continue;
                if (g.has_edge(comb[i], comb[j])) {
                    if (cnt < 2) nbr[i][cnt] = j;
                    ++cnt;
                }
            }
            if (cnt != 2) ok = false;
        }
        if (ok) {
            // walk the cycle from the minimum vertex toward its smaller
            // neighbor; a premature return to the start means the subset is a
            // disjoint union of shorter cycles
            std::vector<int> seq;
            seq.reserve(k);
            int a = nbr[0][0], b = nbr[0][1];
            int first = comb[a] < comb[b] ? a : b;
            int prev = 0, cur = first;
            seq.push_back(comb[0]);
            bool single_cycle = true;
            for (int step = 1; step < k; ++step) {
                if (cur == 0) {
                    single_cycle = false;
                    break;
                }
                seq.push_back(comb[cur]);
                int next = (nbr[cur][0] == prev) ? nbr[cur][1] : nbr[cur][0];
                prev = cur;
                cur = next;
            }
            if (single_cycle && cur == 0) out.push_back(InducedCycle{seq});
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && comb[i] == n - k + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace pentagon
