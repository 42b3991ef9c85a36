#include "pentagon/canon.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pentagon {

namespace {

std::uint64_t fnv1a(std::span<const std::uint8_t> bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

// Renumbers colors densely by ascending value, preserving relative order.
void normalize_colors(std::vector<int>& col) {
    std::vector<int> sorted(col);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : col)
        c = int(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
}

// 1-WL refinement with canonical color numbering: each round sorts vertices
// by (color, multiset of neighbor colors) and renumbers densely, so the fixed
// point is independent of the input labeling.
void refine(const Graph& g, std::vector<int>& col) {
    const int n = g.order();
    if (n == 0) return;
    std::vector<std::vector<int>> sig(n);
    std::vector<int> order(n), newcol(n);
    for (;;) {
        for (int v = 0; v < n; ++v) {
            sig[v].clear();
            sig[v].push_back(col[v]);
            g.row(v).for_each([&](int u) { sig[v].push_back(col[u]); });
            std::sort(sig[v].begin() + 1, sig[v].end());
        }
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return sig[a] < sig[b]; });
        int c = 0;
        newcol[order[0]] = 0;
        for (int i = 1; i < n; ++i) {
            if (sig[order[i]] != sig[order[i - 1]]) ++c;
            newcol[order[i]] = c;
        }
        if (newcol == col) return;
        col = newcol;
    }
}

std::vector<std::vector<int>> cells_of(const std::vector<int>& col) {
    int ncells = col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
    std::vector<std::vector<int>> cells(ncells);
    for (int v = 0; v < int(col.size()); ++v) cells[col[v]].push_back(v);
    return cells;
}

// Upper-triangle adjacency bits of g relabeled by perm (orig -> position),
// packed MSB-first, column by column: (0,1),(0,2),(1,2),(0,3),...
std::vector<std::uint8_t> serialize_bits(const Graph& g, const std::vector<int>& perm) {
    const int n = g.order();
    std::vector<int> vert(n);  // position -> original vertex
    for (int v = 0; v < n; ++v) vert[perm[v]] = v;
    const std::size_t nbits = std::size_t(n) * (n - 1) / 2;
    std::vector<std::uint8_t> out((nbits + 7) / 8, 0);
    std::size_t b = 0;
    for (int j = 1; j < n; ++j) {
        const Bitset& row = g.row(vert[j]);
        for (int i = 0; i < j; ++i, ++b)
            if (row.test(vert[i])) out[b >> 3] |= std::uint8_t(0x80u >> (b & 7));
    }
    return out;
}

struct CanonSearch {
    const Graph& g;
    std::vector<std::uint8_t> best_bits;
    std::vector<int> best_perm;
    bool have_best = false;

    // Compares the bits determined by the first t canonical positions against
    // the current best. Positive result means this branch cannot win.
    int compare_prefix(const std::vector<int>& vert, int t) const {
        std::size_t b = 0;
        for (int j = 1; j < t; ++j) {
            const Bitset& row = g.row(vert[j]);
            for (int i = 0; i < j; ++i, ++b) {
                int bit = row.test(vert[i]) ? 1 : 0;
                int best = (best_bits[b >> 3] >> (7 - (b & 7))) & 1;
                if (bit != best) return bit - best;
            }
        }
        return 0;
    }

    void leaf(const std::vector<std::vector<int>>& cells) {
        std::vector<int> perm(g.order());
        for (std::size_t c = 0; c < cells.size(); ++c) perm[cells[c][0]] = int(c);
        auto bits = serialize_bits(g, perm);
        if (!have_best || bits < best_bits) {
            best_bits = std::move(bits);
            best_perm = std::move(perm);
            have_best = true;
        }
    }

    void node(std::vector<int> col) {
        refine(g, col);
        auto cells = cells_of(col);
        std::size_t t = 0;
        while (t < cells.size() && cells[t].size() == 1) ++t;
        if (t == cells.size()) {
            leaf(cells);
            return;
        }
        if (have_best && t >= 2) {
            std::vector<int> vert(t);
            for (std::size_t c = 0; c < t; ++c) vert[c] = cells[c][0];
            if (compare_prefix(vert, int(t)) > 0) return;
        }

        // branch on the first non-singleton cell, once per twin class:
        // vertices with identical neighborhoods outside {u,v} are swappable
        // by a transposition automorphism
        const std::vector<int>& cell = cells[t];
        std::vector<int> reps;
        for (std::size_t i = 0; i < cell.size(); ++i) {
            bool twin = false;
            for (std::size_t j = 0; j < i && !twin; ++j) {
                auto wu = g.row(cell[i]).words();
                auto wv = g.row(cell[j]).words();
                twin = true;
                for (std::size_t w = 0; w < wu.size() && twin; ++w) {
                    std::uint64_t diff = wu[w] ^ wv[w];
                    for (int x : {cell[i], cell[j]})
                        if (std::size_t(x >> 6) == w)
                            diff &= ~(std::uint64_t(1) << (x & 63));
                    if (diff) twin = false;
                }
            }
            if (!twin) reps.push_back(cell[i]);
        }

        for (int v : reps) {
            std::vector<int> child(col.size());
            for (std::size_t x = 0; x < col.size(); ++x)
                child[x] = col[x] * 2 +
                           (col[x] == col[v] && int(x) != v ? 1 : 0);
            node(std::move(child));
        }
    }
};

CanonicalCertificate make_certificate(const Graph& g, std::vector<int> col) {
    const int n = g.order();
    CanonSearch search{g};
    if (n == 0) {
        search.have_best = true;
    } else {
        normalize_colors(col);
        search.node(std::move(col));
    }

    CanonicalCertificate cert;
    cert.canonical_edges.reserve(8 + search.best_bits.size());
    for (int i = 7; i >= 0; --i)
        cert.canonical_edges.push_back(std::uint8_t((std::uint64_t(n) >> (8 * i)) & 0xff));
    cert.canonical_edges.insert(cert.canonical_edges.end(), search.best_bits.begin(),
                                search.best_bits.end());
    cert.relabeling = std::move(search.best_perm);
    cert.hash = fnv1a(cert.canonical_edges);
    return cert;
}

}  // namespace

CanonicalCertificate canonical_certificate(const Graph& g) {
    return make_certificate(g, std::vector<int>(g.order(), 0));
}

CanonicalCertificate canonical_certificate(const Graph& g,
                                           std::span<const int> initial_colors) {
    if (int(initial_colors.size()) != g.order())
        throw Error("initial color count does not match order");
    return make_certificate(g, std::vector<int>(initial_colors.begin(),
                                                initial_colors.end()));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.size() != h.size()) return false;
    return canonical_certificate(g).canonical_edges ==
           canonical_certificate(h).canonical_edges;
}

OrbitPartition orbit_partition(const Graph& g, int max_order) {
    const int n = g.order();
    if (n > max_order)
        throw TooLargeError("orbit computation limited to order " +
                            std::to_string(max_order));
    OrbitPartition part;
    part.orbit_id.assign(n, -1);
    // one vertex-marked certificate per vertex; equal certificates mean an
    // automorphism carries one mark to the other
    std::vector<std::vector<std::uint8_t>> certs(n);
    std::vector<int> colors(n);
    for (int v = 0; v < n; ++v) {
        std::fill(colors.begin(), colors.end(), 1);
        colors[v] = 0;
        certs[v] = make_certificate(g, colors).canonical_edges;
    }
    for (int v = 0; v < n; ++v) {
        if (part.orbit_id[v] >= 0) continue;
        int id = part.orbit_count++;
        part.orbit_id[v] = id;
        for (int u = v + 1; u < n; ++u)
            if (part.orbit_id[u] < 0 && certs[u] == certs[v]) part.orbit_id[u] = id;
    }
    return part;
}

bool is_vertex_transitive(const Graph& g, int max_order) {
    if (g.order() == 0) return false;
    return orbit_partition(g, max_order).orbit_count == 1;
}

}  // namespace pentagon
