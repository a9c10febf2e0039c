#pragma once

// Test-side oracles and generators. Everything here is written against the
// definitions directly (plain loops over subsets and bitmasks) and only uses
// the library for its data types, so agreement with the library is evidence.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "turannical/graph.hpp"
#include "turannical/hypergraph.hpp"

namespace oracle {

using turannical::Count;
using turannical::Graph;
using turannical::Hyperedge;
using turannical::UniformHypergraph;
using turannical::Vertex;
using turannical::VertexPair;

inline Count choose(Count n, Count k) {
    if (k > n) return 0;
    Count out = 1;
    for (Count i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<Vertex>> subsets(std::uint32_t n, std::uint32_t k) {
    std::vector<std::vector<Vertex>> out;
    std::vector<Vertex> cur;
    auto rec = [&](auto&& self, Vertex start) -> void {
        if (cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (Vertex v = start; v < n; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<VertexPair> all_pairs(std::uint32_t n) {
    std::vector<VertexPair> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

inline Graph make_graph(std::uint32_t n, const std::vector<VertexPair>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

// Bit k of `mask` selects the k-th pair of all_pairs(n).
inline Graph graph_from_mask(std::uint32_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t k = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++k)
            if ((mask >> k) & 1U) g.add_edge(u, v);
    return g;
}

inline std::uint64_t mask_of(const Graph& g) {
    const auto n = static_cast<std::uint32_t>(g.order());
    std::uint64_t mask = 0;
    std::size_t k = 0;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++k)
            if (g.has_edge(u, v)) mask |= std::uint64_t{1} << k;
    return mask;
}

inline std::size_t pair_bit(Vertex u, Vertex v, std::uint32_t n) {
    if (u > v) std::swap(u, v);
    // Offset of row u in the lexicographic pair list.
    return static_cast<std::size_t>(u) * n - static_cast<std::size_t>(u) * (u + 1) / 2 + (v - u - 1);
}

inline std::uint64_t set_pair_mask(const std::vector<Vertex>& set, std::uint32_t n) {
    std::uint64_t mask = 0;
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b) mask |= std::uint64_t{1} << pair_bit(set[a], set[b], n);
    return mask;
}

inline bool is_clique(const Graph& g, const std::vector<Vertex>& set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (!g.has_edge(set[a], set[b])) return false;
    return true;
}

inline Count clique_count(const Graph& g, std::uint32_t r) {
    Count c = 0;
    for (const auto& s : subsets(static_cast<std::uint32_t>(g.order()), r)) c += is_clique(g, s);
    return c;
}

inline bool detects(const UniformHypergraph& f, const Graph& g) {
    for (const auto& e : f.edges())
        if (is_clique(g, e)) return true;
    return false;
}

inline Count detected_count(const UniformHypergraph& f, const Graph& g) {
    Count c = 0;
    for (const auto& e : f.edges()) c += is_clique(g, e);
    return c;
}

// Maximum edge count over all subgraphs of `host` (K_n when host_mask is all
// ones) undetected by f, by enumerating every submask. n <= 7.
inline Count max_undetected_brute(const UniformHypergraph& f, std::uint64_t host_mask) {
    const std::uint32_t n = f.order();
    std::vector<std::uint64_t> hm;
    for (const auto& e : f.edges()) hm.push_back(set_pair_mask(e, n));
    int best = -1;
    std::uint64_t sub = host_mask;
    while (true) {
        const int bits = __builtin_popcountll(sub);
        if (bits > best) {
            bool ok = true;
            for (const auto m : hm)
                if ((sub & m) == m) {
                    ok = false;
                    break;
                }
            if (ok) best = bits;
        }
        if (sub == 0) break;
        sub = (sub - 1) & host_mask;
    }
    return static_cast<Count>(best);
}

inline std::uint64_t full_mask(std::uint32_t n) {
    const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
    return pairs == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << pairs) - 1;
}

inline Count max_undetected_brute(const UniformHypergraph& f) { return max_undetected_brute(f, full_mask(f.order())); }

// Max k-cut by trying every assignment. n <= 10 or so.
inline Count max_cut_brute(const Graph& g, std::uint32_t k) {
    const auto n = static_cast<std::uint32_t>(g.order());
    std::vector<std::uint32_t> part(n, 0);
    const auto edges = g.edges();
    Count best = 0;
    while (true) {
        Count cut = 0;
        for (const auto& [u, v] : edges) cut += part[u] != part[v];
        best = std::max(best, cut);
        std::uint32_t i = 0;
        while (i < n && ++part[i] == k) part[i++] = 0;
        if (i == n) break;
    }
    return best;
}

// Edge count of the balanced complete (r-1)-partite graph, from the part sizes.
inline Count turan_edges(std::uint32_t r, std::uint32_t n) {
    const std::uint32_t k = r - 1;
    Count same = 0;
    for (std::uint32_t i = 0; i < k; ++i) {
        const Count size = n / k + (i < n % k ? 1 : 0);
        same += size * (size == 0 ? 0 : size - 1) / 2;
    }
    return choose(n, 2) - same;
}

// Complete bipartite with parts of sizes floor(n/2), ceil(n/2)?
inline bool is_balanced_complete_bipartite(const Graph& g) {
    const auto n = static_cast<std::uint32_t>(g.order());
    std::vector<int> colour(n, -1);
    for (Vertex s = 0; s < n; ++s) {
        if (colour[s] != -1) continue;
        colour[s] = 0;
        std::vector<Vertex> stack{s};
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v = 0; v < n; ++v) {
                if (!g.has_edge(u, v)) continue;
                if (colour[v] == -1) {
                    colour[v] = 1 - colour[u];
                    stack.push_back(v);
                } else if (colour[v] == colour[u]) {
                    return false;
                }
            }
        }
    }
    std::uint32_t zeros = 0;
    for (Vertex v = 0; v < n; ++v) zeros += colour[v] == 0;
    if (zeros != n / 2 && zeros != (n + 1) / 2) return false;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((colour[u] != colour[v]) != g.has_edge(u, v)) return false;
    return true;
}

// Canonical Turán graph built from scratch: v in part v mod (r-1).
inline Graph turan(std::uint32_t r, std::uint32_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (u % (r - 1) != v % (r - 1)) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------
// Generators (std::mt19937_64, independent of the library's sampler)
// ---------------------------------------------------------------------------

struct Gen {
    explicit Gen(std::uint64_t seed) : rng(seed) {}

    std::uint32_t below(std::uint32_t bound) { return std::uniform_int_distribution<std::uint32_t>(0, bound - 1)(rng); }
    std::uint32_t between(std::uint32_t lo, std::uint32_t hi) {
        return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
    }
    bool coin(double p) { return std::bernoulli_distribution(p)(rng); }

    Graph graph(std::uint32_t n, double q) {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (coin(q)) g.add_edge(u, v);
        return g;
    }

    UniformHypergraph hypergraph(std::uint32_t r, std::uint32_t n, double p) {
        std::vector<Hyperedge> edges;
        for (auto& s : subsets(n, r))
            if (coin(p)) edges.push_back(s);
        return UniformHypergraph(r, n, std::move(edges));
    }

    std::mt19937_64 rng;
};

}  // namespace oracle
