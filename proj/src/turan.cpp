#include "turannical/turan.hpp"

#include <algorithm>
#include <string>

namespace turannical {

namespace {

void check_r(std::uint32_t r) { require(r >= 3, "clique order r must be at least 3, got " + std::to_string(r)); }

}  // namespace

Count turan_number(std::uint32_t r, std::uint32_t n) {
    check_r(r);
    const std::uint32_t parts = r - 1;
    const Count q = n / parts;
    const Count s = n % parts;
    const Count inside = checked_add(checked_mul(s, binomial(q + 1, 2)), checked_mul(parts - s, binomial(q, 2)));
    return binomial(n, 2) - inside;
}

std::vector<std::uint32_t> turan_parts(std::uint32_t r, std::uint32_t n) {
    check_r(r);
    std::vector<std::uint32_t> part(n);
    for (std::uint32_t v = 0; v < n; ++v) part[v] = v % (r - 1);
    return part;
}

Graph turan_graph(std::uint32_t r, std::uint32_t n) {
    const auto part = turan_parts(r, n);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (part[u] != part[v]) g.add_edge(u, v);
    return g;
}

bool turan_increment_identity_check(std::uint32_t r, std::uint32_t n) {
    check_r(r);
    const auto t = [&](std::uint32_t k) { return static_cast<__int128>(turan_number(r, k)); };
    const __int128 step = t(n + 1) - t(n);
    const __int128 step_expected = static_cast<__int128>(n) - n / (r - 1);
    const __int128 jump = t(n + r) - t(n);
    const __int128 jump_expected = static_cast<__int128>(r - 1) * n + binomial(r, 2) - (n + r - 1) / (r - 1);
    return step == step_expected && jump == jump_expected;
}

Count restricted_turan_number(std::uint32_t r, std::uint32_t n, std::uint32_t m) {
    check_r(r);
    require(m <= n, "restricted set size m=" + std::to_string(m) + " exceeds n=" + std::to_string(n));
    if (static_cast<Count>(n) <= static_cast<Count>(r - 1) * m) return turan_number(r, n);
    // C(n,2) - nm + (r-1)C(m+1,2); nonnegative in this branch.
    const Count positive = checked_add(binomial(n, 2), checked_mul(r - 1, binomial(m + 1, 2)));
    return positive - checked_mul(n, m);
}

RestrictedConstruction restricted_turan_graph(std::uint32_t r, std::uint32_t n, std::uint32_t m) {
    check_r(r);
    require(m <= n, "restricted set size m=" + std::to_string(m) + " exceeds n=" + std::to_string(n));
    RestrictedConstruction out;
    for (Vertex v = 0; v < m; ++v) out.restricted.push_back(v);
    if (m == 0) {
        out.graph = Graph::complete(n);
        return out;
    }
    const Count core = static_cast<Count>(r - 1) * m;
    if (n <= core) {
        out.graph = turan_graph(r, n);
        return out;
    }
    Graph g(n);
    const auto part = turan_parts(r, static_cast<std::uint32_t>(core));
    for (Vertex u = 0; u < core; ++u)
        for (Vertex v = u + 1; v < core; ++v)
            if (part[u] != part[v]) g.add_edge(u, v);
    for (Vertex w = static_cast<Vertex>(core); w < n; ++w)
        for (Vertex v = 0; v < n; ++v)
            if (v != w && v >= m) g.add_edge(std::min(v, w), std::max(v, w));
    out.graph = std::move(g);
    return out;
}

UniformHypergraph intersection_hypergraph(std::uint32_t r, std::uint32_t n, std::uint32_t m) {
    check_r(r);
    require(m <= n, "restricted set size m=" + std::to_string(m) + " exceeds n=" + std::to_string(n));
    std::vector<Hyperedge> edges;
    if (r <= n && m > 0) {
        Hyperedge e(r);
        for (std::uint32_t i = 0; i < r; ++i) e[i] = i;
        // Sorted subsets meet [m] iff their smallest element is below m.
        do {
            if (e[0] < m) edges.push_back(e);
            else break;
        } while (next_subset(e, n));
    }
    return UniformHypergraph(r, n, std::move(edges));
}

bool is_turan_graph(const Graph& g, std::uint32_t r) {
    check_r(r);
    const auto n = static_cast<std::uint32_t>(g.order());
    if (g.edge_count() != turan_number(r, n)) return false;
    // Non-adjacency must be an equivalence relation with at most r-1 classes.
    std::vector<int> cls(n, -1);
    int classes = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (cls[v] >= 0) continue;
        cls[v] = classes;
        for (Vertex w = v + 1; w < n; ++w)
            if (!g.has_edge(v, w)) {
                if (cls[w] >= 0) return false;
                cls[w] = classes;
            }
        ++classes;
    }
    if (classes > static_cast<int>(r - 1)) return false;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if ((cls[u] == cls[v]) == g.has_edge(u, v)) return false;
    return true;
}

}  // namespace turannical
