#include "turannical/hypergraph.hpp"

#include <algorithm>
#include <string>

namespace turannical {

namespace {

std::string describe(const Hyperedge& e) {
    std::string out = "{";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out + "}";
}

}  // namespace

UniformHypergraph::UniformHypergraph(std::uint32_t r, std::uint32_t n, std::vector<Hyperedge> edges)
    : r_(r), n_(n), edges_(std::move(edges)) {
    require(r >= 1, "uniformity must be at least 1");
    for (auto& e : edges_) {
        require(e.size() == r, "hyperedge " + describe(e) + " does not have exactly " + std::to_string(r) + " vertices");
        std::sort(e.begin(), e.end());
        require(std::adjacent_find(e.begin(), e.end()) == e.end(), "hyperedge " + describe(e) + " repeats a vertex");
        require(e.back() < n, "hyperedge " + describe(e) + " has a vertex out of range for n=" + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end())
        throw ParameterError("duplicate hyperedge " + describe(*dup));
}

UniformHypergraph UniformHypergraph::complete(std::uint32_t r, std::uint32_t n) {
    std::vector<Hyperedge> edges;
    if (r <= n) {
        edges.reserve(binomial(n, r));
        Hyperedge e(r);
        for (std::uint32_t i = 0; i < r; ++i) e[i] = i;
        do {
            edges.push_back(e);
        } while (next_subset(e, n));
    }
    return UniformHypergraph(r, n, std::move(edges));
}

bool UniformHypergraph::contains(std::span<const Vertex> edge) const {
    return std::binary_search(edges_.begin(), edges_.end(), edge,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                              });
}

UniformHypergraph UniformHypergraph::with_edge(Hyperedge edge) const {
    std::sort(edge.begin(), edge.end());
    if (contains(edge)) return *this;
    auto edges = edges_;
    edges.push_back(std::move(edge));
    return UniformHypergraph(r_, n_, std::move(edges));
}

UniformHypergraph link(const UniformHypergraph& f, std::span<const Vertex> x) {
    std::vector<Vertex> sorted(x.begin(), x.end());
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "link set repeats a vertex");
    require(sorted.size() < f.uniformity(), "link set must have fewer than r vertices");
    for (const Vertex v : sorted) require(v < f.order(), "link set vertex out of range");

    std::vector<Hyperedge> out;
    for (const auto& e : f.edges()) {
        if (!std::includes(e.begin(), e.end(), sorted.begin(), sorted.end())) continue;
        Hyperedge rest;
        std::set_difference(e.begin(), e.end(), sorted.begin(), sorted.end(), std::back_inserter(rest));
        out.push_back(std::move(rest));
    }
    return UniformHypergraph(f.uniformity() - static_cast<std::uint32_t>(sorted.size()), f.order(), std::move(out));
}

std::size_t pair_link_size(const UniformHypergraph& f, Vertex u, Vertex v) {
    if (u == v) return 0;
    std::size_t total = 0;
    for (const auto& e : f.edges())
        if (std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v)) ++total;
    return total;
}

std::vector<std::size_t> pair_link_sizes(const UniformHypergraph& f) {
    const auto n = f.order();
    std::vector<std::size_t> sizes(n < 2 ? 0 : binomial(n, 2), 0);
    for (const auto& e : f.edges())
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) ++sizes[pair_index(e[i], e[j], n)];
    return sizes;
}

std::size_t pair_degree(const UniformHypergraph& f, const Graph& g, Vertex u, Vertex v, std::size_t min_edges) {
    require(f.order() == g.order(), "hypergraph and graph have different vertex counts");
    if (u == v) return 0;
    if (u > v) std::swap(u, v);
    std::size_t total = 0;
    for (const auto& e : f.edges()) {
        if (!std::binary_search(e.begin(), e.end(), u) || !std::binary_search(e.begin(), e.end(), v)) continue;
        std::size_t inside = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                if (!(e[i] == u && e[j] == v) && g.has_edge(e[i], e[j])) ++inside;
        if (inside >= min_edges) ++total;
    }
    return total;
}

}  // namespace turannical
