#include "turannical/graph.hpp"

#include <string>

namespace turannical {

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
    if (const auto tail = universe % 64; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (const Vertex v : members) {
        require(v < universe, "vertex " + std::to_string(v) + " out of range");
        s.insert(v);
    }
    return s;
}

std::size_t VertexSet::size() const {
    std::size_t total = 0;
    for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const {
    for (const auto w : words_)
        if (w != 0) return false;
    return true;
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
}

VertexSet& VertexSet::subtract(const VertexSet& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~o.words_[w];
    return *this;
}

std::size_t VertexSet::intersection_size(const VertexSet& o) const {
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) total += static_cast<std::size_t>(std::popcount(words_[w] & o.words_[w]));
    return total;
}

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph Graph::complete(std::size_t n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) {
        g.rows_[v] = VertexSet::full(n);
        g.rows_[v].erase(v);
    }
    g.edge_count_ = n < 2 ? 0 : binomial(n, 2);
    return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const VertexPair> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        require(u != v, "self-loop at vertex " + std::to_string(u));
        require(g.add_edge(u, v), "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    return g;
}

void Graph::check_vertex(Vertex v) const {
    require(v < order(), "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
}

bool Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    require(u != v, "self-loop at vertex " + std::to_string(u));
    if (rows_[u].contains(v)) return false;
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edge_count_;
    return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !rows_[u].contains(v)) return false;
    rows_[u].erase(v);
    rows_[v].erase(u);
    --edge_count_;
    return true;
}

std::vector<VertexPair> Graph::edges() const {
    std::vector<VertexPair> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        rows_[u].for_each([&](Vertex v) {
            if (v > u) out.emplace_back(u, v);
        });
    return out;
}

Graph Graph::complement() const {
    Graph g(order());
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v = u + 1; v < order(); ++v)
            if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    Graph g(vertices.size());
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (has_edge(vertices[i], vertices[j])) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return g;
}

Count edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    Count total = 0;
    x.for_each([&](Vertex v) { total += g.degree_into(v, y); });
    return total;
}

}  // namespace turannical
