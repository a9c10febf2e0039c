#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "turannical/combinatorics.hpp"
#include "turannical/errors.hpp"

namespace turannical {

using Vertex = std::uint32_t;
using VertexPair = std::pair<Vertex, Vertex>;

// Fixed-size dynamic bitset over vertices; the building block for adjacency
// rows and candidate sets.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet full(std::size_t universe);
    static VertexSet of(std::size_t universe, std::span<const Vertex> members);

    std::size_t universe() const { return universe_; }
    bool contains(Vertex v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
    void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    std::size_t size() const;
    bool empty() const;
    std::vector<Vertex> members() const;

    // Calls fn(v) for each member in increasing order.
    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const auto bit = static_cast<Vertex>(std::countr_zero(bits));
                fn(static_cast<Vertex>(w * 64) + bit);
                bits &= bits - 1;
            }
        }
    }

    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator|=(const VertexSet& o);
    VertexSet& subtract(const VertexSet& o);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

    // |this & o| without materializing the intersection.
    std::size_t intersection_size(const VertexSet& o) const;

    std::span<const std::uint64_t> words() const { return words_; }
    bool operator==(const VertexSet&) const = default;

private:
    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1 with one adjacency bitset per vertex.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    static Graph complete(std::size_t n);
    // Throws ParameterError on self-loops, out-of-range endpoints or duplicate edges.
    static Graph from_edges(std::size_t n, std::span<const VertexPair> edges);

    std::size_t order() const { return rows_.size(); }
    Count edge_count() const { return edge_count_; }

    bool has_edge(Vertex u, Vertex v) const { return u != v && rows_[u].contains(v); }
    // Returns false if the edge was already present.
    bool add_edge(Vertex u, Vertex v);
    // Returns false if the edge was absent.
    bool remove_edge(Vertex u, Vertex v);

    const VertexSet& neighbours(Vertex v) const { return rows_[v]; }
    std::size_t degree(Vertex v) const { return rows_[v].size(); }
    std::size_t degree_into(Vertex v, const VertexSet& target) const { return rows_[v].intersection_size(target); }

    // Edges (u < v) in lexicographic order.
    std::vector<VertexPair> edges() const;
    Graph complement() const;
    Graph induced(std::span<const Vertex> vertices) const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<VertexSet> rows_;
    Count edge_count_ = 0;
};

// Edges between two disjoint vertex sets.
Count edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

}  // namespace turannical
