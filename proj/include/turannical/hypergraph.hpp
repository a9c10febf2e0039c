#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turannical/graph.hpp"

namespace turannical {

using Hyperedge = std::vector<Vertex>;

// r-uniform hypergraph on [n]. Each hyperedge is stored sorted; the edge list
// is kept in lexicographic order without duplicates.
class UniformHypergraph {
public:
    UniformHypergraph() = default;
    // Throws ParameterError on wrong arity, repeated or out-of-range vertices,
    // and duplicate hyperedges (the message names the duplicate).
    UniformHypergraph(std::uint32_t r, std::uint32_t n, std::vector<Hyperedge> edges);

    static UniformHypergraph complete(std::uint32_t r, std::uint32_t n);
    static UniformHypergraph empty(std::uint32_t r, std::uint32_t n) { return UniformHypergraph(r, n, {}); }

    std::uint32_t uniformity() const { return r_; }
    std::uint32_t order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Hyperedge>& edges() const { return edges_; }

    // `edge` must be sorted.
    bool contains(std::span<const Vertex> edge) const;

    // A copy with one more hyperedge (no-op if already present).
    UniformHypergraph with_edge(Hyperedge edge) const;

    bool operator==(const UniformHypergraph&) const = default;

private:
    std::uint32_t r_ = 2;
    std::uint32_t n_ = 0;
    std::vector<Hyperedge> edges_;
};

// The (r-s)-uniform hypergraph {Y : Y ∪ X ∈ E(F)} for |X| = s < r.
UniformHypergraph link(const UniformHypergraph& f, std::span<const Vertex> x);

// Number of hyperedges of F that contain u and v. O(|E(F)|).
std::size_t pair_link_size(const UniformHypergraph& f, Vertex u, Vertex v);

// All pair-link sizes at once, indexed by pair_index(u, v, n).
std::vector<std::size_t> pair_link_sizes(const UniformHypergraph& f);

// Number of hyperedges of F containing u and v that also contain at least
// `min_edges` edges of G, where the pair {u,v} itself is never counted.
// Zero when u == v.
std::size_t pair_degree(const UniformHypergraph& f, const Graph& g, Vertex u, Vertex v, std::size_t min_edges);

}  // namespace turannical
