#pragma once

#include <optional>
#include <vector>

#include "turannical/graph.hpp"

namespace turannical {

struct CliqueSet {
    std::uint32_t r = 0;
    // Sorted r-subsets in lexicographic order.
    std::vector<std::vector<Vertex>> members;
};

// All r-subsets inducing K_r, each once. Requires 2 <= r <= n.
CliqueSet enumerate_cliques(const Graph& g, std::uint32_t r);

// |enumerate_cliques(g, r)| without materializing the list. r >= 1; r > n gives 0.
Count count_cliques(const Graph& g, std::uint32_t r);

// K_r copies through v.
Count clique_count_at_vertex(const Graph& g, std::uint32_t r, Vertex v);

// K_r copies containing both endpoints of edge {u,v}. Throws if {u,v} is not an edge.
Count book_size(const Graph& g, std::uint32_t r, Vertex u, Vertex v);

struct Book {
    VertexPair edge;
    Count size = 0;
};

// Largest book over all edges; ties resolve to the lexicographically first edge.
// Empty for edgeless graphs.
std::optional<Book> max_book(const Graph& g, std::uint32_t r);

// Does g contain any K_r?
bool has_clique(const Graph& g, std::uint32_t r);

// Number of K_k inside `candidates` (a vertex set whose members are all usable).
Count count_cliques_within(const Graph& g, const VertexSet& candidates, std::uint32_t k);

}  // namespace turannical
