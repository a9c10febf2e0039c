#pragma once

#include <vector>

#include "turannical/graph.hpp"
#include "turannical/hypergraph.hpp"

namespace turannical {

// Edge count of the balanced complete (r-1)-partite graph on n vertices.
Count turan_number(std::uint32_t r, std::uint32_t n);

// Canonical Turán graph: vertex v lies in part v mod (r-1).
Graph turan_graph(std::uint32_t r, std::uint32_t n);

// Part index of every vertex in the canonical Turán graph.
std::vector<std::uint32_t> turan_parts(std::uint32_t r, std::uint32_t n);

// Checks t(n+1) - t(n) = n - floor(n/(r-1)) and
// t(n+r) - t(n) = (r-1)n + C(r,2) - floor((n+r-1)/(r-1)).
bool turan_increment_identity_check(std::uint32_t r, std::uint32_t n);

// Maximum edge count of an n-vertex graph in which no K_r meets a fixed m-set.
Count restricted_turan_number(std::uint32_t r, std::uint32_t n, std::uint32_t m);

struct RestrictedConstruction {
    Graph graph;
    // The restricted set; always {0, ..., m-1}.
    std::vector<Vertex> restricted;
};

// Extremal graph for restricted_turan_number. For n <= (r-1)m this is the
// canonical Turán graph. Otherwise it is the Turán graph on the first (r-1)m
// vertices plus n-(r-1)m vertices joined to everything outside the restricted
// set. m = 0 yields K_n.
RestrictedConstruction restricted_turan_graph(std::uint32_t r, std::uint32_t n, std::uint32_t m);

// All r-subsets of [n] meeting {0, ..., m-1}.
UniformHypergraph intersection_hypergraph(std::uint32_t r, std::uint32_t n, std::uint32_t m);

// True iff g is isomorphic to the Turán graph T_r(n), i.e. its complement is a
// disjoint union of r-1 cliques of balanced sizes (empty parts allowed when n < r-1).
bool is_turan_graph(const Graph& g, std::uint32_t r);

}  // namespace turannical
