#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "turannical/graph.hpp"
#include "turannical/hypergraph.hpp"

namespace turannical {

// Undetected graphs as hitting sets: a graph H on the universe of pairs is
// undetected by F iff the deleted pairs (universe minus H) meet the pair set
// of every hyperedge that would otherwise induce K_r. The maximum undetected
// edge count is therefore |universe| - (minimum transversal).
struct HittingSetInstance {
    std::uint32_t n = 0;
    std::vector<VertexPair> universe;
    // Each constraint lists universe indices, sorted ascending.
    std::vector<std::vector<std::uint32_t>> constraints;
    // Number of parts of the partite starting points tried by the primal
    // heuristic (r-1 for an r-uniform detector); 0 disables them.
    std::uint32_t parts_hint = 0;
};

// Absolute case: universe is every pair of [n] and each hyperedge contributes
// its C(r,2) pairs.
HittingSetInstance build_instance(const UniformHypergraph& f);

// Relative case: universe is E(host) and only hyperedges inducing K_r in host
// contribute a constraint.
HittingSetInstance build_instance(const UniformHypergraph& f, const Graph& host);

inline constexpr std::uint64_t default_node_budget = 10'000'000;

struct SolveLimits {
    std::uint64_t node_budget = default_node_budget;
    // When set, the search answers "is there a transversal of size <= target?":
    // it stops at the first such transversal and prunes subtrees that cannot
    // reach it.
    std::optional<std::size_t> target;
};

struct TransversalResult {
    // Best transversal found (universe indices, sorted) and its size.
    std::vector<std::uint32_t> transversal;
    std::size_t size = 0;
    // Certified: every transversal has at least this many pairs.
    std::size_t lower_bound = 0;
    // The search ran to completion within the budget.
    bool complete = false;
    // size == lower_bound.
    bool optimal = false;
    std::uint64_t nodes = 0;

    // Only meaningful when a target was given.
    bool reached_target(std::size_t target) const { return size <= target; }
    bool refuted_target(std::size_t target) const { return lower_bound > target; }
};

TransversalResult min_transversal(const HittingSetInstance& instance, const SolveLimits& limits = {});

// Primal heuristic: for random balanced k-partitions (k = parts_hint), keep
// the crossing pairs, repair violated constraints, fill in greedily, climb by
// moving single vertices, then apply (1,2)-swaps. Always returns a transversal.
std::vector<std::uint32_t> heuristic_transversal(const HittingSetInstance& instance, unsigned restarts = 32);

// Lower bound from a greedy maximal packing of pairwise disjoint constraints.
std::size_t packing_lower_bound(const HittingSetInstance& instance);

// True iff `chosen` meets every constraint.
bool is_transversal(const HittingSetInstance& instance, const std::vector<std::uint32_t>& chosen);

// The graph formed by universe minus `deleted`.
Graph surviving_graph(const HittingSetInstance& instance, const std::vector<std::uint32_t>& deleted);

}  // namespace turannical
