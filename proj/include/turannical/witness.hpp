#pragma once

#include <optional>
#include <string>
#include <vector>

#include "turannical/graph.hpp"
#include "turannical/hitting_set.hpp"
#include "turannical/hypergraph.hpp"
#include "turannical/rational.hpp"

namespace turannical {

enum class Verdict { holds, fails, unknown };

std::string to_string(Verdict v);

// The edge-count threshold a witness is compared against.
struct Baseline {
    enum class Kind { turan, eps_turan, max_partition, eps_relative, none };
    Kind kind = Kind::none;
    Rational value;
    // False when the value is only a lower bound (max partition search ran out of budget).
    bool exact = true;
};

std::string to_string(Baseline::Kind kind);

struct WitnessReport {
    // Edge count of `witness`; the maximum when `optimal` is set.
    Count max_undetected_edges = 0;
    // No undetected graph (subgraph) has more edges than this.
    Count upper_bound = 0;
    // Undetected by the hypergraph; a subgraph of the host in the relative case.
    Graph witness;
    bool optimal = false;
    // Deleted pairs: max_undetected_edges + transversal_size = |universe|.
    Count transversal_size = 0;
    Count universe_size = 0;
    Baseline baseline;
    std::uint64_t nodes = 0;
};

struct Decision {
    Verdict verdict = Verdict::unknown;
    // Premise never met: the threshold is at least the number of available pairs.
    bool vacuous = false;
    WitnessReport report;
};

// Maximum edge count over graphs on [n] undetected by f, with a witness.
WitnessReport max_undetected_edges(const UniformHypergraph& f, const SolveLimits& limits = {});

// Same for subgraphs of `host`.
WitnessReport max_undetected_subgraph(const UniformHypergraph& f, const Graph& host, const SolveLimits& limits = {});

// Exactly Turánnical: every graph with more than t_r(n) edges is detected.
Decision is_turannical(const UniformHypergraph& f, const SolveLimits& limits = {});

// Every graph with more than (1+eps) t_r(n) edges is detected.
Decision is_eps_turannical(const UniformHypergraph& f, const Rational& eps, const SolveLimits& limits = {});

// Balanced Turán graph with one extra edge uv, placed so that no hyperedge
// through u and v closes a K_r. Returns nothing when no pair has a small
// enough link or the link cannot be placed inside a single part.
std::optional<Graph> construct_sparse_witness(const UniformHypergraph& f);

// Starting from K_n (or `host`), delete the lexicographically smallest present
// pair of every hyperedge that still induces K_r.
Graph construct_deletion_witness(const UniformHypergraph& f);
Graph construct_deletion_witness(const UniformHypergraph& f, const Graph& host);

struct PartitionResult {
    Count crossing_edges = 0;
    // Part index (0..k-1) of every vertex.
    std::vector<std::uint32_t> part;
    bool optimal = false;
    std::uint64_t nodes = 0;
};

// Maximum number of edges crossing a k-partition (max k-cut). Exact by branch
// and bound for n <= 24 (within the node budget), local search otherwise.
// With `balanced`, parts are restricted to sizes floor(n/k) and ceil(n/k).
PartitionResult max_partition_edges(const Graph& g, std::uint32_t k, bool balanced = false,
                                    std::uint64_t node_budget = default_node_budget);

inline constexpr std::size_t exact_partition_limit = 24;

// Every subgraph of g with more edges than its maximum (r-1)-partition is detected.
Decision is_turannical_for(const UniformHypergraph& f, const Graph& g, const SolveLimits& limits = {});

// Every subgraph of g with more than (1+eps)(r-2)/(r-1) e(g) edges is detected.
Decision is_eps_turannical_for(const UniformHypergraph& f, const Graph& g, const Rational& eps,
                               const SolveLimits& limits = {});

}  // namespace turannical
