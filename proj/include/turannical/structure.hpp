#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turannical/graph.hpp"
#include "turannical/hypergraph.hpp"
#include "turannical/rational.hpp"

namespace turannical {

// V_0 (exceptional set) followed by V_1..V_{r-1}.
using VertexParts = std::vector<std::vector<Vertex>>;

struct ClosePartition {
    VertexParts parts;
    Rational eps;
    // Edges inside some V_i, i >= 1.
    Count noncrossing_edges = 0;
    // Non-adjacent pairs between V_i and V_j, 1 <= i < j.
    Count crossing_nonedges = 0;
};

struct PartitionViolation {
    enum class Condition { exceptional_size, part_size, exceptional_degree, crossing_degree };
    Condition condition;
    // Offending vertex, or the part index for size conditions.
    std::uint32_t subject = 0;
    // Part index j for crossing_degree.
    std::uint32_t other = 0;
    std::string message;
};

std::string to_string(PartitionViolation::Condition c);

struct PartitionCheck {
    bool close = false;
    std::vector<PartitionViolation> violations;
};

// Checks:
//   |V_0| <= eps^2 n,  |V_i| >= (1-eps) n/(r-1),
//   deg(v) <= (1-eps^2)(r-2)n/(r-1) on V_0,  deg(v,V_j) >= (1-eps)|V_j| for v in V_i, j != i.
// `parts` must partition [n] into r >= 3 classes (V_0 may be empty).
PartitionCheck check_close_partition(const Graph& g, const VertexParts& parts, const Rational& eps);

// ℓ and k of a partition.
Count noncrossing_edges(const Graph& g, const VertexParts& parts);
Count crossing_nonedges(const Graph& g, const VertexParts& parts);

struct DerivedPartition {
    // Balanced max-(r-1)-cut used as base partition U_1..U_{r-1}.
    std::vector<std::vector<Vertex>> base;
    bool base_optimal = false;
    // V_i = {v : deg(v, V \ U_i) >= ((r-2)/(r-1) - eps/(4r)) n}; may overlap.
    std::vector<std::vector<Vertex>> candidates;
    std::vector<Vertex> exceptional;
    // Vertices lying in more than one V_i.
    std::vector<Vertex> multiply_assigned;
    PartitionCheck check;
    std::optional<ClosePartition> partition;
};

DerivedPartition derive_partition_report(const Graph& g, std::uint32_t r, const Rational& eps);

// The partition when the degree rule yields disjoint V_i that pass the check.
std::optional<ClosePartition> derive_partition(const Graph& g, std::uint32_t r, const Rational& eps);

enum class StructureCase { vertex_heavy, big_book, neighborhood_pair, close_partition, none };

std::string to_string(StructureCase c);

struct StructureVerdict {
    StructureCase kind = StructureCase::none;
    // vertex_heavy
    std::optional<Vertex> vertex;
    Count clique_count = 0;
    // neighborhood_pair
    std::vector<Vertex> x;
    std::vector<Vertex> y;
    Count xy_edges = 0;
    // close_partition
    std::optional<ClosePartition> partition;
    // Measured maxima, always filled.
    Count max_vertex_cliques = 0;
    Vertex max_vertex = 0;
    Rational vertex_threshold;  // delta n^{r-1}
    std::vector<std::string> warnings;
};

// First applicable case: VertexHeavy, NeighborhoodPair (r = 3), ClosePartition, None.
StructureVerdict classify(const Graph& g, std::uint32_t r, const Rational& eps, const Rational& delta);

struct BookReport {
    StructureCase kind = StructureCase::none;  // big_book when the bound is met
    Count max_vertex_cliques = 0;
    Vertex max_vertex = 0;
    VertexPair edge{0, 0};
    Count book = 0;
    // (1 - eps) (n/(r-1))^{r-2}
    Rational bound;
    bool meets_bound = false;
};

// Requires e(G) > t_r(n).
BookReport book_dichotomy(const Graph& g, std::uint32_t r, const Rational& eps_tilde);

struct CountingReport {
    Count noncrossing = 0;  // ℓ
    Count crossing_nonedges = 0;  // k
    Count exceptional = 0;  // |V_0|
    Count cliques = 0;
    // ℓ (n/(2r-2))^{r-2}
    Rational clique_bound;
    bool excess_check = false;  // ℓ >= |V_0| + k + 1
    bool clique_check = false;
    // Unmet premises (e(G) > t_r(n), eps < 1/(2r), n >= 2r^3/eps^2, partition is close).
    std::vector<std::string> caveats;
};

CountingReport counting_checks(const Graph& g, const ClosePartition& partition, std::uint32_t r);

struct MuEstimate {
    double mean = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 0.0;
    std::uint64_t trials = 0;
    std::vector<Count> samples;  // per trial, in trial order
};

// Σ_{u != v} deg_i(u,v,G)^2 over ordered pairs for a fixed G.
Count mu_i_sum(const UniformHypergraph& f, const Graph& g, std::size_t i);

// Mean of mu_i_sum over G(n,q) with trial seeds seed ^ t; normal 95% interval.
// Requires 1 <= i <= C(r,2) - 1.
MuEstimate mu_i_estimate(const UniformHypergraph& f, double q, std::size_t i, std::uint64_t trials,
                         std::uint64_t seed, unsigned threads = 0);

struct BoundednessReport {
    double bound = 0.0;  // K q^{2i} e(F)^2 / n^2
    double upper = 0.0;  // estimate's upper interval end
    bool bounded = false;
};

BoundednessReport boundedness_check(const UniformHypergraph& f, double q, std::size_t i, double k,
                                    const MuEstimate& estimate);

}  // namespace turannical
