#include "turannical/structure.hpp"

#include <algorithm>
#include <cmath>

#include "turannical/cliques.hpp"
#include "turannical/experiments.hpp"
#include "turannical/turan.hpp"
#include "turannical/witness.hpp"
#include "parallel.hpp"

namespace turannical {

namespace {

Rational count_r(Count c) {
    if (c > static_cast<Count>(INT64_MAX)) throw OverflowError("count too large for exact comparison");
    return Rational(static_cast<std::int64_t>(c));
}

Rational power(const Rational& base, unsigned exponent) {
    Rational out(1);
    for (unsigned i = 0; i < exponent; ++i) out = out * base;
    return out;
}

// Part index per vertex (0 for V_0); validates that `parts` partitions [n].
std::vector<std::uint32_t> part_of(const Graph& g, const VertexParts& parts) {
    require(parts.size() >= 3, "a close (r-1)-partition needs V_0 and at least two further parts");
    std::vector<std::uint32_t> owner(g.order(), ~0U);
    for (std::uint32_t i = 0; i < parts.size(); ++i)
        for (const auto v : parts[i]) {
            require(v < g.order(), "partition names vertex " + std::to_string(v) + " outside the graph");
            require(owner[v] == ~0U, "vertex " + std::to_string(v) + " appears in two parts");
            owner[v] = i;
        }
    for (Vertex v = 0; v < g.order(); ++v)
        require(owner[v] != ~0U, "vertex " + std::to_string(v) + " is not covered by the partition");
    return owner;
}

std::string rational_text(const Rational& x) { return x.to_string(); }

}  // namespace

std::string to_string(PartitionViolation::Condition c) {
    switch (c) {
        case PartitionViolation::Condition::exceptional_size: return "exceptional_size";
        case PartitionViolation::Condition::part_size: return "part_size";
        case PartitionViolation::Condition::exceptional_degree: return "exceptional_degree";
        case PartitionViolation::Condition::crossing_degree: return "crossing_degree";
    }
    return "unknown";
}

PartitionCheck check_close_partition(const Graph& g, const VertexParts& parts, const Rational& eps) {
    part_of(g, parts);
    require(eps >= Rational(0), "eps must be non-negative");
    const auto r = static_cast<std::int64_t>(parts.size());
    const Rational n = count_r(g.order());
    PartitionCheck out;
    using C = PartitionViolation::Condition;

    const Rational v0_cap = eps * eps * n;
    if (count_r(parts[0].size()) > v0_cap)
        out.violations.push_back({C::exceptional_size, 0, 0,
                                  "|V_0| = " + std::to_string(parts[0].size()) + " exceeds eps^2 n = " +
                                      rational_text(v0_cap)});
    const Rational part_floor = (Rational(1) - eps) * n / Rational(r - 1);
    for (std::uint32_t i = 1; i < parts.size(); ++i)
        if (count_r(parts[i].size()) < part_floor)
            out.violations.push_back({C::part_size, i, 0,
                                      "|V_" + std::to_string(i) + "| = " + std::to_string(parts[i].size()) +
                                          " is below (1-eps) n/(r-1) = " + rational_text(part_floor)});

    const Rational degree_cap = (Rational(1) - eps * eps) * Rational(r - 2, r - 1) * n;
    for (const auto v : parts[0])
        if (count_r(g.degree(v)) > degree_cap)
            out.violations.push_back({C::exceptional_degree, v, 0,
                                      "vertex " + std::to_string(v) + " in V_0 has degree " +
                                          std::to_string(g.degree(v)) + " above (1-eps^2)(r-2)n/(r-1) = " +
                                          rational_text(degree_cap)});

    std::vector<VertexSet> sets;
    for (const auto& p : parts) sets.push_back(VertexSet::of(g.order(), p));
    for (std::uint32_t i = 1; i < parts.size(); ++i)
        for (const auto v : parts[i])
            for (std::uint32_t j = 1; j < parts.size(); ++j) {
                if (j == i) continue;
                const Rational need = (Rational(1) - eps) * count_r(parts[j].size());
                const std::size_t have = g.degree_into(v, sets[j]);
                if (count_r(have) < need)
                    out.violations.push_back({C::crossing_degree, v, j,
                                              "vertex " + std::to_string(v) + " in V_" + std::to_string(i) +
                                                  " has " + std::to_string(have) + " neighbours in V_" +
                                                  std::to_string(j) + ", needs at least " + rational_text(need)});
            }
    out.close = out.violations.empty();
    return out;
}

Count noncrossing_edges(const Graph& g, const VertexParts& parts) {
    const auto owner = part_of(g, parts);
    Count total = 0;
    for (const auto& [u, v] : g.edges())
        if (owner[u] != 0 && owner[u] == owner[v]) ++total;
    return total;
}

Count crossing_nonedges(const Graph& g, const VertexParts& parts) {
    const auto owner = part_of(g, parts);
    Count total = 0;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (owner[u] != 0 && owner[v] != 0 && owner[u] != owner[v] && !g.has_edge(u, v)) ++total;
    return total;
}

DerivedPartition derive_partition_report(const Graph& g, std::uint32_t r, const Rational& eps) {
    require(r >= 3, "r must be at least 3");
    require(eps >= Rational(0), "eps must be non-negative");
    const std::uint32_t k = r - 1;
    const auto n = static_cast<std::uint32_t>(g.order());
    DerivedPartition out;

    const PartitionResult cut = max_partition_edges(g, k, true);
    out.base.assign(k, {});
    for (Vertex v = 0; v < n; ++v) out.base[cut.part[v]].push_back(v);
    out.base_optimal = cut.optimal;

    const Rational threshold =
        (Rational(r - 2, r - 1) - eps / Rational(4 * static_cast<std::int64_t>(r))) * count_r(n);
    out.candidates.assign(k, {});
    std::vector<std::uint32_t> hits(n, 0);
    for (std::uint32_t i = 0; i < k; ++i) {
        VertexSet outside = VertexSet::full(n);
        outside.subtract(VertexSet::of(n, out.base[i]));
        for (Vertex v = 0; v < n; ++v)
            if (count_r(g.degree_into(v, outside)) >= threshold) {
                out.candidates[i].push_back(v);
                ++hits[v];
            }
    }
    for (Vertex v = 0; v < n; ++v) {
        if (hits[v] == 0) out.exceptional.push_back(v);
        if (hits[v] > 1) out.multiply_assigned.push_back(v);
    }
    if (!out.multiply_assigned.empty()) return out;

    VertexParts parts;
    parts.push_back(out.exceptional);
    for (const auto& c : out.candidates) parts.push_back(c);
    out.check = check_close_partition(g, parts, eps);
    if (out.check.close) {
        ClosePartition cp;
        cp.noncrossing_edges = noncrossing_edges(g, parts);
        cp.crossing_nonedges = crossing_nonedges(g, parts);
        cp.parts = std::move(parts);
        cp.eps = eps;
        out.partition = std::move(cp);
    }
    return out;
}

std::optional<ClosePartition> derive_partition(const Graph& g, std::uint32_t r, const Rational& eps) {
    return derive_partition_report(g, r, eps).partition;
}

std::string to_string(StructureCase c) {
    switch (c) {
        case StructureCase::vertex_heavy: return "VertexHeavy";
        case StructureCase::big_book: return "BigBook";
        case StructureCase::neighborhood_pair: return "NeighborhoodPair";
        case StructureCase::close_partition: return "ClosePartition";
        case StructureCase::none: return "None";
    }
    return "None";
}

StructureVerdict classify(const Graph& g, std::uint32_t r, const Rational& eps, const Rational& delta) {
    require(r >= 3, "r must be at least 3");
    require(delta > Rational(0), "delta must be positive");
    require(eps >= Rational(0), "eps must be non-negative");
    const auto n = static_cast<std::uint32_t>(g.order());
    StructureVerdict out;
    if (g.edge_count() < turan_number(r, n))
        out.warnings.push_back("e(G) = " + std::to_string(g.edge_count()) + " is below t_r(n) = " +
                               std::to_string(turan_number(r, n)) + "; the classification premise fails");

    out.vertex_threshold = delta * count_r(checked_pow(n, r - 1));
    std::optional<Vertex> heavy;
    for (Vertex v = 0; v < n; ++v) {
        const Count c = r <= n ? clique_count_at_vertex(g, r, v) : 0;
        if (c > out.max_vertex_cliques) {
            out.max_vertex_cliques = c;
            out.max_vertex = v;
        }
        if (!heavy && count_r(c) >= out.vertex_threshold) heavy = v;
    }
    if (heavy) {
        out.kind = StructureCase::vertex_heavy;
        out.vertex = heavy;
        out.clique_count = clique_count_at_vertex(g, r, *heavy);
        return out;
    }

    const DerivedPartition derived = derive_partition_report(g, r, eps);
    if (r == 3 && n > 0) {
        const VertexSet v1 = VertexSet::of(n, derived.candidates[0]);
        const VertexSet v2 = VertexSet::of(n, derived.candidates[1]);
        const Rational size_need = eps * count_r(checked_mul(n, n)) / Rational(288);
        auto try_vertex = [&](Vertex u, VertexSet x, VertexSet y) {
            const Count xs = x.size();
            const Count ys = y.size();
            const Count prod = checked_mul(xs, ys);
            if (prod == 0 || count_r(prod) < size_need) return false;
            const Count exy = edges_between(g, x, y);
            if (count_r(exy) < (Rational(1) - Rational(4) * eps) * count_r(prod)) return false;
            out.kind = StructureCase::neighborhood_pair;
            out.vertex = u;
            out.x = x.members();
            out.y = y.members();
            out.xy_edges = exy;
            return true;
        };
        // Vertices in both V_1 and V_2, then high-degree vertices of V_0.
        for (const auto u : derived.multiply_assigned) {
            VertexSet x = g.neighbours(u) & v1;
            x.subtract(v2);
            VertexSet y = g.neighbours(u) & v2;
            y.subtract(v1);
            if (try_vertex(u, std::move(x), std::move(y))) return out;
        }
        const Rational degree_cap = (Rational(1) - eps * eps) * count_r(n) / Rational(2);
        if (derived.multiply_assigned.empty())
            for (const auto u : derived.exceptional)
                if (count_r(g.degree(u)) > degree_cap &&
                    try_vertex(u, g.neighbours(u) & v1, g.neighbours(u) & v2))
                    return out;
    }

    if (derived.partition) {
        out.kind = StructureCase::close_partition;
        out.partition = derived.partition;
        return out;
    }
    out.kind = StructureCase::none;
    return out;
}

BookReport book_dichotomy(const Graph& g, std::uint32_t r, const Rational& eps_tilde) {
    require(r >= 3, "r must be at least 3");
    const auto n = static_cast<std::uint32_t>(g.order());
    const Count t = turan_number(r, n);
    require(g.edge_count() > t, "book dichotomy needs e(G) > t_r(n); here e(G) = " + std::to_string(g.edge_count()) +
                                    " and t_r(n) = " + std::to_string(t));
    BookReport out;
    for (Vertex v = 0; v < n; ++v) {
        const Count c = clique_count_at_vertex(g, r, v);
        if (c > out.max_vertex_cliques) {
            out.max_vertex_cliques = c;
            out.max_vertex = v;
        }
    }
    const auto book = max_book(g, r);
    if (book) {
        out.edge = book->edge;
        out.book = book->size;
    }
    out.bound = (Rational(1) - eps_tilde) * power(Rational(n, r - 1), r - 2);
    out.meets_bound = count_r(out.book) >= out.bound;
    out.kind = out.meets_bound ? StructureCase::big_book : StructureCase::none;
    return out;
}

CountingReport counting_checks(const Graph& g, const ClosePartition& partition, std::uint32_t r) {
    require(r >= 3, "r must be at least 3");
    require(partition.parts.size() == r, "partition must have V_0 plus r-1 parts");
    const auto n = static_cast<std::uint32_t>(g.order());
    CountingReport out;
    out.noncrossing = noncrossing_edges(g, partition.parts);
    out.crossing_nonedges = crossing_nonedges(g, partition.parts);
    out.exceptional = partition.parts[0].size();
    out.cliques = r <= n ? count_cliques(g, r) : 0;
    out.clique_bound = count_r(out.noncrossing) * power(Rational(n, 2 * (r - 1)), r - 2);
    out.excess_check = out.noncrossing >= out.exceptional + out.crossing_nonedges + 1;
    out.clique_check = count_r(out.cliques) >= out.clique_bound;

    if (g.edge_count() <= turan_number(r, n)) out.caveats.push_back("premise e(G) > t_r(n) fails");
    if (!(partition.eps < Rational(1, 2 * r))) out.caveats.push_back("premise eps < 1/(2r) fails");
    if (partition.eps == Rational(0) ||
        count_r(n) < Rational(2 * static_cast<std::int64_t>(r) * r * r) / (partition.eps * partition.eps))
        out.caveats.push_back("premise n >= 2r^3/eps^2 fails");
    if (!check_close_partition(g, partition.parts, partition.eps).close)
        out.caveats.push_back("partition is not eps-close");
    return out;
}

Count mu_i_sum(const UniformHypergraph& f, const Graph& g, std::size_t i) {
    require(f.order() == g.order(), "hypergraph and graph have different vertex counts");
    const std::uint32_t n = f.order();
    std::vector<Count> deg(n < 2 ? 0 : binomial(n, 2), 0);
    for (const auto& e : f.edges()) {
        std::size_t inside = 0;
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                if (g.has_edge(e[a], e[b])) ++inside;
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                const std::size_t others = inside - (g.has_edge(e[a], e[b]) ? 1 : 0);
                if (others >= i) ++deg[pair_index(e[a], e[b], n)];
            }
    }
    Count total = 0;
    for (const auto d : deg) total = checked_add(total, checked_mul(2, checked_mul(d, d)));
    return total;
}

MuEstimate mu_i_estimate(const UniformHypergraph& f, double q, std::size_t i, std::uint64_t trials,
                         std::uint64_t seed, unsigned threads) {
    const std::uint32_t r = f.uniformity();
    require(r >= 2, "uniformity must be at least 2");
    require(i >= 1 && i + 1 <= binomial(r, 2), "i must lie in [1, C(r,2)-1]");
    require(q >= 0.0 && q <= 1.0, "q must lie in [0,1]");
    require(trials >= 1, "trials must be positive");
    MuEstimate out;
    out.trials = trials;
    out.samples.assign(trials, 0);
    detail::parallel_for(trials, threads, [&](std::size_t t) {
        const Graph g = sample_graph(f.order(), q, seed ^ static_cast<std::uint64_t>(t));
        out.samples[t] = mu_i_sum(f, g, i);
    });
    Count sum = 0;
    for (const auto s : out.samples) sum = checked_add(sum, s);
    out.mean = static_cast<double>(sum) / static_cast<double>(trials);
    double var = 0.0;
    if (trials > 1) {
        for (const auto s : out.samples) {
            const double d = static_cast<double>(s) - out.mean;
            var += d * d;
        }
        var /= static_cast<double>(trials - 1);
    }
    const double half = wilson_z95 * std::sqrt(var / static_cast<double>(trials));
    out.ci_lo = out.mean - half;
    out.ci_hi = out.mean + half;
    return out;
}

BoundednessReport boundedness_check(const UniformHypergraph& f, double q, std::size_t i, double k,
                                    const MuEstimate& estimate) {
    require(q >= 0.0 && q <= 1.0, "q must lie in [0,1]");
    require(f.order() > 0, "hypergraph has no vertices");
    BoundednessReport out;
    const double e = static_cast<double>(f.edge_count());
    const double n = static_cast<double>(f.order());
    out.bound = k * std::pow(q, 2.0 * static_cast<double>(i)) * e * e / (n * n);
    out.upper = estimate.ci_hi;
    out.bounded = out.upper <= out.bound;
    return out;
}

}  // namespace turannical
