#include <doctest.h>

#include "support.hpp"
#include "turannical/detection.hpp"
#include "turannical/hitting_set.hpp"
#include "turannical/turan.hpp"
#include "turannical/witness.hpp"

using namespace turannical;

namespace {

Graph path012() {
    Graph g(3);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    return g;
}

Graph cycle(std::uint32_t n) {
    Graph g(n);
    for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph k33() {
    Graph g(6);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v) g.add_edge(u, v);
    return g;
}

bool is_subgraph(const Graph& sub, const Graph& host) {
    for (const auto& [u, v] : sub.edges())
        if (!host.has_edge(u, v)) return false;
    return true;
}

}  // namespace

TEST_SUITE("witness_solver") {
    TEST_CASE("build_instance examples") {
        const UniformHypergraph f(3, 4, {{0, 1, 2}});
        const auto inst = build_instance(f);
        CHECK(inst.universe.size() == 6);
        REQUIRE(inst.constraints.size() == 1);
        CHECK(inst.constraints[0].size() == 3);

        CHECK(build_instance(UniformHypergraph::empty(3, 5)).constraints.empty());

        const UniformHypergraph tri(3, 3, {{0, 1, 2}});
        const auto rel = build_instance(tri, path012());
        CHECK(rel.constraints.empty());
        CHECK(rel.universe.size() == 2);
    }

    TEST_CASE("min_transversal examples") {
        const auto complete = min_transversal(build_instance(UniformHypergraph::complete(3, 5)));
        CHECK(complete.size == 4);
        CHECK(complete.optimal);

        const auto none = min_transversal(build_instance(UniformHypergraph::empty(3, 5)));
        CHECK(none.size == 0);
        CHECK(none.optimal);

        const auto single = min_transversal(build_instance(UniformHypergraph(3, 4, {{0, 1, 2}})));
        CHECK(single.size == 1);
        CHECK(single.optimal);
    }

    TEST_CASE("max_undetected_edges examples") {
        const auto complete = max_undetected_edges(UniformHypergraph::complete(3, 5));
        CHECK(complete.optimal);
        CHECK(complete.max_undetected_edges == 6);

        const auto restricted = max_undetected_edges(intersection_hypergraph(3, 10, 2));
        CHECK(restricted.optimal);
        CHECK(restricted.max_undetected_edges == 31);
        CHECK(max_undetected_edges(intersection_hypergraph(3, 7, 2)).max_undetected_edges == 13);
        CHECK(oracle::max_undetected_brute(intersection_hypergraph(3, 7, 2)) == 13);

        const auto empty = max_undetected_edges(UniformHypergraph::empty(3, 5));
        CHECK(empty.max_undetected_edges == 10);
        CHECK(empty.witness == Graph::complete(5));
    }

    TEST_CASE("is_turannical examples") {
        CHECK(is_turannical(UniformHypergraph::complete(3, 6)).verdict == Verdict::holds);

        const auto empty = is_turannical(UniformHypergraph::empty(3, 5));
        CHECK(empty.verdict == Verdict::fails);
        CHECK(empty.report.witness == Graph::complete(5));

        const auto restricted = is_turannical(intersection_hypergraph(3, 7, 2));
        CHECK(restricted.verdict == Verdict::fails);
        CHECK(restricted.report.witness.edge_count() >= 13);
        CHECK_FALSE(detects(intersection_hypergraph(3, 7, 2), restricted.report.witness).detected);
        CHECK(restricted.report.baseline.kind == Baseline::Kind::turan);
        CHECK(restricted.report.baseline.value == Rational(12));
    }

    TEST_CASE("small intersection hypergraphs beyond (r-1)m can still be Turánnical") {
        // The extremal function equals t_3(n) for m = 2, n in {5, 6}.
        for (std::uint32_t n : {5U, 6U}) {
            CHECK(restricted_turan_number(3, n, 2) == turan_number(3, n));
            CHECK(is_turannical(intersection_hypergraph(3, n, 2)).verdict == Verdict::holds);
        }
        CHECK(is_turannical(intersection_hypergraph(3, 7, 2)).verdict == Verdict::fails);
    }

    TEST_CASE("is_eps_turannical examples") {
        // (1+1/2) t_3(4) = 6 = C(4,2): the premise is never met.
        const auto vacuous = is_eps_turannical(UniformHypergraph::empty(3, 4), Rational(1, 2));
        CHECK(vacuous.verdict == Verdict::holds);
        CHECK(vacuous.vacuous);

        CHECK(is_eps_turannical(UniformHypergraph::complete(3, 5), Rational(1, 10)).verdict == Verdict::holds);

        const auto restricted = is_eps_turannical(intersection_hypergraph(3, 7, 2), Rational(1, 20));
        CHECK(restricted.verdict == Verdict::fails);
        CHECK(restricted.report.witness.edge_count() > 12);

        // Strict comparison: 13 > (1 + 1/12) * 12 = 13 is false.
        CHECK(is_eps_turannical(intersection_hypergraph(3, 7, 2), Rational(1, 12)).verdict == Verdict::holds);
        CHECK_THROWS_AS(is_eps_turannical(UniformHypergraph::empty(3, 4), Rational(-1, 2)), ParameterError);
    }

    TEST_CASE("sparse witness examples") {
        const auto empty = construct_sparse_witness(UniformHypergraph::empty(3, 6));
        REQUIRE(empty.has_value());
        CHECK(empty->edge_count() == 10);
        CHECK_FALSE(detects(UniformHypergraph::empty(3, 6), *empty).detected);

        CHECK_FALSE(construct_sparse_witness(UniformHypergraph::complete(3, 8)).has_value());

        const UniformHypergraph f(3, 8, {{0, 1, 2}, {0, 3, 5}, {1, 4, 7}, {2, 5, 6}, {3, 4, 6}, {0, 6, 7}});
        const auto w = construct_sparse_witness(f);
        REQUIRE(w.has_value());
        CHECK(w->edge_count() == 17);
        CHECK_FALSE(detects(f, *w).detected);
    }

    TEST_CASE("sparse witness for larger uniformity") {
        oracle::Gen gen(17);
        int returned = 0;
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t r = gen.between(4, 5);
            const std::uint32_t n = gen.between(r + 3, 14);
            const auto f = gen.hypergraph(r, n, 0.02);
            const auto w = construct_sparse_witness(f);
            if (!w) continue;
            ++returned;
            CHECK(w->edge_count() == turan_number(r, n) + 1);
            CHECK_FALSE(oracle::detects(f, *w));
        }
        CHECK(returned > 0);
    }

    TEST_CASE("deletion witness examples") {
        CHECK(construct_deletion_witness(UniformHypergraph::empty(3, 5)) == Graph::complete(5));

        const auto one = construct_deletion_witness(UniformHypergraph(3, 4, {{0, 1, 2}}));
        CHECK(one.edge_count() == 5);
        CHECK_FALSE(one.has_edge(0, 1));

        const auto f = intersection_hypergraph(3, 6, 1);
        const auto w = construct_deletion_witness(f);
        CHECK(w.edge_count() >= 5);
        CHECK_FALSE(detects(f, w).detected);
    }

    TEST_CASE("max_partition_edges examples") {
        CHECK(max_partition_edges(Graph::complete(4), 2).crossing_edges == 4);
        CHECK(max_partition_edges(cycle(5), 2).crossing_edges == 4);
        const auto bip = max_partition_edges(k33(), 2);
        CHECK(bip.crossing_edges == 9);
        CHECK(bip.optimal);
        CHECK_THROWS_AS(max_partition_edges(k33(), 1), ParameterError);
    }

    TEST_CASE("max_partition_edges matches brute force") {
        oracle::Gen gen(29);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t n = gen.between(2, 9);
            const std::uint32_t k = gen.between(2, 3);
            const Graph g = gen.graph(n, 0.5);
            const auto res = max_partition_edges(g, k);
            CHECK(res.optimal);
            CHECK(res.crossing_edges == oracle::max_cut_brute(g, k));
            Count crossing = 0;
            for (const auto& [u, v] : g.edges()) crossing += res.part[u] != res.part[v];
            CHECK(crossing == res.crossing_edges);
        }
    }

    TEST_CASE("balanced partitions are balanced") {
        oracle::Gen gen(31);
        for (int trial = 0; trial < 20; ++trial) {
            const std::uint32_t n = gen.between(4, 12);
            const Graph g = gen.graph(n, 0.6);
            const auto res = max_partition_edges(g, 3, true);
            std::vector<std::uint32_t> sizes(3, 0);
            for (const auto p : res.part) ++sizes[p];
            for (const auto s : sizes) CHECK((s == n / 3 || s == (n + 2) / 3));
            CHECK(res.crossing_edges <= max_partition_edges(g, 3).crossing_edges);
        }
    }

    TEST_CASE("relative decisions") {
        const auto bip = is_turannical_for(UniformHypergraph::complete(3, 6), k33());
        CHECK(bip.verdict == Verdict::holds);
        CHECK(bip.report.max_undetected_edges == 9);

        const auto empty = is_turannical_for(UniformHypergraph::empty(3, 4), Graph::complete(4));
        CHECK(empty.verdict == Verdict::fails);
        CHECK(empty.report.max_undetected_edges == 6);

        // All four triples of K_4: the largest triangle-free subgraph is C_4.
        const UniformHypergraph all4(3, 4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
        const auto k4 = is_turannical_for(all4, Graph::complete(4));
        CHECK(k4.report.max_undetected_edges == oracle::max_undetected_brute(all4));
        CHECK(k4.report.max_undetected_edges == 4);
        CHECK(k4.verdict == Verdict::holds);

        const auto eps = is_eps_turannical_for(all4, Graph::complete(4), Rational(1, 4));
        // threshold (5/4)(1/2) 6 = 15/4 < 4
        CHECK(eps.verdict == Verdict::fails);
        CHECK(eps.report.baseline.kind == Baseline::Kind::eps_relative);
        CHECK(eps.report.baseline.value == Rational(15, 4));

        // (1 + 1)(1/2) e(G) = e(G): the premise is never met.
        const auto vacuous = is_eps_turannical_for(UniformHypergraph::empty(3, 4), Graph::complete(4), Rational(1));
        CHECK(vacuous.verdict == Verdict::holds);
        CHECK(vacuous.vacuous);
    }

    TEST_CASE("solver matches exhaustive enumeration") {
        oracle::Gen gen(41);
        for (std::uint32_t n = 3; n <= 6; ++n) {
            for (double p : {0.2, 0.5, 0.8}) {
                for (int trial = 0; trial < 8; ++trial) {
                    const auto f = gen.hypergraph(3, n, p);
                    const auto rep = max_undetected_edges(f);
                    CHECK(rep.optimal);
                    CHECK(rep.max_undetected_edges == oracle::max_undetected_brute(f));
                }
            }
        }
    }

    TEST_CASE("relative solver matches exhaustive enumeration") {
        oracle::Gen gen(43);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t n = gen.between(4, 6);
            const std::uint32_t r = gen.between(3, 4);
            const auto f = gen.hypergraph(r, n, 0.5);
            const Graph host = gen.graph(n, 0.7);
            const auto rep = max_undetected_subgraph(f, host);
            CHECK(rep.optimal);
            CHECK(rep.max_undetected_edges == oracle::max_undetected_brute(f, oracle::mask_of(host)));
            CHECK(is_subgraph(rep.witness, host));
            CHECK(rep.max_undetected_edges + rep.transversal_size == host.edge_count());
        }
    }

    TEST_CASE("duality, sandwich and witness validity") {
        oracle::Gen gen(47);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t n = gen.between(5, 10);
            const std::uint32_t r = gen.between(3, 4);
            const auto f = gen.hypergraph(r, n, 0.15 + 0.6 * gen.coin(0.5));
            const auto rep = max_undetected_edges(f);
            REQUIRE(rep.optimal);
            CHECK(rep.max_undetected_edges + rep.transversal_size == oracle::choose(n, 2));
            CHECK(rep.universe_size == oracle::choose(n, 2));
            CHECK(rep.witness.edge_count() == rep.max_undetected_edges);
            CHECK_FALSE(oracle::detects(f, rep.witness));
            const auto inst = build_instance(f);
            CHECK(construct_deletion_witness(f).edge_count() <= rep.max_undetected_edges);
            CHECK(rep.max_undetected_edges <= oracle::choose(n, 2) - packing_lower_bound(inst));
            const auto heur = heuristic_transversal(inst, 4);
            CHECK(is_transversal(inst, heur));
            CHECK(heur.size() >= rep.transversal_size);
            CHECK_FALSE(oracle::detects(f, surviving_graph(inst, heur)));
        }
    }

    TEST_CASE("adding a hyperedge never increases the optimum") {
        oracle::Gen gen(53);
        for (int trial = 0; trial < 30; ++trial) {
            const std::uint32_t n = gen.between(5, 9);
            const auto f = gen.hypergraph(3, n, 0.3);
            const auto extra = oracle::subsets(n, 3)[gen.below(static_cast<std::uint32_t>(oracle::choose(n, 3)))];
            CHECK(max_undetected_edges(f.with_edge(extra)).max_undetected_edges <=
                  max_undetected_edges(f).max_undetected_edges);
        }
    }

    TEST_CASE("complete hypergraphs are Turánnical") {
        for (std::uint32_t r = 3; r <= 5; ++r) {
            for (std::uint32_t n = r; n <= 8; ++n) {
                const auto d = is_turannical(UniformHypergraph::complete(r, n));
                CHECK(d.verdict == Verdict::holds);
            }
        }
    }

    TEST_CASE("decisions agree with the exact optimum") {
        oracle::Gen gen(59);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t n = gen.between(5, 9);
            const auto f = gen.hypergraph(3, n, 0.3 + 0.6 * gen.coin(0.5));
            const Count best = max_undetected_edges(f).max_undetected_edges;
            const Rational eps(gen.between(0, 4), 8);
            const auto d = is_eps_turannical(f, eps);
            const bool holds = Rational(static_cast<std::int64_t>(best)) <=
                               (Rational(1) + eps) * Rational(static_cast<std::int64_t>(turan_number(3, n)));
            CHECK(d.verdict == (holds ? Verdict::holds : Verdict::fails));
            if (d.verdict == Verdict::fails) CHECK_FALSE(oracle::detects(f, d.report.witness));
            CHECK(is_turannical(f).verdict == (best <= turan_number(3, n) ? Verdict::holds : Verdict::fails));
        }
    }

    TEST_CASE("target mode agrees with the full search") {
        oracle::Gen gen(61);
        for (int trial = 0; trial < 30; ++trial) {
            const std::uint32_t n = gen.between(5, 9);
            const auto inst = build_instance(gen.hypergraph(3, n, 0.5));
            const auto full = min_transversal(inst);
            REQUIRE(full.optimal);
            for (std::size_t target : {full.size - (full.size > 0 ? 1 : 0), full.size, full.size + 1}) {
                SolveLimits limits;
                limits.target = target;
                const auto res = min_transversal(inst, limits);
                CHECK(res.complete);
                CHECK(res.reached_target(target) == (full.size <= target));
                CHECK(res.refuted_target(target) == (full.size > target));
            }
        }
    }

    TEST_CASE("budget exhaustion yields unknown") {
        oracle::Gen gen(67);
        const auto f = gen.hypergraph(3, 14, 0.6);
        SolveLimits limits;
        limits.node_budget = 1;
        const auto d = is_eps_turannical(f, Rational(1, 4), limits);
        CHECK(d.verdict == Verdict::unknown);
        CHECK_FALSE(d.report.optimal);
        CHECK(d.report.max_undetected_edges <= d.report.upper_bound);
        CHECK_FALSE(oracle::detects(f, d.report.witness));
        const auto full = is_eps_turannical(f, Rational(1, 4));
        CHECK(full.verdict != Verdict::unknown);
    }
}
