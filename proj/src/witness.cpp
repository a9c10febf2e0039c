#include "turannical/witness.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "turannical/detection.hpp"
#include "turannical/turan.hpp"

namespace turannical {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "true";
        case Verdict::fails: return "false";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

std::string to_string(Baseline::Kind kind) {
    switch (kind) {
        case Baseline::Kind::turan: return "turan";
        case Baseline::Kind::eps_turan: return "eps_turan";
        case Baseline::Kind::max_partition: return "max_partition";
        case Baseline::Kind::eps_relative: return "eps_relative";
        case Baseline::Kind::none: return "none";
    }
    return "none";
}

namespace {

void check_detector(const UniformHypergraph& f) {
    require(f.uniformity() >= 3, "restriction hypergraph must be at least 3-uniform");
}

void certify_undetected(const UniformHypergraph& f, const Graph& g) {
    if (detects(f, g).detected) throw std::logic_error("internal error: witness graph is detected");
}

// Adds universe pairs, in order, whenever the graph stays undetected.
Graph saturate(const UniformHypergraph& f, const HittingSetInstance& inst, Graph g) {
    for (const auto& [u, v] : inst.universe) {
        if (g.has_edge(u, v)) continue;
        g.add_edge(u, v);
        for (const auto& e : f.edges()) {
            if (std::binary_search(e.begin(), e.end(), u) && std::binary_search(e.begin(), e.end(), v) &&
                induces_clique(g, e)) {
                g.remove_edge(u, v);
                break;
            }
        }
    }
    return g;
}

// Decides "every undetected graph on the universe has at most `threshold` edges".
Decision decide(const UniformHypergraph& f, const HittingSetInstance& inst, const Rational& threshold,
                Baseline baseline, const SolveLimits& limits, const std::vector<Graph>& quick_witnesses) {
    Decision out;
    out.report.baseline = baseline;
    const Count total = inst.universe.size();
    out.report.universe_size = total;

    auto adopt = [&](const Graph& found) {
        Graph g = saturate(f, inst, found);
        certify_undetected(f, g);
        out.report.witness = std::move(g);
        out.report.max_undetected_edges = g.edge_count();
        out.report.transversal_size = total - g.edge_count();
    };

    if (threshold >= Rational(static_cast<std::int64_t>(total))) {
        out.vacuous = true;
        out.verdict = Verdict::holds;
        adopt(quick_witnesses.empty() ? surviving_graph(inst, {}) : quick_witnesses.front());
        out.report.upper_bound = total - packing_lower_bound(inst);
        out.report.optimal = out.report.upper_bound == out.report.max_undetected_edges;
        return out;
    }
    const auto need = static_cast<Count>(std::max<std::int64_t>(threshold.floor() + 1, 0));

    for (const auto& g : quick_witnesses) {
        if (g.edge_count() >= need) {
            adopt(g);
            out.verdict = Verdict::fails;
            out.report.upper_bound = total - packing_lower_bound(inst);
            out.report.optimal = out.report.upper_bound == out.report.max_undetected_edges;
            return out;
        }
    }

    SolveLimits decision = limits;
    decision.target = total - need;
    const TransversalResult solved = min_transversal(inst, decision);
    adopt(surviving_graph(inst, solved.transversal));
    out.report.upper_bound = total - solved.lower_bound;
    out.report.optimal = out.report.upper_bound == out.report.max_undetected_edges;
    out.report.nodes = solved.nodes;
    if (solved.size <= *decision.target)
        out.verdict = Verdict::fails;
    else if (solved.lower_bound > *decision.target)
        out.verdict = Verdict::holds;
    else
        out.verdict = Verdict::unknown;
    return out;
}

WitnessReport optimize(const UniformHypergraph& f, const HittingSetInstance& inst, const SolveLimits& limits) {
    SolveLimits plain = limits;
    plain.target.reset();
    const TransversalResult solved = min_transversal(inst, plain);
    WitnessReport report;
    report.witness = surviving_graph(inst, solved.transversal);
    certify_undetected(f, report.witness);
    report.universe_size = inst.universe.size();
    report.max_undetected_edges = report.witness.edge_count();
    report.transversal_size = solved.size;
    report.upper_bound = report.universe_size - solved.lower_bound;
    report.optimal = solved.optimal;
    report.nodes = solved.nodes;
    return report;
}

// Places u, v into part `home` and `link_vertices` into part `link_part` of a
// balanced (r-1)-partition, filling the rest in vertex order.
std::optional<std::vector<std::uint32_t>> place(std::uint32_t n, const std::vector<std::uint32_t>& sizes, Vertex u,
                                                Vertex v, std::uint32_t home, const std::vector<Vertex>& link_vertices,
                                                std::uint32_t link_part) {
    std::vector<std::uint32_t> room = sizes;
    std::vector<std::uint32_t> part(n, ~0U);
    auto put = [&](Vertex x, std::uint32_t p) {
        if (part[x] != ~0U) return part[x] == p;
        if (room[p] == 0) return false;
        part[x] = p;
        --room[p];
        return true;
    };
    if (!put(u, home) || !put(v, home)) return std::nullopt;
    for (const auto w : link_vertices)
        if (!put(w, link_part)) return std::nullopt;
    std::uint32_t p = 0;
    for (Vertex x = 0; x < n; ++x) {
        if (part[x] != ~0U) continue;
        while (room[p] == 0) ++p;
        put(x, p);
    }
    return part;
}

}  // namespace

WitnessReport max_undetected_edges(const UniformHypergraph& f, const SolveLimits& limits) {
    check_detector(f);
    return optimize(f, build_instance(f), limits);
}

WitnessReport max_undetected_subgraph(const UniformHypergraph& f, const Graph& host, const SolveLimits& limits) {
    check_detector(f);
    return optimize(f, build_instance(f, host), limits);
}

Decision is_turannical(const UniformHypergraph& f, const SolveLimits& limits) {
    check_detector(f);
    const auto t = turan_number(f.uniformity(), f.order());
    Baseline baseline{Baseline::Kind::turan, Rational(static_cast<std::int64_t>(t)), true};
    std::vector<Graph> quick;
    if (auto sparse = construct_sparse_witness(f)) quick.push_back(std::move(*sparse));
    quick.push_back(construct_deletion_witness(f));
    return decide(f, build_instance(f), baseline.value, baseline, limits, quick);
}

Decision is_eps_turannical(const UniformHypergraph& f, const Rational& eps, const SolveLimits& limits) {
    check_detector(f);
    require(eps >= Rational(0), "eps must be non-negative");
    const auto t = turan_number(f.uniformity(), f.order());
    const Rational threshold = (Rational(1) + eps) * Rational(static_cast<std::int64_t>(t));
    Baseline baseline{Baseline::Kind::eps_turan, threshold, true};
    std::vector<Graph> quick{construct_deletion_witness(f)};
    if (auto sparse = construct_sparse_witness(f)) quick.push_back(std::move(*sparse));
    return decide(f, build_instance(f), threshold, baseline, limits, quick);
}

std::optional<Graph> construct_sparse_witness(const UniformHypergraph& f) {
    check_detector(f);
    const std::uint32_t r = f.uniformity();
    const std::uint32_t n = f.order();
    if (n < 2) return std::nullopt;
    const std::uint32_t parts = r - 1;
    std::vector<std::uint32_t> sizes(parts);
    for (std::uint32_t p = 0; p < parts; ++p) sizes[p] = n / parts + (p < n % parts ? 1 : 0);

    const auto link_sizes = pair_link_sizes(f);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            const Count links = link_sizes[pair_index(u, v, n)];
            const bool small = r == 3 ? 2 * links + 2 < n
                                      : static_cast<Count>(r - 2) * (r - 1) * links <= n;
            if (!small) continue;

            const Vertex pair[2] = {u, v};
            std::vector<Vertex> covered;
            const UniformHypergraph pair_link = link(f, pair);
            for (const auto& e : pair_link.edges()) covered.insert(covered.end(), e.begin(), e.end());
            std::sort(covered.begin(), covered.end());
            covered.erase(std::unique(covered.begin(), covered.end()), covered.end());

            std::optional<std::vector<std::uint32_t>> part;
            if (r == 3) {
                part = place(n, sizes, u, v, 0, covered, 0);
            } else {
                // Link vertices go to the largest part, u and v to some other part of size >= 2.
                for (std::uint32_t home = 1; home < parts && !part; ++home)
                    if (sizes[home] >= 2) part = place(n, sizes, u, v, home, covered, 0);
            }
            if (!part) continue;

            Graph g(n);
            for (Vertex a = 0; a < n; ++a)
                for (Vertex b = a + 1; b < n; ++b)
                    if ((*part)[a] != (*part)[b]) g.add_edge(a, b);
            g.add_edge(u, v);
            if (detects(f, g).detected) continue;
            return g;
        }
    }
    return std::nullopt;
}

Graph construct_deletion_witness(const UniformHypergraph& f) {
    return construct_deletion_witness(f, Graph::complete(f.order()));
}

Graph construct_deletion_witness(const UniformHypergraph& f, const Graph& host) {
    check_detector(f);
    require(f.order() == host.order(), "hypergraph and host graph have different vertex counts");
    Graph g = host;
    for (const auto& e : f.edges())
        if (induces_clique(g, e)) g.remove_edge(e[0], e[1]);
    return g;
}

namespace {

class MaxCut {
public:
    MaxCut(const Graph& g, std::uint32_t k, bool balanced, std::uint64_t budget)
        : g_(g), n_(static_cast<std::uint32_t>(g.order())), k_(k), balanced_(balanced), budget_(budget) {
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0U);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return g_.degree(a) > g_.degree(b); });
        floor_ = n_ / k_;
        cap_ = (n_ + k_ - 1) / k_;
    }

    // Best of two deterministic starts (round robin, greedy by degree order),
    // each refined by single-vertex moves, rebalancing and pair swaps.
    PartitionResult local_search() const {
        std::vector<std::uint32_t> round_robin(n_);
        for (Vertex v = 0; v < n_; ++v) round_robin[v] = v % k_;
        PartitionResult best = refine(std::move(round_robin));
        PartitionResult greedy = refine(greedy_start());
        if (greedy.crossing_edges > best.crossing_edges) best = std::move(greedy);
        return best;
    }

    PartitionResult exact() {
        best_ = local_search();
        part_.assign(n_, ~0U);
        size_.assign(k_, 0);
        cnt_.assign(static_cast<std::size_t>(n_) * k_, 0);
        assigned_nbrs_.assign(n_, 0);
        unassigned_edges_ = g_.edge_count();
        cut_ = 0;
        aborted_ = false;
        recurse(0, 0);
        best_.optimal = !aborted_;
        best_.nodes = nodes_;
        return best_;
    }

    Count crossing(const std::vector<std::uint32_t>& part) const {
        Count total = 0;
        for (const auto& [u, v] : g_.edges())
            if (part[u] != part[v]) ++total;
        return total;
    }

private:
    std::int64_t move_gain(const std::vector<std::uint32_t>& part, Vertex v, std::uint32_t to) const {
        std::int64_t gain = 0;
        g_.neighbours(v).for_each([&](Vertex w) {
            if (part[w] == part[v]) ++gain;
            if (part[w] == to) --gain;
        });
        return gain;
    }

    std::vector<std::uint32_t> greedy_start() const {
        std::vector<std::uint32_t> part(n_, ~0U);
        std::vector<std::uint32_t> size(k_, 0);
        for (const Vertex v : order_) {
            std::vector<std::uint32_t> seen(k_, 0);
            g_.neighbours(v).for_each([&](Vertex w) {
                if (part[w] != ~0U) ++seen[part[w]];
            });
            std::uint32_t to = k_;
            for (std::uint32_t j = 0; j < k_; ++j) {
                if (balanced_ && size[j] >= cap_) continue;
                if (to == k_ || seen[j] < seen[to] || (seen[j] == seen[to] && size[j] < size[to])) to = j;
            }
            part[v] = to;
            ++size[to];
        }
        return part;
    }

    PartitionResult refine(std::vector<std::uint32_t> part) const {
        bool improved = true;
        while (improved) {
            improved = false;
            for (Vertex v = 0; v < n_; ++v)
                for (std::uint32_t to = 0; to < k_; ++to)
                    if (to != part[v] && move_gain(part, v, to) > 0) {
                        part[v] = to;
                        improved = true;
                    }
        }
        if (balanced_) {
            // Move the cheapest vertices out of oversized parts, then swap pairs.
            std::vector<std::uint32_t> size(k_, 0);
            for (Vertex v = 0; v < n_; ++v) ++size[part[v]];
            for (;;) {
                std::uint32_t big = 0;
                std::uint32_t small = 0;
                for (std::uint32_t j = 0; j < k_; ++j) {
                    if (size[j] > size[big]) big = j;
                    if (size[j] < size[small]) small = j;
                }
                if (size[big] <= size[small] + 1) break;
                Vertex pick = n_;
                std::int64_t pick_gain = 0;
                for (Vertex v = 0; v < n_; ++v) {
                    if (part[v] != big) continue;
                    const std::int64_t gain = move_gain(part, v, small);
                    if (pick == n_ || gain > pick_gain) {
                        pick = v;
                        pick_gain = gain;
                    }
                }
                part[pick] = small;
                --size[big];
                ++size[small];
            }
            improved = true;
            while (improved) {
                improved = false;
                for (Vertex v = 0; v < n_; ++v)
                    for (Vertex w = v + 1; w < n_; ++w) {
                        if (part[v] == part[w]) continue;
                        const auto pv = part[v];
                        const auto pw = part[w];
                        // The edge vw, if present, stays crossing.
                        std::int64_t gain = move_gain(part, v, pw) + move_gain(part, w, pv);
                        if (g_.has_edge(v, w)) gain -= 2;
                        if (gain > 0) {
                            part[v] = pw;
                            part[w] = pv;
                            improved = true;
                        }
                    }
            }
        }
        PartitionResult out;
        out.crossing_edges = crossing(part);
        out.part = std::move(part);
        return out;
    }

    Count bound() const {
        Count total = cut_ + unassigned_edges_;
        for (Vertex v = 0; v < n_; ++v) {
            if (part_[v] != ~0U || assigned_nbrs_[v] == 0) continue;
            std::uint32_t least = assigned_nbrs_[v];
            for (std::uint32_t j = 0; j < k_; ++j) least = std::min(least, cnt_[v * k_ + j]);
            total += assigned_nbrs_[v] - least;
        }
        return total;
    }

    void recurse(std::uint32_t depth, std::uint32_t used) {
        if (aborted_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (depth == n_) {
            if (cut_ > best_.crossing_edges) {
                best_.crossing_edges = cut_;
                best_.part = part_;
            }
            return;
        }
        if (bound() <= best_.crossing_edges) return;
        const Vertex v = order_[depth];
        const std::uint32_t limit = std::min(k_, used + 1);
        for (std::uint32_t j = 0; j < limit && !aborted_; ++j) {
            if (balanced_) {
                if (size_[j] >= cap_) continue;
                // Remaining vertices must still be able to lift every part to floor(n/k).
                std::uint32_t deficit = 0;
                for (std::uint32_t q = 0; q < k_; ++q) {
                    const auto s = size_[q] + (q == j ? 1 : 0);
                    if (s < floor_) deficit += floor_ - s;
                }
                if (deficit > n_ - depth - 1) continue;
            }
            const Count gained = assigned_nbrs_[v] - cnt_[v * k_ + j];
            part_[v] = j;
            ++size_[j];
            cut_ += gained;
            std::uint32_t fresh = 0;
            g_.neighbours(v).for_each([&](Vertex w) {
                ++cnt_[w * k_ + j];
                ++assigned_nbrs_[w];
                if (part_[w] == ~0U) ++fresh;
            });
            unassigned_edges_ -= fresh;
            recurse(depth + 1, std::max(used, j + 1));
            unassigned_edges_ += fresh;
            g_.neighbours(v).for_each([&](Vertex w) {
                --cnt_[w * k_ + j];
                --assigned_nbrs_[w];
            });
            cut_ -= gained;
            --size_[j];
            part_[v] = ~0U;
        }
    }

    const Graph& g_;
    std::uint32_t n_;
    std::uint32_t k_;
    bool balanced_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<Vertex> order_;
    std::uint32_t floor_ = 0;
    std::uint32_t cap_ = 0;
    PartitionResult best_;
    std::vector<std::uint32_t> part_;
    std::vector<std::uint32_t> size_;
    std::vector<std::uint32_t> cnt_;
    std::vector<std::uint32_t> assigned_nbrs_;
    Count unassigned_edges_ = 0;
    Count cut_ = 0;
    bool aborted_ = false;
};

}  // namespace

PartitionResult max_partition_edges(const Graph& g, std::uint32_t k, bool balanced, std::uint64_t node_budget) {
    require(k >= 2, "partition needs at least 2 parts");
    MaxCut solver(g, k, balanced, node_budget);
    if (g.order() <= exact_partition_limit) return solver.exact();
    auto out = solver.local_search();
    out.optimal = g.edge_count() == out.crossing_edges;
    return out;
}

Decision is_turannical_for(const UniformHypergraph& f, const Graph& g, const SolveLimits& limits) {
    check_detector(f);
    require(f.order() == g.order(), "hypergraph and graph have different vertex counts");
    const auto partition = max_partition_edges(g, f.uniformity() - 1, false, limits.node_budget);
    Baseline baseline{Baseline::Kind::max_partition, Rational(static_cast<std::int64_t>(partition.crossing_edges)),
                      partition.optimal};
    std::vector<Graph> quick{construct_deletion_witness(f, g)};
    Decision out = decide(f, build_instance(f, g), baseline.value, baseline, limits, quick);
    // With only a lower bound on the partition value, a larger witness is not a certificate.
    if (!partition.optimal && out.verdict == Verdict::fails) out.verdict = Verdict::unknown;
    return out;
}

Decision is_eps_turannical_for(const UniformHypergraph& f, const Graph& g, const Rational& eps,
                               const SolveLimits& limits) {
    check_detector(f);
    require(f.order() == g.order(), "hypergraph and graph have different vertex counts");
    require(eps >= Rational(0), "eps must be non-negative");
    const std::int64_t r = f.uniformity();
    const Rational threshold =
        (Rational(1) + eps) * Rational(r - 2, r - 1) * Rational(static_cast<std::int64_t>(g.edge_count()));
    Baseline baseline{Baseline::Kind::eps_relative, threshold, true};
    std::vector<Graph> quick{construct_deletion_witness(f, g)};
    return decide(f, build_instance(f, g), threshold, baseline, limits, quick);
}

}  // namespace turannical
