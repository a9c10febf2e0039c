#include "turannical/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "turannical/combinatorics.hpp"
#include "turannical/detection.hpp"
#include "turannical/rng.hpp"
#include "turannical/turan.hpp"
#include "parallel.hpp"

namespace turannical {

namespace {

void check_probability(double p, const char* name) {
    require(p >= 0.0 && p <= 1.0, std::string(name) + " must lie in [0,1]");
}

// Indices j in [0, total) kept by the sampling rule, in increasing order.
template <class Fn>
void sample_indices(Count total, double p, std::uint64_t seed, Fn&& keep) {
    if (p <= 0.0 || total == 0) return;
    if (p >= 1.0) {
        for (Count j = 0; j < total; ++j) keep(j);
        return;
    }
    if (p >= sparse_sampling_cutoff) {
        for (Count j = 0; j < total; ++j)
            if (CounterRng::uniform_at(seed, j) < p) keep(j);
        return;
    }
    // Geometric gaps: draw k of the stream gives the k-th gap.
    const double log_q = std::log1p(-p);
    Count j = 0;
    for (std::uint64_t k = 0;; ++k) {
        const double u = 1.0 - CounterRng::uniform_at(seed, k);  // (0, 1]
        const double gap = std::floor(std::log(u) / log_q);
        if (gap >= static_cast<double>(total - j)) return;
        j += static_cast<Count>(gap);
        keep(j);
        if (++j >= total) return;
    }
}

Rational relative_threshold(std::uint32_t r, const Graph& g, const Rational& eps) {
    return (Rational(1) + eps) * Rational(r - 2, r - 1) * Rational(static_cast<std::int64_t>(g.edge_count()));
}

void check_property(std::uint32_t r, const Property& property) {
    if (property.kind == PropertyKind::eps || property.kind == PropertyKind::eps_for_g)
        require(property.eps >= Rational(0), "eps must be non-negative");
    if (property.kind == PropertyKind::eps_for_g && r > 2)
        require(property.eps < Rational(1, r - 2),
                "eps must be below 1/(r-2); otherwise the premise is never met and the property is vacuous");
}

}  // namespace

UniformHypergraph sample_hypergraph(std::uint32_t r, std::uint32_t n, double p, std::uint64_t seed) {
    check_probability(p, "p");
    require(r >= 1, "r must be positive");
    if (r > n) return UniformHypergraph::empty(r, n);
    const Count total = binomial(n, r);
    std::vector<Hyperedge> edges;
    if (p >= sparse_sampling_cutoff) {
        // Walk subsets in lexicographic order instead of unranking every index.
        Hyperedge s(r);
        for (std::uint32_t i = 0; i < r; ++i) s[i] = i;
        Count j = 0;
        do {
            if (p >= 1.0 || CounterRng::uniform_at(seed, j) < p) edges.push_back(s);
            ++j;
        } while (next_subset(s, n));
    } else {
        sample_indices(total, p, seed, [&](Count j) { edges.push_back(unrank_subset(j, n, r)); });
    }
    return UniformHypergraph(r, n, std::move(edges));
}

Graph sample_graph(std::uint32_t n, double q, std::uint64_t seed) {
    check_probability(q, "q");
    Graph g(n);
    if (n < 2) return g;
    const Count total = binomial(n, 2);
    std::vector<VertexPair> pairs;
    pairs.reserve(total);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    sample_indices(total, q, seed, [&](Count j) { g.add_edge(pairs[j].first, pairs[j].second); });
    return g;
}

std::uint64_t trial_hypergraph_seed(std::uint64_t master_seed, std::uint64_t trial) {
    return derive_seed(master_seed, trial, 0);
}

std::uint64_t trial_graph_seed(std::uint64_t master_seed, std::uint64_t trial) {
    return derive_seed(master_seed, trial, 1);
}

std::string kind_name(PropertyKind kind) {
    switch (kind) {
        case PropertyKind::exact: return "exact";
        case PropertyKind::eps: return "eps";
        case PropertyKind::exact_for_g: return "exact-for-g";
        case PropertyKind::eps_for_g: return "eps-for-g";
    }
    return "exact";
}

PropertyKind parse_kind(std::string_view text) {
    if (text == "exact") return PropertyKind::exact;
    if (text == "eps") return PropertyKind::eps;
    if (text == "exact-for-g") return PropertyKind::exact_for_g;
    if (text == "eps-for-g") return PropertyKind::eps_for_g;
    throw ParameterError("unknown property kind '" + std::string(text) + "'");
}

std::string to_string(const Property& property) {
    std::string out = kind_name(property.kind);
    if (property.kind == PropertyKind::eps || property.kind == PropertyKind::eps_for_g)
        out += ":" + property.eps.to_string();
    return out;
}

Property parse_property(std::string_view text) {
    Property property;
    const auto colon = text.find(':');
    property.kind = parse_kind(text.substr(0, colon));
    const bool needs_eps = property.kind == PropertyKind::eps || property.kind == PropertyKind::eps_for_g;
    if (colon == std::string_view::npos) {
        require(!needs_eps, "property '" + std::string(text) + "' needs an eps value");
    } else {
        require(needs_eps, "property '" + std::string(text) + "' takes no eps value");
        property.eps = Rational::parse(text.substr(colon + 1));
    }
    return property;
}

std::string to_string(DecisionMode mode) { return mode == DecisionMode::solver ? "solver" : "filter"; }

DecisionMode parse_mode(std::string_view text) {
    if (text == "solver") return DecisionMode::solver;
    if (text == "filter") return DecisionMode::filter;
    throw ParameterError("unknown decision mode '" + std::string(text) + "'");
}

Verdict filter_decision(const UniformHypergraph& f, const Graph* g, const Property& property) {
    const std::uint32_t r = f.uniformity();
    const std::uint32_t n = f.order();
    check_property(r, property);
    if (property.relative()) {
        require(g != nullptr, "relative property needs a graph");
        const Graph witness = construct_deletion_witness(f, *g);
        Rational threshold;
        if (property.kind == PropertyKind::exact_for_g) {
            const PartitionResult part = max_partition_edges(*g, r - 1);
            // Only a certified maximum gives a sound comparison.
            if (!part.optimal) return Verdict::holds;
            threshold = Rational(static_cast<std::int64_t>(part.crossing_edges));
        } else {
            threshold = relative_threshold(r, *g, property.eps);
        }
        return Rational(static_cast<std::int64_t>(witness.edge_count())) > threshold ? Verdict::fails
                                                                                       : Verdict::holds;
    }

    const Count t = turan_number(r, n);
    const auto e = static_cast<std::int64_t>(f.edge_count());
    if (property.kind == PropertyKind::exact) {
        if (r == 3) {
            // A pair whose link has at most n/2 - 2 edges.
            const auto sizes = pair_link_sizes(f);
            for (const std::size_t s : sizes)
                if (2 * static_cast<std::int64_t>(s) <= static_cast<std::int64_t>(n) - 4) return Verdict::fails;
            return Verdict::holds;
        }
        if (n >= 5) {
            const Rational bound(static_cast<std::int64_t>(n) * (n - 1) * (n - 2),
                                 static_cast<std::int64_t>(r) * (r - 1) * (r - 1) * (r - 2));
            if (Rational(e) < bound) return Verdict::fails;
        }
        return Verdict::holds;
    }

    // eps
    if (n >= 5 && property.eps > Rational(0) && property.eps <= Rational(1, 2 * r)) {
        const Rational bound = (Rational(1) - Rational(r) * property.eps) * Rational(static_cast<std::int64_t>(n) * n) /
                               Rational(4 * r);
        if (Rational(e) <= bound) return Verdict::fails;
    }
    const Graph witness = construct_deletion_witness(f);
    const Rational threshold = (Rational(1) + property.eps) * Rational(static_cast<std::int64_t>(t));
    return Rational(static_cast<std::int64_t>(witness.edge_count())) > threshold ? Verdict::fails : Verdict::holds;
}

Verdict solver_decision(const UniformHypergraph& f, const Graph* g, const Property& property,
                        const SolveLimits& limits) {
    check_property(f.uniformity(), property);
    switch (property.kind) {
        case PropertyKind::exact: return is_turannical(f, limits).verdict;
        case PropertyKind::eps: return is_eps_turannical(f, property.eps, limits).verdict;
        case PropertyKind::exact_for_g:
            require(g != nullptr, "relative property needs a graph");
            return is_turannical_for(f, *g, limits).verdict;
        case PropertyKind::eps_for_g:
            require(g != nullptr, "relative property needs a graph");
            return is_eps_turannical_for(f, *g, property.eps, limits).verdict;
    }
    return Verdict::unknown;
}

Verdict decide_property(const UniformHypergraph& f, const Graph* g, const Property& property, DecisionMode mode,
                        const SolveLimits& limits) {
    return mode == DecisionMode::solver ? solver_decision(f, g, property, limits) : filter_decision(f, g, property);
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) return {0.0, 1.0};
    const double nn = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / nn;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / nn;
    const double centre = (phat + z2 / (2.0 * nn)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / nn + z2 / (4.0 * nn * nn)) / denom;
    // The closed form leaves rounding residue at the boundary estimates.
    const double lo = successes == 0 ? 0.0 : std::max(0.0, centre - half);
    const double hi = successes == trials ? 1.0 : std::min(1.0, centre + half);
    return {lo, hi};
}

bool CurvePoint::operator==(const CurvePoint& o) const {
    auto same = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
    return n == o.n && p == o.p && q == o.q && property == o.property && mode == o.mode && trials == o.trials &&
           successes == o.successes && unknowns == o.unknowns && same(estimate, o.estimate) &&
           ci_lo == o.ci_lo && ci_hi == o.ci_hi;
}

CurvePoint make_point(const EnsembleSpec& spec, const Property& property, DecisionMode mode, std::uint64_t trials,
                      std::uint64_t successes, std::uint64_t unknowns) {
    CurvePoint pt;
    pt.n = spec.n;
    pt.p = spec.p;
    if (spec.kind != EnsembleKind::hypergraph) pt.q = spec.q;
    pt.property = property;
    pt.mode = mode;
    pt.trials = trials;
    pt.successes = successes;
    pt.unknowns = unknowns;
    const std::uint64_t decided = trials - unknowns;
    if (decided == 0) {
        pt.estimate = std::numeric_limits<double>::quiet_NaN();
        pt.ci_lo = 0.0;
        pt.ci_hi = 1.0;
    } else {
        pt.estimate = static_cast<double>(successes) / static_cast<double>(decided);
        const WilsonInterval ci = wilson_interval(successes, decided);
        pt.ci_lo = ci.lo;
        pt.ci_hi = ci.hi;
    }
    return pt;
}

namespace {


// Evaluates every (cell, trial) pair in parallel and merges per cell.
std::vector<CurvePoint> run_cells(const std::vector<EnsembleSpec>& cells, const Property& property, DecisionMode mode,
                                  const RunOptions& options) {
    for (const auto& c : cells) {
        check_probability(c.p, "p");
        check_probability(c.q, "q");
        check_property(c.r, property);
        if (property.relative())
            require(c.kind == EnsembleKind::joint, "relative properties need a joint ensemble");
    }
    const std::uint64_t trials = options.trials;
    std::vector<Verdict> verdicts(cells.size() * trials, Verdict::unknown);
    const SolveLimits limits{options.budget, std::nullopt};
    detail::parallel_for(verdicts.size(), options.threads, [&](std::size_t task) {
        const EnsembleSpec& spec = cells[task / trials];
        const std::uint64_t t = task % trials;
        const UniformHypergraph f = sample_hypergraph(spec.r, spec.n, spec.p, trial_hypergraph_seed(spec.master_seed, t));
        if (property.relative()) {
            const Graph g = sample_graph(spec.n, spec.q, trial_graph_seed(spec.master_seed, t));
            verdicts[task] = decide_property(f, &g, property, mode, limits);
        } else {
            verdicts[task] = decide_property(f, nullptr, property, mode, limits);
        }
    });
    std::vector<CurvePoint> points;
    points.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) {
        std::uint64_t successes = 0;
        std::uint64_t unknowns = 0;
        for (std::uint64_t t = 0; t < trials; ++t) {
            const Verdict v = verdicts[c * trials + t];
            if (v == Verdict::holds) ++successes;
            if (v == Verdict::unknown) ++unknowns;
        }
        points.push_back(make_point(cells[c], property, mode, trials, successes, unknowns));
    }
    return points;
}

void check_sorted(const std::vector<double>& grid) {
    require(!grid.empty(), "grid must not be empty");
    require(std::is_sorted(grid.begin(), grid.end()), "grid must be sorted ascending");
}

}  // namespace

CurvePoint estimate_success(const EnsembleSpec& spec, const Property& property, DecisionMode mode,
                            const RunOptions& options) {
    require(options.trials > 0, "trials must be positive");
    return run_cells({spec}, property, mode, options).front();
}

ThresholdCurve threshold_scan(std::uint32_t r, std::uint32_t n, const std::vector<double>& p_grid,
                              std::optional<double> q, const Property& property, DecisionMode mode,
                              std::uint64_t master_seed, const RunOptions& options) {
    check_sorted(p_grid);
    require(options.trials > 0, "trials must be positive");
    require(!property.relative() || q.has_value(), "relative properties need q");
    std::vector<EnsembleSpec> cells;
    for (const double p : p_grid) {
        EnsembleSpec spec;
        spec.kind = property.relative() ? EnsembleKind::joint : EnsembleKind::hypergraph;
        spec.r = r;
        spec.n = n;
        spec.p = p;
        spec.q = q.value_or(1.0);
        spec.master_seed = master_seed;
        cells.push_back(spec);
    }
    ThresholdCurve curve;
    curve.axis = Axis::p;
    curve.property = property;
    curve.mode = mode;
    curve.points = run_cells(cells, property, mode, options);
    if (!property.relative() && q.has_value())
        for (auto& pt : curve.points) pt.q = q;
    return curve;
}

ThresholdCurve threshold_scan_q(std::uint32_t r, std::uint32_t n, double p, const std::vector<double>& q_grid,
                                const Property& property, DecisionMode mode, std::uint64_t master_seed,
                                const RunOptions& options) {
    check_sorted(q_grid);
    require(options.trials > 0, "trials must be positive");
    require(property.relative(), "a q scan needs a relative property");
    std::vector<EnsembleSpec> cells;
    for (const double q : q_grid) {
        EnsembleSpec spec;
        spec.kind = EnsembleKind::joint;
        spec.r = r;
        spec.n = n;
        spec.p = p;
        spec.q = q;
        spec.master_seed = master_seed;
        cells.push_back(spec);
    }
    ThresholdCurve curve;
    curve.axis = Axis::q;
    curve.property = property;
    curve.mode = mode;
    curve.points = run_cells(cells, property, mode, options);
    return curve;
}

namespace {

double axis_value(const ThresholdCurve& curve, const CurvePoint& pt) {
    return curve.axis == Axis::p ? pt.p : pt.q.value_or(1.0);
}

}  // namespace

std::optional<double> crossing_point(const ThresholdCurve& curve, double level) {
    // Last point confidently below `level` followed by the first point
    // confidently above it.
    const auto& pts = curve.points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!pts[i].usable() || !(pts[i].ci_hi < level)) continue;
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (!pts[j].usable()) continue;
            if (pts[j].ci_hi < level) break;  // a later "below" point supersedes i
            if (pts[j].ci_lo > level) {
                const double x0 = axis_value(curve, pts[i]);
                const double x1 = axis_value(curve, pts[j]);
                const double y0 = pts[i].estimate;
                const double y1 = pts[j].estimate;
                if (y1 == y0) return x0;
                return x0 + (level - y0) * (x1 - x0) / (y1 - y0);
            }
        }
    }
    return std::nullopt;
}

SharpnessReport sharpness_from_curve(const ThresholdCurve& curve) {
    SharpnessReport report;
    report.rise_start = crossing_point(curve, 0.1);
    report.rise_end = crossing_point(curve, 0.9);
    if (report.rise_start && report.rise_end) {
        report.width = std::max(0.0, *report.rise_end - *report.rise_start);
    } else {
        bool below = false;
        bool above = false;
        for (const auto& pt : curve.points) {
            if (!pt.usable()) continue;
            if (pt.estimate < 0.1) below = true;
            if (pt.estimate > 0.9) above = true;
        }
        report.degenerate = !(below && above);
    }
    return report;
}

SharpnessReport sharpness_probe(std::uint32_t r, std::uint32_t n, const std::vector<double>& p_grid,
                                const Property& property, std::uint64_t master_seed, const RunOptions& options) {
    require(property.kind == PropertyKind::exact, "sharpness probes use the exact property");
    return sharpness_from_curve(
        threshold_scan(r, n, p_grid, std::nullopt, property, DecisionMode::solver, master_seed, options));
}

double theta_q(std::uint32_t r, std::uint32_t n, double q) {
    require(r >= 3, "r must be at least 3");
    check_probability(q, "q");
    return std::pow(static_cast<double>(n) * std::pow(q, (r + 1) / 2.0), 2.0 - static_cast<double>(r));
}

std::optional<double> fit_exponent(const std::vector<std::uint32_t>& n, const std::vector<std::optional<double>>& p) {
    require(n.size() == p.size(), "size mismatch");
    std::vector<std::pair<double, double>> xy;
    for (std::size_t i = 0; i < n.size(); ++i)
        if (p[i] && *p[i] > 0.0 && n[i] > 0) xy.emplace_back(std::log(n[i]), std::log(*p[i]));
    if (xy.size() < 2) return std::nullopt;
    double mx = 0.0;
    double my = 0.0;
    for (auto [x, y] : xy) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(xy.size());
    my /= static_cast<double>(xy.size());
    double sxx = 0.0;
    double sxy = 0.0;
    for (auto [x, y] : xy) {
        sxx += (x - mx) * (x - mx);
        sxy += (x - mx) * (y - my);
    }
    if (sxx == 0.0) return std::nullopt;
    return sxy / sxx;
}

double predicted_exponent(std::uint32_t r, const Property& property) {
    // Exact Turánnicity has a constant threshold; the approximate versions
    // scale like n^{2-r}.
    if (property.kind == PropertyKind::exact || property.kind == PropertyKind::exact_for_g) return 0.0;
    return 2.0 - static_cast<double>(r);
}

ScalingReport scaling_report(std::uint32_t r, const Property& property, const std::vector<ThresholdCurve>& curves) {
    ScalingReport report;
    report.predicted_exponent = predicted_exponent(r, property);
    for (const auto& c : curves) {
        report.n.push_back(c.points.empty() ? 0 : c.points.front().n);
        report.crossing.push_back(crossing_point(c));
    }
    report.fitted_exponent = fit_exponent(report.n, report.crossing);
    return report;
}

JointScanResult joint_scan(std::uint32_t r, const Rational& eps, std::uint32_t n, const std::vector<double>& p_grid,
                           const std::vector<double>& q_grid, std::uint64_t master_seed, const RunOptions& options) {
    require(r >= 3, "r must be at least 3");
    require(eps < Rational(1, r - 2),
            "eps must be below 1/(r-2); otherwise the premise is never met and the property is vacuous");
    check_sorted(q_grid);
    const Property property{PropertyKind::eps_for_g, eps};
    JointScanResult result;
    for (const double q : q_grid)
        result.curves.push_back(
            threshold_scan(r, n, p_grid, q, property, DecisionMode::solver, master_seed, options));
    result.scaling.predicted_exponent = predicted_exponent(r, property);
    for (std::size_t i = 0; i < q_grid.size(); ++i) {
        const auto cross = crossing_point(result.curves[i]);
        const double theta = theta_q(r, n, q_grid[i]);
        result.scaling.n.push_back(n);
        result.scaling.crossing.push_back(cross);
        result.scaling.q.push_back(q_grid[i]);
        result.scaling.theta.push_back(theta);
        result.scaling.ratio.push_back(cross && theta > 0.0 && std::isfinite(theta)
                                           ? std::optional<double>(*cross / theta)
                                           : std::nullopt);
    }
    return result;
}

std::vector<CurvePoint> run_scan(const ScanConfig& config, unsigned threads) {
    require(config.r >= 3, "r must be at least 3");
    require(!config.n.empty(), "scan needs at least one n");
    check_sorted(config.p_grid);
    check_property(config.r, config.property);
    if (config.property.relative()) {
        check_sorted(config.q_grid);
    } else {
        require(config.q_grid.empty(), "grid.q only applies to relative properties");
    }
    RunOptions options;
    options.trials = config.trials;
    options.budget = config.budget;
    options.threads = threads;
    std::vector<CurvePoint> rows;
    for (const auto n : config.n) {
        require(n >= config.r, "n must be at least r");
        if (config.property.relative()) {
            for (const double q : config.q_grid) {
                auto curve = threshold_scan(config.r, n, config.p_grid, q, config.property, config.mode, config.seed,
                                            options);
                rows.insert(rows.end(), curve.points.begin(), curve.points.end());
            }
        } else {
            auto curve = threshold_scan(config.r, n, config.p_grid, std::nullopt, config.property, config.mode,
                                        config.seed, options);
            rows.insert(rows.end(), curve.points.begin(), curve.points.end());
        }
    }
    return rows;
}

}  // namespace turannical
