#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turannical/graph.hpp"
#include "turannical/hypergraph.hpp"
#include "turannical/rational.hpp"
#include "turannical/witness.hpp"

namespace turannical {

// ---------------------------------------------------------------------------
// Random ensembles
// ---------------------------------------------------------------------------

// Below this probability, sampling switches from one Bernoulli draw per
// candidate to geometric skipping through the lexicographic index space.
inline constexpr double sparse_sampling_cutoff = 0.01;

// R^(r)(n,p): candidate r-set number j (lexicographic) is kept iff
// uniform(seed, j) < p. Using the same seed at p1 <= p2 therefore yields
// nested hypergraphs (for p1 >= sparse_sampling_cutoff).
UniformHypergraph sample_hypergraph(std::uint32_t r, std::uint32_t n, double p, std::uint64_t seed);

// G(n,q) with the same per-pair scheme.
Graph sample_graph(std::uint32_t n, double q, std::uint64_t seed);

// Per-trial stream keys; they depend only on (master_seed, trial).
std::uint64_t trial_hypergraph_seed(std::uint64_t master_seed, std::uint64_t trial);
std::uint64_t trial_graph_seed(std::uint64_t master_seed, std::uint64_t trial);

// ---------------------------------------------------------------------------
// Properties and decisions
// ---------------------------------------------------------------------------

enum class PropertyKind { exact, eps, exact_for_g, eps_for_g };

struct Property {
    PropertyKind kind = PropertyKind::exact;
    Rational eps;  // ignored for the exact kinds

    bool relative() const { return kind == PropertyKind::exact_for_g || kind == PropertyKind::eps_for_g; }
    bool operator==(const Property&) const = default;
};

// "exact", "eps:0.25", "exact-for-g", "eps-for-g:1/5".
std::string to_string(const Property& property);
Property parse_property(std::string_view text);
// "exact" | "eps" | "exact-for-g" | "eps-for-g"
std::string kind_name(PropertyKind kind);
PropertyKind parse_kind(std::string_view text);

enum class DecisionMode { solver, filter };
std::string to_string(DecisionMode mode);
DecisionMode parse_mode(std::string_view text);

// Necessary-condition tests. A return of `fails` is always certified; `holds`
// only means no filter fired.
//   exact, r = 3:  some pair has e(link(u,v)) <= n/2 - 2
//   exact, r > 3:  |E| < n(n-1)(n-2) / (r(r-1)^2(r-2)), n >= 5
//   eps:           |E| <= (1 - r eps) n^2 / (4r) with 0 < eps <= 1/(2r), n >= 5,
//                  or the deletion witness already exceeds (1+eps) t_r(n)
//   *-for-g:       the deletion witness inside G exceeds the threshold
Verdict filter_decision(const UniformHypergraph& f, const Graph* g, const Property& property);

// Exact (budgeted) decision via the witness solver.
Verdict solver_decision(const UniformHypergraph& f, const Graph* g, const Property& property,
                        const SolveLimits& limits);

Verdict decide_property(const UniformHypergraph& f, const Graph* g, const Property& property, DecisionMode mode,
                        const SolveLimits& limits);

// ---------------------------------------------------------------------------
// Monte Carlo estimates
// ---------------------------------------------------------------------------

struct WilsonInterval {
    double lo = 0.0;
    double hi = 1.0;
};

inline constexpr double wilson_z95 = 1.959963984540054;

// Wilson score interval; [0,1] when trials == 0.
WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = wilson_z95);

enum class EnsembleKind { hypergraph, graph, joint };

struct EnsembleSpec {
    EnsembleKind kind = EnsembleKind::hypergraph;
    std::uint32_t r = 3;
    std::uint32_t n = 0;
    double p = 0.0;
    double q = 1.0;
    std::uint64_t master_seed = 0;
};

struct RunOptions {
    std::uint64_t trials = 100;
    std::uint64_t budget = default_node_budget;
    // 0 means all hardware threads.
    unsigned threads = 0;
};

struct CurvePoint {
    std::uint32_t n = 0;
    double p = 0.0;
    std::optional<double> q;
    Property property;
    DecisionMode mode = DecisionMode::solver;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t unknowns = 0;
    // successes / (trials - unknowns); NaN when every trial was unknown.
    double estimate = 0.0;
    double ci_lo = 0.0;
    double ci_hi = 1.0;

    bool usable() const { return unknowns < trials; }
    bool operator==(const CurvePoint&) const;
};

enum class Axis { p, q };

struct ThresholdCurve {
    Axis axis = Axis::p;
    Property property;
    DecisionMode mode = DecisionMode::solver;
    // Sorted by the varying probability.
    std::vector<CurvePoint> points;
};

CurvePoint make_point(const EnsembleSpec& spec, const Property& property, DecisionMode mode, std::uint64_t trials,
                      std::uint64_t successes, std::uint64_t unknowns);

// Fraction of trials in which the property holds (unknowns excluded).
CurvePoint estimate_success(const EnsembleSpec& spec, const Property& property, DecisionMode mode,
                            const RunOptions& options);

// One curve over `p_grid` (ascending). Every grid point reuses the same
// per-trial seeds, so trial t sees nested hypergraphs along the grid. For
// relative properties `q` fixes the graph density.
ThresholdCurve threshold_scan(std::uint32_t r, std::uint32_t n, const std::vector<double>& p_grid,
                              std::optional<double> q, const Property& property, DecisionMode mode,
                              std::uint64_t master_seed, const RunOptions& options);

// Same, with q varying and p fixed.
ThresholdCurve threshold_scan_q(std::uint32_t r, std::uint32_t n, double p, const std::vector<double>& q_grid,
                                const Property& property, DecisionMode mode, std::uint64_t master_seed,
                                const RunOptions& options);

// Linear interpolation of where the estimate crosses `level`, using only a
// bracket of points whose Wilson intervals lie strictly below and strictly
// above `level`. Empty when no such bracket exists.
std::optional<double> crossing_point(const ThresholdCurve& curve, double level = 0.5);

struct SharpnessReport {
    std::optional<double> rise_start;  // crossing of 0.1
    std::optional<double> rise_end;    // crossing of 0.9
    std::optional<double> width;
    // The estimate never leaves one side of [0.1, 0.9] on the grid.
    bool degenerate = false;
};

// Width of the p-interval over which the estimate rises from 0.1 to 0.9.
SharpnessReport sharpness_from_curve(const ThresholdCurve& curve);

SharpnessReport sharpness_probe(std::uint32_t r, std::uint32_t n, const std::vector<double>& p_grid,
                                const Property& property, std::uint64_t master_seed, const RunOptions& options);

// (n q^{(r+1)/2})^{2-r}
double theta_q(std::uint32_t r, std::uint32_t n, double q);

struct ScalingReport {
    std::vector<std::uint32_t> n;
    std::vector<std::optional<double>> crossing;
    // Least-squares slope of log p* against log n over the defined crossings.
    std::optional<double> fitted_exponent;
    double predicted_exponent = 0.0;
    // Joint scans: theta_q(n) per q and p*(q)/theta_q(n).
    std::vector<double> q;
    std::vector<double> theta;
    std::vector<std::optional<double>> ratio;
};

std::optional<double> fit_exponent(const std::vector<std::uint32_t>& n, const std::vector<std::optional<double>>& p);

// Exponent of n in the threshold scale of each property.
double predicted_exponent(std::uint32_t r, const Property& property);

ScalingReport scaling_report(std::uint32_t r, const Property& property, const std::vector<ThresholdCurve>& curves);

struct JointScanResult {
    std::vector<ThresholdCurve> curves;  // one per q, p varying
    ScalingReport scaling;
};

// P(R^(r)(n,p) is eps-Turánnical for G(n,q)) on the p x q grid, with fresh
// hypergraph and graph per trial. Requires eps < 1/(r-2).
JointScanResult joint_scan(std::uint32_t r, const Rational& eps, std::uint32_t n, const std::vector<double>& p_grid,
                           const std::vector<double>& q_grid, std::uint64_t master_seed, const RunOptions& options);

// A resolved `scan` configuration.
struct ScanConfig {
    std::uint32_t r = 3;
    std::vector<std::uint32_t> n;
    Property property;
    std::vector<double> p_grid;
    // Required for relative properties, rejected otherwise.
    std::vector<double> q_grid;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    std::uint64_t budget = default_node_budget;
    DecisionMode mode = DecisionMode::solver;
};

// Rows ordered by n, then q, then p. Thread count never affects the result.
std::vector<CurvePoint> run_scan(const ScanConfig& config, unsigned threads);

}  // namespace turannical
