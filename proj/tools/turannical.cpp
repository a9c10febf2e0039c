#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "turannical/detection.hpp"
#include "turannical/experiments.hpp"
#include "turannical/io.hpp"
#include "turannical/structure.hpp"
#include "turannical/turan.hpp"
#include "turannical/witness.hpp"

namespace fs = std::filesystem;
using namespace turannical;

namespace {

constexpr int exit_failure = 1;
constexpr int exit_parameter = 2;
constexpr int exit_unknown = 3;

void emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text << std::flush;
    } else {
        write_file(out, text);
    }
}

void emit_json(const Json& j, const std::string& out) { emit(j.dump(2) + "\n", out); }

Graph load_graph(const std::string& path) {
    try {
        return parse_graph_json(read_file(path));
    } catch (const FormatError& e) {
        throw ParameterError(path + ": " + e.what());
    }
}

UniformHypergraph load_hypergraph(const std::string& path) {
    try {
        return parse_hypergraph_json(read_file(path));
    } catch (const FormatError& e) {
        throw ParameterError(path + ": " + e.what());
    }
}

Rational parse_rational_flag(const std::string& text, const std::string& flag) {
    try {
        return Rational::parse(text);
    } catch (const ParameterError& e) {
        throw ParameterError(flag + ": " + e.what());
    }
}

struct Options {
    std::uint32_t r = 0;
    std::uint32_t n = 0;
    std::uint32_t m = 0;
    std::string hypergraph;
    std::string graph;
    std::string eps;
    std::string delta;
    std::string out;
    std::string emit_graph;
    std::string config;
    std::string manifest;
    std::string kind = "deletion";
    std::uint64_t budget = default_node_budget;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t i = 0;
    double q = 0.0;
    double k = 0.0;
    unsigned threads = 0;
};

int run_turan(const Options& o) {
    emit(std::to_string(turan_number(o.r, o.n)) + "\n", o.out);
    return 0;
}

int run_turm(const Options& o) {
    require(o.r >= 2, "r must be at least 2");
    require(o.m <= o.n, "m must not exceed n");
    emit(std::to_string(restricted_turan_number(o.r, o.n, o.m)) + "\n", o.out);
    if (!o.emit_graph.empty()) write_file(o.emit_graph, emit_graph_json(restricted_turan_graph(o.r, o.n, o.m).graph));
    return 0;
}

int run_detect(const Options& o) {
    const UniformHypergraph f = load_hypergraph(o.hypergraph);
    const Graph g = load_graph(o.graph);
    require(f.order() == g.order(), "hypergraph and graph have different vertex counts");
    emit_json(to_json(detects_counting(f, g)), o.out);
    return 0;
}

int run_decide(const Options& o) {
    const UniformHypergraph f = load_hypergraph(o.hypergraph);
    SolveLimits limits;
    limits.node_budget = o.budget;
    Property property;
    std::optional<Graph> host;
    if (!o.graph.empty()) {
        host = load_graph(o.graph);
        require(host->order() == f.order(), "hypergraph and graph have different vertex counts");
    }
    if (!o.eps.empty()) {
        property.eps = parse_rational_flag(o.eps, "--eps");
        property.kind = host ? PropertyKind::eps_for_g : PropertyKind::eps;
    } else {
        property.kind = host ? PropertyKind::exact_for_g : PropertyKind::exact;
    }
    Decision decision;
    switch (property.kind) {
        case PropertyKind::exact:
            decision = is_turannical(f, limits);
            break;
        case PropertyKind::eps:
            decision = is_eps_turannical(f, property.eps, limits);
            break;
        case PropertyKind::exact_for_g:
            decision = is_turannical_for(f, *host, limits);
            break;
        case PropertyKind::eps_for_g:
            decision = is_eps_turannical_for(f, *host, property.eps, limits);
            break;
    }
    emit_json(to_json(decision, property), o.out);
    return decision.verdict == Verdict::unknown ? exit_unknown : 0;
}

int run_classify(const Options& o) {
    const Graph g = load_graph(o.graph);
    const Rational eps = parse_rational_flag(o.eps, "--eps");
    const Rational delta = parse_rational_flag(o.delta, "--delta");
    const StructureVerdict verdict = classify(g, o.r, eps, delta);
    Json j = to_json(verdict);
    if (verdict.partition) j["counting"] = to_json(counting_checks(g, *verdict.partition, o.r));
    emit_json(j, o.out);
    return 0;
}

int run_mubound(const Options& o) {
    const UniformHypergraph f = load_hypergraph(o.hypergraph);
    require(o.trials > 0, "--trials must be positive");
    const MuEstimate estimate = mu_i_estimate(f, o.q, o.i, o.trials, o.seed, o.threads);
    Json j{{"q", o.q}, {"i", o.i}, {"K", o.k}, {"seed", o.seed}};
    j.update(to_json(estimate, boundedness_check(f, o.q, o.i, o.k, estimate)));
    emit_json(j, o.out);
    return 0;
}

int run_witness(const Options& o) {
    const UniformHypergraph f = load_hypergraph(o.hypergraph);
    std::optional<Graph> witness;
    if (o.kind == "sparse") {
        require(o.graph.empty(), "--graph only applies to the deletion witness");
        witness = construct_sparse_witness(f);
    } else if (o.kind == "deletion") {
        if (o.graph.empty()) {
            witness = construct_deletion_witness(f);
        } else {
            const Graph host = load_graph(o.graph);
            require(host.order() == f.order(), "hypergraph and graph have different vertex counts");
            witness = construct_deletion_witness(f, host);
        }
    } else {
        throw ParameterError("--kind must be 'sparse' or 'deletion'");
    }
    Json j;
    j["kind"] = o.kind;
    j["found"] = witness.has_value();
    if (witness) {
        j["edge_count"] = witness->edge_count();
        j["detected"] = detects(f, *witness).detected;
        j["graph"] = graph_to_json(*witness);
    } else {
        j["graph"] = nullptr;
    }
    emit_json(j, o.out);
    return 0;
}

int run_scan_command(const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    ScanConfig config;
    try {
        config = parse_scan_config(read_file(o.config));
    } catch (const FormatError& e) {
        throw ParameterError(o.config + ": " + e.what());
    }
    const std::string csv = emit_curve_csv(run_scan(config, o.threads));
    emit(csv, o.out);

    const bool to_file = !o.out.empty() && o.out != "-";
    std::string manifest_path = o.manifest;
    if (manifest_path.empty() && to_file) manifest_path = o.out + ".manifest.json";
    if (manifest_path.empty()) return 0;

    RunManifest manifest;
    manifest.tool_version = TURANNICAL_VERSION;
    manifest.command = "scan";
    manifest.config = scan_config_json(config);
    manifest.seed = config.seed;
    manifest.threads = o.threads;
    manifest.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    manifest.timestamp = utc_timestamp();
    OutputDigest digest;
    if (to_file) {
        const fs::path base = fs::absolute(manifest_path).parent_path();
        digest.name = fs::absolute(o.out).lexically_relative(base).generic_string();
    } else {
        digest.name = "-";
    }
    digest.sha256 = sha256_hex(csv);
    manifest.outputs.push_back(digest);
    write_file(manifest_path, emit_manifest_json(manifest));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Turánnical hypergraph toolkit"};
    app.set_version_flag("--version", std::string(TURANNICAL_VERSION));
    app.require_subcommand(1);
    Options o;

    auto* turan = app.add_subcommand("turan", "Print the Turán number t_r(n)");
    turan->add_option("--r", o.r, "Clique order")->required();
    turan->add_option("--n", o.n, "Vertex count")->required();

    auto* turm = app.add_subcommand("turm", "Print the restricted Turán number for an m-set");
    turm->add_option("--r", o.r, "Clique order")->required();
    turm->add_option("--n", o.n, "Vertex count")->required();
    turm->add_option("--m", o.m, "Size of the restricted set")->required();
    turm->add_option("--emit-graph", o.emit_graph, "Write the extremal graph as JSON");

    auto* detect = app.add_subcommand("detect", "Check whether a hypergraph detects a graph");
    detect->add_option("--hypergraph", o.hypergraph, "Hypergraph JSON")->required();
    detect->add_option("--graph", o.graph, "Graph JSON")->required();

    auto* decide = app.add_subcommand("decide", "Decide the (eps-)Turánnical property");
    decide->add_option("--hypergraph", o.hypergraph, "Hypergraph JSON")->required();
    decide->add_option("--graph", o.graph, "Host graph JSON; switches to the relative property");
    decide->add_option("--eps", o.eps, "Slack, e.g. 0.25 or 1/4");
    decide->add_option("--budget", o.budget, "Branch-and-bound node budget");

    auto* cls = app.add_subcommand("classify", "Structure classification of a dense graph");
    cls->add_option("--graph", o.graph, "Graph JSON")->required();
    cls->add_option("--r", o.r, "Clique order")->required();
    cls->add_option("--eps", o.eps, "Closeness parameter")->required();
    cls->add_option("--delta", o.delta, "Vertex-heavy threshold factor")->required();

    auto* mu = app.add_subcommand("mubound", "Estimate mu_i over G(n,q) and test the boundedness condition");
    mu->add_option("--hypergraph", o.hypergraph, "Hypergraph JSON")->required();
    mu->add_option("--q", o.q, "Edge probability of G(n,q)")->required();
    mu->add_option("--i", o.i, "Number of required graph edges")->required();
    mu->add_option("--trials", o.trials, "Number of sampled graphs")->required();
    mu->add_option("--seed", o.seed, "Master seed")->required();
    mu->add_option("--K", o.k, "Boundedness constant")->required();
    mu->add_option("--threads", o.threads, "Worker threads (0 = all cores)");

    auto* scan = app.add_subcommand("scan", "Monte Carlo threshold scan");
    scan->add_option("--config", o.config, "Scan configuration JSON")->required();
    scan->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
    scan->add_option("--manifest", o.manifest, "Manifest path (default: <out>.manifest.json)");

    auto* witness = app.add_subcommand("witness", "Construct an undetected witness graph");
    witness->add_option("--hypergraph", o.hypergraph, "Hypergraph JSON")->required();
    witness->add_option("--kind", o.kind, "sparse or deletion")->check(CLI::IsMember({"sparse", "deletion"}));
    witness->add_option("--graph", o.graph, "Host graph for the deletion witness");

    for (auto* sub : {turan, turm, detect, decide, cls, mu, scan, witness})
        sub->add_option("--out", o.out, "Output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n";
        CLI::App* failed = &app;
        for (auto* sub : app.get_subcommands()) failed = sub;
        std::cerr << failed->help();
        return exit_parameter;
    }

    try {
        if (*turan) return run_turan(o);
        if (*turm) return run_turm(o);
        if (*detect) return run_detect(o);
        if (*decide) return run_decide(o);
        if (*cls) return run_classify(o);
        if (*mu) return run_mubound(o);
        if (*scan) return run_scan_command(o);
        if (*witness) return run_witness(o);
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parameter;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_failure;
}
