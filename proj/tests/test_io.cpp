#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "support.hpp"
#include "turannical/experiments.hpp"
#include "turannical/io.hpp"

using namespace turannical;

namespace {

template <class F>
FormatError format_error(F&& f) {
    try {
        f();
    } catch (const FormatError& e) {
        return e;
    }
    FAIL("no FormatError thrown");
    return FormatError("", 0, "");
}

std::filesystem::path scratch_dir(const char* name) {
    const auto dir = std::filesystem::temp_directory_path() / ("turannical-test-" + std::string(name));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

const char* const csv_header = "n,p,q,property,mode,trials,successes,unknowns,estimate,ci_lo,ci_hi\n";

}  // namespace

TEST_SUITE("cli_io") {
    TEST_CASE("graph JSON round-trips") {
        oracle::Gen gen(9);
        for (int trial = 0; trial < 40; ++trial) {
            const Graph g = gen.graph(gen.between(0, 12), 0.4);
            const std::string text = emit_graph_json(g);
            CHECK(parse_graph_json(text) == g);
            CHECK(emit_graph_json(parse_graph_json(text)) == text);
        }
        Graph g(4);
        g.add_edge(2, 3);
        g.add_edge(0, 1);
        CHECK(emit_graph_json(g) == "{\"n\":4,\"edges\":[[0,1],[2,3]]}\n");
        // Canonicalization: whitespace, key order and edge order are normalized.
        CHECK(emit_graph_json(parse_graph_json(" { \"edges\" : [[3,2],[1,0]], \"n\": 4 } ")) == emit_graph_json(g));
    }

    TEST_CASE("hypergraph JSON round-trips") {
        oracle::Gen gen(10);
        for (int trial = 0; trial < 40; ++trial) {
            const std::uint32_t n = gen.between(3, 9);
            const auto f = gen.hypergraph(gen.between(3, std::min<std::uint32_t>(n, 4)), n, 0.3);
            const std::string text = emit_hypergraph_json(f);
            CHECK(parse_hypergraph_json(text) == f);
            CHECK(emit_hypergraph_json(parse_hypergraph_json(text)) == text);
        }
        CHECK(emit_hypergraph_json(UniformHypergraph(3, 5, {{1, 3, 4}, {0, 1, 2}})) ==
              "{\"r\":3,\"n\":5,\"edges\":[[0,1,2],[1,3,4]]}\n");
    }

    TEST_CASE("malformed JSON names the byte and the field") {
        const std::string dup = R"({"r":3,"n":5,"edges":[[0,1,2],[2,1,0]]})";
        const auto e1 = format_error([&] { parse_hypergraph_json(dup); });
        CHECK(e1.path() == "edges[1]");
        CHECK(e1.offset() == dup.find("[2,1,0]"));
        CHECK(e1.detail().find("duplicate edge [0,1,2]") != std::string::npos);
        CHECK(std::string(e1.what()).find("edges[0]") != std::string::npos);

        const std::string range = R"({"r":3,"n":5,"edges":[[0,1,7]]})";
        const auto e2 = format_error([&] { parse_hypergraph_json(range); });
        CHECK(e2.path() == "edges[0][2]");
        CHECK(e2.offset() == range.find('7'));

        const std::string truncated = R"({"n":5,"edges":[[0,1],)";
        const auto e3 = format_error([&] { parse_graph_json(truncated); });
        CHECK(e3.offset() == truncated.size());

        const std::string extra = R"({"n":3,"edges":[],"colour":"red"})";
        const auto e4 = format_error([&] { parse_graph_json(extra); });
        CHECK(e4.path() == "colour");
        CHECK(e4.offset() == extra.find("\"red\""));

        const std::string loop = R"({"n":3,"edges":[[1,1]]})";
        CHECK(format_error([&] { parse_graph_json(loop); }).path() == "edges[0]");
        const std::string missing = R"({"n":3})";
        CHECK(format_error([&] { parse_graph_json(missing); }).path() == "(root)");
        const std::string negative = R"({"n":-3,"edges":[]})";
        CHECK(format_error([&] { parse_graph_json(negative); }).path() == "n");
        const std::string small_r = R"({"r":1,"n":3,"edges":[]})";
        CHECK(format_error([&] { parse_hypergraph_json(small_r); }).path() == "r");
        const std::string dup_pair = R"({"n":3,"edges":[[0,1],[1,0]]})";
        CHECK(format_error([&] { parse_graph_json(dup_pair); }).path() == "edges[1]");
    }

    TEST_CASE("curve CSV round-trips") {
        std::vector<CurvePoint> rows;
        EnsembleSpec spec;
        spec.n = 10;
        spec.p = 0.1;
        rows.push_back(make_point(spec, Property{}, DecisionMode::solver, 40, 13, 2));
        spec.kind = EnsembleKind::joint;
        spec.p = 1.0 / 3.0;
        spec.q = 0.7;
        rows.push_back(make_point(spec, Property{PropertyKind::eps_for_g, Rational(1, 5)}, DecisionMode::filter, 7, 0, 0));
        rows.push_back(make_point(spec, Property{PropertyKind::eps, Rational(1, 4)}, DecisionMode::solver, 3, 0, 3));
        REQUIRE(std::isnan(rows.back().estimate));
        const std::string text = emit_curve_csv(rows);
        CHECK(text.rfind(csv_header, 0) == 0);
        CHECK(parse_curve_csv(text) == rows);
        CHECK(emit_curve_csv(parse_curve_csv(text)) == text);
        CHECK(text.find(",nan,") != std::string::npos);
        // Absent q is an empty field.
        CHECK(text.find("10,0.10000000000000001,,exact,solver,40,13,2,") != std::string::npos);
        CHECK(emit_curve_csv({}) == csv_header);
    }

    TEST_CASE("doubles survive formatting exactly") {
        oracle::Gen gen(12);
        for (int i = 0; i < 500; ++i) {
            const double x = std::ldexp(static_cast<double>(gen.rng() >> 11), -53) * (gen.coin(0.5) ? 1 : 1e-7);
            CHECK(std::stod(format_double(x)) == x);
        }
        CHECK(format_double(0.5) == "0.5");
        CHECK(format_double(1.0) == "1");
        CHECK(format_double(std::numeric_limits<double>::quiet_NaN()) == "nan");
    }

    TEST_CASE("malformed CSV names the row and column") {
        const std::string bad = std::string(csv_header) + "8,0.5,,exact,solver,x,1,0,0.5,0,1\n";
        const auto e = format_error([&] { parse_curve_csv(bad); });
        CHECK(e.path() == "row 1.trials");
        CHECK(e.offset() == bad.find(",x,") + 1);
        CHECK_THROWS_AS(parse_curve_csv("n,p\n"), FormatError);
        const std::string short_row = std::string(csv_header) + "8,0.5,,exact\n";
        CHECK_THROWS_AS(parse_curve_csv(short_row), FormatError);
        const std::string bad_property = std::string(csv_header) + "8,0.5,,sometimes,solver,1,1,0,1,0,1\n";
        CHECK(format_error([&] { parse_curve_csv(bad_property); }).path() == "row 1.property");
    }

    TEST_CASE("scan configs") {
        const auto c = parse_scan_config(R"({
            "r": 3, "n_list": [8, 10],
            "property": {"kind": "eps-for-g", "eps": "1/5"},
            "grid": {"p": [0.2, 0.5], "q": [0.5]},
            "trials": 30, "seed": 7, "budget": 1000, "mode": "filter"})");
        CHECK(c.n == std::vector<std::uint32_t>{8, 10});
        CHECK(c.property == Property{PropertyKind::eps_for_g, Rational(1, 5)});
        CHECK(c.q_grid == std::vector<double>{0.5});
        CHECK(c.trials == 30);
        CHECK(c.seed == 7);
        CHECK(c.budget == 1000);
        CHECK(c.mode == DecisionMode::filter);
        const auto again = parse_scan_config(scan_config_json(c).dump());
        CHECK(again.n == c.n);
        CHECK(again.property == c.property);
        CHECK(again.p_grid == c.p_grid);
        CHECK(again.q_grid == c.q_grid);
        CHECK(again.budget == c.budget);

        const auto d = parse_scan_config(R"({"r":3,"n":8,"property":{"kind":"eps","eps":0.25},"grid":{"p":[0.5]},"seed":1})");
        CHECK(d.trials == 100);
        CHECK(d.mode == DecisionMode::solver);
        CHECK(d.property.eps == Rational(1, 4));

        auto path_of = [](const std::string& text) { return format_error([&] { parse_scan_config(text); }).path(); };
        CHECK(path_of(R"({"r":3,"n":8,"property":{"kind":"eps"},"grid":{"p":[0.5]},"seed":1})") == "property");
        CHECK(path_of(R"({"r":3,"n":8,"n_list":[8],"property":{"kind":"exact"},"grid":{"p":[0.5]},"seed":1})") ==
              "(root)");
        CHECK(path_of(R"({"r":3,"n":8,"property":{"kind":"exact"},"grid":{"p":[0.5,0.2]},"seed":1})") == "grid.p[1]");
        CHECK(path_of(R"({"r":3,"n":8,"property":{"kind":"exact"},"grid":{"p":[1.5]},"seed":1})") == "grid.p[0]");
        CHECK(path_of(R"({"r":3,"n":8,"property":{"kind":"exact"},"grid":{"p":[0.5],"q":[0.5]},"seed":1})") ==
              "grid.q");
        CHECK(path_of(R"({"r":3,"n":8,"property":{"kind":"exact-for-g"},"grid":{"p":[0.5]},"seed":1})") == "grid");
        CHECK(path_of(R"({"r":3,"n":8,"property":{"kind":"eps-for-g","eps":1},"grid":{"p":[0.5],"q":[1]},"seed":1})") ==
              "property.eps");
        CHECK(path_of(R"({"r":3,"n":8,"property":{"kind":"exact"},"grid":{"p":[0.5]}})") == "(root)");
        CHECK(path_of(R"({"r":3,"n":8,"property":{"kind":"exact"},"grid":{"p":[0.5]},"seed":1,"trials":0})") ==
              "trials");
    }

    TEST_CASE("sha256 known answers") {
        CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
        CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    }

    TEST_CASE("manifests round-trip and detect stale outputs") {
        const auto dir = scratch_dir("manifest");
        write_file(dir / "curve.csv", "n,p\n");
        RunManifest m;
        m.tool_version = "0.1.0";
        m.command = "scan --config c.json";
        m.config = Json::parse(R"({"r":3,"seed":5})");
        m.seed = 5;
        m.threads = 2;
        m.wall_time_seconds = 1.25;
        m.timestamp = utc_timestamp();
        m.outputs.push_back({"curve.csv", sha256_hex("n,p\n")});
        const std::string text = emit_manifest_json(m);
        const RunManifest back = parse_manifest_json(text);
        CHECK(emit_manifest_json(back) == text);
        CHECK(back.seed == 5);
        CHECK(back.threads == 2);
        CHECK(back.config == m.config);
        REQUIRE(back.outputs.size() == 1);
        CHECK(back.outputs[0].sha256 == m.outputs[0].sha256);
        CHECK(stale_outputs(back, dir).empty());

        write_file(dir / "curve.csv", "n,p\n1,2\n");
        CHECK(stale_outputs(back, dir) == std::vector<std::string>{"curve.csv"});
        std::filesystem::remove(dir / "curve.csv");
        CHECK(stale_outputs(back, dir) == std::vector<std::string>{"curve.csv"});
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("timestamps are ISO 8601 UTC") {
        const std::string t = utc_timestamp();
        REQUIRE(t.size() == 20);
        CHECK(t[4] == '-');
        CHECK(t[10] == 'T');
        CHECK(t.back() == 'Z');
    }

    TEST_CASE("write_file replaces atomically") {
        const auto dir = scratch_dir("write");
        write_file(dir / "out.txt", "first");
        write_file(dir / "out.txt", "second");
        CHECK(read_file(dir / "out.txt") == "second");
        std::size_t entries = 0;
        for ([[maybe_unused]] const auto& e : std::filesystem::directory_iterator(dir)) ++entries;
        CHECK(entries == 1);
        CHECK_THROWS_AS(read_file(dir / "absent.txt"), ParameterError);
        std::filesystem::remove_all(dir);
    }

    TEST_CASE("decision reports") {
        const auto d = is_turannical(UniformHypergraph::empty(3, 5));
        const Json j = to_json(d, Property{});
        CHECK(j["verdict"] == false);
        CHECK(j["status"] == "fails");
        CHECK(j["max_undetected_edges"] == 10);
        CHECK(parse_graph_json(j["witness"].dump()) == Graph::complete(5));
    }
}
