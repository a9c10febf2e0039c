#include "turannical/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <variant>

namespace turannical {

FormatError::FormatError(const std::string& message, std::size_t offset, std::string path)
    : ParameterError(message + " (byte " + std::to_string(offset) + (path.empty() ? "" : ", at " + path) + ")"),
      offset_(offset),
      path_(std::move(path)),
      detail_(message) {}

namespace {

// Graphs are dense bitsets; this keeps a hostile "n" from exhausting memory.
constexpr std::uint64_t max_json_order = 4096;

using Segment = std::variant<std::string, std::size_t>;
using Path = std::vector<Segment>;

std::string path_string(const Path& path) {
    std::string out;
    for (const auto& seg : path) {
        if (const auto* key = std::get_if<std::string>(&seg)) {
            if (!out.empty()) out += '.';
            out += *key;
        } else {
            out += '[' + std::to_string(std::get<std::size_t>(seg)) + ']';
        }
    }
    return out.empty() ? "(root)" : out;
}

// Finds the byte offset of the value at `path` in text that is already known
// to be valid JSON. Falls back to the deepest offset reached.
class Locator {
public:
    explicit Locator(std::string_view text) : s_(text) {}

    std::size_t find(const Path& path) {
        i_ = 0;
        ws();
        for (const auto& seg : path) {
            std::size_t here = i_;
            if (!step(seg)) return here;
        }
        return i_;
    }

private:
    void ws() {
        while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n' || s_[i_] == '\r')) ++i_;
    }

    std::string string_token() {
        std::string out;
        ++i_;  // opening quote
        while (i_ < s_.size() && s_[i_] != '"') {
            if (s_[i_] == '\\') {
                out += s_[i_++];
            }
            if (i_ < s_.size()) out += s_[i_++];
        }
        ++i_;
        return out;
    }

    void skip_value() {
        ws();
        if (i_ >= s_.size()) return;
        const char c = s_[i_];
        if (c == '"') {
            string_token();
        } else if (c == '{' || c == '[') {
            int depth = 0;
            while (i_ < s_.size()) {
                const char d = s_[i_];
                if (d == '"') {
                    string_token();
                    continue;
                }
                if (d == '{' || d == '[') ++depth;
                if (d == '}' || d == ']') {
                    if (--depth == 0) {
                        ++i_;
                        return;
                    }
                }
                ++i_;
            }
        } else {
            while (i_ < s_.size() && s_[i_] != ',' && s_[i_] != '}' && s_[i_] != ']' && s_[i_] != ' ' &&
                   s_[i_] != '\n' && s_[i_] != '\r' && s_[i_] != '\t')
                ++i_;
        }
    }

    bool step(const Segment& seg) {
        ws();
        if (i_ >= s_.size()) return false;
        if (const auto* key = std::get_if<std::string>(&seg)) {
            if (s_[i_] != '{') return false;
            ++i_;
            while (true) {
                ws();
                if (i_ >= s_.size() || s_[i_] != '"') return false;
                const std::string k = string_token();
                ws();
                ++i_;  // colon
                ws();
                if (k == *key) return true;
                skip_value();
                ws();
                if (i_ >= s_.size() || s_[i_] != ',') return false;
                ++i_;
            }
        }
        if (s_[i_] != '[') return false;
        ++i_;
        const std::size_t index = std::get<std::size_t>(seg);
        for (std::size_t k = 0;; ++k) {
            ws();
            if (k == index) return i_ < s_.size() && s_[i_] != ']';
            skip_value();
            ws();
            if (i_ >= s_.size() || s_[i_] != ',') return false;
            ++i_;
        }
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

// A parsed JSON document plus the means to report errors against its text.
class Document {
public:
    explicit Document(std::string_view text) : text_(text) {
        try {
            root_ = Json::parse(text.begin(), text.end());
        } catch (const Json::parse_error& e) {
            const std::size_t at = e.byte == 0 ? 0 : std::min<std::size_t>(e.byte - 1, text.size());
            std::string what = e.what();
            // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
            if (const auto close = what.find("] "); close != std::string::npos) what = what.substr(close + 2);
            throw FormatError("malformed JSON: " + what, at, "");
        }
    }

    const Json& root() const { return root_; }

    [[noreturn]] void fail(const Path& path, const std::string& message) const {
        throw FormatError(message, Locator(text_).find(path), path_string(path));
    }

    const Json& object(const Json& value, const Path& path) const {
        if (!value.is_object()) fail(path, "expected an object");
        return value;
    }

    const Json& array(const Json& value, const Path& path) const {
        if (!value.is_array()) fail(path, "expected an array");
        return value;
    }

    std::uint64_t unsigned_value(const Json& value, const Path& path) const {
        if (!value.is_number_unsigned()) fail(path, "expected a non-negative integer");
        return value.get<std::uint64_t>();
    }

    double number(const Json& value, const Path& path) const {
        if (!value.is_number()) fail(path, "expected a number");
        return value.get<double>();
    }

    std::string string(const Json& value, const Path& path) const {
        if (!value.is_string()) fail(path, "expected a string");
        return value.get<std::string>();
    }

    const Json& field(const Json& obj, const Path& path, const std::string& key) const {
        const auto it = obj.find(key);
        if (it == obj.end()) fail(path, "missing field '" + key + "'");
        return *it;
    }

    void only_fields(const Json& obj, const Path& path, std::initializer_list<std::string_view> allowed) const {
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (std::find(allowed.begin(), allowed.end(), it.key()) == allowed.end())
                fail(with(path, it.key()), "unknown field '" + it.key() + "'");
        }
    }

    static Path with(Path path, Segment seg) {
        path.push_back(std::move(seg));
        return path;
    }

private:
    std::string_view text_;
    Json root_;
};

std::uint32_t read_order(const Document& doc, const Json& root) {
    const std::uint64_t n = doc.unsigned_value(doc.field(root, {}, "n"), {"n"});
    if (n > max_json_order) doc.fail({"n"}, "n exceeds " + std::to_string(max_json_order));
    return static_cast<std::uint32_t>(n);
}

std::string edge_text(const std::vector<Vertex>& edge) {
    std::string out = "[";
    for (std::size_t k = 0; k < edge.size(); ++k) {
        if (k > 0) out += ',';
        out += std::to_string(edge[k]);
    }
    return out + "]";
}

// Reads edges[i] as a list of `width` distinct in-range vertices, sorted.
std::vector<Vertex> read_edge(const Document& doc, const Json& value, std::size_t i, std::size_t width,
                              std::uint32_t n) {
    const Path here{std::string("edges"), i};
    doc.array(value, here);
    if (value.size() != width)
        doc.fail(here, "edge has " + std::to_string(value.size()) + " vertices, expected " + std::to_string(width));
    std::vector<Vertex> edge;
    for (std::size_t k = 0; k < width; ++k) {
        const Path at = Document::with(here, k);
        const std::uint64_t v = doc.unsigned_value(value[k], at);
        if (v >= n) doc.fail(at, "vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
        edge.push_back(static_cast<Vertex>(v));
    }
    std::vector<Vertex> sorted = edge;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        doc.fail(here, "edge " + edge_text(edge) + " repeats a vertex");
    return sorted;
}

std::vector<std::vector<Vertex>> read_edges(const Document& doc, const Json& root, std::size_t width,
                                            std::uint32_t n) {
    const Json& list = doc.array(doc.field(root, {}, "edges"), {"edges"});
    std::vector<std::vector<Vertex>> edges;
    std::map<std::vector<Vertex>, std::size_t> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
        auto edge = read_edge(doc, list[i], i, width, n);
        const auto [it, fresh] = seen.emplace(edge, i);
        if (!fresh)
            doc.fail({std::string("edges"), i}, "duplicate edge " + edge_text(edge) + " (first at edges[" +
                                                    std::to_string(it->second) + "])");
        edges.push_back(std::move(edge));
    }
    return edges;
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

}  // namespace

// ---------------------------------------------------------------------------
// Graph and hypergraph JSON
// ---------------------------------------------------------------------------

Json graph_to_json(const Graph& g) {
    Json j;
    j["n"] = g.order();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

std::string emit_graph_json(const Graph& g) { return dump_line(graph_to_json(g)); }

Graph parse_graph_json(std::string_view text) {
    const Document doc(text);
    const Json& root = doc.object(doc.root(), {});
    doc.only_fields(root, {}, {"n", "edges"});
    const std::uint32_t n = read_order(doc, root);
    Graph g(n);
    for (const auto& e : read_edges(doc, root, 2, n)) g.add_edge(e[0], e[1]);
    return g;
}

std::string emit_hypergraph_json(const UniformHypergraph& f) {
    Json j;
    j["r"] = f.uniformity();
    j["n"] = f.order();
    Json edges = Json::array();
    for (const auto& e : f.edges()) edges.push_back(e);
    j["edges"] = std::move(edges);
    return dump_line(j);
}

UniformHypergraph parse_hypergraph_json(std::string_view text) {
    const Document doc(text);
    const Json& root = doc.object(doc.root(), {});
    doc.only_fields(root, {}, {"r", "n", "edges"});
    const std::uint64_t r = doc.unsigned_value(doc.field(root, {}, "r"), {"r"});
    if (r < 2) doc.fail({"r"}, "r must be at least 2");
    const std::uint32_t n = read_order(doc, root);
    if (r > n && n > 0) doc.fail({"r"}, "r exceeds n");
    auto edges = read_edges(doc, root, r, n);
    return UniformHypergraph(static_cast<std::uint32_t>(r), n, std::move(edges));
}

// ---------------------------------------------------------------------------
// Curve CSV
// ---------------------------------------------------------------------------

namespace {

constexpr std::string_view csv_header = "n,p,q,property,mode,trials,successes,unknowns,estimate,ci_lo,ci_hi";
constexpr std::array<std::string_view, 11> csv_columns = {"n",          "p",         "q",        "property",
                                                          "mode",       "trials",    "successes", "unknowns",
                                                          "estimate",   "ci_lo",     "ci_hi"};

struct CsvField {
    std::string_view text;
    std::size_t offset;
};

class CsvRow {
public:
    CsvRow(std::vector<CsvField> fields, std::size_t row) : fields_(std::move(fields)), row_(row) {}

    [[noreturn]] void fail(std::size_t column, const std::string& message) const {
        throw FormatError(message, fields_[column].offset,
                          "row " + std::to_string(row_) + "." + std::string(csv_columns[column]));
    }

    std::string_view text(std::size_t column) const { return fields_[column].text; }

    std::uint64_t unsigned_value(std::size_t column) const {
        const auto t = text(column);
        std::uint64_t value = 0;
        const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
        if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size())
            fail(column, "expected a non-negative integer, got '" + std::string(t) + "'");
        return value;
    }

    double number(std::size_t column) const {
        const auto t = text(column);
        double value = 0.0;
        const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
        if (t.empty() || res.ec != std::errc{} || res.ptr != t.data() + t.size())
            fail(column, "expected a number, got '" + std::string(t) + "'");
        return value;
    }

private:
    std::vector<CsvField> fields_;
    std::size_t row_;
};

}  // namespace

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    std::array<char, 64> buffer{};
    const auto res =
        std::to_chars(buffer.data(), buffer.data() + buffer.size(), value, std::chars_format::general, 17);
    return std::string(buffer.data(), res.ptr);
}

std::string emit_curve_csv(const std::vector<CurvePoint>& rows) {
    std::string out(csv_header);
    out += '\n';
    for (const auto& pt : rows) {
        out += std::to_string(pt.n);
        out += ',' + format_double(pt.p);
        out += ',' + (pt.q ? format_double(*pt.q) : std::string());
        out += ',' + to_string(pt.property);
        out += ',' + to_string(pt.mode);
        out += ',' + std::to_string(pt.trials);
        out += ',' + std::to_string(pt.successes);
        out += ',' + std::to_string(pt.unknowns);
        out += ',' + format_double(pt.estimate);
        out += ',' + format_double(pt.ci_lo);
        out += ',' + format_double(pt.ci_hi);
        out += '\n';
    }
    return out;
}

std::vector<CurvePoint> parse_curve_csv(std::string_view text) {
    std::vector<CurvePoint> rows;
    std::size_t pos = 0;
    std::size_t line_number = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        const std::size_t line_start = pos;
        pos = end + 1;
        if (line_number++ == 0) {
            if (line != csv_header) throw FormatError("unexpected CSV header", line_start, "header");
            continue;
        }
        if (line.empty()) {
            if (pos >= text.size()) break;
            throw FormatError("empty line", line_start, "row " + std::to_string(line_number - 1));
        }
        std::vector<CsvField> fields;
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = line.find(',', start);
            const std::size_t stop = comma == std::string_view::npos ? line.size() : comma;
            fields.push_back({line.substr(start, stop - start), line_start + start});
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        const std::size_t row_index = line_number - 1;
        if (fields.size() != csv_columns.size())
            throw FormatError("expected " + std::to_string(csv_columns.size()) + " fields, got " +
                                  std::to_string(fields.size()),
                              line_start, "row " + std::to_string(row_index));
        const CsvRow row(std::move(fields), row_index);
        CurvePoint pt;
        const std::uint64_t n = row.unsigned_value(0);
        if (n > std::numeric_limits<std::uint32_t>::max()) row.fail(0, "n out of range");
        pt.n = static_cast<std::uint32_t>(n);
        pt.p = row.number(1);
        if (!row.text(2).empty()) pt.q = row.number(2);
        try {
            pt.property = parse_property(row.text(3));
        } catch (const ParameterError& e) {
            row.fail(3, e.what());
        }
        try {
            pt.mode = parse_mode(row.text(4));
        } catch (const ParameterError& e) {
            row.fail(4, e.what());
        }
        pt.trials = row.unsigned_value(5);
        pt.successes = row.unsigned_value(6);
        pt.unknowns = row.unsigned_value(7);
        if (pt.successes + pt.unknowns > pt.trials) row.fail(6, "successes + unknowns exceed trials");
        pt.estimate = row.number(8);
        pt.ci_lo = row.number(9);
        pt.ci_hi = row.number(10);
        rows.push_back(pt);
    }
    if (line_number == 0) throw FormatError("missing CSV header", 0, "header");
    return rows;
}

// ---------------------------------------------------------------------------
// Scan configuration
// ---------------------------------------------------------------------------

namespace {

std::vector<double> read_grid(const Document& doc, const Json& grid, const std::string& key) {
    const Path here{std::string("grid"), key};
    const Json& list = doc.array(grid.at(key), here);
    if (list.empty()) doc.fail(here, "grid." + key + " must not be empty");
    std::vector<double> values;
    for (std::size_t i = 0; i < list.size(); ++i) {
        const Path at = Document::with(here, i);
        const double v = doc.number(list[i], at);
        if (!(v >= 0.0 && v <= 1.0)) doc.fail(at, "probability must lie in [0, 1]");
        if (!values.empty() && v < values.back()) doc.fail(at, "grid." + key + " must be ascending");
        values.push_back(v);
    }
    return values;
}

std::uint32_t read_u32(const Document& doc, const Json& value, const Path& path) {
    const std::uint64_t v = doc.unsigned_value(value, path);
    if (v > max_json_order) doc.fail(path, "value exceeds " + std::to_string(max_json_order));
    return static_cast<std::uint32_t>(v);
}

}  // namespace

ScanConfig parse_scan_config(std::string_view text) {
    const Document doc(text);
    const Json& root = doc.object(doc.root(), {});
    doc.only_fields(root, {}, {"r", "n", "n_list", "property", "grid", "trials", "seed", "budget", "mode"});
    ScanConfig config;
    config.r = read_u32(doc, doc.field(root, {}, "r"), {"r"});
    if (config.r < 3) doc.fail({"r"}, "r must be at least 3");

    const bool has_n = root.contains("n");
    const bool has_list = root.contains("n_list");
    if (has_n == has_list) doc.fail({}, "exactly one of 'n' and 'n_list' is required");
    if (has_n) {
        config.n.push_back(read_u32(doc, root["n"], {"n"}));
    } else {
        const Json& list = doc.array(root["n_list"], {"n_list"});
        if (list.empty()) doc.fail({"n_list"}, "n_list must not be empty");
        for (std::size_t i = 0; i < list.size(); ++i) config.n.push_back(read_u32(doc, list[i], {"n_list", i}));
    }
    for (std::size_t i = 0; i < config.n.size(); ++i) {
        if (config.n[i] < config.r) doc.fail(has_n ? Path{"n"} : Path{std::string("n_list"), i}, "n must be at least r");
    }

    const Json& prop = doc.object(doc.field(root, {}, "property"), {"property"});
    doc.only_fields(prop, {"property"}, {"kind", "eps"});
    try {
        config.property.kind = parse_kind(doc.string(doc.field(prop, {"property"}, "kind"), {"property", "kind"}));
    } catch (const FormatError&) {
        throw;
    } catch (const ParameterError& e) {
        doc.fail({"property", "kind"}, e.what());
    }
    const bool needs_eps =
        config.property.kind == PropertyKind::eps || config.property.kind == PropertyKind::eps_for_g;
    if (needs_eps) {
        const Path at{"property", "eps"};
        const Json& eps = doc.field(prop, {"property"}, "eps");
        try {
            if (eps.is_string()) {
                config.property.eps = Rational::parse(eps.get<std::string>());
            } else {
                config.property.eps = Rational::from_double(doc.number(eps, at));
            }
        } catch (const FormatError&) {
            throw;
        } catch (const ParameterError& e) {
            doc.fail(at, e.what());
        }
        if (config.property.eps <= Rational(0)) doc.fail(at, "eps must be positive");
        if (config.property.kind == PropertyKind::eps_for_g && config.r > 2 &&
            config.property.eps >= Rational(1, config.r - 2))
            doc.fail(at, "eps-for-g needs eps < 1/(r-2)");
    } else if (prop.contains("eps")) {
        doc.fail({"property", "eps"}, "eps only applies to the eps kinds");
    }

    const Json& grid = doc.object(doc.field(root, {}, "grid"), {"grid"});
    doc.only_fields(grid, {"grid"}, {"p", "q"});
    doc.field(grid, {"grid"}, "p");
    config.p_grid = read_grid(doc, grid, "p");
    if (config.property.relative()) {
        doc.field(grid, {"grid"}, "q");
        config.q_grid = read_grid(doc, grid, "q");
    } else if (grid.contains("q")) {
        doc.fail({"grid", "q"}, "grid.q only applies to relative properties");
    }

    if (root.contains("trials")) {
        config.trials = doc.unsigned_value(root["trials"], {"trials"});
        if (config.trials == 0) doc.fail({"trials"}, "trials must be positive");
    }
    config.seed = doc.unsigned_value(doc.field(root, {}, "seed"), {"seed"});
    if (root.contains("budget")) config.budget = doc.unsigned_value(root["budget"], {"budget"});
    if (root.contains("mode")) {
        try {
            config.mode = parse_mode(doc.string(root["mode"], {"mode"}));
        } catch (const FormatError&) {
            throw;
        } catch (const ParameterError& e) {
            doc.fail({"mode"}, e.what());
        }
    }
    return config;
}

Json scan_config_json(const ScanConfig& config) {
    Json j;
    j["r"] = config.r;
    j["n_list"] = config.n;
    Json prop;
    prop["kind"] = kind_name(config.property.kind);
    if (config.property.kind == PropertyKind::eps || config.property.kind == PropertyKind::eps_for_g)
        prop["eps"] = config.property.eps.to_string();
    j["property"] = std::move(prop);
    Json grid;
    grid["p"] = config.p_grid;
    if (config.property.relative()) grid["q"] = config.q_grid;
    j["grid"] = std::move(grid);
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["budget"] = config.budget;
    j["mode"] = to_string(config.mode);
    return j;
}

// ---------------------------------------------------------------------------
// Manifests and files
// ---------------------------------------------------------------------------

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 computation failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm parts{};
    gmtime_r(&now, &parts);
    std::array<char, 32> buffer{};
    const std::size_t len = std::strftime(buffer.data(), buffer.size(), "%Y-%m-%dT%H:%M:%SZ", &parts);
    return std::string(buffer.data(), len);
}

std::string emit_manifest_json(const RunManifest& manifest) {
    Json j;
    j["tool"] = "turannical";
    j["version"] = manifest.tool_version;
    j["command"] = manifest.command;
    j["config"] = manifest.config;
    j["seed"] = manifest.seed;
    j["threads"] = manifest.threads;
    j["wall_time_seconds"] = manifest.wall_time_seconds;
    j["timestamp"] = manifest.timestamp;
    Json outputs = Json::array();
    for (const auto& o : manifest.outputs) outputs.push_back({{"name", o.name}, {"sha256", o.sha256}});
    j["outputs"] = std::move(outputs);
    return j.dump(2) + "\n";
}

RunManifest parse_manifest_json(std::string_view text) {
    const Document doc(text);
    const Json& root = doc.object(doc.root(), {});
    doc.only_fields(root, {},
                    {"tool", "version", "command", "config", "seed", "threads", "wall_time_seconds", "timestamp",
                     "outputs"});
    RunManifest m;
    if (doc.string(doc.field(root, {}, "tool"), {"tool"}) != "turannical") doc.fail({"tool"}, "not a turannical manifest");
    m.tool_version = doc.string(doc.field(root, {}, "version"), {"version"});
    m.command = doc.string(doc.field(root, {}, "command"), {"command"});
    m.config = doc.field(root, {}, "config");
    m.seed = doc.unsigned_value(doc.field(root, {}, "seed"), {"seed"});
    m.threads = static_cast<unsigned>(doc.unsigned_value(doc.field(root, {}, "threads"), {"threads"}));
    m.wall_time_seconds = doc.number(doc.field(root, {}, "wall_time_seconds"), {"wall_time_seconds"});
    m.timestamp = doc.string(doc.field(root, {}, "timestamp"), {"timestamp"});
    const Json& outputs = doc.array(doc.field(root, {}, "outputs"), {"outputs"});
    for (std::size_t i = 0; i < outputs.size(); ++i) {
        const Path at{std::string("outputs"), i};
        const Json& o = doc.object(outputs[i], at);
        doc.only_fields(o, at, {"name", "sha256"});
        OutputDigest d;
        d.name = doc.string(doc.field(o, at, "name"), Document::with(at, std::string("name")));
        d.sha256 = doc.string(doc.field(o, at, "sha256"), Document::with(at, std::string("sha256")));
        m.outputs.push_back(std::move(d));
    }
    return m;
}

std::vector<std::string> stale_outputs(const RunManifest& manifest, const std::filesystem::path& dir) {
    std::vector<std::string> stale;
    for (const auto& o : manifest.outputs) {
        try {
            if (sha256_hex(read_file(dir / o.name)) != o.sha256) stale.push_back(o.name);
        } catch (const std::exception&) {
            stale.push_back(o.name);
        }
    }
    return stale;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
    std::filesystem::path tmp = path;
    tmp += ".partial";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

namespace {

std::string status_name(Verdict v) {
    if (v == Verdict::holds) return "holds";
    if (v == Verdict::fails) return "fails";
    return "unknown";
}

Json verdict_json(Verdict v) {
    if (v == Verdict::holds) return true;
    if (v == Verdict::fails) return false;
    return nullptr;
}

Json parts_json(const VertexParts& parts) {
    Json out = Json::array();
    for (const auto& p : parts) out.push_back(p);
    return out;
}

}  // namespace

Json to_json(const DetectionResult& result) {
    Json j;
    j["detected"] = result.detected;
    j["witness_hyperedge"] = result.witness_hyperedge ? Json(*result.witness_hyperedge) : Json(nullptr);
    if (result.detected_count) j["detected_count"] = *result.detected_count;
    return j;
}

Json to_json(const Decision& decision, const Property& property) {
    const WitnessReport& rep = decision.report;
    Json j;
    j["property"] = to_string(property);
    j["verdict"] = verdict_json(decision.verdict);
    j["status"] = status_name(decision.verdict);
    j["vacuous"] = decision.vacuous;
    j["max_undetected_edges"] = rep.max_undetected_edges;
    j["upper_bound"] = rep.upper_bound;
    j["optimal"] = rep.optimal;
    j["transversal_size"] = rep.transversal_size;
    j["universe_size"] = rep.universe_size;
    j["baseline"] = {{"kind", to_string(rep.baseline.kind)},
                     {"value", rep.baseline.value.to_string()},
                     {"exact", rep.baseline.exact}};
    j["nodes"] = rep.nodes;
    j["witness"] = graph_to_json(rep.witness);
    return j;
}

Json to_json(const StructureVerdict& verdict) {
    Json j;
    j["case"] = to_string(verdict.kind);
    switch (verdict.kind) {
        case StructureCase::vertex_heavy:
            j["vertex"] = *verdict.vertex;
            j["clique_count"] = verdict.clique_count;
            break;
        case StructureCase::neighborhood_pair:
            j["x"] = verdict.x;
            j["y"] = verdict.y;
            j["xy_edges"] = verdict.xy_edges;
            break;
        case StructureCase::close_partition:
            j["parts"] = parts_json(verdict.partition->parts);
            j["noncrossing_edges"] = verdict.partition->noncrossing_edges;
            j["crossing_nonedges"] = verdict.partition->crossing_nonedges;
            break;
        default:
            break;
    }
    j["max_vertex_cliques"] = verdict.max_vertex_cliques;
    j["max_vertex"] = verdict.max_vertex;
    j["vertex_threshold"] = verdict.vertex_threshold.to_string();
    j["warnings"] = verdict.warnings;
    return j;
}

Json to_json(const CountingReport& report) {
    Json j;
    j["noncrossing_edges"] = report.noncrossing;
    j["crossing_nonedges"] = report.crossing_nonedges;
    j["exceptional"] = report.exceptional;
    j["cliques"] = report.cliques;
    j["clique_bound"] = report.clique_bound.to_string();
    j["excess_check"] = report.excess_check;
    j["clique_check"] = report.clique_check;
    j["caveats"] = report.caveats;
    return j;
}

Json to_json(const BookReport& report) {
    Json j;
    j["case"] = to_string(report.kind);
    j["max_vertex_cliques"] = report.max_vertex_cliques;
    j["max_vertex"] = report.max_vertex;
    j["edge"] = {report.edge.first, report.edge.second};
    j["book"] = report.book;
    j["bound"] = report.bound.to_string();
    j["meets_bound"] = report.meets_bound;
    return j;
}

Json to_json(const MuEstimate& estimate, const BoundednessReport& bound) {
    Json j;
    j["mean"] = estimate.mean;
    j["ci_lo"] = estimate.ci_lo;
    j["ci_hi"] = estimate.ci_hi;
    j["trials"] = estimate.trials;
    j["bound"] = bound.bound;
    j["upper"] = bound.upper;
    j["bounded"] = bound.bounded;
    return j;
}

}  // namespace turannical
