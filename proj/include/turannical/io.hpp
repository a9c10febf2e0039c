#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "turannical/detection.hpp"
#include "turannical/errors.hpp"
#include "turannical/experiments.hpp"
#include "turannical/graph.hpp"
#include "turannical/hypergraph.hpp"
#include "turannical/structure.hpp"
#include "turannical/witness.hpp"

namespace turannical {

using Json = nlohmann::ordered_json;

// Malformed input. `offset` is a 0-based byte offset into the input text and
// `path` names the offending field, e.g. "edges[3][1]" or "row 2.estimate".
class FormatError : public ParameterError {
public:
    FormatError(const std::string& message, std::size_t offset, std::string path);

    std::size_t offset() const { return offset_; }
    const std::string& path() const { return path_; }
    // The message without the location suffix.
    const std::string& detail() const { return detail_; }

private:
    std::size_t offset_;
    std::string path_;
    std::string detail_;
};

// Canonical form: compact, keys in schema order, edges sorted, trailing newline.
std::string emit_graph_json(const Graph& g);
Graph parse_graph_json(std::string_view text);

std::string emit_hypergraph_json(const UniformHypergraph& f);
UniformHypergraph parse_hypergraph_json(std::string_view text);

// Header n,p,q,property,mode,trials,successes,unknowns,estimate,ci_lo,ci_hi.
// Floats use 17 significant digits; an absent q is an empty field.
std::string emit_curve_csv(const std::vector<CurvePoint>& rows);
std::vector<CurvePoint> parse_curve_csv(std::string_view text);

// 17 significant digits, locale independent; NaN prints as "nan".
std::string format_double(double value);

ScanConfig parse_scan_config(std::string_view text);
Json scan_config_json(const ScanConfig& config);

struct OutputDigest {
    std::string name;
    std::string sha256;  // lowercase hex
};

struct RunManifest {
    std::string tool_version;
    std::string command;
    Json config;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    double wall_time_seconds = 0.0;
    std::string timestamp;  // UTC, ISO 8601
    std::vector<OutputDigest> outputs;
};

std::string emit_manifest_json(const RunManifest& manifest);
RunManifest parse_manifest_json(std::string_view text);

// Names of outputs (resolved against `dir`) whose current digest differs
// from the recorded one, or that cannot be read.
std::vector<std::string> stale_outputs(const RunManifest& manifest, const std::filesystem::path& dir);

std::string sha256_hex(std::string_view data);
std::string utc_timestamp();

std::string read_file(const std::filesystem::path& path);
// Writes to a temporary sibling and renames, so a failure leaves no partial file.
void write_file(const std::filesystem::path& path, std::string_view content);

// Report encoders for the command-line tool.
Json graph_to_json(const Graph& g);
Json to_json(const DetectionResult& result);
Json to_json(const Decision& decision, const Property& property);
Json to_json(const StructureVerdict& verdict);
Json to_json(const CountingReport& report);
Json to_json(const BookReport& report);
Json to_json(const MuEstimate& estimate, const BoundednessReport& bound);

}  // namespace turannical
