#include "turannical/detection.hpp"

namespace turannical {

namespace {

void check_compatible(const UniformHypergraph& f, const Graph& g) {
    require(f.order() == g.order(), "hypergraph has n=" + std::to_string(f.order()) + " but graph has n=" +
                                        std::to_string(g.order()));
    require(f.uniformity() >= 3, "detection needs r >= 3");
}

}  // namespace

bool induces_clique(const Graph& g, std::span<const Vertex> edge) {
    // Each row, masked to the hyperedge, must cover every other member.
    for (std::size_t i = 0; i < edge.size(); ++i) {
        const VertexSet& row = g.neighbours(edge[i]);
        for (std::size_t j = i + 1; j < edge.size(); ++j)
            if (!row.contains(edge[j])) return false;
    }
    return true;
}

DetectionResult detects(const UniformHypergraph& f, const Graph& g) {
    check_compatible(f, g);
    DetectionResult out;
    for (const auto& e : f.edges()) {
        if (induces_clique(g, e)) {
            out.detected = true;
            out.witness_hyperedge = e;
            break;
        }
    }
    return out;
}

DetectionResult detects_counting(const UniformHypergraph& f, const Graph& g) {
    DetectionResult out = detects(f, g);
    out.detected_count = detected_clique_count(f, g);
    return out;
}

Count detected_clique_count(const UniformHypergraph& f, const Graph& g) {
    check_compatible(f, g);
    Count total = 0;
    for (const auto& e : f.edges())
        if (induces_clique(g, e)) ++total;
    return total;
}

Rational denseness_ratio(const UniformHypergraph& f, const Graph& g) {
    check_compatible(f, g);
    require(f.edge_count() > 0, "denseness ratio is undefined for a hypergraph without edges");
    return Rational(static_cast<std::int64_t>(detected_clique_count(f, g)), static_cast<std::int64_t>(f.edge_count()));
}

}  // namespace turannical
