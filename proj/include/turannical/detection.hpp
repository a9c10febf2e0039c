#pragma once

#include <optional>
#include <span>
#include <string>

#include "turannical/graph.hpp"
#include "turannical/hypergraph.hpp"
#include "turannical/rational.hpp"

namespace turannical {

struct DetectionResult {
    bool detected = false;
    // First firing hyperedge in lexicographic order.
    std::optional<Hyperedge> witness_hyperedge;
    // Filled only when counting was requested.
    std::optional<Count> detected_count;
};

// True iff every pair inside `edge` is an edge of g.
bool induces_clique(const Graph& g, std::span<const Vertex> edge);

// Does some hyperedge of f induce K_r in g? Short-circuits on the first hit.
DetectionResult detects(const UniformHypergraph& f, const Graph& g);

// detects() plus the full detected_clique_count.
DetectionResult detects_counting(const UniformHypergraph& f, const Graph& g);

// |{X in E(f) : X induces K_r in g}|.
Count detected_clique_count(const UniformHypergraph& f, const Graph& g);

// detected_clique_count / |E(f)|; throws ParameterError for empty f.
Rational denseness_ratio(const UniformHypergraph& f, const Graph& g);

}  // namespace turannical
