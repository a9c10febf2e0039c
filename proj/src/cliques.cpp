#include "turannical/cliques.hpp"

#include <string>

namespace turannical {

namespace {

// Candidates are restricted to vertices greater than the last chosen one so
// every clique is produced exactly once, in lexicographic order.
void extend(const Graph& g, std::vector<Vertex>& current, const VertexSet& candidates, std::uint32_t remaining,
            std::vector<std::vector<Vertex>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    if (candidates.size() < remaining) return;
    candidates.for_each([&](Vertex v) {
        if (!current.empty() && v < current.back()) return;
        VertexSet next = candidates & g.neighbours(v);
        // Drop vertices <= v; they would produce a permutation of an earlier clique.
        for (Vertex w = 0; w <= v; ++w) next.erase(w);
        current.push_back(v);
        extend(g, current, next, remaining - 1, out);
        current.pop_back();
    });
}

Count count_extend(const Graph& g, const VertexSet& candidates, std::uint32_t remaining) {
    if (remaining == 0) return 1;
    if (remaining == 1) return candidates.size();
    Count total = 0;
    VertexSet rest = candidates;
    candidates.for_each([&](Vertex v) {
        rest.erase(v);
        if (rest.size() + 1 < remaining) return;
        total = checked_add(total, count_extend(g, rest & g.neighbours(v), remaining - 1));
    });
    return total;
}

}  // namespace

CliqueSet enumerate_cliques(const Graph& g, std::uint32_t r) {
    require(r >= 2 && r <= g.order(),
            "clique order r=" + std::to_string(r) + " must satisfy 2 <= r <= n=" + std::to_string(g.order()));
    CliqueSet out{r, {}};
    std::vector<Vertex> current;
    extend(g, current, VertexSet::full(g.order()), r, out.members);
    return out;
}

Count count_cliques_within(const Graph& g, const VertexSet& candidates, std::uint32_t k) {
    return count_extend(g, candidates, k);
}

Count count_cliques(const Graph& g, std::uint32_t r) {
    require(r >= 1, "clique order must be positive");
    if (r > g.order()) return 0;
    return count_extend(g, VertexSet::full(g.order()), r);
}

Count clique_count_at_vertex(const Graph& g, std::uint32_t r, Vertex v) {
    require(v < g.order(), "vertex " + std::to_string(v) + " out of range");
    require(r >= 1, "clique order must be positive");
    return count_extend(g, g.neighbours(v), r - 1);
}

Count book_size(const Graph& g, std::uint32_t r, Vertex u, Vertex v) {
    require(u < g.order() && v < g.order(), "vertex out of range");
    require(g.has_edge(u, v), "{" + std::to_string(u) + "," + std::to_string(v) + "} is not an edge");
    require(r >= 2, "clique order must be at least 2");
    return count_extend(g, g.neighbours(u) & g.neighbours(v), r - 2);
}

std::optional<Book> max_book(const Graph& g, std::uint32_t r) {
    std::optional<Book> best;
    for (const auto& [u, v] : g.edges()) {
        const Count b = book_size(g, r, u, v);
        if (!best || b > best->size) best = Book{{u, v}, b};
    }
    return best;
}

bool has_clique(const Graph& g, std::uint32_t r) {
    if (r > g.order()) return false;
    if (r <= 1) return true;
    // Early-exit variant of count_extend.
    struct Search {
        const Graph& g;
        bool run(const VertexSet& candidates, std::uint32_t remaining) const {
            if (remaining == 0) return true;
            if (candidates.size() < remaining) return false;
            if (remaining == 1) return true;
            bool found = false;
            VertexSet rest = candidates;
            candidates.for_each([&](Vertex v) {
                if (found) return;
                rest.erase(v);
                if (rest.size() + 1 < remaining) return;
                found = run(rest & g.neighbours(v), remaining - 1);
            });
            return found;
        }
    };
    return Search{g}.run(VertexSet::full(g.order()), r);
}

}  // namespace turannical
