#include "turannical/hitting_set.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>

#include "turannical/detection.hpp"
#include "turannical/rng.hpp"

namespace turannical {

namespace {

using Constraint = std::vector<std::uint32_t>;

// Constraint-set reduction to a fixed point:
//  - a constraint with one pair forces that pair;
//  - a pair whose constraints are a subset of another pair's is never needed;
//  - a constraint containing another constraint is redundant.
// The optimum is preserved; a transversal of the reduced system plus the
// forced pairs is a transversal of the original.
struct Reduction {
    std::vector<std::uint32_t> forced;
    std::vector<Constraint> constraints;
};

Reduction reduce(std::size_t universe_size, std::vector<Constraint> constraints) {
    Reduction out;
    for (auto& c : constraints) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::vector<char> forced(universe_size, 0);
    bool changed = true;
    while (changed) {
        changed = false;

        // Unit constraints.
        bool any_unit = false;
        for (const auto& c : constraints)
            if (c.size() == 1 && !forced[c[0]]) {
                forced[c[0]] = 1;
                out.forced.push_back(c[0]);
                any_unit = true;
            }
        if (any_unit) {
            std::erase_if(constraints, [&](const Constraint& c) {
                return std::any_of(c.begin(), c.end(), [&](std::uint32_t p) { return forced[p] != 0; });
            });
            changed = true;
        }

        // Occurrence lists.
        std::vector<std::vector<std::uint32_t>> occ(universe_size);
        for (std::uint32_t ci = 0; ci < constraints.size(); ++ci)
            for (const auto p : constraints[ci]) occ[p].push_back(ci);

        // Pair domination.
        std::vector<char> removed(universe_size, 0);
        bool any_removed = false;
        for (std::uint32_t a = 0; a < universe_size; ++a) {
            if (occ[a].empty()) continue;
            // Any dominating pair must sit in every constraint of a, in particular the first one.
            for (const auto b : constraints[occ[a][0]]) {
                if (b == a || removed[b]) continue;
                if (occ[b].size() < occ[a].size()) continue;
                if (!std::includes(occ[b].begin(), occ[b].end(), occ[a].begin(), occ[a].end())) continue;
                if (occ[b].size() == occ[a].size() && b > a) continue;
                removed[a] = 1;
                any_removed = true;
                break;
            }
        }
        if (any_removed) {
            for (auto& c : constraints)
                std::erase_if(c, [&](std::uint32_t p) { return removed[p] != 0; });
            changed = true;
            for (auto& list : occ) list.clear();
            for (std::uint32_t ci = 0; ci < constraints.size(); ++ci)
                for (const auto p : constraints[ci]) occ[p].push_back(ci);
        }

        // Constraint domination: drop supersets (and duplicates, keeping the first).
        std::vector<char> dead(constraints.size(), 0);
        bool any_dead = false;
        for (std::uint32_t ci = 0; ci < constraints.size(); ++ci) {
            const auto& c = constraints[ci];
            if (dead[ci] || c.empty()) continue;
            for (const auto cj : occ[c[0]]) {
                if (cj == ci || dead[cj]) continue;
                const auto& d = constraints[cj];
                if (d.size() < c.size()) continue;
                if (d.size() == c.size() && cj < ci) continue;
                if (std::includes(d.begin(), d.end(), c.begin(), c.end())) {
                    dead[cj] = 1;
                    any_dead = true;
                }
            }
        }
        if (any_dead) {
            std::vector<Constraint> kept;
            for (std::uint32_t ci = 0; ci < constraints.size(); ++ci)
                if (!dead[ci]) kept.push_back(std::move(constraints[ci]));
            constraints = std::move(kept);
            changed = true;
        }
    }
    out.constraints = std::move(constraints);
    std::sort(out.forced.begin(), out.forced.end());
    return out;
}

// One connected component of the constraint system, with pairs renumbered 0..P-1.
struct Component {
    std::vector<std::uint32_t> pairs;  // local -> original universe index
    std::vector<Constraint> constraints;
};

std::vector<Component> split_components(std::size_t universe_size, const std::vector<Constraint>& constraints) {
    std::vector<std::uint32_t> parent(universe_size);
    std::iota(parent.begin(), parent.end(), 0U);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& c : constraints)
        for (std::size_t i = 1; i < c.size(); ++i) parent[find(c[i])] = find(c[0]);

    std::vector<int> component_of_root(universe_size, -1);
    std::vector<Component> out;
    std::vector<std::uint32_t> local(universe_size, 0);
    for (const auto& c : constraints) {
        const auto root = find(c[0]);
        if (component_of_root[root] < 0) {
            component_of_root[root] = static_cast<int>(out.size());
            out.emplace_back();
        }
        auto& comp = out[static_cast<std::size_t>(component_of_root[root])];
        Constraint mapped;
        mapped.reserve(c.size());
        for (const auto p : c) mapped.push_back(p);
        comp.constraints.push_back(std::move(mapped));
    }
    for (auto& comp : out) {
        for (const auto& c : comp.constraints) comp.pairs.insert(comp.pairs.end(), c.begin(), c.end());
        std::sort(comp.pairs.begin(), comp.pairs.end());
        comp.pairs.erase(std::unique(comp.pairs.begin(), comp.pairs.end()), comp.pairs.end());
        for (std::uint32_t i = 0; i < comp.pairs.size(); ++i) local[comp.pairs[i]] = i;
        for (auto& c : comp.constraints)
            for (auto& p : c) p = local[p];
    }
    // Deterministic order: smallest components first, ties by first pair.
    std::stable_sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        if (a.constraints.size() != b.constraints.size()) return a.constraints.size() < b.constraints.size();
        return a.pairs.front() < b.pairs.front();
    });
    return out;
}

// Keeps as many pairs as possible while no constraint is entirely kept.
class Packer {
public:
    Packer(std::uint32_t n, std::vector<VertexPair> pairs, const std::vector<Constraint>& constraints)
        : n_(n), pairs_(std::move(pairs)), constraints_(constraints), occ_(pairs_.size()) {
        for (std::uint32_t ci = 0; ci < constraints_.size(); ++ci)
            for (const auto p : constraints_[ci]) occ_[p].push_back(ci);
        order_.resize(pairs_.size());
        std::iota(order_.begin(), order_.end(), 0U);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return occ_[a].size() < occ_[b].size(); });
    }

    // Kept pairs for a vertex partition (empty partition: start from nothing).
    std::vector<char> from_partition(const std::vector<std::uint32_t>& part) {
        std::vector<char> kept(pairs_.size(), 0);
        if (!part.empty())
            for (std::uint32_t p = 0; p < pairs_.size(); ++p)
                kept[p] = part[pairs_[p].first] != part[pairs_[p].second] ? 1 : 0;
        recount(kept);
        for (std::uint32_t ci = 0; ci < constraints_.size(); ++ci)
            if (count_[ci] == constraints_[ci].size()) drop(kept, constraints_[ci].front());
        fill(kept);
        return kept;
    }

    // (1,2)-swaps: drop one kept pair to admit two. Also admits free pairs.
    void improve(std::vector<char>& kept, std::size_t max_rounds = 64) {
        recount(kept);
        for (std::size_t round = 0; round < max_rounds; ++round) {
            bool changed = fill(kept);
            for (std::uint32_t x = 0; x < pairs_.size(); ++x) {
                if (!kept[x]) continue;
                // Candidates freed by dropping x.
                std::vector<std::uint32_t> freed;
                for (const auto ci : occ_[x]) {
                    if (count_[ci] + 1 != constraints_[ci].size()) continue;
                    for (const auto q : constraints_[ci])
                        if (!kept[q] && q != x) freed.push_back(q);
                }
                std::sort(freed.begin(), freed.end());
                freed.erase(std::unique(freed.begin(), freed.end()), freed.end());
                if (freed.size() < 2) continue;
                drop(kept, x);
                std::size_t added = 0;
                std::vector<std::uint32_t> taken;
                for (const auto q : freed)
                    if (addable(kept, q)) {
                        take(kept, q);
                        taken.push_back(q);
                        ++added;
                    }
                if (added >= 2) {
                    changed = true;
                    continue;
                }
                for (const auto q : taken) drop(kept, q);
                take(kept, x);
            }
            if (!changed) break;
        }
    }

    // Iterated local search: force a random missing pair in, drop one kept pair
    // from each constraint it would complete, refill; keep non-worsening moves.
    void perturb(std::vector<char>& kept, std::size_t iterations, CounterRng& rng) {
        recount(kept);
        std::vector<char> best = kept;
        std::size_t best_value = value(kept);
        std::size_t current = best_value;
        std::vector<std::uint32_t> changed;
        for (std::size_t it = 0; it < iterations; ++it) {
            const auto q = static_cast<std::uint32_t>(rng.next() % pairs_.size());
            if (kept[q] || occ_[q].empty()) continue;
            changed.clear();
            for (const auto ci : occ_[q]) {
                if (count_[ci] + 1 != constraints_[ci].size()) continue;
                std::uint32_t choices = 0;
                for (const auto x : constraints_[ci])
                    if (x != q && kept[x]) ++choices;
                if (choices == 0) continue;  // already broken by an earlier drop
                std::uint32_t pick = static_cast<std::uint32_t>(rng.next() % choices);
                for (const auto x : constraints_[ci])
                    if (x != q && kept[x] && pick-- == 0) {
                        drop(kept, x);
                        changed.push_back(x);
                        break;
                    }
            }
            take(kept, q);
            std::size_t value_now = current + 1 - changed.size();
            for (const auto p : order_)
                if (addable(kept, p)) {
                    take(kept, p);
                    ++value_now;
                }
            if (value_now >= current) {
                current = value_now;
                if (current > best_value) {
                    best_value = current;
                    best = kept;
                }
            } else {
                kept = best;
                recount(kept);
                current = best_value;
            }
        }
        kept = std::move(best);
        recount(kept);
    }

    std::size_t value(const std::vector<char>& kept) const {
        return static_cast<std::size_t>(std::count(kept.begin(), kept.end(), 1));
    }

    std::uint32_t order() const { return n_; }

private:
    void recount(const std::vector<char>& kept) {
        count_.assign(constraints_.size(), 0);
        for (std::uint32_t ci = 0; ci < constraints_.size(); ++ci)
            for (const auto p : constraints_[ci]) count_[ci] += kept[p];
    }

    bool addable(const std::vector<char>& kept, std::uint32_t p) const {
        if (kept[p]) return false;
        for (const auto ci : occ_[p])
            if (count_[ci] + 1 == constraints_[ci].size()) return false;
        return true;
    }

    void take(std::vector<char>& kept, std::uint32_t p) {
        kept[p] = 1;
        for (const auto ci : occ_[p]) ++count_[ci];
    }

    void drop(std::vector<char>& kept, std::uint32_t p) {
        kept[p] = 0;
        for (const auto ci : occ_[p]) --count_[ci];
    }

    bool fill(std::vector<char>& kept) {
        bool any = false;
        for (const auto p : order_)
            if (addable(kept, p)) {
                take(kept, p);
                any = true;
            }
        return any;
    }

    std::uint32_t n_;
    std::vector<VertexPair> pairs_;
    const std::vector<Constraint>& constraints_;
    std::vector<std::vector<std::uint32_t>> occ_;
    std::vector<std::uint32_t> order_;
    std::vector<std::uint32_t> count_;
};

std::vector<std::uint32_t> partite_heuristic(std::uint32_t n, std::vector<VertexPair> pairs,
                                             const std::vector<Constraint>& constraints, std::uint32_t parts,
                                             unsigned restarts) {
    Packer packer(n, std::move(pairs), constraints);
    std::vector<char> best = packer.from_partition({});
    packer.improve(best);
    std::size_t best_value = packer.value(best);
    if (parts >= 2 && n >= parts) {
        CounterRng rng(0x7475726e616e6e69ULL ^ (static_cast<std::uint64_t>(n) << 32) ^ constraints.size());
        for (unsigned attempt = 0; attempt < restarts; ++attempt) {
            std::vector<Vertex> perm(n);
            std::iota(perm.begin(), perm.end(), 0U);
            if (attempt > 0)
                for (std::uint32_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.next() % (i + 1)]);
            std::vector<std::uint32_t> part(n);
            for (std::uint32_t i = 0; i < n; ++i) part[perm[i]] = i % parts;
            std::vector<char> kept = packer.from_partition(part);
            std::size_t value = packer.value(kept);
            for (bool improved = true; improved;) {
                improved = false;
                for (Vertex v = 0; v < n; ++v) {
                    const std::uint32_t home = part[v];
                    for (std::uint32_t to = 0; to < parts; ++to) {
                        if (to == home) continue;
                        part[v] = to;
                        auto moved = packer.from_partition(part);
                        const std::size_t moved_value = packer.value(moved);
                        if (moved_value > value) {
                            value = moved_value;
                            kept = std::move(moved);
                            improved = true;
                            break;
                        }
                        part[v] = home;
                    }
                }
            }
            packer.improve(kept);
            value = packer.value(kept);
            if (value > best_value) {
                best_value = value;
                best = std::move(kept);
            }
        }
    }
    if (!best.empty()) {
        CounterRng rng(0x696c73ULL ^ (static_cast<std::uint64_t>(n) << 20) ^ constraints.size());
        packer.perturb(best, 400 * best.size(), rng);
        packer.improve(best);
    }
    std::vector<std::uint32_t> deleted;
    for (std::uint32_t p = 0; p < best.size(); ++p)
        if (!best[p]) deleted.push_back(p);
    return deleted;
}

constexpr unsigned default_restarts = 32;

// Depth-first branch and bound on one component.
class Search {
public:
    Search(const Component& comp, std::uint64_t& nodes, std::uint64_t budget)
        : comp_(comp), nodes_(nodes), budget_(budget), pair_count_(comp.pairs.size()),
          status_(pair_count_, kUndecided), occ_(pair_count_), hits_(pair_count_, 0), mark_(pair_count_, 0),
          sat_(comp.constraints.size(), 0), und_(comp.constraints.size(), 0), slack_(pair_count_, 0.0),
          weight_(comp.constraints.size(), 0.0) {
        for (std::uint32_t ci = 0; ci < comp.constraints.size(); ++ci) {
            und_[ci] = static_cast<std::uint32_t>(comp.constraints[ci].size());
            max_width_ = std::max<std::size_t>(max_width_, comp.constraints[ci].size());
            for (const auto p : comp.constraints[ci]) occ_[p].push_back(ci);
        }
        buckets_.resize(max_width_ + 1);
    }

    std::size_t root_bound() { return bound(); }

    // Greedy: repeatedly delete the pair meeting the most unsatisfied constraints.
    std::vector<std::uint32_t> greedy() {
        std::vector<std::uint32_t> chosen;
        std::vector<char> satisfied(comp_.constraints.size(), 0);
        std::vector<std::size_t> count(pair_count_, 0);
        for (std::uint32_t p = 0; p < pair_count_; ++p) count[p] = occ_[p].size();
        std::size_t remaining = comp_.constraints.size();
        while (remaining > 0) {
            const auto best = static_cast<std::uint32_t>(std::max_element(count.begin(), count.end()) - count.begin());
            chosen.push_back(best);
            for (const auto ci : occ_[best]) {
                if (satisfied[ci]) continue;
                satisfied[ci] = 1;
                --remaining;
                for (const auto q : comp_.constraints[ci]) --count[q];
            }
        }
        std::sort(chosen.begin(), chosen.end());
        return chosen;
    }

    struct Outcome {
        std::vector<std::uint32_t> best;
        std::size_t lower_bound = 0;
        bool complete = false;
    };

    Outcome run(std::vector<std::uint32_t> incumbent, std::optional<std::size_t> target) {
        best_ = std::move(incumbent);
        target_ = target;
        const std::size_t root = bound();
        Outcome out;
        if (target_ && best_.size() <= *target_) {
            out.best = best_;
            out.lower_bound = root;
            out.complete = true;
            return out;
        }
        aborted_ = false;
        found_target_ = false;
        dfs();
        out.best = best_;
        if (aborted_) {
            out.lower_bound = root;
            out.complete = false;
        } else if (target_ && !found_target_) {
            // Exhaustive: nothing of size <= target exists, and nothing smaller than best_.
            out.lower_bound = std::max(root, std::min(best_.size(), *target_ + 1));
            out.complete = true;
        } else {
            out.lower_bound = found_target_ ? root : best_.size();
            out.complete = true;
        }
        return out;
    }

private:
    static constexpr std::uint8_t kUndecided = 0;
    static constexpr std::uint8_t kDeleted = 1;
    static constexpr std::uint8_t kKept = 2;

    void assign(std::uint32_t p, std::uint8_t value) {
        status_[p] = value;
        trail_.push_back(p);
        if (value == kDeleted) ++deleted_;
        for (const auto ci : occ_[p]) {
            --und_[ci];
            if (value == kDeleted) ++sat_[ci];
        }
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            const auto p = trail_.back();
            trail_.pop_back();
            const bool was_deleted = status_[p] == kDeleted;
            if (was_deleted) --deleted_;
            for (const auto ci : occ_[p]) {
                ++und_[ci];
                if (was_deleted) --sat_[ci];
            }
            status_[p] = kUndecided;
        }
    }

    // Unit propagation. Returns false on a constraint with no undecided pair left.
    bool propagate() {
        bool again = true;
        while (again) {
            again = false;
            for (std::uint32_t ci = 0; ci < und_.size(); ++ci) {
                if (sat_[ci] != 0) continue;
                if (und_[ci] == 0) return false;
                if (und_[ci] == 1) {
                    for (const auto p : comp_.constraints[ci])
                        if (status_[p] == kUndecided) {
                            assign(p, kDeleted);
                            break;
                        }
                    again = true;
                }
            }
        }
        return true;
    }

    // max(greedy disjoint packing, fractional packing) over unsatisfied constraints.
    // The fractional packing starts from y_c = min 1/deg(p) over the undecided
    // pairs p of c and then raises each y_c by the least remaining slack; any
    // feasible fractional packing bounds the transversal from below.
    std::size_t bound() {
        for (auto& b : buckets_) b.clear();
        std::size_t unsatisfied = 0;
        for (std::uint32_t ci = 0; ci < und_.size(); ++ci) {
            if (sat_[ci] != 0) continue;
            ++unsatisfied;
            buckets_[und_[ci]].push_back(ci);
        }
        if (unsatisfied == 0) return 0;
        ++stamp_;
        std::size_t packed = 0;
        for (const auto& bucket : buckets_)
            for (const auto ci : bucket) {
                bool free = true;
                for (const auto p : comp_.constraints[ci]) {
                    if (status_[p] != kUndecided) continue;
                    if (mark_[p] == stamp_) free = false;
                }
                if (free) {
                    ++packed;
                    for (const auto p : comp_.constraints[ci])
                        if (status_[p] == kUndecided) mark_[p] = stamp_;
                }
            }
        for (std::uint32_t p = 0; p < pair_count_; ++p) {
            hits_[p] = 0;
            slack_[p] = 1.0;
        }
        for (const auto& bucket : buckets_)
            for (const auto ci : bucket)
                for (const auto p : comp_.constraints[ci])
                    if (status_[p] == kUndecided) ++hits_[p];
        double total = 0.0;
        for (const auto& bucket : buckets_)
            for (const auto ci : bucket) {
                std::uint32_t widest = 0;
                for (const auto p : comp_.constraints[ci])
                    if (status_[p] == kUndecided) widest = std::max(widest, hits_[p]);
                const double y = 1.0 / widest;
                weight_[ci] = y;
                total += y;
                for (const auto p : comp_.constraints[ci])
                    if (status_[p] == kUndecided) slack_[p] -= y;
            }
        for (const auto& bucket : buckets_)
            for (const auto ci : bucket) {
                double room = 1.0;
                for (const auto p : comp_.constraints[ci])
                    if (status_[p] == kUndecided) room = std::min(room, slack_[p]);
                if (room <= 1e-12) continue;
                total += room;
                for (const auto p : comp_.constraints[ci])
                    if (status_[p] == kUndecided) slack_[p] -= room;
            }
        const auto fractional = static_cast<std::size_t>(std::max(0.0, std::ceil(total - 1e-7)));
        return std::max(packed, fractional);
    }

    bool should_stop() const { return aborted_ || found_target_; }

    void record_solution() {
        std::vector<std::uint32_t> chosen;
        for (std::uint32_t p = 0; p < pair_count_; ++p)
            if (status_[p] == kDeleted) chosen.push_back(p);
        best_ = std::move(chosen);
        if (target_ && best_.size() <= *target_) found_target_ = true;
    }

    void dfs() {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        const std::size_t mark = trail_.size();
        if (!propagate()) {
            undo_to(mark);
            return;
        }
        const std::size_t lb = bound();
        if (lb == 0) {
            if (deleted_ < best_.size()) record_solution();
            undo_to(mark);
            return;
        }
        if (deleted_ + lb >= best_.size() || (target_ && deleted_ + lb > *target_)) {
            undo_to(mark);
            return;
        }

        // Branch on the unsatisfied constraint with the fewest undecided pairs.
        std::uint32_t branch = 0;
        std::uint32_t fewest = ~0U;
        for (std::uint32_t ci = 0; ci < und_.size(); ++ci)
            if (sat_[ci] == 0 && und_[ci] < fewest) {
                fewest = und_[ci];
                branch = ci;
            }
        std::vector<std::uint32_t> options;
        for (const auto p : comp_.constraints[branch])
            if (status_[p] == kUndecided) options.push_back(p);
        // hits_ still holds the per-pair unsatisfied counts from bound().
        std::stable_sort(options.begin(), options.end(),
                         [&](std::uint32_t a, std::uint32_t b) { return hits_[a] > hits_[b]; });

        const std::size_t before_branch = trail_.size();
        for (std::size_t i = 0; i < options.size() && !should_stop(); ++i) {
            const std::size_t here = trail_.size();
            assign(options[i], kDeleted);
            dfs();
            undo_to(here);
            if (should_stop()) break;
            // Later branches keep this pair.
            assign(options[i], kKept);
            if (deleted_ >= best_.size()) break;
        }
        undo_to(before_branch);
        undo_to(mark);
    }

    const Component& comp_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::size_t pair_count_;
    std::vector<std::uint8_t> status_;
    std::vector<std::vector<std::uint32_t>> occ_;
    std::vector<std::uint32_t> hits_;
    std::vector<std::uint64_t> mark_;
    std::vector<std::uint32_t> sat_;
    std::vector<std::uint32_t> und_;
    std::vector<double> slack_;
    std::vector<double> weight_;
    std::vector<std::vector<std::uint32_t>> buckets_;
    std::vector<std::uint32_t> trail_;
    std::vector<std::uint32_t> best_;
    std::optional<std::size_t> target_;
    std::size_t max_width_ = 0;
    std::size_t deleted_ = 0;
    std::uint64_t stamp_ = 0;
    bool aborted_ = false;
    bool found_target_ = false;
};

}  // namespace

HittingSetInstance build_instance(const UniformHypergraph& f) {
    HittingSetInstance inst;
    inst.n = f.order();
    inst.parts_hint = f.uniformity() - 1;
    for (Vertex u = 0; u < f.order(); ++u)
        for (Vertex v = u + 1; v < f.order(); ++v) inst.universe.emplace_back(u, v);
    inst.constraints.reserve(f.edge_count());
    for (const auto& e : f.edges()) {
        Constraint c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) c.push_back(pair_index(e[i], e[j], f.order()));
        std::sort(c.begin(), c.end());
        inst.constraints.push_back(std::move(c));
    }
    return inst;
}

HittingSetInstance build_instance(const UniformHypergraph& f, const Graph& host) {
    require(f.order() == host.order(), "hypergraph and host graph have different vertex counts");
    HittingSetInstance inst;
    inst.n = f.order();
    inst.parts_hint = f.uniformity() - 1;
    inst.universe = host.edges();
    const auto n = f.order();
    std::vector<std::uint32_t> index_of(n < 2 ? 0 : binomial(n, 2), 0);
    for (std::uint32_t i = 0; i < inst.universe.size(); ++i)
        index_of[pair_index(inst.universe[i].first, inst.universe[i].second, n)] = i;
    for (const auto& e : f.edges()) {
        if (!induces_clique(host, e)) continue;
        Constraint c;
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j) c.push_back(index_of[pair_index(e[i], e[j], n)]);
        std::sort(c.begin(), c.end());
        inst.constraints.push_back(std::move(c));
    }
    return inst;
}

std::vector<std::uint32_t> heuristic_transversal(const HittingSetInstance& instance, unsigned restarts) {
    for (const auto& c : instance.constraints) require(!c.empty(), "hitting-set constraint is empty");
    std::vector<Constraint> constraints = instance.constraints;
    for (auto& c : constraints) {
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    return partite_heuristic(instance.n, instance.universe, constraints, instance.parts_hint, restarts);
}

std::size_t packing_lower_bound(const HittingSetInstance& instance) {
    std::vector<char> used(instance.universe.size(), 0);
    std::vector<std::uint32_t> order(instance.constraints.size());
    std::iota(order.begin(), order.end(), 0U);
    std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return instance.constraints[a].size() < instance.constraints[b].size();
    });
    std::size_t packed = 0;
    for (const auto ci : order) {
        const auto& c = instance.constraints[ci];
        if (std::any_of(c.begin(), c.end(), [&](std::uint32_t p) { return used[p] != 0; })) continue;
        for (const auto p : c) used[p] = 1;
        ++packed;
    }
    return packed;
}

bool is_transversal(const HittingSetInstance& instance, const std::vector<std::uint32_t>& chosen) {
    std::vector<char> in(instance.universe.size(), 0);
    for (const auto p : chosen) {
        if (p >= in.size()) return false;
        in[p] = 1;
    }
    return std::all_of(instance.constraints.begin(), instance.constraints.end(), [&](const Constraint& c) {
        return std::any_of(c.begin(), c.end(), [&](std::uint32_t p) { return in[p] != 0; });
    });
}

Graph surviving_graph(const HittingSetInstance& instance, const std::vector<std::uint32_t>& deleted) {
    std::vector<char> gone(instance.universe.size(), 0);
    for (const auto p : deleted) gone[p] = 1;
    Graph g(instance.n);
    for (std::uint32_t i = 0; i < instance.universe.size(); ++i)
        if (!gone[i]) g.add_edge(instance.universe[i].first, instance.universe[i].second);
    return g;
}

TransversalResult min_transversal(const HittingSetInstance& instance, const SolveLimits& limits) {
    for (const auto& c : instance.constraints) require(!c.empty(), "hitting-set constraint is empty");

    const Reduction reduced = reduce(instance.universe.size(), instance.constraints);
    const auto components = split_components(instance.universe.size(), reduced.constraints);

    TransversalResult result;
    std::vector<std::vector<std::uint32_t>> best(components.size());
    std::vector<std::size_t> lower(components.size(), 0);
    std::vector<char> settled(components.size(), 0);
    std::vector<std::unique_ptr<Search>> searches;
    searches.reserve(components.size());
    for (std::size_t i = 0; i < components.size(); ++i) {
        searches.push_back(std::make_unique<Search>(components[i], result.nodes, limits.node_budget));
        best[i] = searches[i]->greedy();
        lower[i] = searches[i]->root_bound();
        if (lower[i] < best[i].size()) {
            std::vector<VertexPair> pairs;
            pairs.reserve(components[i].pairs.size());
            for (const auto p : components[i].pairs) pairs.push_back(instance.universe[p]);
            auto heuristic = partite_heuristic(instance.n, std::move(pairs), components[i].constraints,
                                               instance.parts_hint, default_restarts);
            if (heuristic.size() < best[i].size()) best[i] = std::move(heuristic);
        }
        if (lower[i] == best[i].size()) settled[i] = 1;
    }

    const std::size_t forced = reduced.forced.size();
    auto sum_sizes = [&] {
        std::size_t s = forced;
        for (const auto& b : best) s += b.size();
        return s;
    };
    auto sum_lower = [&] { return forced + std::accumulate(lower.begin(), lower.end(), std::size_t{0}); };

    bool complete = true;
    const auto target = limits.target;
    const bool decided_early = target && (sum_sizes() <= *target || sum_lower() > *target);
    if (!decided_early) {
        for (std::size_t i = 0; i < components.size(); ++i) {
            if (settled[i]) continue;
            std::optional<std::size_t> component_target;
            if (target && i + 1 == components.size()) {
                // Earlier components are exact (or bounded); give the last one the residual target.
                std::size_t others = forced;
                for (std::size_t j = 0; j + 1 < components.size(); ++j) others += best[j].size();
                if (others > *target) break;
                component_target = *target - others;
            }
            auto outcome = searches[i]->run(best[i], component_target);
            best[i] = std::move(outcome.best);
            lower[i] = std::max(lower[i], outcome.lower_bound);
            if (!outcome.complete) complete = false;
            if (target && sum_lower() > *target) break;
        }
    }

    std::vector<std::uint32_t> chosen = reduced.forced;
    for (std::size_t i = 0; i < components.size(); ++i)
        for (const auto p : best[i]) chosen.push_back(components[i].pairs[p]);
    std::sort(chosen.begin(), chosen.end());
    result.transversal = std::move(chosen);
    result.size = result.transversal.size();
    result.lower_bound = std::min(sum_lower(), result.size);
    result.optimal = result.lower_bound == result.size;
    if (target) {
        result.complete = result.size <= *target || result.lower_bound > *target;
    } else {
        result.complete = complete && result.optimal;
    }
    return result;
}

}  // namespace turannical
