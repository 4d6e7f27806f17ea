#include "steiner/general_ecc.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <limits>
#include <optional>

#include "steiner/errors.hpp"
#include "steiner/tree_ecc.hpp"

namespace steiner {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// find_cycle over the still-alive edges: depth-first from vertex 0 upward,
// neighbors ascending, first back edge closes the cycle.
std::optional<std::vector<EdgeId>> find_cycle_masked(const Graph& g,
                                                     const std::vector<bool>& alive) {
    const VertexId n = g.vertex_count();
    std::vector<bool> visited(n, false), on_stack(n, false);
    struct Frame {
        VertexId vertex;
        EdgeId parent_edge;
        std::size_t next_neighbor;
    };
    std::vector<Frame> stack;
    for (VertexId root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = on_stack[root] = true;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            Frame& frame = stack.back();
            const VertexId v = frame.vertex;
            const auto nbrs = g.neighbors(v);
            if (frame.next_neighbor < nbrs.size()) {
                const HalfEdge h = nbrs[frame.next_neighbor++];
                if (!alive[h.id] || h.id == frame.parent_edge) continue;
                if (!visited[h.to]) {
                    visited[h.to] = on_stack[h.to] = true;
                    stack.push_back({h.to, h.id, 0});
                } else if (on_stack[h.to]) {
                    std::vector<EdgeId> cycle;
                    for (auto it = stack.rbegin(); it != stack.rend() && it->vertex != h.to; ++it)
                        cycle.push_back(it->parent_edge);
                    std::reverse(cycle.begin(), cycle.end());
                    cycle.push_back(h.id);
                    return cycle;
                }
            } else {
                on_stack[v] = false;
                stack.pop_back();
            }
        }
    }
    return std::nullopt;
}

// Rooted view of one spanning tree (the alive edges), for Steiner weights of
// terminal sets containing the root: the weight is the sum of parent edges
// over all vertices whose subtree holds a terminal, collected by climbing
// from each terminal until an already-counted vertex.
struct RootedLeaf {
    std::vector<VertexId> parent;
    std::vector<double> parent_weight;
    std::vector<EdgeId> parent_edge;

    RootedLeaf(const Graph& g, const std::vector<bool>& alive, VertexId root)
        : parent(g.vertex_count(), -1),
          parent_weight(g.vertex_count(), 0.0),
          parent_edge(g.vertex_count(), -1) {
        std::vector<VertexId> stack{root};
        std::vector<bool> seen(g.vertex_count(), false);
        seen[root] = true;
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (const HalfEdge& h : g.neighbors(v)) {
                if (!alive[h.id] || seen[h.to]) continue;
                seen[h.to] = true;
                parent[h.to] = v;
                parent_weight[h.to] = h.weight;
                parent_edge[h.to] = h.id;
                stack.push_back(h.to);
            }
        }
    }

    double steiner_weight(const std::vector<VertexId>& terminals,
                          std::vector<std::uint64_t>& epoch, std::uint64_t stamp) const {
        double total = 0.0;
        for (VertexId t : terminals) {
            for (VertexId u = t; parent[u] != -1 && epoch[u] != stamp; u = parent[u]) {
                epoch[u] = stamp;
                total += parent_weight[u];
            }
        }
        return total;
    }
};

// Lexicographic enumeration of the (k-1)-subsets of V \ {v}; the visit order
// defines the set index used for the per-set minima.
template <typename Visit>
void for_each_terminal_set(VertexId n, VertexId v, int k, Visit visit) {
    std::vector<VertexId> pool;
    pool.reserve(n - 1);
    for (VertexId u = 0; u < n; ++u)
        if (u != v) pool.push_back(u);
    const int r = k - 1;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<VertexId> terms(r);
    std::size_t set_index = 0;
    while (true) {
        for (int i = 0; i < r; ++i) terms[i] = pool[idx[i]];
        visit(set_index++, terms);
        int i = r - 1;
        while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - r + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::uint64_t count_terminal_sets(VertexId n, int k) {
    std::uint64_t count = 1;
    for (int i = 1; i <= k - 1; ++i) {
        count = count * static_cast<std::uint64_t>(n - 1 - (i - 1)) / i;
        if (count > (1u << 22)) return count;  // caller only needs "too big"
    }
    return count;
}

struct SearchState {
    std::vector<double> set_minimum;
    std::vector<EdgeId> deleted_edges;
    RecursionStats stats;
    std::function<void(const std::vector<EdgeId>&, double)> on_leaf;
};

void recurse(const Graph& g, VertexId v, int k, std::vector<bool>& alive,
             std::int32_t alive_count, std::vector<std::uint64_t>& epoch,
             std::uint64_t& stamp, SearchState& state) {
    ++state.stats.nodes;
    const VertexId n = g.vertex_count();
    if (alive_count == n - 1) {
        // deleting cycle edges preserves connectivity, so this is a spanning tree
        ++state.stats.leaves;
        const RootedLeaf leaf(g, alive, v);
        double leaf_ecc = 0.0;
        for_each_terminal_set(n, v, k, [&](std::size_t si, const std::vector<VertexId>& terms) {
            const double w = leaf.steiner_weight(terms, epoch, ++stamp);
            leaf_ecc = std::max(leaf_ecc, w);
            if (w < state.set_minimum[si]) state.set_minimum[si] = w;
        });
        if (state.on_leaf) state.on_leaf(state.deleted_edges, leaf_ecc);
        return;
    }

    auto cycle = find_cycle_masked(g, alive);
    std::sort(cycle->begin(), cycle->end());
    for (EdgeId e : *cycle) {
        alive[e] = false;
        state.deleted_edges.push_back(e);
        recurse(g, v, k, alive, alive_count - 1, epoch, stamp, state);
        state.deleted_edges.pop_back();
        alive[e] = true;
    }
}

// Second pass: locate the first spanning tree (in recursion order) whose
// Steiner weight of `terms` equals `target`, and return that subtree's edges.
bool locate_realizing_tree(const Graph& g, VertexId v, std::vector<bool>& alive,
                           std::int32_t alive_count, const std::vector<VertexId>& terms,
                           double target, std::vector<std::uint64_t>& epoch,
                           std::uint64_t& stamp, EccReport& report) {
    const VertexId n = g.vertex_count();
    if (alive_count == n - 1) {
        const RootedLeaf leaf(g, alive, v);
        if (leaf.steiner_weight(terms, epoch, ++stamp) != target) return false;
        ++stamp;
        for (VertexId t : terms) {
            for (VertexId u = t; leaf.parent[u] != -1 && epoch[u] != stamp;
                 u = leaf.parent[u]) {
                epoch[u] = stamp;
                const EdgeRef& e = g.edge(leaf.parent_edge[u]);
                report.tree_edges.emplace_back(e.u, e.v);
            }
        }
        std::sort(report.tree_edges.begin(), report.tree_edges.end());
        return true;
    }
    auto cycle = find_cycle_masked(g, alive);
    std::sort(cycle->begin(), cycle->end());
    for (EdgeId e : *cycle) {
        alive[e] = false;
        const bool done =
            locate_realizing_tree(g, v, alive, alive_count - 1, terms, target, epoch, stamp, report);
        alive[e] = true;
        if (done) return true;
    }
    return false;
}

EccReport run(const Graph& g, VertexId v, int k, const GeneralOptions& opt,
              RecursionStats* stats,
              std::function<void(const std::vector<EdgeId>&, double)> on_leaf) {
    const VertexId n = g.vertex_count();
    if (!is_connected(g)) throw DisconnectedError();
    if (k < 1 || k > n) throw InvalidKError(k, n);
    const std::int32_t nu = g.edge_count() - n + 1;
    if (nu > opt.nu_cap) throw CyclomaticCapExceededError(nu, opt.nu_cap);

    if (nu == 0 && !on_leaf && !stats) return ecc_k_tree(g, v, k);

    const std::uint64_t set_count = count_terminal_sets(n, k);
    if (set_count > (1u << 22))
        throw TooLargeError("terminal-set enumeration too large for k = " + std::to_string(k));

    SearchState state;
    state.set_minimum.assign(set_count, kInf);
    state.on_leaf = std::move(on_leaf);
    std::vector<bool> alive(g.edge_count(), true);
    std::vector<std::uint64_t> epoch(n, 0);
    std::uint64_t stamp = 0;
    recurse(g, v, k, alive, g.edge_count(), epoch, stamp, state);
    if (stats) *stats = state.stats;

    // maximize over terminal sets; lexicographic enumeration + strict
    // improvement makes the reported set the smallest maximizer
    EccReport report;
    report.vertex = v;
    report.k = k;
    report.value = -kInf;
    for_each_terminal_set(n, v, k, [&](std::size_t si, const std::vector<VertexId>& terms) {
        if (state.set_minimum[si] > report.value) {
            report.value = state.set_minimum[si];
            report.terminals = terms;
        }
    });
    const std::vector<VertexId> chosen = report.terminals;
    report.terminals.push_back(v);
    std::sort(report.terminals.begin(), report.terminals.end());

    const bool found = locate_realizing_tree(g, v, alive, g.edge_count(), chosen,
                                             report.value, epoch, stamp, report);
    assert(found);
    (void)found;
    return report;
}

}  // namespace

EccReport ecc_k_general(const Graph& g, VertexId v, int k, const GeneralOptions& opt,
                        RecursionStats* stats) {
    return run(g, v, k, opt, stats, nullptr);
}

std::vector<TraceRecord> recursion_trace(const Graph& g, VertexId v, int k,
                                         const GeneralOptions& opt) {
    if (g.vertex_count() > 20)
        throw TooLargeError("recursion trace capped at 20 vertices");
    std::vector<TraceRecord> records;
    run(g, v, k, opt, nullptr,
        [&records](const std::vector<EdgeId>& deleted, double value) {
            records.push_back({deleted, value});
        });
    return records;
}

}  // namespace steiner
