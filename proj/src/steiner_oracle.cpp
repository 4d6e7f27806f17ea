#include "steiner/steiner_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <queue>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

constexpr int kMaxTerminals = 16;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Decision {
    enum Kind : std::uint8_t { none, base, merge, grow };
    Kind kind = none;
    std::uint32_t submask = 0;  // merge
    VertexId from = -1;         // grow
    EdgeId via = -1;            // grow
};

using MinHeap = std::priority_queue<std::pair<double, VertexId>,
                                    std::vector<std::pair<double, VertexId>>,
                                    std::greater<>>;

// One round of the two-recurrence subset dynamic program: merge complementary
// submask solutions at each vertex, then relax outward with Dijkstra. dp rows
// for strictly smaller masks must already be final.
void dp_round(const Graph& g, std::uint32_t mask, std::vector<std::vector<double>>& dp,
              std::vector<std::vector<Decision>>* dec) {
    auto& cur = dp[mask];
    const VertexId n = g.vertex_count();
    if ((mask & (mask - 1)) != 0) {
        const std::uint32_t low = mask & -mask;
        for (std::uint32_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
            if (!(sub & low)) continue;  // each split visited once
            const auto& a = dp[sub];
            const auto& b = dp[mask ^ sub];
            for (VertexId v = 0; v < n; ++v) {
                if (a[v] == kInf || b[v] == kInf) continue;
                const double cand = a[v] + b[v];
                if (cand < cur[v]) {
                    cur[v] = cand;
                    if (dec) (*dec)[mask][v] = {Decision::merge, sub, -1, -1};
                }
            }
        }
    }
    MinHeap heap;
    for (VertexId v = 0; v < n; ++v)
        if (cur[v] < kInf) heap.push({cur[v], v});
    while (!heap.empty()) {
        const auto [d, v] = heap.top();
        heap.pop();
        if (d > cur[v]) continue;
        for (const HalfEdge& h : g.neighbors(v)) {
            const double cand = d + h.weight;
            if (cand < cur[h.to]) {
                cur[h.to] = cand;
                if (dec) (*dec)[mask][h.to] = {Decision::grow, 0, v, h.id};
                heap.push({cand, h.to});
            }
        }
    }
}

// Lexicographic enumeration of the r-element index subsets of pool.
template <typename Visit>
void for_each_combination(const std::vector<VertexId>& pool, int r, Visit visit) {
    const int size = static_cast<int>(pool.size());
    if (r < 0 || r > size) return;
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        visit(idx);
        int i = r - 1;
        while (i >= 0 && idx[i] == size - r + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

TerminalSet::TerminalSet(std::vector<VertexId> verts, VertexId focal_vertex)
    : vertices(std::move(verts)), focal(focal_vertex) {
    std::sort(vertices.begin(), vertices.end());
    if (vertices.empty()) throw Error("terminal set must be nonempty");
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw Error("terminal set has duplicate vertices");
    if (!std::binary_search(vertices.begin(), vertices.end(), focal))
        throw Error("focal vertex is not a terminal");
}

TerminalSet::TerminalSet(std::vector<VertexId> verts)
    : TerminalSet(verts, verts.empty() ? -1 : verts.front()) {}

SteinerResult steiner_tree_exact(const Graph& g, const TerminalSet& s) {
    const VertexId n = g.vertex_count();
    for (VertexId t : s.vertices)
        if (t < 0 || t >= n) throw Error("terminal out of range");
    const int k = static_cast<int>(s.vertices.size());
    if (k > kMaxTerminals)
        throw TooLargeError("steiner tree supports at most 16 terminals");
    if (!is_connected(g)) throw DisconnectedError();
    if (k == 1) return {};

    const std::uint32_t full = (1u << k) - 1;
    std::vector<std::vector<double>> dp(full + 1, std::vector<double>(n, kInf));
    std::vector<std::vector<Decision>> dec(full + 1, std::vector<Decision>(n));
    for (int i = 0; i < k; ++i) {
        dp[1u << i][s.vertices[i]] = 0.0;
        dec[1u << i][s.vertices[i]].kind = Decision::base;
    }
    for (std::uint32_t mask = 1; mask <= full; ++mask) dp_round(g, mask, dp, &dec);

    // Decisions can revisit an edge only along zero-weight overlaps, so the
    // deduplicated set has the optimal weight; any cycles are zero-weight.
    std::vector<bool> edge_used(g.edge_count(), false);
    std::vector<std::pair<std::uint32_t, VertexId>> todo{{full, s.vertices[0]}};
    while (!todo.empty()) {
        const auto [mask, v] = todo.back();
        todo.pop_back();
        const Decision& d = dec[mask][v];
        switch (d.kind) {
            case Decision::base:
                break;
            case Decision::merge:
                todo.push_back({d.submask, v});
                todo.push_back({mask ^ d.submask, v});
                break;
            case Decision::grow:
                edge_used[d.via] = true;
                todo.push_back({mask, d.from});
                break;
            case Decision::none:
                assert(false && "unreachable dp state");
                break;
        }
    }

    // Keep a spanning tree of the collected subgraph, then prune branches
    // that carry no terminal.
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!edge_used[e]) continue;
        adj[g.edge(e).u].push_back({g.edge(e).v, e});
        adj[g.edge(e).v].push_back({g.edge(e).u, e});
    }
    std::vector<EdgeId> parent_edge(n, -1);
    std::vector<VertexId> parent(n, -1), order;
    std::vector<bool> seen(n, false);
    std::vector<VertexId> stack{s.vertices[0]};
    seen[s.vertices[0]] = true;
    while (!stack.empty()) {
        const VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (const auto& [to, e] : adj[v]) {
            if (seen[to]) continue;
            seen[to] = true;
            parent[to] = v;
            parent_edge[to] = e;
            stack.push_back(to);
        }
    }

    std::vector<bool> keep(n, false);
    for (VertexId t : s.vertices) {
        assert(seen[t]);
        for (VertexId v = t; v != -1 && !keep[v]; v = parent[v]) keep[v] = true;
    }

    SteinerResult result;
    for (VertexId v : order) {
        if (!keep[v] || parent_edge[v] == -1) continue;
        const EdgeRef& e = g.edge(parent_edge[v]);
        result.edges.emplace_back(e.u, e.v);
        result.weight += e.weight;
    }
    std::sort(result.edges.begin(), result.edges.end());
    return result;
}

SteinerTable::SteinerTable(const Graph& g) : graph_(g) {
    const VertexId n = g.vertex_count();
    if (n > kMaxTerminals) throw TooLargeError("steiner table supports at most 16 vertices");
    if (!is_connected(g)) throw DisconnectedError();
    const std::uint32_t full = (n >= 1) ? ((1u << n) - 1) : 0;
    dp_.assign(full + 1, std::vector<double>(n, kInf));
    for (VertexId v = 0; v < n; ++v) dp_[1u << v][v] = 0.0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) dp_round(g, mask, dp_, nullptr);
}

double SteinerTable::steiner_distance(std::uint32_t vertex_mask) const {
    assert(vertex_mask != 0 && vertex_mask < dp_.size());
    const int anchor = std::countr_zero(vertex_mask);
    return dp_[vertex_mask][anchor];
}

EccReport SteinerTable::ecc_k(VertexId v, int k) const {
    const VertexId n = graph_.vertex_count();
    if (k < 1 || k > n) throw InvalidKError(k, n);

    EccReport report;
    report.vertex = v;
    report.k = k;
    if (k == 1) {
        report.terminals = {v};
        return report;
    }

    std::vector<VertexId> pool;
    for (VertexId u = 0; u < n; ++u)
        if (u != v) pool.push_back(u);

    double best = -kInf;
    std::vector<VertexId> best_set;
    for_each_combination(pool, k - 1, [&](const std::vector<int>& idx) {
        std::uint32_t mask = 1u << v;
        for (int i : idx) mask |= 1u << pool[i];
        const double value = dp_[mask][v];
        if (value > best) {
            best = value;
            best_set.clear();
            best_set.push_back(v);
            for (int i : idx) best_set.push_back(pool[i]);
        }
    });

    std::sort(best_set.begin(), best_set.end());
    report.value = best;
    report.terminals = best_set;
    report.tree_edges = steiner_tree_exact(graph_, TerminalSet(best_set, v)).edges;
    return report;
}

EccReport ecc_k_oracle(const Graph& g, VertexId v, int k) {
    const VertexId n = g.vertex_count();
    if (!is_connected(g)) throw DisconnectedError();
    if (k < 1 || k > n) throw InvalidKError(k, n);
    if (n <= kMaxTerminals) return SteinerTable(g).ecc_k(v, k);

    if (k > kMaxTerminals) throw TooLargeError("oracle supports at most 16 terminals");
    EccReport report;
    report.vertex = v;
    report.k = k;
    if (k == 1) {
        report.terminals = {v};
        return report;
    }
    std::vector<VertexId> pool;
    for (VertexId u = 0; u < n; ++u)
        if (u != v) pool.push_back(u);
    double best = -kInf;
    std::vector<VertexId> best_set;
    for_each_combination(pool, k - 1, [&](const std::vector<int>& idx) {
        std::vector<VertexId> terms{v};
        for (int i : idx) terms.push_back(pool[i]);
        const double value = steiner_tree_exact(g, TerminalSet(terms, v)).weight;
        if (value > best) {
            best = value;
            best_set = terms;
        }
    });
    std::sort(best_set.begin(), best_set.end());
    report.value = best;
    report.terminals = best_set;
    report.tree_edges = steiner_tree_exact(g, TerminalSet(best_set, v)).edges;
    return report;
}

double ecc_k_all_spanning_trees(const Graph& g, VertexId v, int k) {
    const VertexId n = g.vertex_count();
    if (n > 10) throw TooLargeError("spanning tree enumeration capped at 10 vertices");
    if (!is_connected(g)) throw DisconnectedError();
    if (k < 1 || k > n) throw InvalidKError(k, n);

    const int m = g.edge_count();
    const int r = n - 1;

    std::vector<VertexId> pool;
    for (VertexId u = 0; u < n; ++u)
        if (u != v) pool.push_back(u);
    std::vector<std::vector<VertexId>> sets;
    for_each_combination(pool, k - 1, [&](const std::vector<int>& idx) {
        std::vector<VertexId> terms;
        for (int i : idx) terms.push_back(pool[i]);
        sets.push_back(std::move(terms));
    });
    std::vector<double> set_minimum(sets.size(), kInf);

    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    std::vector<VertexId> uf(n);
    while (true) {
        // union-find acyclicity check for this edge subset
        for (VertexId i = 0; i < n; ++i) uf[i] = i;
        auto find = [&](VertexId x) {
            while (uf[x] != x) x = uf[x] = uf[uf[x]];
            return x;
        };
        bool acyclic = true;
        std::vector<EdgeRef> chosen;
        chosen.reserve(r);
        for (int i = 0; i < r && acyclic; ++i) {
            const EdgeRef& e = g.edge(idx[i]);
            const VertexId a = find(e.u), b = find(e.v);
            if (a == b) {
                acyclic = false;
            } else {
                uf[a] = b;
                chosen.push_back(e);
            }
        }
        if (acyclic) {
            // root the spanning tree at v, then charge every parent edge on a
            // path between v and a terminal once
            const Graph spanning(n, chosen);
            std::vector<VertexId> parent(n, -1), stack{v};
            std::vector<double> parent_weight(n, 0.0);
            std::vector<bool> seen(n, false);
            seen[v] = true;
            while (!stack.empty()) {
                const VertexId x = stack.back();
                stack.pop_back();
                for (const HalfEdge& h : spanning.neighbors(x)) {
                    if (seen[h.to]) continue;
                    seen[h.to] = true;
                    parent[h.to] = x;
                    parent_weight[h.to] = h.weight;
                    stack.push_back(h.to);
                }
            }
            std::vector<bool> counted(n, false);
            for (std::size_t si = 0; si < sets.size(); ++si) {
                double weight = 0.0;
                std::vector<VertexId> touched;
                for (VertexId t : sets[si])
                    for (VertexId x = t; parent[x] != -1 && !counted[x]; x = parent[x]) {
                        counted[x] = true;
                        touched.push_back(x);
                        weight += parent_weight[x];
                    }
                for (VertexId x : touched) counted[x] = false;
                set_minimum[si] = std::min(set_minimum[si], weight);
            }
        }
        int i = r - 1;
        while (i >= 0 && idx[i] == m - r + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    return *std::max_element(set_minimum.begin(), set_minimum.end());
}

}  // namespace steiner
