#include "steiner/tree_ecc.hpp"

#include <algorithm>
#include <limits>

#include "steiner/errors.hpp"

namespace steiner {

namespace {

// The subtree grown so far: always induces a connected subtree containing the
// focal vertex, with total_weight the sum of its edge weights.
struct GrowingTree {
    std::vector<bool> in_tree;
    std::vector<bool> is_terminal;
    double total_weight = 0.0;
    std::vector<VertexId> terminals;
    std::vector<std::pair<VertexId, VertexId>> edges;
};

}  // namespace

EccReport ecc_k_tree(const Graph& tree, VertexId v, int k) {
    const VertexId n = tree.vertex_count();
    if (tree.edge_count() != n - 1 || !is_connected(tree)) throw NotATreeError();
    if (k < 1 || k > n) throw InvalidKError(k, n);

    GrowingTree gt;
    gt.in_tree.assign(n, false);
    gt.is_terminal.assign(n, false);
    gt.in_tree[v] = true;
    gt.is_terminal[v] = true;
    gt.terminals.push_back(v);

    constexpr double kUnseen = -1.0;
    std::vector<double> dist(n);
    std::vector<VertexId> parent(n), dfs_stack;

    for (int round = 1; round < k; ++round) {
        // distance of every vertex from the current subtree, one traversal
        // seeded with all in-tree vertices
        std::fill(dist.begin(), dist.end(), kUnseen);
        dfs_stack.clear();
        for (VertexId u = 0; u < n; ++u) {
            if (gt.in_tree[u]) {
                dist[u] = 0.0;
                parent[u] = -1;
                dfs_stack.push_back(u);
            }
        }
        while (!dfs_stack.empty()) {
            const VertexId u = dfs_stack.back();
            dfs_stack.pop_back();
            for (const HalfEdge& h : tree.neighbors(u)) {
                if (dist[h.to] != kUnseen) continue;
                dist[h.to] = dist[u] + h.weight;
                parent[h.to] = u;
                dfs_stack.push_back(h.to);
            }
        }

        VertexId best = -1;
        double best_dist = -std::numeric_limits<double>::infinity();
        for (VertexId u = 0; u < n; ++u) {
            if (gt.is_terminal[u]) continue;
            if (dist[u] > best_dist) {
                best_dist = dist[u];
                best = u;
            }
        }

        gt.is_terminal[best] = true;
        gt.terminals.push_back(best);
        for (VertexId u = best; !gt.in_tree[u]; u = parent[u]) {
            gt.in_tree[u] = true;
            const VertexId p = parent[u];
            gt.edges.emplace_back(std::min(u, p), std::max(u, p));
        }
        gt.total_weight += best_dist;
    }

    EccReport report;
    report.vertex = v;
    report.k = k;
    report.value = gt.total_weight;
    report.terminals = std::move(gt.terminals);
    std::sort(report.terminals.begin(), report.terminals.end());
    report.tree_edges = std::move(gt.edges);
    std::sort(report.tree_edges.begin(), report.tree_edges.end());
    return report;
}

}  // namespace steiner
