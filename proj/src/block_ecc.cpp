#include "steiner/block_ecc.hpp"

#include <algorithm>
#include <cassert>

#include "steiner/errors.hpp"
#include "steiner/tree_ecc.hpp"

namespace steiner {

namespace {

void require_block_graph(const Graph& g, const BlockDecomposition& d) {
    const auto verts = block_vertex_sets(g, d);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto s = static_cast<std::int64_t>(verts[b].size());
        if (static_cast<std::int64_t>(d.blocks[b].size()) != s * (s - 1) / 2)
            throw NotBlockGraphError();
    }
}

}  // namespace

NearMap near_vertices(const Graph& g, VertexId v, const BlockDecomposition& d) {
    require_block_graph(g, d);
    const auto dist = bfs_distances(g, v);
    const auto verts = block_vertex_sets(g, d);
    NearMap near(d.blocks.size(), -1);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        VertexId best = -1;
        std::int32_t best_dist = kInfiniteHops;
        for (VertexId u : verts[b]) {
            if (dist[u] < best_dist) {
                best_dist = dist[u];
                best = u;
            }
        }
        if (best == -1) throw DisconnectedError();
        near[b] = best;
        // nearest vertex is unique on a block graph
        assert(std::count_if(verts[b].begin(), verts[b].end(),
                             [&](VertexId u) { return dist[u] == best_dist; }) == 1);
    }
    return near;
}

Graph build_tvg(const Graph& g, VertexId v) {
    if (!is_connected(g)) throw DisconnectedError();
    if (!g.unit_weights()) throw WeightedUnsupportedError();
    const BlockDecomposition d = biconnected_components(g);
    const NearMap near = near_vertices(g, v, d);

    std::vector<EdgeRef> kept;
    kept.reserve(g.vertex_count() > 0 ? g.vertex_count() - 1 : 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeRef& edge = g.edge(e);
        const VertexId z = near[d.block_of_edge[e]];
        if (edge.u == z || edge.v == z) kept.push_back(edge);
    }
    Graph tree(g.vertex_count(), std::move(kept));
    assert(tree.edge_count() == g.vertex_count() - 1);
    return tree;
}

Graph build_tvg_dfs(const Graph& g, VertexId v) {
    if (!is_connected(g)) throw DisconnectedError();
    if (!g.unit_weights()) throw WeightedUnsupportedError();
    {
        const BlockDecomposition d = biconnected_components(g);
        require_block_graph(g, d);
    }

    const VertexId n = g.vertex_count();
    std::vector<bool> visited(n, false), alive(g.edge_count(), true);

    // Depth-first from v. On discovering u, delete every still-alive edge u-w
    // that closes a triangle with the current vertex: inside the block entered
    // at the current vertex this strips everything not incident to it.
    struct Frame {
        VertexId vertex;
        std::size_t next_neighbor;
    };
    std::vector<Frame> stack{{v, 0}};
    visited[v] = true;
    while (!stack.empty()) {
        Frame& frame = stack.back();
        const VertexId x = frame.vertex;
        const auto nbrs = g.neighbors(x);
        if (frame.next_neighbor >= nbrs.size()) {
            stack.pop_back();
            continue;
        }
        const HalfEdge h = nbrs[frame.next_neighbor++];
        if (visited[h.to] || !alive[h.id]) continue;
        const VertexId u = h.to;
        for (const HalfEdge& uw : g.neighbors(u)) {
            if (!alive[uw.id] || uw.to == x) continue;
            const auto wx = g.find_edge(uw.to, x);
            if (wx && alive[*wx]) alive[uw.id] = false;
        }
        visited[u] = true;
        stack.push_back({u, 0});
    }

    std::vector<EdgeRef> kept;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (alive[e]) kept.push_back(g.edge(e));
    return Graph(n, std::move(kept));
}

EccReport ecc_k_block(const Graph& g, VertexId v, int k) {
    const VertexId n = g.vertex_count();
    if (k < 1 || k > n) throw InvalidKError(k, n);
    const Graph tree = build_tvg(g, v);
    return ecc_k_tree(tree, v, k);
}

}  // namespace steiner
