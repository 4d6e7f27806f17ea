#include "steiner/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <utility>

#include "steiner/errors.hpp"

namespace steiner {

Graph::Graph(VertexId n, std::vector<EdgeRef> edge_list) {
    if (n < 0) throw Error("negative vertex count");
    edges_.reserve(edge_list.size());
    for (EdgeRef e : edge_list) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
            throw Error("edge endpoint out of range");
        if (e.u == e.v) throw Error("self-loop");
        if (e.weight < 0.0) throw Error("negative edge weight");
        if (e.u > e.v) std::swap(e.u, e.v);
        edges_.push_back(e);
    }

    offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const EdgeRef& e : edges_) {
        ++offsets_[e.u + 1];
        ++offsets_[e.v + 1];
    }
    for (VertexId v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];

    half_edges_.resize(2 * edges_.size());
    std::vector<std::int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (EdgeId id = 0; id < edge_count(); ++id) {
        const EdgeRef& e = edges_[id];
        half_edges_[cursor[e.u]++] = {e.v, e.weight, id};
        half_edges_[cursor[e.v]++] = {e.u, e.weight, id};
    }
    for (VertexId v = 0; v < n; ++v) {
        const auto begin = half_edges_.begin() + offsets_[v];
        const auto end = half_edges_.begin() + offsets_[v + 1];
        std::sort(begin, end,
                  [](const HalfEdge& a, const HalfEdge& b) { return a.to < b.to; });
        for (auto it = begin; it != end; ++it)
            if (it != begin && it->to == std::prev(it)->to) throw Error("parallel edge");
    }
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count()) return std::nullopt;
    const auto list = neighbors(u);
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const HalfEdge& h, VertexId x) { return h.to < x; });
    if (it != list.end() && it->to == v) return it->id;
    return std::nullopt;
}

bool Graph::unit_weights() const {
    for (const EdgeRef& e : edges_)
        if (e.weight != 1.0) return false;
    return true;
}

double Graph::total_weight() const {
    double sum = 0.0;
    for (const EdgeRef& e : edges_) sum += e.weight;
    return sum;
}

bool Graph::operator==(const Graph& other) const {
    if (vertex_count() != other.vertex_count()) return false;
    auto canonical = [](const Graph& g) {
        std::vector<std::array<double, 3>> out;
        out.reserve(g.edges().size());
        for (const EdgeRef& e : g.edges())
            out.push_back({static_cast<double>(e.u), static_cast<double>(e.v), e.weight});
        std::sort(out.begin(), out.end());
        return out;
    };
    return canonical(*this) == canonical(other);
}

std::vector<std::int32_t> bfs_distances(const Graph& g, VertexId source) {
    std::vector<std::int32_t> dist(g.vertex_count(), kInfiniteHops);
    std::queue<VertexId> queue;
    dist[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop();
        for (const HalfEdge& h : g.neighbors(v)) {
            if (dist[h.to] == kInfiniteHops) {
                dist[h.to] = dist[v] + 1;
                queue.push(h.to);
            }
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return true;
    const auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](std::int32_t d) { return d == kInfiniteHops; });
}

namespace {

// Shared frame for the iterative depth-first traversals below.
struct DfsFrame {
    VertexId vertex;
    EdgeId parent_edge;
    std::size_t next_neighbor;
};

}  // namespace

BlockDecomposition biconnected_components(const Graph& g) {
    const VertexId n = g.vertex_count();
    BlockDecomposition out;
    out.block_of_edge.assign(g.edge_count(), -1);

    std::vector<std::int32_t> disc(n, -1), low(n, 0);
    std::vector<bool> is_cut(n, false);
    std::vector<EdgeId> edge_stack;
    std::vector<DfsFrame> stack;
    std::int32_t timer = 0;

    auto pop_block = [&](EdgeId until_edge) {
        std::vector<EdgeId> block;
        while (true) {
            const EdgeId e = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(e);
            if (e == until_edge) break;
        }
        const auto index = static_cast<std::int32_t>(out.blocks.size());
        for (EdgeId e : block) out.block_of_edge[e] = index;
        std::sort(block.begin(), block.end());
        out.blocks.push_back(std::move(block));
    };

    for (VertexId root = 0; root < n; ++root) {
        if (disc[root] != -1) continue;
        std::int32_t root_children = 0;
        disc[root] = low[root] = timer++;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            DfsFrame& frame = stack.back();
            const VertexId v = frame.vertex;
            const auto nbrs = g.neighbors(v);
            if (frame.next_neighbor < nbrs.size()) {
                const HalfEdge h = nbrs[frame.next_neighbor++];
                if (h.id == frame.parent_edge) continue;
                if (disc[h.to] == -1) {
                    edge_stack.push_back(h.id);
                    disc[h.to] = low[h.to] = timer++;
                    stack.push_back({h.to, h.id, 0});
                } else if (disc[h.to] < disc[v]) {
                    // back edge to an ancestor; seen exactly once from below
                    edge_stack.push_back(h.id);
                    low[v] = std::min(low[v], disc[h.to]);
                }
            } else {
                const EdgeId entry_edge = frame.parent_edge;
                stack.pop_back();
                if (stack.empty()) break;
                const VertexId parent = stack.back().vertex;
                low[parent] = std::min(low[parent], low[v]);
                if (parent == root) ++root_children;
                if (low[v] >= disc[parent]) {
                    if (parent != root) is_cut[parent] = true;
                    pop_block(entry_edge);
                }
            }
        }
        if (root_children >= 2) is_cut[root] = true;
    }

    for (VertexId v = 0; v < n; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

std::vector<std::vector<VertexId>> block_vertex_sets(const Graph& g,
                                                     const BlockDecomposition& d) {
    std::vector<std::vector<VertexId>> out(d.blocks.size());
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        auto& verts = out[b];
        for (EdgeId e : d.blocks[b]) {
            verts.push_back(g.edge(e).u);
            verts.push_back(g.edge(e).v);
        }
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    }
    return out;
}

std::optional<std::vector<EdgeId>> find_cycle(const Graph& g) {
    const VertexId n = g.vertex_count();
    std::vector<bool> visited(n, false), on_stack(n, false);
    std::vector<DfsFrame> stack;

    for (VertexId root = 0; root < n; ++root) {
        if (visited[root]) continue;
        visited[root] = on_stack[root] = true;
        stack.push_back({root, -1, 0});
        while (!stack.empty()) {
            DfsFrame& frame = stack.back();
            const VertexId v = frame.vertex;
            const auto nbrs = g.neighbors(v);
            if (frame.next_neighbor < nbrs.size()) {
                const HalfEdge h = nbrs[frame.next_neighbor++];
                if (h.id == frame.parent_edge) continue;
                if (!visited[h.to]) {
                    visited[h.to] = on_stack[h.to] = true;
                    stack.push_back({h.to, h.id, 0});
                } else if (on_stack[h.to]) {
                    // walk the stack from v back to h.to, then close the cycle
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

Classification classify(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedError();
    const std::int64_t n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    const auto nu = static_cast<std::int32_t>(m - n + 1);
    if (m == n - 1) return {GraphClass::tree, 0};

    const BlockDecomposition d = biconnected_components(g);
    const auto verts = block_vertex_sets(g, d);
    for (std::size_t b = 0; b < d.blocks.size(); ++b) {
        const auto s = static_cast<std::int64_t>(verts[b].size());
        if (static_cast<std::int64_t>(d.blocks[b].size()) != s * (s - 1) / 2)
            return {GraphClass::general, nu};
    }
    return {GraphClass::block_graph, nu};
}

}  // namespace steiner
