#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

namespace steiner {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Hop distance reported for vertices unreachable from the BFS source.
inline constexpr std::int32_t kInfiniteHops = std::numeric_limits<std::int32_t>::max();

struct HalfEdge {
    VertexId to;
    double weight;
    EdgeId id;
};

// Undirected edge; endpoints stored with u < v.
struct EdgeRef {
    VertexId u;
    VertexId v;
    double weight = 1.0;
};

// Simple undirected graph with nonnegative real edge weights. Immutable once
// constructed: algorithms never mutate a Graph, they work on edge masks or
// derived copies. Half-edges live in one flat array (CSR layout) sorted by
// neighbor id per vertex, so traversals that scan neighbors in list order are
// deterministic and cache-friendly.
class Graph {
public:
    Graph() : offsets_{0} {}
    explicit Graph(VertexId n, std::vector<EdgeRef> edge_list = {});

    VertexId vertex_count() const { return static_cast<VertexId>(offsets_.size()) - 1; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }

    std::span<const HalfEdge> neighbors(VertexId v) const {
        return {half_edges_.data() + offsets_[v],
                half_edges_.data() + offsets_[v + 1]};
    }
    const EdgeRef& edge(EdgeId id) const { return edges_[id]; }
    const std::vector<EdgeRef>& edges() const { return edges_; }

    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
    bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v).has_value(); }

    bool unit_weights() const;
    double total_weight() const;

    // Structural equality: same vertex count and the same canonical edge set.
    bool operator==(const Graph& other) const;

private:
    std::vector<std::int64_t> offsets_;  // size n + 1
    std::vector<HalfEdge> half_edges_;   // size 2m, grouped by vertex
    std::vector<EdgeRef> edges_;
};

// Biconnected decomposition. Each edge belongs to exactly one block; two
// blocks share at most one vertex, and a shared vertex is a cut vertex.
struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<VertexId> cut_vertices;     // ascending
    std::vector<std::int32_t> block_of_edge;
};

enum class GraphClass { tree, block_graph, general };

struct Classification {
    GraphClass graph_class;
    std::int32_t cyclomatic_number;
};

// Hop distances from source; unreachable vertices get kInfiniteHops.
std::vector<std::int32_t> bfs_distances(const Graph& g, VertexId source);

bool is_connected(const Graph& g);

BlockDecomposition biconnected_components(const Graph& g);

// Distinct vertices of each block, ascending per block.
std::vector<std::vector<VertexId>> block_vertex_sets(const Graph& g,
                                                     const BlockDecomposition& d);

// Some simple cycle as an edge-id list in cycle order, or nullopt if the graph
// is acyclic. Deterministic: depth-first from vertex 0 upward, neighbors in
// ascending id order, first back edge wins.
std::optional<std::vector<EdgeId>> find_cycle(const Graph& g);

// Tree / block graph / general, plus the cyclomatic number m - n + 1.
// Throws DisconnectedError.
Classification classify(const Graph& g);

}  // namespace steiner
