#pragma once

#include "steiner/graph.hpp"
#include "steiner/report.hpp"

namespace steiner {

// For each block index, the unique vertex of that block nearest to the focal
// vertex (the focal vertex itself or a cut vertex).
using NearMap = std::vector<VertexId>;

// Throws NotBlockGraphError.
NearMap near_vertices(const Graph& g, VertexId v, const BlockDecomposition& d);

// The spanning tree obtained by deleting, inside every block, each edge not
// incident to that block's nearest vertex. Unique for (g, v).
// Throws NotBlockGraphError, DisconnectedError, WeightedUnsupportedError.
Graph build_tvg(const Graph& g, VertexId v);

// Same construction as a single depth-first sweep that prunes clique edges on
// the fly. Produces the identical edge set as build_tvg.
Graph build_tvg_dfs(const Graph& g, VertexId v);

// Steiner k-eccentricity on a connected block graph: reduce to the spanning
// tree above, then run the greedy tree algorithm. O(k (n + m)).
EccReport ecc_k_block(const Graph& g, VertexId v, int k);

}  // namespace steiner
