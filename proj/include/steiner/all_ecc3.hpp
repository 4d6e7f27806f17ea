#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Per-vertex parallel triples: the three heaviest paths leaving a vertex
// (through distinct first-hop neighbors) plus, for each, the heaviest branch
// hanging off that path strictly below the vertex.
struct TopThreeState {
    std::vector<std::array<double, 3>> path_weight;     // non-increasing
    std::vector<std::array<VertexId, 3>> path_index;    // first hop, -1 when empty
    std::vector<std::array<double, 3>> attached_weight; // aligned with path_weight
    std::vector<VertexId> parent;
    std::vector<std::uint8_t> mark;

    explicit TopThreeState(VertexId n);

    // Sorted insertion of (new_weight, u, new_attached) into v's triples;
    // whatever falls below third place is dropped. u must not already be
    // recorded for v.
    void update(VertexId v, VertexId u, double new_weight, double new_attached);
};

// Post-order pass: after this, v's triples describe the top three downward
// paths in the subtree rooted at v, and parent links are set.
void dfs_stage1(const Graph& tree, VertexId root, TopThreeState& state);

// Pre-order pass folding in the path that leaves each vertex through its
// parent, making the triples direction-complete.
void dfs_stage2(const Graph& tree, VertexId root, TopThreeState& state);

// Steiner 3-eccentricity of every vertex of a weighted tree in O(n) time and
// memory. Requires n >= 3. Throws NotATreeError, TooSmallError.
std::vector<double> all_ecc3(const Graph& tree);
std::vector<double> all_ecc3(const Graph& tree, VertexId root);

}  // namespace steiner
