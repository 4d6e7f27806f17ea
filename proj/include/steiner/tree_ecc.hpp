#pragma once

#include "steiner/graph.hpp"
#include "steiner/report.hpp"

namespace steiner {

// Steiner k-eccentricity of v in a weighted tree by greedy path extension:
// grow a subtree from v, k-1 times adding the vertex farthest from the
// current subtree together with its connecting path. O(k n).
// Ties go to the smallest vertex id. Throws NotATreeError, InvalidKError.
EccReport ecc_k_tree(const Graph& tree, VertexId v, int k);

}  // namespace steiner
