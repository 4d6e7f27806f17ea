#pragma once

#include <utility>
#include <vector>

#include "steiner/graph.hpp"

namespace steiner {

// Result of a Steiner k-eccentricity computation: the value together with one
// realizing terminal set and realizing tree.
struct EccReport {
    VertexId vertex = 0;
    int k = 0;
    double value = 0.0;
    std::vector<VertexId> terminals;                       // ascending, contains vertex
    std::vector<std::pair<VertexId, VertexId>> tree_edges; // u < v, ascending
};

}  // namespace steiner
