#pragma once

#include <cstdint>
#include <vector>

#include "steiner/graph.hpp"
#include "steiner/report.hpp"

namespace steiner {

struct GeneralOptions {
    // Abort upfront when the cyclomatic number exceeds this; the recursion
    // branches once per cycle edge, so work grows exponentially in nu.
    int nu_cap = 12;
};

struct RecursionStats {
    std::uint64_t leaves = 0;  // spanning trees evaluated
    std::uint64_t nodes = 0;   // recursion nodes visited
};

// One spanning tree reached by the recursion: the edges deleted to get there
// (in deletion order) and that tree's own k-eccentricity of the focal vertex.
// Leaf values upper-bound the answer; they need not attain it.
struct TraceRecord {
    std::vector<EdgeId> deleted_edges;
    double value = 0.0;
};

// Steiner k-eccentricity on an arbitrary connected graph. The recursion picks
// a simple cycle, branches on deleting each of its edges (applied to an edge
// mask and rolled back on return), and bottoms out at spanning trees. A
// minimum Steiner tree omits at least one edge of every cycle, so each
// terminal set's Steiner weight in the graph is the minimum of its weights
// over the spanning trees reached; the recursion therefore maintains one
// running minimum per k-set containing v and maximizes over sets at the end.
// Note the aggregation is per set: the plain minimum over spanning trees of
// the whole-tree eccentricity overshoots (on C6 with k = 3 every spanning
// tree is a path with value 5 while the graph value is 4).
// Tree inputs short-circuit to the greedy tree algorithm.
// Throws DisconnectedError, InvalidKError, CyclomaticCapExceededError.
EccReport ecc_k_general(const Graph& g, VertexId v, int k, const GeneralOptions& opt = {},
                        RecursionStats* stats = nullptr);

// Every recursion leaf in order, for diagnostics. n <= 20 enforced.
std::vector<TraceRecord> recursion_trace(const Graph& g, VertexId v, int k,
                                         const GeneralOptions& opt = {});

}  // namespace steiner
