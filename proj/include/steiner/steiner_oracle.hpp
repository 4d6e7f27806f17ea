#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "steiner/graph.hpp"
#include "steiner/report.hpp"

namespace steiner {

// A set of terminals with a distinguished focal vertex contained in it.
struct TerminalSet {
    std::vector<VertexId> vertices;  // ascending, distinct
    VertexId focal;

    TerminalSet(std::vector<VertexId> verts, VertexId focal_vertex);
    explicit TerminalSet(std::vector<VertexId> verts);

    std::size_t size() const { return vertices.size(); }
};

// Weight of a minimum Steiner tree plus one realizing edge set.
struct SteinerResult {
    double weight = 0.0;
    std::vector<std::pair<VertexId, VertexId>> edges;  // u < v, ascending
};

// Exact minimum Steiner tree by dynamic programming over terminal subsets.
// Exponential in |s| only (capped at 16 terminals); reconstruction prefers
// lower vertex indices on ties. Throws DisconnectedError, TooLargeError.
SteinerResult steiner_tree_exact(const Graph& g, const TerminalSet& s);

// Full dynamic-programming table over all vertices as potential terminals,
// for answering many Steiner-distance queries on one small graph. Hard-capped
// at 16 vertices.
class SteinerTable {
public:
    explicit SteinerTable(const Graph& g);

    // Minimum Steiner tree weight spanning the vertices of the mask.
    double steiner_distance(std::uint32_t vertex_mask) const;

    // Brute-force Steiner k-eccentricity of v: maximum steiner_distance over
    // all k-subsets containing v. The realizing set is the lexicographically
    // smallest maximizer; the realizing tree comes from steiner_tree_exact.
    EccReport ecc_k(VertexId v, int k) const;

private:
    const Graph& graph_;
    std::vector<std::vector<double>> dp_;  // dp_[mask][v]
};

// One-shot brute-force Steiner k-eccentricity. Uses a SteinerTable when the
// graph fits, otherwise enumerates (k-1)-subsets against steiner_tree_exact.
EccReport ecc_k_oracle(const Graph& g, VertexId v, int k);

// Reference route through exhaustive spanning-tree enumeration: for every
// k-set containing v, the Steiner weight in g is the minimum of its weights
// over all spanning trees, so the eccentricity is the maximum over sets of
// those per-set minima. Test-only; n <= 10 enforced.
double ecc_k_all_spanning_trees(const Graph& g, VertexId v, int k);

}  // namespace steiner
