#pragma once

#include <cstdint>
#include <random>
#include <span>

#include "steiner/graph.hpp"

namespace steiner {

// Deterministic random source. Draws are reduced with plain modulo so that a
// given seed produces the same instances on every platform and standard
// library (std::uniform_int_distribution makes no such promise).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    int uniform_int(int lo, int hi) {  // inclusive; degenerate range yields lo
        if (hi <= lo) return lo;
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double pick_weight(std::span<const double> weights) {
        if (weights.empty()) return 1.0;
        return weights[next() % weights.size()];
    }

private:
    std::mt19937_64 engine_;
};

// Uniform-attachment random tree on n vertices; unit weights unless a weight
// pool is given.
Graph random_tree(int n, Rng& rng, std::span<const double> weights = {});

// Random block graph: a tree of cliques with sizes uniform in 2..5, each new
// clique glued to the existing graph at a random cut vertex. Unit weights.
Graph random_block_graph(int n, Rng& rng);

// Random spanning tree plus exactly nu extra distinct non-parallel edges.
Graph random_nu_graph(int n, int nu, Rng& rng, std::span<const double> weights = {});

}  // namespace steiner
