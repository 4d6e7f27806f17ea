#include "steiner/generators.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "steiner/errors.hpp"

namespace steiner {

Graph random_tree(int n, Rng& rng, std::span<const double> weights) {
    if (n < 1) throw Error("tree needs at least one vertex");
    std::vector<EdgeRef> edges;
    edges.reserve(n - 1);
    for (VertexId v = 1; v < n; ++v)
        edges.push_back({rng.uniform_int(0, v - 1), v, rng.pick_weight(weights)});
    return Graph(n, std::move(edges));
}

Graph random_block_graph(int n, Rng& rng) {
    if (n < 1) throw Error("block graph needs at least one vertex");
    std::vector<EdgeRef> edges;
    VertexId built = 1;
    while (built < n) {
        int size = rng.uniform_int(2, 5);
        size = std::min(size, n - built + 1);
        const VertexId anchor = rng.uniform_int(0, built - 1);
        std::vector<VertexId> clique{anchor};
        for (int i = 0; i < size - 1; ++i) clique.push_back(built++);
        for (std::size_t i = 0; i < clique.size(); ++i)
            for (std::size_t j = i + 1; j < clique.size(); ++j)
                edges.push_back({clique[i], clique[j], 1.0});
    }
    return Graph(n, std::move(edges));
}

Graph random_nu_graph(int n, int nu, Rng& rng, std::span<const double> weights) {
    if (n < 1) throw Error("graph needs at least one vertex");
    const std::int64_t slots =
        static_cast<std::int64_t>(n) * (n - 1) / 2 - (n - 1);
    if (nu < 0 || nu > slots)
        throw Error("cannot add " + std::to_string(nu) + " extra edges to " +
                     std::to_string(n) + " vertices");

    std::set<std::pair<VertexId, VertexId>> present;
    std::vector<EdgeRef> edges;
    edges.reserve(n - 1 + nu);
    for (VertexId v = 1; v < n; ++v) {
        const VertexId p = rng.uniform_int(0, v - 1);
        edges.push_back({p, v, rng.pick_weight(weights)});
        present.insert({p, v});
    }
    int added = 0;
    while (added < nu) {
        const VertexId u = rng.uniform_int(0, n - 1);
        const VertexId v = rng.uniform_int(0, n - 1);
        if (u == v) continue;
        const auto key = std::minmax(u, v);
        if (!present.insert({key.first, key.second}).second) continue;
        edges.push_back({key.first, key.second, rng.pick_weight(weights)});
        ++added;
    }
    return Graph(n, std::move(edges));
}

}  // namespace steiner
