#include <doctest.h>

#include "steiner/errors.hpp"
#include "steiner/generators.hpp"
#include "steiner/steiner_oracle.hpp"
#include "steiner/tree_ecc.hpp"
#include "test_util.hpp"

using namespace steiner;

namespace {

// Realizing edge sets must be trees spanning the terminals with matching weight.
void check_realizes(const Graph& g, const std::vector<VertexId>& terms,
                    const SteinerResult& r) {
    refimpl::Dsu dsu(g.vertex_count());
    double weight = 0.0;
    for (const auto& [u, v] : r.edges) {
        const auto id = g.find_edge(u, v);
        REQUIRE(id.has_value());
        weight += g.edge(*id).weight;
        CHECK(dsu.unite(u, v));  // acyclic
    }
    CHECK(weight == r.weight);
    for (VertexId t : terms) CHECK(dsu.find(t) == dsu.find(terms.front()));
}

}  // namespace

TEST_SUITE("steiner-oracle") {

TEST_CASE("terminal set validation") {
    CHECK_THROWS_AS(TerminalSet({}, 0), Error);
    CHECK_THROWS_AS(TerminalSet({1, 2}, 0), Error);   // focal not a member
    CHECK_THROWS_AS(TerminalSet({1, 1, 2}, 1), Error);
    const TerminalSet s({3, 1, 2}, 2);
    CHECK(s.vertices == std::vector<VertexId>{1, 2, 3});
}

TEST_CASE("steiner_tree_exact on named instances") {
    const Graph g = refimpl::two_triangles();

    SUBCASE("single terminal") {
        const auto r = steiner_tree_exact(g, TerminalSet({1}));
        CHECK(r.weight == 0.0);
        CHECK(r.edges.empty());
    }
    SUBCASE("a, d, e need three edges") {
        const auto r = steiner_tree_exact(g, TerminalSet({0, 3, 4}));
        CHECK(r.weight == 3.0);
        CHECK(r.weight == refimpl::brute_steiner_weight(g, {0, 3, 4}));
        check_realizes(g, {0, 3, 4}, r);
    }
    SUBCASE("path endpoints") {
        const auto r = steiner_tree_exact(refimpl::path_graph(5), TerminalSet({0, 4}));
        CHECK(r.weight == 4.0);
        CHECK(r.edges.size() == 4);
    }
    SUBCASE("disconnected input") {
        CHECK_THROWS_AS(steiner_tree_exact(Graph(3, {{0, 1}}), TerminalSet({0, 1})),
                        DisconnectedError);
    }
}

TEST_CASE("steiner_tree_exact matches edge-subset enumeration") {
    Rng rng(4242);
    for (int iter = 0; iter < 120; ++iter) {
        const int n = rng.uniform_int(2, 8);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const bool weighted = rng.uniform_int(0, 1) == 1;
        const std::vector<double> pool{0.5, 1, 2, 3};
        const Graph g = random_nu_graph(n, rng.uniform_int(0, std::min(3, max_extra)), rng,
                                        weighted ? std::span<const double>(pool)
                                                 : std::span<const double>{});
        const int k = rng.uniform_int(1, std::min(4, n));
        std::vector<VertexId> terms;
        while (static_cast<int>(terms.size()) < k) {
            const VertexId t = rng.uniform_int(0, n - 1);
            if (std::find(terms.begin(), terms.end(), t) == terms.end()) terms.push_back(t);
        }
        const auto r = steiner_tree_exact(g, TerminalSet(terms));
        CHECK(refimpl::close(r.weight, refimpl::brute_steiner_weight(g, terms)));
        check_realizes(g, terms, r);
    }
}

TEST_CASE("terminal monotonicity") {
    Rng rng(555);
    for (int iter = 0; iter < 60; ++iter) {
        const int n = rng.uniform_int(3, 8);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g = random_nu_graph(n, rng.uniform_int(0, std::min(2, max_extra)), rng);
        std::vector<VertexId> terms{rng.uniform_int(0, n - 1)};
        double prev = 0.0;
        for (int extra = 0; extra < 3; ++extra) {
            const VertexId t = rng.uniform_int(0, n - 1);
            if (std::find(terms.begin(), terms.end(), t) != terms.end()) continue;
            terms.push_back(t);
            const double w = steiner_tree_exact(g, TerminalSet(terms)).weight;
            CHECK(w >= prev);
            prev = w;
        }
    }
}

TEST_CASE("ecc_k_oracle on named instances") {
    CHECK(ecc_k_oracle(refimpl::complete_graph(4), 0, 3).value == 2.0);
    CHECK(ecc_k_oracle(refimpl::path_graph(5), 0, 2).value == 4.0);

    for (VertexId v = 0; v < 6; ++v) {
        const auto rep = ecc_k_oracle(refimpl::cycle_graph(6), v, 3);
        CHECK(rep.value == 4.0);
        CHECK(rep.value == refimpl::brute_ecc_k(refimpl::cycle_graph(6), v, 3));
    }
}

TEST_CASE("oracle ties break to the lexicographically smallest set") {
    // every 3-subset of K4 has Steiner weight 2
    const auto rep = ecc_k_oracle(refimpl::complete_graph(4), 0, 3);
    CHECK(rep.terminals == std::vector<VertexId>{0, 1, 2});

    const auto rep2 = ecc_k_oracle(refimpl::complete_graph(5), 2, 3);
    CHECK(rep2.terminals == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("ecc_k_oracle validation") {
    const Graph g = refimpl::path_graph(4);
    CHECK_THROWS_AS(ecc_k_oracle(g, 0, 0), InvalidKError);
    CHECK_THROWS_AS(ecc_k_oracle(g, 0, 5), InvalidKError);
    CHECK_THROWS_AS(ecc_k_oracle(Graph(3, {{0, 1}}), 0, 2), DisconnectedError);
}

TEST_CASE("oracle report realizes its value") {
    Rng rng(808);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = rng.uniform_int(3, 9);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g = random_nu_graph(n, rng.uniform_int(0, std::min(2, max_extra)), rng);
        const VertexId v = rng.uniform_int(0, n - 1);
        const int k = rng.uniform_int(2, std::min(4, n));
        const auto rep = ecc_k_oracle(g, v, k);
        CHECK(static_cast<int>(rep.terminals.size()) == k);
        CHECK(std::binary_search(rep.terminals.begin(), rep.terminals.end(), v));
        CHECK(refimpl::close(rep.value, refimpl::brute_steiner_weight(g, rep.terminals)));
        CHECK(refimpl::close(rep.value, refimpl::brute_ecc_k(g, v, k)));
    }
}

TEST_CASE("ecc_2 is the classical eccentricity") {
    Rng rng(1001);
    const std::vector<double> pool{0.5, 1, 2, 3};
    for (int iter = 0; iter < 60; ++iter) {
        const int n = rng.uniform_int(2, 10);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g = random_nu_graph(n, rng.uniform_int(0, std::min(3, max_extra)), rng, pool);
        const SteinerTable table(g);
        for (VertexId v = 0; v < n; ++v) {
            const auto dist = refimpl::dijkstra(g, v);
            const double ecc = *std::max_element(dist.begin(), dist.end());
            CHECK(refimpl::close(table.ecc_k(v, 2).value, ecc));
        }
    }
}

TEST_CASE("ecc_n is the minimum spanning tree weight") {
    Rng rng(1002);
    const std::vector<double> pool{0.5, 1, 2, 3};
    for (int iter = 0; iter < 60; ++iter) {
        const int n = rng.uniform_int(2, 9);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g = random_nu_graph(n, rng.uniform_int(0, std::min(3, max_extra)), rng, pool);
        CHECK(refimpl::close(ecc_k_oracle(g, 0, n).value, refimpl::mst_weight(g)));
    }
}

TEST_CASE("steiner table rejects oversized graphs") {
    Rng rng(3);
    const Graph g = random_tree(17, rng);
    CHECK_THROWS_AS(SteinerTable{g}, TooLargeError);
    // the one-shot oracle falls back to subset enumeration above 16 vertices
    const Graph big_path = refimpl::path_graph(20);
    CHECK(ecc_k_oracle(big_path, 10, 2).value == 10.0);
    CHECK(ecc_k_oracle(big_path, 0, 3).value == 19.0);
}

TEST_CASE("all-spanning-trees reference on named instances") {
    CHECK(ecc_k_all_spanning_trees(refimpl::cycle_graph(3), 0, 2) == 1.0);
    CHECK(ecc_k_all_spanning_trees(refimpl::cycle_graph(6), 0, 3) == 4.0);

    Rng rng(7);
    const Graph t = random_tree(8, rng);
    for (VertexId v = 0; v < 8; ++v)
        CHECK(ecc_k_all_spanning_trees(t, v, 3) == ecc_k_tree(t, v, 3).value);

    CHECK_THROWS_AS(ecc_k_all_spanning_trees(refimpl::path_graph(11), 0, 2), TooLargeError);
}

TEST_CASE("spanning tree minimum equals the oracle") {
    Rng rng(2024);
    for (int iter = 0; iter < 40; ++iter) {
        const int n = rng.uniform_int(3, 8);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g = random_nu_graph(n, rng.uniform_int(0, std::min(3, max_extra)), rng);
        const SteinerTable table(g);
        for (VertexId v = 0; v < n; ++v)
            for (int k = 2; k <= std::min(4, n); ++k)
                CHECK(ecc_k_all_spanning_trees(g, v, k) == table.ecc_k(v, k).value);
    }
}

}  // TEST_SUITE
