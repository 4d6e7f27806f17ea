#include <doctest.h>

#include <sstream>

#include "steiner/errors.hpp"
#include "steiner/generators.hpp"
#include "steiner/graph.hpp"
#include "steiner/graph_io.hpp"
#include "test_util.hpp"

using namespace steiner;

namespace {

ParsedGraph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

}  // namespace

TEST_SUITE("graph-core") {

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);      // self-loop
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);      // out of range
    CHECK_THROWS_AS(Graph(2, {{0, 1, -1.0}}), Error);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), Error);  // parallel

    const Graph g(3, {{2, 0, 0.5}, {1, 2}});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 2);
    CHECK(g.edge(0).u == 0);  // endpoints normalized
    CHECK(g.edge(0).v == 2);
    CHECK(g.has_edge(2, 1));
    CHECK(!g.has_edge(0, 1));
    CHECK(g.find_edge(0, 2) == 0);
    CHECK(!g.unit_weights());
    CHECK(g.total_weight() == 1.5);
}

TEST_CASE("parse minimal files") {
    const auto path = parse("3 2\n0 1\n1 2\n");
    CHECK(path.graph == refimpl::path_graph(3));
    CHECK(path.graph.unit_weights());

    const auto weighted = parse("2 1\n0 1 2.5\n");
    CHECK(weighted.graph.edge(0).weight == 2.5);

    const auto commented = parse("# header comment\n3 2\n\n0 1\n# mid\n1 2\n");
    CHECK(commented.graph == path.graph);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS_AS(parse("2 1\n0 0\n"), ParseError);          // self-loop
    CHECK_THROWS_AS(parse("3 2\n0 1\n1 0\n"), ParseError);     // duplicate
    CHECK_THROWS_AS(parse("2 2\n0 1\n1 0\n"), ParseError);     // m beyond simple-graph bound
    CHECK_THROWS_AS(parse("2 1\n0 1 -2\n"), ParseError);       // negative weight
    CHECK_THROWS_AS(parse("2 1\n0 1 x\n"), ParseError);        // bad weight
    CHECK_THROWS_AS(parse("2 1\n-1 1\n"), ParseError);         // negative label
    CHECK_THROWS_AS(parse("2 1\n0\n"), ParseError);            // short line
    CHECK_THROWS_AS(parse("2 1\n"), ParseError);               // missing edges
    CHECK_THROWS_AS(parse("2 1\n0 1\n2 3\n"), ParseError);     // extra line
    CHECK_THROWS_AS(parse(""), ParseError);                    // no header
    CHECK_THROWS_AS(parse("0 0\n"), ParseError);               // empty graph
    CHECK_THROWS_AS(parse("2 2\n0 1\n0 5\n"), ParseError);     // 3 labels, n = 2

    try {
        parse("3 2\n0 1\n1 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("parser maps arbitrary labels onto dense ids") {
    // 1-based labels
    const auto one_based = parse("3 2\n1 2\n2 3\n");
    CHECK(one_based.graph == refimpl::path_graph(3));
    CHECK(one_based.labels == std::vector<std::int64_t>{1, 2, 3});
    CHECK(one_based.id_of_label(3) == 2);
    CHECK(!one_based.id_of_label(0).has_value());

    // sparse labels
    const auto sparse = parse("3 2\n10 70\n70 20\n");
    CHECK(sparse.labels == std::vector<std::int64_t>{10, 20, 70});
    CHECK(sparse.graph.has_edge(0, 2));
    CHECK(sparse.graph.has_edge(1, 2));

    // labels beyond n without naming all n vertices
    CHECK_THROWS_AS(parse("3 1\n0 7\n"), ParseError);

    // labels within [0, n) leave unnamed vertices isolated
    const auto isolated = parse("3 1\n0 1\n");
    CHECK(isolated.graph.vertex_count() == 3);
    CHECK(bfs_distances(isolated.graph, 0)[2] == kInfiniteHops);
}

TEST_CASE("serialize canonicalizes and round-trips") {
    const auto pg = parse("4 3\n# shuffled\n2 3 0.5\n1 0\n3 1\n");
    const std::string text = serialize(pg);
    CHECK(text == "4 3\n0 1\n1 3\n2 3 0.5\n");
    const auto again = parse(text);
    CHECK(again.graph == pg.graph);
    CHECK(again.labels == pg.labels);
    CHECK(serialize(again) == text);

    CHECK(format_weight(1.0) == "1");
    CHECK(format_weight(0.5) == "0.5");
    CHECK(format_weight(2.5) == "2.5");
    CHECK(format_weight(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("serialize then parse is the identity on random graphs") {
    Rng rng(515151);
    const std::vector<double> pool{0.5, 1, 2, 3};
    for (int iter = 0; iter < 100; ++iter) {
        const int n = rng.uniform_int(2, 16);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g =
            random_nu_graph(n, rng.uniform_int(0, std::min(4, max_extra)), rng,
                            iter % 2 ? std::span<const double>(pool)
                                     : std::span<const double>{});
        const ParsedGraph pg{g, {}};
        const std::string text = serialize(pg);
        std::istringstream in(text);
        const ParsedGraph again = parse_graph(in);
        CHECK(again.graph == g);
        CHECK(serialize(again) == text);
    }
}

TEST_CASE("bfs distances") {
    CHECK(bfs_distances(refimpl::path_graph(3), 0) == std::vector<std::int32_t>{0, 1, 2});
    CHECK(bfs_distances(refimpl::cycle_graph(3), 0) == std::vector<std::int32_t>{0, 1, 1});
    const Graph two_comp(3, {{0, 1}});
    CHECK(bfs_distances(two_comp, 0) ==
          std::vector<std::int32_t>{0, 1, kInfiniteHops});
    CHECK(!is_connected(two_comp));
}

TEST_CASE("biconnected components on named instances") {
    const auto two_tri = biconnected_components(refimpl::two_triangles());
    CHECK(two_tri.blocks.size() == 2);
    CHECK(two_tri.cut_vertices == std::vector<VertexId>{2});

    const auto tree = biconnected_components(refimpl::path_graph(4));
    CHECK(tree.blocks.size() == 3);
    for (const auto& b : tree.blocks) CHECK(b.size() == 1);

    const auto k4 = biconnected_components(refimpl::complete_graph(4));
    CHECK(k4.blocks.size() == 1);
    CHECK(k4.blocks[0].size() == 6);
    CHECK(k4.cut_vertices.empty());
}

TEST_CASE("biconnected decomposition properties on random graphs") {
    Rng rng(20240817);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = rng.uniform_int(2, 10);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g = random_nu_graph(n, rng.uniform_int(0, std::min(4, max_extra)), rng);
        const auto d = biconnected_components(g);

        // every edge in exactly one block
        std::vector<int> covered(g.edge_count(), 0);
        for (std::size_t b = 0; b < d.blocks.size(); ++b)
            for (EdgeId e : d.blocks[b]) {
                ++covered[e];
                CHECK(d.block_of_edge[e] == static_cast<std::int32_t>(b));
            }
        CHECK(std::all_of(covered.begin(), covered.end(), [](int c) { return c == 1; }));

        // two blocks share at most one vertex, and shared vertices are cut vertices
        const auto verts = block_vertex_sets(g, d);
        for (std::size_t a = 0; a < verts.size(); ++a)
            for (std::size_t b = a + 1; b < verts.size(); ++b) {
                std::vector<VertexId> common;
                std::set_intersection(verts[a].begin(), verts[a].end(), verts[b].begin(),
                                      verts[b].end(), std::back_inserter(common));
                CHECK(common.size() <= 1);
                for (VertexId c : common)
                    CHECK(std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), c));
            }
    }
}

TEST_CASE("find_cycle on named instances") {
    const auto tri = find_cycle(refimpl::cycle_graph(3));
    REQUIRE(tri.has_value());
    CHECK(tri->size() == 3);

    CHECK(!find_cycle(refimpl::path_graph(5)).has_value());

    // two disjoint triangles joined by a bridge
    const Graph barbells(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
    const auto cycle = find_cycle(barbells);
    REQUIRE(cycle.has_value());
    CHECK(cycle->size() == 3);

    // deterministic
    CHECK(find_cycle(barbells) == cycle);
}

TEST_CASE("cyclomatic number agrees with find_cycle") {
    Rng rng(77);
    for (int iter = 0; iter < 200; ++iter) {
        const int n = rng.uniform_int(2, 9);
        const int max_extra = n * (n - 1) / 2 - (n - 1);
        const Graph g = random_nu_graph(n, rng.uniform_int(0, std::min(3, max_extra)), rng);
        const auto c = classify(g);
        CHECK(c.cyclomatic_number == g.edge_count() - g.vertex_count() + 1);
        CHECK(c.cyclomatic_number >= 0);
        CHECK(find_cycle(g).has_value() == (c.cyclomatic_number > 0));
    }
}

TEST_CASE("classify named instances") {
    CHECK(classify(refimpl::path_graph(5)).graph_class == GraphClass::tree);
    CHECK(classify(refimpl::path_graph(5)).cyclomatic_number == 0);

    const auto two_tri = classify(refimpl::two_triangles());
    CHECK(two_tri.graph_class == GraphClass::block_graph);
    CHECK(two_tri.cyclomatic_number == 2);

    const auto c6 = classify(refimpl::cycle_graph(6));
    CHECK(c6.graph_class == GraphClass::general);
    CHECK(c6.cyclomatic_number == 1);

    CHECK(classify(refimpl::complete_graph(4)).graph_class == GraphClass::block_graph);
    CHECK_THROWS_AS(classify(Graph(3, {{0, 1}})), DisconnectedError);
}

TEST_CASE("block graphs have clique blocks") {
    Rng rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        const Graph g = random_block_graph(rng.uniform_int(2, 14), rng);
        CHECK(classify(g).graph_class != GraphClass::general);
        const auto d = biconnected_components(g);
        const auto verts = block_vertex_sets(g, d);
        for (std::size_t b = 0; b < d.blocks.size(); ++b) {
            const auto s = static_cast<std::int64_t>(verts[b].size());
            CHECK(static_cast<std::int64_t>(d.blocks[b].size()) == s * (s - 1) / 2);
        }
    }
}

}  // TEST_SUITE
