#include "doctest.h"

#include "corpus.hpp"
#include "phigraph/generators.hpp"
#include "phigraph/graph.hpp"

#include <numeric>

using namespace phigraph;

TEST_CASE("edge list parsing") {
    Graph g = Graph::from_edge_list("0 1\n");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 1);

    SUBCASE("self-loop rejected with line number") {
        try {
            Graph::from_edge_list("0 1\n0 0\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
        }
    }

    SUBCASE("duplicate edge rejected regardless of order") {
        try {
            Graph::from_edge_list("0 1\n1 0\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 2);
            CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
        }
    }

    SUBCASE("malformed line") {
        CHECK_THROWS_AS(Graph::from_edge_list("0 1\n2 x\n"), ParseError);
        CHECK_THROWS_AS(Graph::from_edge_list("0\n"), ParseError);
        CHECK_THROWS_AS(Graph::from_edge_list("0 1 2\n"), ParseError);
    }

    SUBCASE("comments, blanks, and header") {
        Graph h = Graph::from_edge_list("# a comment\nn 6\n\n0 1\n2 3\n");
        CHECK(h.vertex_count() == 6);  // isolated vertices 4, 5 preserved
        CHECK(h.edge_count() == 2);
        CHECK(h.degree(5) == 0);
    }
}

TEST_CASE("handshake identity and normalization") {
    Graph g = Graph::from_edge_list("3 1\n0 3\n1 2\n");
    int degree_sum = std::accumulate(g.degrees().begin(), g.degrees().end(), 0);
    CHECK(degree_sum == 2 * g.edge_count());
    // normalized order: u < v, lexicographic
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("round trip through edge-list text") {
    Graph g = corpus::petersen();
    Graph back = Graph::from_edge_list(g.to_edge_list());
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edges() == g.edges());
}

TEST_CASE("degree sequences") {
    CHECK(degree_sequence(corpus::path(3)) == std::vector<int>{1, 2, 1});
    CHECK(degree_sequence(corpus::complete(4)) == std::vector<int>{3, 3, 3, 3});
    CHECK(degree_sequence(corpus::star(5)) == std::vector<int>{5, 1, 1, 1, 1, 1});
}

TEST_CASE("induced subgraphs") {
    Graph k4 = corpus::complete(4);
    Graph k3 = induced_subgraph(k4, VertexSet::of({0, 1, 2}));
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);

    Graph empty = induced_subgraph(k4, VertexSet{});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.edge_count() == 0);

    Graph two = induced_subgraph(corpus::path(3), VertexSet::of({0, 2}));
    CHECK(two.vertex_count() == 2);
    CHECK(two.edge_count() == 0);

    CHECK_THROWS_AS(induced_subgraph(k4, VertexSet::of({7})), std::invalid_argument);

    SUBCASE("full vertex set reproduces the graph") {
        Graph pet = corpus::petersen();
        std::vector<int> all(pet.vertex_count());
        std::iota(all.begin(), all.end(), 0);
        Graph same = induced_subgraph(pet, VertexSet::of(all));
        CHECK(same.edges() == pet.edges());
    }
}

TEST_CASE("programmatic construction validates") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), std::invalid_argument);
}

TEST_CASE("handshake holds for generated graphs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph g = random_k_degenerate({15, 3, 0.6, seed});
        int degree_sum = std::accumulate(g.degrees().begin(), g.degrees().end(), 0);
        CHECK(degree_sum == 2 * g.edge_count());
    }
}
