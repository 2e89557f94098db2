#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "hatg/errors.hpp"
#include "hatg/graph.hpp"

using namespace hatg;

TEST_CASE("[graph] complete graphs have all pairs") {
    const Graph g = Graph::complete(5);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 10);
    for (int u = 0; u < 5; ++u) {
        CHECK(g.degree(u) == 4);
        for (int v = 0; v < 5; ++v) {
            CHECK(g.has_edge(u, v) == (u != v));
        }
    }
}

TEST_CASE("[graph] empty graph has no edges") {
    const Graph g = Graph::empty_graph(4);
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 0);
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("[graph] adjacency lists are ascending and symmetric") {
    const Graph g(5, {{3, 1}, {0, 4}, {1, 0}, {2, 4}});
    for (int v = 0; v < 5; ++v) {
        const auto& nb = g.neighbors(v);
        CHECK(std::is_sorted(nb.begin(), nb.end()));
        for (int u : nb) {
            CHECK(g.has_edge(v, u));
            CHECK(g.has_edge(u, v));
        }
    }
    CHECK(g.has_edge(1, 3));
    CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("[graph] rejects loops, duplicates and out-of-range endpoints") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(-1, {}), InvalidInputError);
}

TEST_CASE("[graph] planar construction shape") {
    const int m = 3;
    const Graph g = Graph::planar_construction(12, m);
    CHECK(g.vertex_count() == 2 + 2 * m);
    // central edge + 5 edges per outer pair (x-y, x-u, x-v, y-u, y-v)
    CHECK(g.edge_count() == 1 + 5 * static_cast<std::size_t>(m));
    CHECK(g.has_edge(0, 1));
    for (int i = 0; i < m; ++i) {
        const int x = 2 + 2 * i;
        const int y = x + 1;
        CHECK(g.has_edge(x, y));
        CHECK(g.has_edge(x, 0));
        CHECK(g.has_edge(x, 1));
        CHECK(g.has_edge(y, 0));
        CHECK(g.has_edge(y, 1));
    }
    // outer pairs are mutually non-adjacent
    CHECK_FALSE(g.has_edge(2, 4));
    CHECK_FALSE(g.has_edge(3, 5));
    REQUIRE(g.shape().has_value());
    const auto* shape = std::get_if<PlanarConstructionShape>(&*g.shape());
    REQUIRE(shape != nullptr);
    CHECK(shape->q == 12);
    CHECK(shape->m == m);
}

TEST_CASE("[graph] book shape") {
    const Graph g = Graph::book(3, 4);
    CHECK(g.vertex_count() == 7);
    // C(3,2) clique edges + 3 per outer vertex
    CHECK(g.edge_count() == 3 + 12);
    for (int u = 0; u < 3; ++u) {
        for (int v = u + 1; v < 3; ++v) CHECK(g.has_edge(u, v));
    }
    for (int o = 3; o < 7; ++o) {
        CHECK(g.degree(o) == 3);
        for (int u = 0; u < 3; ++u) CHECK(g.has_edge(o, u));
    }
    CHECK_FALSE(g.has_edge(3, 4));
    REQUIRE(g.shape().has_value());
    const auto* shape = std::get_if<BookShape>(&*g.shape());
    REQUIRE(shape != nullptr);
    CHECK(shape->d == 3);
    CHECK(shape->m == 4);
}

TEST_CASE("[graph] book with d=1 is a star") {
    const Graph g = Graph::book(1, 5);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 5);
    CHECK(g.degree(0) == 5);
}

TEST_CASE("[graph] multipartite indexing and adjacency") {
    // n=2 vertices per part, m=3 parts; vertex (i,k) is i*m + k
    const Graph g = Graph::multipartite(2, 3);
    CHECK(g.vertex_count() == 6);
    for (int u = 0; u < 6; ++u) {
        for (int v = u + 1; v < 6; ++v) {
            CHECK(g.has_edge(u, v) == (u % 3 != v % 3));
        }
    }
    // each vertex sees the (m-1)*n vertices of the other parts
    CHECK(g.degree(0) == 4);
    REQUIRE(g.shape().has_value());
    const auto* shape = std::get_if<MultipartiteShape>(&*g.shape());
    REQUIRE(shape != nullptr);
    CHECK(shape->n == 2);
    CHECK(shape->m == 3);
}

TEST_CASE("[graph] multipartite with singleton parts is complete") {
    const Graph g = Graph::multipartite(1, 4);
    CHECK(g.edge_count() == Graph::complete(4).edge_count());
}

TEST_CASE("[graph] shape factories reject bad parameters") {
    CHECK_THROWS_AS(Graph::planar_construction(12, -1), InvalidInputError);
    CHECK_THROWS_AS(Graph::book(0, 1), InvalidInputError);
    CHECK_THROWS_AS(Graph::multipartite(0, 2), InvalidInputError);
}

TEST_CASE("[graph] mismatched shape tags are rejected") {
    CHECK_THROWS_AS(Graph(3, {{0, 1}}, GraphShape{BookShape{2, 1}}), InvalidInputError);
    CHECK_THROWS_AS(Graph(2, {{0, 1}}, GraphShape{BookShape{2, 1}}), InvalidInputError);
    CHECK_NOTHROW(Graph(3, {{0, 1}, {0, 2}, {1, 2}}, GraphShape{BookShape{2, 1}}));
}

TEST_CASE("[graph] coloring validates its values") {
    const Coloring c(3, {0, 2, 1});
    CHECK(c.size() == 3);
    CHECK(c.values[1] == 2);
    CHECK_THROWS_AS(Coloring(3, {0, 3}), InvalidInputError);
    CHECK_THROWS_AS(Coloring(3, {-1}), InvalidInputError);
    CHECK_THROWS_AS(Coloring(0, {}), InvalidInputError);
}
