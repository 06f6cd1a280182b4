#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "rotmap/indexing.hpp"
#include "rotmap/lexgraph.hpp"

using rotmap::LexGraph;
using rotmap::Permutation;
using rotmap::vertex_id;

namespace {

// Independent oracle: count edges by scanning every vertex pair against
// the adjacency rule.
long long brute_edge_count(const LexGraph& g) {
    long long edges = 0;
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v = u + 1; v <= g.vertex_count(); ++v)
            if (g.adjacent(u, v)) ++edges;
    return edges;
}

}  // namespace

TEST_CASE("vertex and edge counts", "[lexgraph]") {
    struct Case {
        int m, s;
        int vertices;
        long long edges;
    };
    for (const Case c : {Case{3, 1, 9, 27}, Case{3, 2, 18, 54}, Case{5, 1, 25, 125}}) {
        const LexGraph g = LexGraph::build(c.m, c.s);
        CHECK(g.vertex_count() == c.vertices);
        CHECK(g.edge_count() == c.edges);
        CHECK(brute_edge_count(g) == c.edges);
        CHECK(g.arc_count() == 2 * c.edges);
        CHECK(g.valence() == 2 * c.m);
        CHECK(g.connected());
    }
}

TEST_CASE("parameter validation", "[lexgraph]") {
    CHECK_THROWS_AS(LexGraph::build(4, 1), rotmap::ParameterError);
    CHECK_THROWS_AS(LexGraph::build(1, 1), rotmap::ParameterError);
    CHECK_THROWS_AS(LexGraph::build(3, 0), rotmap::ParameterError);
}

TEST_CASE("neighbors", "[lexgraph]") {
    const LexGraph g = LexGraph::build(3, 1);
    const auto nb = g.neighbors(vertex_id(1, 1, 3));
    const std::set<int> got(nb.begin(), nb.end());
    const std::set<int> want{vertex_id(2, 1, 3), vertex_id(2, 2, 3), vertex_id(2, 3, 3),
                             vertex_id(3, 1, 3), vertex_id(3, 2, 3), vertex_id(3, 3, 3)};
    CHECK(got == want);
    CHECK(nb.size() == 6);

    // deterministic order: column i-1 (fiber ascending) then column i+1
    CHECK(nb.front() == vertex_id(3, 1, 3));
    CHECK(nb.back() == vertex_id(2, 3, 3));

    const LexGraph g9 = LexGraph::build(3, 3);
    for (int w : g9.neighbors(vertex_id(5, 2, 3))) {
        const int col = rotmap::vertex_column(w, 3);
        CHECK((col == 4 || col == 6));
    }

    CHECK_THROWS_AS(g.neighbors(0), rotmap::ParameterError);
    CHECK_THROWS_AS(g.neighbors(10), rotmap::ParameterError);
}

TEST_CASE("handshake", "[lexgraph][property]") {
    for (const auto [m, s] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 1}}) {
        const LexGraph g = LexGraph::build(m, s);
        long long degree_sum = 0;
        for (int v = 1; v <= g.vertex_count(); ++v) {
            const auto nb = g.neighbors(v);
            CHECK(static_cast<int>(nb.size()) == 2 * m);
            degree_sum += static_cast<long long>(nb.size());
        }
        CHECK(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("edge indexing round trip", "[lexgraph]") {
    const LexGraph g = LexGraph::build(3, 2);
    std::set<long long> seen;
    for (int u = 1; u <= g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            const long long e = g.edge_index(u, v);
            CHECK(e == g.edge_index(v, u));
            CHECK(e >= 0);
            CHECK(e < g.edge_count());
            seen.insert(e);
            const auto [a, b] = g.edge_endpoints(e);
            CHECK(((a == u && b == v) || (a == v && b == u)));
        }
    CHECK(static_cast<long long>(seen.size()) == g.edge_count());
    CHECK_THROWS_AS(g.edge_index(vertex_id(1, 1, 3), vertex_id(1, 2, 3)), rotmap::ParameterError);
}

TEST_CASE("automorphism predicate", "[lexgraph]") {
    const LexGraph g = LexGraph::build(3, 1);
    CHECK(g.is_automorphism(Permutation::identity(9)));

    // swapping two fibers inside one column is an automorphism of C_n[mK_1]
    CHECK(g.is_automorphism(
        Permutation::from_cycles(9, {{vertex_id(1, 1, 3), vertex_id(1, 2, 3)}})));

    // swapping two adjacent vertices across columns breaks edges
    CHECK_FALSE(g.is_automorphism(
        Permutation::from_cycles(9, {{vertex_id(1, 1, 3), vertex_id(2, 1, 3)}})));

    CHECK_THROWS_AS(g.is_automorphism(Permutation::identity(8)), rotmap::DegreeMismatch);
}

TEST_CASE("complete multipartite exactly when n = 3", "[lexgraph]") {
    CHECK(LexGraph::build(3, 1).is_complete_multipartite());   // K_{3,3,3}
    CHECK_FALSE(LexGraph::build(3, 2).is_complete_multipartite());
    CHECK_FALSE(LexGraph::build(5, 1).is_complete_multipartite());
}
