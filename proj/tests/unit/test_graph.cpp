#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "sdpcolor/error.hpp"
#include "sdpcolor/graph.hpp"

using namespace sdpcolor;

TEST_SUITE("graph") {
TEST_CASE("constructor rejects malformed edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), PreconditionError);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("adjacency is sorted and symmetric") {
    Graph g(5, {{3, 0}, {0, 1}, {4, 0}, {2, 1}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 3, 4});
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK(g.edge_count() == 4);
    CHECK(g.max_degree() == 3);
}

TEST_CASE("planted instances respect their coloring") {
    auto inst = fixtures::planted(300, 12, 7);
    CHECK(inst.graph.n() == 300);
    CHECK(is_proper_coloring(inst.graph, inst.planted));
    std::array<int, 3> sizes{};
    for (int c : inst.planted) ++sizes[c];
    for (int s : sizes) CHECK(s == 100);
    double avg = 2.0 * inst.graph.edge_count() / inst.graph.n();
    CHECK(avg == doctest::Approx(12).epsilon(0.15));
}

TEST_CASE("planted generation is deterministic per seed") {
    auto a = fixtures::planted(120, 6, 3), b = fixtures::planted(120, 6, 3), c = fixtures::planted(120, 6, 4);
    CHECK(a.graph.edges() == b.graph.edges());
    CHECK(a.planted == b.planted);
    CHECK(a.graph.edges() != c.graph.edges());
}

TEST_CASE("neighbourhood levels") {
    Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(neighborhood(path, 0, 1) == std::vector<int>{1});
    CHECK(neighborhood(path, 0, 2) == std::vector<int>{0, 2});
    CHECK(neighborhood(path, 2, 2) == std::vector<int>{0, 2, 4});
    Graph tri(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(neighborhood(tri, 0, 2) == std::vector<int>{0, 1, 2});
    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    // N(N(N(0))) by direct expansion; 0 itself is not reached in three steps on an odd cycle
    CHECK(neighborhood(c5, 0, 3) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("maximal matching is maximal and disjoint") {
    auto inst = fixtures::planted(200, 8, 11);
    std::vector<int> all(200);
    for (int i = 0; i < 200; ++i) all[i] = i;
    auto M = maximal_matching(inst.graph, all, 5);
    std::vector<int> used(200, 0);
    for (auto [a, b] : M) {
        CHECK(inst.graph.has_edge(a, b));
        CHECK(used[a]++ == 0);
        CHECK(used[b]++ == 0);
    }
    for (auto [a, b] : inst.graph.edges()) CHECK((used[a] || used[b]));
}

TEST_CASE("greedy coloring and conflicts") {
    auto inst = fixtures::planted(150, 10, 2);
    auto col = greedy_coloring(inst.graph);
    CHECK(is_proper_coloring(inst.graph, col));
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    std::vector<int> bad{0, 1, 0};
    REQUIRE(first_conflict(k3, bad).has_value());
    CHECK(*first_conflict(k3, bad) == Edge{0, 2});
}

TEST_CASE("glauber steps keep the coloring proper") {
    auto inst = fixtures::planted(80, 3, 9);
    auto col = glauber_recolor(inst.graph, inst.planted, 1000, 1);
    CHECK(is_proper_coloring(inst.graph, col));
    CHECK(col != inst.planted);
}

TEST_CASE("graph file round trip") {
    auto inst = fixtures::planted(40, 5, 1);
    std::stringstream ss;
    write_graph(ss, inst.graph, &inst.planted);
    GraphFile f = read_graph(ss);
    CHECK(f.graph.edges() == inst.graph.edges());
    REQUIRE(f.planted.has_value());
    CHECK(*f.planted == inst.planted);
    std::stringstream bad("p 3 2\ne 0 1\n");
    CHECK_THROWS_AS(read_graph(bad), PreconditionError);
}

TEST_CASE("induced subgraph relabels in the given order") {
    Graph g(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    std::vector<int> sub{4, 3, 1};
    Graph h = g.induced(sub);
    CHECK(h.n() == 3);
    CHECK(h.edge_count() == 1);
    CHECK(h.has_edge(0, 1));
    CHECK(g.induced_max_degree(sub) == 1);
}
}
