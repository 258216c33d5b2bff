#include <relaxasp/digraph.hpp>

#include <catch_amalgamated.hpp>

using namespace relaxasp;

TEST_CASE("arcs are stored once and sorted") {
    Digraph g(3);
    CHECK(g.add_arc(2, 0));
    CHECK(g.add_arc(0, 1));
    CHECK_FALSE(g.add_arc(0, 1));
    CHECK(g.arc_count() == 2);
    CHECK(g.arcs() == std::vector<Arc>{{0, 1}, {2, 0}});
    CHECK(g.has_arc(2, 0));
    CHECK_FALSE(g.has_arc(0, 2));
    CHECK(g.degree(0) == 2);
    CHECK(g.successors(0) == std::set<Vertex>{1});
    CHECK(g.predecessors(0) == std::set<Vertex>{2});
}

TEST_CASE("self loops and unknown vertices are rejected") {
    Digraph g(2);
    CHECK_THROWS_AS(g.add_arc(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_arc(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(Digraph(2, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("cycle detection") {
    CHECK(has_cycle(Digraph(2, {{0, 1}, {1, 0}})));
    CHECK_FALSE(has_cycle(Digraph(3, {{0, 1}, {1, 2}})));
    CHECK_FALSE(has_cycle(Digraph(0)));
    CHECK_FALSE(has_cycle(Digraph(4)));
    CHECK(has_cycle(Digraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 1}})));
    CHECK_FALSE(has_cycle(Digraph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
}

TEST_CASE("equality compares arc sets") {
    CHECK(Digraph(2, {{0, 1}}) == Digraph(2, {{0, 1}}));
    CHECK_FALSE(Digraph(2, {{0, 1}}) == Digraph(2, {{1, 0}}));
    CHECK_FALSE(Digraph(2) == Digraph(3));
}
