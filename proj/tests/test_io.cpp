#include "doctest.h"

#include "h1/graph.hpp"
#include "h1/io.hpp"

using namespace h1;

TEST_CASE("graph format round trip") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(2, 2);
    g.add_edge(1, 3);
    std::string text = write_graph(g);
    CHECK(read_graph(text) == g);
    CHECK(write_graph(read_graph(text)) == text);
}

TEST_CASE("graph parsing") {
    Graph g = read_graph("p graph 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(g == k3());
    Graph loop = read_graph("p graph 1 1\ne 1 1\n");
    CHECK(loop.has_edge(0, 0));
    SUBCASE("comment lines are skipped") {
        CHECK(read_graph("c a triangle\np graph 3 3\ne 1 2\ne 2 3\ne 1 3\n") == k3());
    }
}

TEST_CASE("graph parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(read_graph("p graf 3 3\n"),
                         "line 1: malformed header, expected 'p graph <n> <m>'",
                         parse_error);
    try {
        read_graph("p graph 2 1\ne 1 5\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 2);
    }
    try {
        read_graph("p graph 3 2\ne 1 2\ne 2 1\n");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(e.line() == 3); // duplicate edge
    }
    CHECK_THROWS_AS(read_graph("p graph 2 2\ne 1 2\n"), parse_error);
}

TEST_CASE("struct format round trip") {
    RelStructure s;
    s.domain_size = 3;
    s.add_relation("E", 2, {{0, 1}, {1, 0}});
    s.add_relation("U", 1, {{2}});
    std::string text = write_struct(s);
    RelStructure back = read_struct(text);
    CHECK(back.domain_size == 3);
    REQUIRE(back.relations.size() == 2);
    CHECK(back.relations[0].tuples == s.relations[0].tuples);
    CHECK(back.relations[1].name == "U");
    CHECK(write_struct(back) == text);
}

TEST_CASE("template reader accepts both formats") {
    RelStructure from_graph = read_template("p graph 2 1\ne 1 2\n");
    CHECK(from_graph.domain_size == 2);
    CHECK(from_graph.relations[0].tuples ==
          std::vector<std::vector<int>>{{0, 1}, {1, 0}});
    RelStructure from_struct = read_template("p struct 2 1\nr R 1 1\nt 1\n");
    CHECK(from_struct.relations[0].name == "R");
}

TEST_CASE("gadget file round trip and validation") {
    GadgetFile g;
    g.graph = Graph(6);
    g.graph.add_edge(0, 4);
    g.graph.add_edge(4, 5);
    g.graph.add_edge(5, 2);
    g.x = 0;
    g.xp = 1;
    g.y = 2;
    g.yp = 3;
    g.d = {4, 5};
    std::string text = write_gadget(g);
    GadgetFile back = read_gadget(text);
    CHECK(back.graph == g.graph);
    CHECK(back.x == 0);
    CHECK(back.yp == 3);
    CHECK(back.d == std::make_pair(4, 5));
    CHECK_THROWS_AS(read_gadget("p graph 2 1\ne 1 2\nm 1 2 1 2\n"), parse_error);
}
