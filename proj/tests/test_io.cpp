#include <doctest.h>

#include <sstream>

#include "p5color/errors.hpp"
#include "p5color/io.hpp"

using namespace p5c;

TEST_CASE("read_dimacs parses header, comments and edges") {
    std::istringstream in("c a cycle on five vertices\n"
                          "p edge 5 5\n"
                          "e 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    const Graph g = read_dimacs(in);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 5);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(4, 0));
    CHECK(g.label(0) == 1);
    CHECK(g.label(4) == 5);
}

TEST_CASE("read_dimacs tolerates duplicate edges") {
    std::istringstream in("p edge 3 3\ne 1 2\ne 2 1\ne 1 2\n");
    CHECK(read_dimacs(in).edge_count() == 1);
}

TEST_CASE("read_dimacs rejects malformed input") {
    {
        std::istringstream in("p edge 2 1\ne 1 1\n");
        CHECK_THROWS_AS(read_dimacs(in), InputError);
    }
    {
        std::istringstream in("p edge 2 1\ne 1 9\n");
        CHECK_THROWS_AS(read_dimacs(in), InputError);
    }
    {
        std::istringstream in("e 1 2\n");
        CHECK_THROWS_AS(read_dimacs(in), InputError);
    }
    {
        std::istringstream in("p col 2 1\ne 1 2\n");
        CHECK_THROWS_AS(read_dimacs(in), InputError);
    }
}

TEST_CASE("dimacs round trip") {
    std::istringstream in("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n");
    const Graph g = read_dimacs(in);
    std::ostringstream out;
    write_dimacs(out, g, {"seed 42"});
    std::istringstream back(out.str());
    const Graph g2 = read_dimacs(back);
    CHECK(g2.vertex_count() == g.vertex_count());
    CHECK(g2.edges() == g.edges());
}

TEST_CASE("list file parsing") {
    std::istringstream in("# palettes\n"
                          "1: 1 2\n"
                          "3: 2\n"
                          "\n"
                          "3: 1 3\n"); // later line overrides
    const auto lists = read_lists(in);
    REQUIRE(lists.size() == 2);
    CHECK(lists.at(1) == std::vector<int>{1, 2});
    CHECK(lists.at(3) == std::vector<int>{1, 3});
}

TEST_CASE("list file rejects garbage") {
    {
        std::istringstream in("1 2 3\n");
        CHECK_THROWS_AS(read_lists(in), InputError);
    }
    {
        std::istringstream in("1: 0\n");
        CHECK_THROWS_AS(read_lists(in), InputError);
    }
    {
        std::istringstream in("x: 1\n");
        CHECK_THROWS_AS(read_lists(in), InputError);
    }
}

TEST_CASE("list round trip") {
    std::map<int, std::vector<int>> lists{{1, {1, 2}}, {4, {3}}};
    std::ostringstream out;
    write_lists(out, lists, {"generated"});
    std::istringstream back(out.str());
    CHECK(read_lists(back) == lists);
}
