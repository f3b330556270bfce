#include <doctest.h>

#include "helpers.hpp"
#include "p5color/errors.hpp"
#include "p5color/solver.hpp"
#include "p5color/testkit.hpp"

using namespace p5c;
using namespace p5c::tests;
using testkit::GenSpec;

TEST_CASE("brute force oracle on named instances") {
    CHECK(!testkit::brute_force_solve(full_instance(cycle_graph(5), 2)).sat());

    auto single = make_instance(make_graph(1, {}), 3, {{3}});
    const Verdict v = testkit::brute_force_solve(single);
    REQUIRE(v.sat());
    CHECK(*v.certificate == Coloring{3});

    auto tri = make_instance(complete_graph(3), 2, {{1, 2}, {1, 2}, {1, 2}});
    CHECK(!testkit::brute_force_solve(tri).sat());

    const Verdict c5 = testkit::brute_force_solve(full_instance(cycle_graph(5), 3));
    REQUIRE(c5.sat());
    CHECK(verify(*c5.certificate, full_instance(cycle_graph(5), 3)));
}

TEST_CASE("brute force oracle guard") {
    CHECK_THROWS_AS(testkit::brute_force_solve(full_instance(complete_graph(20), 30)), GuardError);
    // n > 14 but a tiny palette product is still accepted
    auto lists = std::vector<std::vector<int>>(16, std::vector<int>{1});
    auto big_edgeless = make_instance(make_graph(16, {}), 2, lists);
    CHECK(testkit::brute_force_solve(big_edgeless).sat());
}

TEST_CASE("multipartite generator yields the octahedron") {
    GenSpec spec;
    spec.family = GenSpec::Family::CompleteMultipartite;
    spec.n = 6;
    spec.parts = {2, 2, 2};
    const Graph g = testkit::generate(spec);
    CHECK(g.vertex_count() == 6);
    CHECK(g.edge_count() == 12);
    CHECK(!g.adjacent(0, 1));
    CHECK(g.adjacent(0, 2));
}

TEST_CASE("split generator with every vertex in the clique is a clique") {
    GenSpec spec;
    spec.family = GenSpec::Family::SplitGraph;
    spec.n = 5;
    spec.edge_probability = 0.5;
    // scan seeds for one whose random clique side swallowed everything
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        spec.seed = seed;
        const Graph g = testkit::generate(spec);
        if (g.edge_count() == 10) {
            CHECK(induces_clique(g, VertexSet::all(5)));
            return;
        }
    }
    FAIL("no all-clique split graph among 200 seeds");
}

TEST_CASE("generators are deterministic and P5-free") {
    for (auto family : {GenSpec::Family::SplitGraph, GenSpec::Family::RejectionSampled}) {
        GenSpec spec;
        spec.family = family;
        spec.n = 9;
        spec.edge_probability = 0.4;
        spec.seed = 99;
        const Graph a = testkit::generate(spec);
        const Graph b = testkit::generate(spec);
        CHECK(a.edges() == b.edges());
        CHECK(!find_induced_p5(a).has_value());
    }
}

TEST_CASE("generate_lists density one and k=1") {
    const Graph g = *path_graph(4);
    auto full = testkit::generate_lists(g, 3, 1.0, 5);
    for (const Palette& p : full) CHECK(p == Palette::full(3));
    auto unit = testkit::generate_lists(g, 1, 0.3, 5);
    for (const Palette& p : unit) CHECK(p == Palette::single(1));
    CHECK(testkit::generate_lists(g, 4, 0.6, 7) == testkit::generate_lists(g, 4, 0.6, 7));
    CHECK(testkit::generate_lists(g, 4, 0.6, 7) != testkit::generate_lists(g, 4, 0.6, 8));
}

TEST_CASE("oracle certificates verify") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        GenSpec spec;
        spec.family = GenSpec::Family::SplitGraph;
        spec.n = 8;
        spec.edge_probability = 0.5;
        spec.seed = seed;
        auto g = std::make_shared<Graph>(testkit::generate(spec));
        auto lists = testkit::generate_lists(*g, 3, 0.7, seed);
        ListInstance inst(g, 3, lists);
        const Verdict v = testkit::brute_force_solve(inst);
        if (v.sat()) CHECK(verify(*v.certificate, inst));
    }
}
