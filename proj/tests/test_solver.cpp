#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "p5color/errors.hpp"
#include "p5color/solver.hpp"
#include "p5color/testkit.hpp"

using namespace p5c;
using namespace p5c::tests;

TEST_CASE("solve on odd cycles") {
    CHECK(!solve(full_instance(cycle_graph(5), 2)).sat());
    const Verdict v3 = solve(full_instance(cycle_graph(5), 3));
    REQUIRE(v3.sat());
    CHECK(verify(*v3.certificate, full_instance(cycle_graph(5), 3)));
}

TEST_CASE("solve on the wheel W5") {
    CHECK(!solve(full_instance(wheel5(), 3)).sat());
    const Verdict v4 = solve(full_instance(wheel5(), 4));
    REQUIRE(v4.sat());
    CHECK(verify(*v4.certificate, full_instance(wheel5(), 4)));
}

TEST_CASE("solve proves the C5 clique blowup uncolorable without a clique witness") {
    // each C5 vertex becomes a K2, adjacent blobs fully joined: P5-free,
    // clique number 4 but chromatic number 5, so k=4 cannot fall back on the
    // clique pre-check and must refute through the branching machinery
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        const int a = 2 * i, b = 2 * i + 1;
        edges.emplace_back(a, b);
        for (int u : {a, b})
            for (int v : {(2 * i + 2) % 10, (2 * i + 3) % 10}) edges.emplace_back(u, v);
    }
    auto g = make_graph(10, edges);
    CHECK(!find_induced_p5(*g).has_value());
    CHECK(!find_clique_exceeding(*g, 4).has_value());

    const Verdict v4 = k_colorability(*g, 4);
    CHECK(!v4.sat());
    CHECK(!v4.clique_witness.has_value());
    CHECK(!testkit::brute_force_solve(full_instance(g, 4)).sat());

    const auto chrom = chromatic_coloring(*g, 6);
    REQUIRE(chrom.has_value());
    CHECK(chrom->chi == 5);
}

TEST_CASE("solve rejects graphs with an induced P5") {
    try {
        solve(full_instance(path_graph(6), 3));
        FAIL("expected NotP5FreeError");
    } catch (const NotP5FreeError& e) {
        const auto& w = e.witness;
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j)
                CHECK(path_graph(6)->adjacent(w[static_cast<std::size_t>(i)],
                                              w[static_cast<std::size_t>(j)]) == (j == i + 1));
    }
}

TEST_CASE("solve respects a tiny deadline") {
    SolveConfig cfg;
    cfg.deadline_seconds = 1e-9;
    CHECK_THROWS_AS(solve(full_instance(complete_graph(8), 8), cfg), TimeoutError);
}

TEST_CASE("solve agrees with the oracle on random instances") {
    std::mt19937_64 rng(51);
    int done = 0;
    for (std::uint64_t seed = 100; done < 120; ++seed) {
        const int k = 2 + static_cast<int>(seed % 3);
        auto inst = testkit::make_rooted_instance(seed, 10, k);
        if (!inst) continue;
        ++done;
        const Verdict mine = solve(*inst);
        const Verdict expect = testkit::brute_force_solve(*inst);
        CHECK(mine.sat() == expect.sat());
        if (mine.sat()) CHECK(verify(*mine.certificate, *inst));
    }
}

TEST_CASE("parallel solve agrees with sequential") {
    SolveConfig par;
    par.enable_parallel = true;
    int done = 0;
    for (std::uint64_t seed = 900; done < 20; ++seed) {
        auto inst = testkit::make_rooted_instance(seed, 10, 4);
        if (!inst) continue;
        ++done;
        const Verdict a = solve(*inst);
        const Verdict b = solve(*inst, par);
        CHECK(a.sat() == b.sat());
        if (b.sat()) CHECK(verify(*b.certificate, *inst));
    }
}

TEST_CASE("solve_separated with no bags") {
    auto tri = complete_graph(3);
    auto inst = make_instance(tri, 3, {{1}, {2}, {3}});
    inst.set_dominating(VertexSet::all(3));
    const Verdict v = solve_separated(inst);
    REQUIRE(v.sat());
    CHECK(*v.certificate == Coloring{1, 2, 3});
}

TEST_CASE("solve_separated finds a triangle bag unsatisfiable at universe 2") {
    // D={0} colored 1, the bag is a triangle stuck with colors {2,3}
    std::vector<std::pair<int, int>> edges{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto g = make_graph(4, edges);
    auto inst = make_instance(g, 3, {{1}, {2, 3}, {2, 3}, {2, 3}});
    inst.set_dominating(VertexSet::single(0));
    CHECK(!solve_separated(inst).sat());
}

TEST_CASE("solve_separated rejects an unseparated or uncolored instance") {
    auto g = make_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    auto leaky = make_instance(g, 3, {{1}, {2}, {2, 3}, {1, 3}});
    leaky.set_dominating(VertexSet::of({0, 1}));
    CHECK_THROWS_AS(solve_separated(leaky), ContractError);

    auto uncolored = full_instance(make_graph(2, {{0, 1}}), 3);
    uncolored.set_dominating(VertexSet::single(0));
    CHECK_THROWS_AS(solve_separated(uncolored), ContractError);
}

TEST_CASE("k_colorability on named graphs") {
    const Verdict k5 = k_colorability(*complete_graph(5), 4);
    CHECK(!k5.sat());
    REQUIRE(k5.clique_witness.has_value());
    CHECK(k5.clique_witness->count() == 5);

    const Verdict octa = k_colorability(*make_graph(6, [] {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < 6; ++u)
            for (int v = u + 1; v < 6; ++v)
                if (v != u + 3) e.emplace_back(u, v); // parts {0,3},{1,4},{2,5}
        return e;
    }()), 3);
    CHECK(octa.sat());

    CHECK(k_colorability(*cycle_graph(5), 3).sat());
    CHECK(!k_colorability(*cycle_graph(5), 2).sat());
}

TEST_CASE("chromatic_coloring on named graphs") {
    const auto edgeless = chromatic_coloring(Graph(4, {}), 3);
    REQUIRE(edgeless.has_value());
    CHECK(edgeless->chi == 1);

    const auto c5 = chromatic_coloring(*cycle_graph(5), 3);
    REQUIRE(c5.has_value());
    CHECK(c5->chi == 3);
    CHECK(!chromatic_coloring(*cycle_graph(5), 2).has_value());

    const auto w5 = chromatic_coloring(*wheel5(), 5);
    REQUIRE(w5.has_value());
    CHECK(w5->chi == 4);

    for (int t = 1; t <= 5; ++t) {
        const auto kt = chromatic_coloring(*complete_graph(t), 6);
        REQUIRE(kt.has_value());
        CHECK(kt->chi == t);
    }
}

TEST_CASE("chromatic_coloring witnesses use exactly chi colors") {
    for (std::uint64_t seed = 300; seed < 320; ++seed) {
        auto inst = testkit::make_rooted_instance(seed, 9, 3);
        if (!inst) continue;
        const auto res = chromatic_coloring(inst->graph(), inst->vertex_count());
        REQUIRE(res.has_value());
        std::vector<int> used = res->coloring;
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        CHECK(static_cast<int>(used.size()) == res->chi);
        ListInstance full(inst->graph_ptr(), res->chi);
        CHECK(verify(res->coloring, full));
        if (res->chi > 1) CHECK(!k_colorability(inst->graph(), res->chi - 1).sat());
    }
}

TEST_CASE("verify") {
    auto c5 = full_instance(cycle_graph(5), 3);
    CHECK(verify({1, 2, 1, 2, 3}, c5));
    CHECK(!verify({1, 1, 2, 1, 2}, c5));          // monochromatic edge 0-1
    auto narrow = make_instance(cycle_graph(5), 3, {{1}, {2}, {1}, {2}, {3}});
    CHECK(verify({1, 2, 1, 2, 3}, narrow));
    CHECK(!verify({2, 1, 2, 1, 3}, narrow));      // out of palette
    CHECK_THROWS_AS(verify({1, 2, 1}, c5), ContractError);
    CHECK_THROWS_AS(verify({1, 2, 1, 2, 0}, c5), ContractError);
}

TEST_CASE("verdicts are stable under vertex relabeling") {
    std::mt19937_64 rng(77);
    int done = 0;
    for (std::uint64_t seed = 400; done < 15; ++seed) {
        auto inst = testkit::make_rooted_instance(seed, 9, 3);
        if (!inst) continue;
        ++done;
        const int n = inst->vertex_count();
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);

        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : inst->graph().edges())
            edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
        std::vector<Palette> pal(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            pal[static_cast<std::size_t>(perm[static_cast<std::size_t>(v)])] = inst->palette(v);
        ListInstance mapped(make_graph(n, edges), inst->universe(), pal);

        const Verdict a = solve(*inst);
        const Verdict b = solve(mapped);
        CHECK(a.sat() == b.sat());
        if (b.sat()) CHECK(verify(*b.certificate, mapped));
    }
}

TEST_CASE("solver configuration guards") {
    CHECK_THROWS_AS(k_colorability(*cycle_graph(4), 70), InputError);
    SolveConfig cfg;
    cfg.max_universe = 2;
    CHECK_THROWS_AS(solve(full_instance(cycle_graph(4), 3), cfg), InputError);
}
