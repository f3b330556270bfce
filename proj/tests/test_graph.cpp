#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "p5color/errors.hpp"
#include "p5color/graph.hpp"

using namespace p5c;
using namespace p5c::tests;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// Exhaustive P5 oracle: scan all 5-subsets and all orderings.
bool has_induced_p5_exhaustive(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> pick(5);
    auto is_p5_order = [&](const std::vector<int>& p) {
        for (int i = 0; i < 5; ++i)
            for (int j = i + 1; j < 5; ++j) {
                const bool want = (j == i + 1);
                if (g.adjacent(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) != want)
                    return false;
            }
        return true;
    };
    std::vector<int> idx(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> comb;
    auto rec = [&](auto&& self, int start) -> bool {
        if (comb.size() == 5) {
            std::vector<int> perm = comb;
            std::sort(perm.begin(), perm.end());
            do {
                if (is_p5_order(perm)) return true;
            } while (std::next_permutation(perm.begin(), perm.end()));
            return false;
        }
        for (int i = start; i < n; ++i) {
            comb.push_back(i);
            if (self(self, i + 1)) return true;
            comb.pop_back();
        }
        return false;
    };
    return n >= 5 && rec(rec, 0);
}

// Exhaustive clique oracle over all subsets.
bool has_clique_exhaustive(const Graph& g, int size) {
    const int n = g.vertex_count();
    if (size > n) return false;
    std::vector<int> comb;
    auto rec = [&](auto&& self, int start) -> bool {
        if (static_cast<int>(comb.size()) == size) {
            for (std::size_t i = 0; i < comb.size(); ++i)
                for (std::size_t j = i + 1; j < comb.size(); ++j)
                    if (!g.adjacent(comb[i], comb[j])) return false;
            return true;
        }
        for (int i = start; i < n; ++i) {
            comb.push_back(i);
            if (self(self, i + 1)) return true;
            comb.pop_back();
        }
        return false;
    };
    return rec(rec, 0);
}

bool valid_p5_witness(const Graph& g, const std::array<int, 5>& p) {
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (g.adjacent(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]) !=
                (j == i + 1))
                return false;
    return true;
}

} // namespace

TEST_CASE("build_graph basics") {
    const Graph g(3, {});
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 0);

    const auto p5 = path_graph(5);
    CHECK(p5->edge_count() == 4);
    CHECK(p5->adjacent(0, 1));
    CHECK(p5->adjacent(1, 0));
    CHECK(!p5->adjacent(0, 2));

    // duplicates collapse
    const Graph dup(2, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
    CHECK_THROWS_AS(Graph(2, {{0, 5}}), InputError);
}

TEST_CASE("connected_components") {
    CHECK(connected_components(Graph(3, {})).size() == 3);
    CHECK(connected_components(*path_graph(5)).size() == 1);
    const Graph two_edges(4, {{0, 1}, {2, 3}});
    const auto comps = connected_components(two_edges);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].count() == 2);
    CHECK(comps[1].count() == 2);
}

TEST_CASE("find_induced_p5 on named graphs") {
    auto w = find_induced_p5(*path_graph(5));
    REQUIRE(w.has_value());
    CHECK(*w == std::array<int, 5>{0, 1, 2, 3, 4});

    CHECK(!find_induced_p5(*cycle_graph(5)).has_value());

    auto w6 = find_induced_p5(*path_graph(6));
    REQUIRE(w6.has_value());
    CHECK(valid_p5_witness(*path_graph(6), *w6));

    CHECK(!find_induced_p5(*complete_graph(6)).has_value());
    CHECK(!find_induced_p5(*wheel5()).has_value());
}

TEST_CASE("find_induced_p5 agrees with exhaustive search on random graphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 6); // 4..9
        const double p = 0.1 + 0.8 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = random_graph(n, p, rng);
        const auto found = find_induced_p5(g);
        CHECK(found.has_value() == has_induced_p5_exhaustive(g));
        if (found) CHECK(valid_p5_witness(g, *found));
    }
}

TEST_CASE("find_clique_exceeding on named graphs") {
    auto k5 = find_clique_exceeding(*complete_graph(5), 4);
    REQUIRE(k5.has_value());
    CHECK(k5->count() == 5);

    CHECK(!find_clique_exceeding(*cycle_graph(5), 2).has_value());

    auto tri = find_clique_exceeding(*complete_graph(3), 2);
    REQUIRE(tri.has_value());
    CHECK(tri->count() == 3);
}

TEST_CASE("find_clique_exceeding agrees with exhaustive search") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 7); // 3..9
        const double p = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = random_graph(n, p, rng);
        for (int k = 1; k <= 4; ++k) {
            const auto found = find_clique_exceeding(g, k);
            CHECK(found.has_value() == has_clique_exhaustive(g, k + 1));
            if (found) {
                CHECK(found->count() == k + 1);
                CHECK(induces_clique(g, *found));
            }
        }
    }
}

TEST_CASE("find_dominating_structure on named graphs") {
    // star K_{1,3}: the center alone dominates
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const auto ds = find_dominating_structure(star);
    CHECK(ds.kind == DominatingStructure::Kind::Clique);
    CHECK(ds.vertices.ids() == std::vector<int>{0});

    // C5: no dominating clique exists, first P3 is {0,1,2}
    const auto c5 = find_dominating_structure(*cycle_graph(5));
    CHECK(c5.kind == DominatingStructure::Kind::PathP3);
    CHECK(c5.vertices.ids() == std::vector<int>{0, 1, 2});

    const auto single = find_dominating_structure(Graph(1, {}));
    CHECK(single.kind == DominatingStructure::Kind::Clique);
    CHECK(single.vertices.ids() == std::vector<int>{0});
}

TEST_CASE("dominating structure output always validates") {
    std::mt19937_64 rng(31);
    int tested = 0;
    while (tested < 60) {
        const int n = 1 + static_cast<int>(rng() % 12);
        const double p = 0.2 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
        const Graph g = random_graph(n, p, rng);
        if (find_induced_p5(g)) continue;
        if (connected_components(g).size() != 1) continue;
        ++tested;
        const auto ds = find_dominating_structure(g);
        CHECK(dominates(g, ds.vertices));
        if (ds.kind == DominatingStructure::Kind::Clique)
            CHECK(induces_clique(g, ds.vertices));
        else
            CHECK(induces_p3(g, ds.vertices));
    }
}

TEST_CASE("induced_subgraph keeps labels and edges") {
    auto g = cycle_graph(5);
    auto sub = induced_subgraph(*g, VertexSet::of({0, 1, 3}));
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.to_parent == std::vector<int>{0, 1, 3});
    CHECK(sub.graph.adjacent(0, 1));      // edge 0-1 survives
    CHECK(!sub.graph.adjacent(1, 2));     // 1-3 was no edge
    CHECK(sub.graph.label(2) == 3);
}
