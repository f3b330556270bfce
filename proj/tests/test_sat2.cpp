#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "p5color/errors.hpp"
#include "p5color/sat2.hpp"
#include "p5color/solver.hpp"
#include "p5color/testkit.hpp"

using namespace p5c;
using namespace p5c::tests;

namespace {

bool satisfies(const Cnf2& f, const std::vector<bool>& a) {
    for (const auto& [x, y] : f.clauses) {
        const bool vx = a[static_cast<std::size_t>(x.var)] == x.positive;
        const bool vy = a[static_cast<std::size_t>(y.var)] == y.positive;
        if (!vx && !vy) return false;
    }
    return true;
}

bool satisfiable_by_truth_table(const Cnf2& f) {
    const int n = f.variable_count;
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
        std::vector<bool> a(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = (m >> i) & 1;
        if (satisfies(f, a)) return true;
    }
    return n == 0;
}

} // namespace

TEST_CASE("solve_2sat handles trivial formulas") {
    Cnf2 contradiction;
    contradiction.variable_count = 1;
    contradiction.add_unit(Lit{0, true});
    contradiction.add_unit(Lit{0, false});
    CHECK(!solve_2sat(contradiction).has_value());

    Cnf2 one_clause;
    one_clause.variable_count = 2;
    one_clause.add_clause(Lit{0, true}, Lit{1, true});
    auto a = solve_2sat(one_clause);
    REQUIRE(a.has_value());
    CHECK(satisfies(one_clause, *a));

    Cnf2 empty;
    empty.variable_count = 3;
    auto all_free = solve_2sat(empty);
    REQUIRE(all_free.has_value());
    CHECK(satisfies(empty, *all_free));
}

TEST_CASE("solve_2sat agrees with truth tables on random formulas") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 400; ++trial) {
        Cnf2 f;
        f.variable_count = 1 + static_cast<int>(rng() % 15);
        const int clauses = static_cast<int>(rng() % (3 * f.variable_count + 1));
        std::uniform_int_distribution<int> var(0, f.variable_count - 1);
        for (int i = 0; i < clauses; ++i)
            f.add_clause(Lit{var(rng), static_cast<bool>(rng() & 1)},
                         Lit{var(rng), static_cast<bool>(rng() & 1)});
        const auto result = solve_2sat(f);
        CHECK(result.has_value() == satisfiable_by_truth_table(f));
        if (result) CHECK(satisfies(f, *result));
    }
}

TEST_CASE("encode_two_list on named instances") {
    // triangle with identical two-color palettes needs three colors
    auto tri = make_instance(complete_graph(3), 2, {{1, 2}, {1, 2}, {1, 2}});
    CHECK(!solve_2sat(encode_two_list(tri).formula()).has_value());

    // C4 alternates
    auto c4 = make_instance(cycle_graph(4), 2, {{1, 2}, {1, 2}, {1, 2}, {1, 2}});
    const auto enc = encode_two_list(c4);
    auto assignment = solve_2sat(enc.formula());
    REQUIRE(assignment.has_value());
    const Coloring cert = enc.decode(*assignment);
    CHECK(verify(cert, c4));
    CHECK(cert[0] != cert[1]);
    CHECK(cert[0] == cert[2]);

    // a fixed endpoint forces the other
    auto forced = make_instance(path_graph(2), 2, {{1}, {1, 2}});
    const auto enc2 = encode_two_list(forced);
    auto a2 = solve_2sat(enc2.formula());
    REQUIRE(a2.has_value());
    CHECK(enc2.decode(*a2) == Coloring{1, 2});

    // adjacent fixed equal colors are unsatisfiable even with no variables
    auto clash = make_instance(path_graph(2), 2, {{1}, {1}});
    CHECK(!solve_2sat(encode_two_list(clash).formula()).has_value());

    auto wide = make_instance(path_graph(2), 3, {{1, 2, 3}, {1}});
    CHECK_THROWS_AS(encode_two_list(wide), ContractError);
}

TEST_CASE("2-SAT pipeline agrees with the oracle on random small-list instances") {
    std::mt19937_64 rng(43);
    int done = 0;
    while (done < 150) {
        const int n = 2 + static_cast<int>(rng() % 11); // up to 12
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        auto g = make_graph(n, edges);
        const int k = 2 + static_cast<int>(rng() % 3);
        std::vector<Palette> pal;
        for (int v = 0; v < n; ++v) {
            Palette p;
            p.add(1 + static_cast<int>(rng() % k));
            if (rng() & 1) p.add(1 + static_cast<int>(rng() % k));
            pal.push_back(p);
        }
        ListInstance inst(g, k, pal);
        ++done;
        const auto enc = encode_two_list(inst);
        const auto assignment = solve_2sat(enc.formula());
        const Verdict expect = testkit::brute_force_solve(inst);
        CHECK(assignment.has_value() == expect.sat());
        if (assignment) CHECK(verify(enc.decode(*assignment), inst));
    }
}

TEST_CASE("dimacs dump") {
    Cnf2 f;
    f.variable_count = 2;
    f.add_clause(Lit{0, true}, Lit{1, false});
    f.add_unit(Lit{1, true});
    CHECK(to_dimacs(f) == "p cnf 2 2\n1 -2 0\n2 2 0\n");
}
