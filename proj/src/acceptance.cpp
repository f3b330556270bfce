#include "p5color/acceptance.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "p5color/errors.hpp"
#include "p5color/sat2.hpp"
#include "p5color/solver.hpp"
#include "p5color/testkit.hpp"

namespace p5c::accept {

namespace {

using testkit::GenSpec;

struct Tally {
    int trials = 0;
    int failures = 0;
    std::string first_failure;

    void pass() { ++trials; }
    void fail(const std::string& what) {
        ++trials;
        if (failures++ == 0) first_failure = what;
    }
    std::string summary(const std::string& what) const {
        std::ostringstream os;
        os << trials << " " << what << ", " << failures << " failures";
        if (failures > 0) os << " (first: " << first_failure << ")";
        return os.str();
    }
};

CriterionResult timed(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
    CriterionResult r;
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        auto [ok, detail] = body();
        r.passed = ok;
        r.detail = detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = std::string("exception: ") + e.what();
    }
    r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

// ---- criterion 1: solver verdicts match the brute-force oracle -------------

std::pair<bool, std::string> run_oracle_equivalence() {
    const auto start = std::chrono::steady_clock::now();
    Tally tally;
    const double densities[] = {0.5, 0.75, 1.0};
    const GenSpec::Family families[] = {GenSpec::Family::SplitGraph,
                                        GenSpec::Family::CompleteMultipartite,
                                        GenSpec::Family::RejectionSampled};
    std::uint64_t seed = 1;
    for (auto family : families) {
        for (int k = 2; k <= 4; ++k) {
            for (double density : densities) {
                for (int rep = 0; rep < 20; ++seed) {
                    GenSpec spec;
                    spec.family = family;
                    spec.n = 4 + static_cast<int>(seed % 7); // 4..10
                    spec.edge_probability = 0.3 + 0.05 * static_cast<double>(seed % 9);
                    spec.seed = seed * 7919;
                    if (family == GenSpec::Family::CompleteMultipartite) {
                        int left = spec.n;
                        std::uint64_t s = seed;
                        while (left > 0) {
                            const int part = 1 + static_cast<int>(s % 3);
                            s = s * 6364136223846793005ULL + 1;
                            spec.parts.push_back(std::min(part, left));
                            left -= spec.parts.back();
                        }
                    }
                    if (family == GenSpec::Family::RejectionSampled && spec.n > 7)
                        spec.edge_probability = 0.82 + 0.02 * static_cast<double>(seed % 6);
                    Graph g;
                    try {
                        g = testkit::generate(spec);
                    } catch (const GuardError&) {
                        continue; // rejection sampling exhausted; next seed
                    }
                    ++rep;
                    auto lists = testkit::generate_lists(g, k, density, seed * 104729);
                    ListInstance inst(std::make_shared<Graph>(std::move(g)), k, lists);

                    const Verdict expect = testkit::brute_force_solve(inst);
                    const Verdict got = solve(inst);
                    if (got.sat() != expect.sat())
                        tally.fail("verdict mismatch at seed " + std::to_string(seed));
                    else if (got.sat() && !verify(*got.certificate, inst))
                        tally.fail("invalid certificate at seed " + std::to_string(seed));
                    else
                        tally.pass();
                }
            }
        }
    }

    // known-chromatic fixtures
    auto chi_of = [](const Graph& g, int cap) {
        auto r = chromatic_coloring(g, cap);
        return r ? r->chi : -1;
    };
    std::vector<std::pair<int, int>> c5e, w5e;
    for (int i = 0; i < 5; ++i) {
        c5e.emplace_back(i, (i + 1) % 5);
        w5e.emplace_back(i, (i + 1) % 5);
        w5e.emplace_back(i, 5);
    }
    if (chi_of(Graph(5, c5e), 5) != 3) tally.fail("chi(C5) != 3");
    if (chi_of(Graph(6, w5e), 6) != 4) tally.fail("chi(W5) != 4");
    GenSpec octa;
    octa.family = GenSpec::Family::CompleteMultipartite;
    octa.n = 6;
    octa.parts = {2, 2, 2};
    if (chi_of(testkit::generate(octa), 5) != 3) tally.fail("chi(K_{2,2,2}) != 3");
    for (int t = 1; t <= 5; ++t) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < t; ++u)
            for (int v = u + 1; v < t; ++v) edges.emplace_back(u, v);
        if (chi_of(Graph(t, edges), 6) != t) {
            tally.fail("chi(K_" + std::to_string(t) + ") != " + std::to_string(t));
        }
    }

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {tally.failures == 0 && tally.trials >= 500 && elapsed < 900.0,
            tally.summary("instances (incl. known-chi fixtures)")};
}

// ---- criterion 2: dominating-structure witness ------------------------------

std::pair<bool, std::string> run_domstruct_witness() {
    Tally tally;
    std::uint64_t seed = 50000;
    while (tally.trials < 200) {
        ++seed;
        GenSpec spec;
        spec.family = (seed % 2) ? GenSpec::Family::SplitGraph : GenSpec::Family::RejectionSampled;
        spec.n = 2 + static_cast<int>(seed % 13); // 2..14
        spec.edge_probability = 0.3 + 0.05 * static_cast<double>(seed % 8);
        if (spec.family == GenSpec::Family::RejectionSampled && spec.n > 7)
            spec.edge_probability = 0.84 + 0.02 * static_cast<double>(seed % 6);
        spec.seed = seed;
        Graph g;
        try {
            g = testkit::generate(spec);
        } catch (const GuardError&) {
            continue;
        }
        if (connected_components(g).size() != 1) continue;
        try {
            const DominatingStructure ds = find_dominating_structure(g);
            const bool shape = ds.kind == DominatingStructure::Kind::Clique
                                   ? induces_clique(g, ds.vertices)
                                   : induces_p3(g, ds.vertices);
            if (dominates(g, ds.vertices) && shape)
                tally.pass();
            else
                tally.fail("invalid structure at seed " + std::to_string(seed));
        } catch (const PreconditionError&) {
            tally.fail("search failed at seed " + std::to_string(seed));
        }
    }
    return {tally.failures == 0, tally.summary("connected P5-free graphs")};
}

// ---- criterion 3: procedure postconditions ----------------------------------

std::pair<bool, std::string> run_postconditions(std::ostream* progress) {
    Tally pi_t, theta_t, lambda_t;
    const auto chrom = make_chromatic_oracle();

    std::uint64_t seed = 100000;
    while (pi_t.trials < 200 || theta_t.trials < 200) {
        ++seed;
        const int k = 3 + static_cast<int>(seed % 2);
        auto fx = testkit::make_branch_fixture(seed, 12, k);
        if (!fx) continue;
        if (pi_t.trials < 200) {
            const InstanceSet out = pi_prime(fx->instance, fx->ctx);
            bool ok = testkit::monotone_children(fx->instance, out) &&
                      testkit::monotone_children(fx->instance, procedure_pi(fx->instance, fx->ctx));
            for (const ListInstance& child : out)
                ok = ok && essential_part_of_s(child, fx->ctx).empty();
            ok ? pi_t.pass() : pi_t.fail("pi_prime seed " + std::to_string(seed));
        }
        if (theta_t.trials < 200) {
            const InstanceSet out = theta_prime(fx->instance, fx->bag_i, fx->bag_j, chrom);
            bool ok = testkit::monotone_children(fx->instance, out) &&
                      testkit::monotone_children(
                          fx->instance, procedure_theta(fx->instance, fx->bag_i, fx->bag_j, chrom));
            for (const ListInstance& child : out)
                ok = ok && cross_essential_set(child, fx->bag_i, fx->bag_j).empty();
            ok ? theta_t.pass() : theta_t.fail("theta_prime seed " + std::to_string(seed));
        }
        if (progress && seed % 200 == 0)
            *progress << "  postconditions: pi " << pi_t.trials << "/200, theta "
                      << theta_t.trials << "/200\n";
    }

    seed = 150000;
    while (lambda_t.trials < 200) {
        ++seed;
        auto rooted = testkit::make_rooted_instance(seed, 11, 3 + static_cast<int>(seed % 2));
        if (!rooted) continue;
        const InstanceSet out = algorithm_lambda(*rooted, chrom);
        bool ok = testkit::monotone_children(*rooted, out);
        for (const ListInstance& child : out) {
            for (int v : child.dominating()) ok = ok && child.palette(v).size() == 1;
            for (const auto& [key, bag] : compute_bags(child)) ok = ok && is_separated(child, key);
        }
        ok ? lambda_t.pass() : lambda_t.fail("lambda seed " + std::to_string(seed));
    }

    const int failures = pi_t.failures + theta_t.failures + lambda_t.failures;
    return {failures == 0, pi_t.summary("pi_prime") + "; " + theta_t.summary("theta_prime") +
                               "; " + lambda_t.summary("lambda")};
}

// ---- criterion 4: compatibility against the oracle --------------------------

std::pair<bool, std::string> run_compatibility(std::ostream* progress) {
    Tally pi_t, pip_t, theta_t, thetap_t, lambda_t;
    const auto chrom = make_chromatic_oracle();

    std::uint64_t seed = 200000;
    while (pi_t.trials < 300 || theta_t.trials < 300) {
        ++seed;
        const int k = 2 + static_cast<int>(seed % 3);
        auto fx = testkit::make_branch_fixture(seed, 10, k);
        if (!fx) continue;
        if (pi_t.trials < 300) {
            testkit::compatible_by_oracle(fx->instance, procedure_pi(fx->instance, fx->ctx))
                ? pi_t.pass()
                : pi_t.fail("pi seed " + std::to_string(seed));
            testkit::compatible_by_oracle(fx->instance, pi_prime(fx->instance, fx->ctx))
                ? pip_t.pass()
                : pip_t.fail("pi_prime seed " + std::to_string(seed));
        }
        if (theta_t.trials < 300) {
            testkit::compatible_by_oracle(
                fx->instance, procedure_theta(fx->instance, fx->bag_i, fx->bag_j, chrom))
                ? theta_t.pass()
                : theta_t.fail("theta seed " + std::to_string(seed));
            testkit::compatible_by_oracle(
                fx->instance, theta_prime(fx->instance, fx->bag_i, fx->bag_j, chrom))
                ? thetap_t.pass()
                : thetap_t.fail("theta_prime seed " + std::to_string(seed));
        }
        if (progress && seed % 200 == 0)
            *progress << "  compatibility: pi " << pi_t.trials << "/300, theta " << theta_t.trials
                      << "/300\n";
    }

    seed = 250000;
    while (lambda_t.trials < 300) {
        ++seed;
        auto rooted = testkit::make_rooted_instance(seed, 10, 2 + static_cast<int>(seed % 3));
        if (!rooted) continue;
        testkit::compatible_by_oracle(*rooted, algorithm_lambda(*rooted, chrom))
            ? lambda_t.pass()
            : lambda_t.fail("lambda seed " + std::to_string(seed));
        if (progress && seed % 200 == 0)
            *progress << "  compatibility: lambda " << lambda_t.trials << "/300\n";
    }

    const int failures =
        pi_t.failures + pip_t.failures + theta_t.failures + thetap_t.failures + lambda_t.failures;
    return {failures == 0, pi_t.summary("pi") + "; " + pip_t.summary("pi_prime") + "; " +
                               theta_t.summary("theta") + "; " + thetap_t.summary("theta_prime") +
                               "; " + lambda_t.summary("lambda")};
}

// ---- criterion 5: base cases -------------------------------------------------

std::pair<bool, std::string> run_basecase() {
    Tally two_t, three_t;

    std::mt19937_64 rng(424242);
    while (two_t.trials < 300) {
        const int n = 2 + static_cast<int>(rng() % 11); // up to 12
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) edges.emplace_back(u, v);
        const int k = 2 + static_cast<int>(rng() % 3);
        std::vector<Palette> pal;
        for (int v = 0; v < n; ++v) {
            Palette p;
            p.add(1 + static_cast<int>(rng() % k));
            if (rng() & 1) p.add(1 + static_cast<int>(rng() % k));
            pal.push_back(p);
        }
        ListInstance inst(std::make_shared<Graph>(Graph(n, edges)), k, pal);
        const auto enc = encode_two_list(inst);
        const auto assignment = solve_2sat(enc.formula());
        const Verdict expect = testkit::brute_force_solve(inst);
        if (assignment.has_value() != expect.sat())
            two_t.fail("2-SAT verdict mismatch, n=" + std::to_string(n));
        else if (assignment && !verify(enc.decode(*assignment), inst))
            two_t.fail("2-SAT decode invalid, n=" + std::to_string(n));
        else
            two_t.pass();
    }

    std::uint64_t seed = 300000;
    while (three_t.trials < 200) {
        ++seed;
        GenSpec spec;
        spec.family = (seed % 2) ? GenSpec::Family::SplitGraph : GenSpec::Family::RejectionSampled;
        spec.n = 4 + static_cast<int>(seed % 9);
        spec.edge_probability =
            (spec.family == GenSpec::Family::RejectionSampled && spec.n > 7) ? 0.85 : 0.4;
        spec.seed = seed;
        Graph g;
        try {
            g = testkit::generate(spec);
        } catch (const GuardError&) {
            continue;
        }
        auto lists = testkit::generate_lists(g, 3, (seed % 3) ? 0.75 : 1.0, seed);
        ListInstance inst(std::make_shared<Graph>(std::move(g)), 3, lists);
        const Verdict expect = testkit::brute_force_solve(inst);
        const Verdict got = solve(inst);
        if (got.sat() != expect.sat())
            three_t.fail("universe-3 mismatch at seed " + std::to_string(seed));
        else if (got.sat() && !verify(*got.certificate, inst))
            three_t.fail("universe-3 invalid certificate at seed " + std::to_string(seed));
        else
            three_t.pass();
    }

    const int failures = two_t.failures + three_t.failures;
    return {failures == 0,
            two_t.summary("two-list instances") + "; " + three_t.summary("universe-3 instances")};
}

// ---- criterion 6: bounded-runtime smoke test at t = 5 ------------------------

std::pair<bool, std::string> run_smoke(std::ostream* progress) {
    Tally tally;
    std::ostringstream timings;
    for (int n : {20, 40, 80}) {
        for (int variant = 0; variant < 2; ++variant) {
            GenSpec spec;
            spec.n = n;
            spec.seed = 8800 + static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(variant);
            if (variant == 0) {
                spec.family = GenSpec::Family::CompleteMultipartite;
                spec.parts.assign(4, n / 4);
            } else {
                spec.family = GenSpec::Family::SplitGraph;
                spec.edge_probability = 0.3;
            }
            const Graph g = testkit::generate(spec);
            const auto start = std::chrono::steady_clock::now();
            bool ok = true;
            std::string what;
            try {
                const Verdict v = k_colorability(g, 4);
                if (v.sat()) {
                    ListInstance inst(std::make_shared<Graph>(g), 4);
                    ok = verify(*v.certificate, inst);
                    if (!ok) what = "bad certificate";
                }
            } catch (const std::exception& e) {
                ok = false;
                what = e.what(); // a ContractError here means the universe assertion fired
            }
            const double elapsed =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
            timings << " n=" << n << (variant == 0 ? " multipartite " : " split ")
                    << static_cast<int>(elapsed * 1000) << "ms;";
            if (progress)
                *progress << "  smoke n=" << n << " variant=" << variant << ": " << elapsed
                          << "s\n";
            if (!ok)
                tally.fail("n=" + std::to_string(n) + ": " + what);
            else if (elapsed > 120.0)
                tally.fail("n=" + std::to_string(n) + " exceeded 120 s");
            else
                tally.pass();
        }
    }
    return {tally.failures == 0, tally.summary("solves") + " --" + timings.str()};
}

} // namespace

std::vector<std::string> suite_names() {
    return {"oracle", "domstruct", "postconditions", "compatibility", "basecase", "smoke"};
}

std::vector<CriterionResult> run_suite(const std::string& name, std::ostream* progress) {
    std::vector<CriterionResult> results;
    auto want = [&](const std::string& s) { return name == "all" || name == s; };
    if (want("oracle"))
        results.push_back(timed("1 oracle-equivalence (500+ instances, n<=10, k in {2,3,4})",
                                [&] { return run_oracle_equivalence(); }));
    if (want("domstruct"))
        results.push_back(timed("2 dominating-structure witness (200 graphs, n<=14)",
                                [&] { return run_domstruct_witness(); }));
    if (want("postconditions"))
        results.push_back(timed("3 procedure postconditions (200 instances per op)",
                                [&] { return run_postconditions(progress); }));
    if (want("compatibility"))
        results.push_back(timed("4 branching compatibility (300 trials per op)",
                                [&] { return run_compatibility(progress); }));
    if (want("basecase"))
        results.push_back(timed("5 base cases (2-SAT pipeline + universe-3 path)",
                                [&] { return run_basecase(); }));
    if (want("smoke"))
        results.push_back(
            timed("6 t=5 runtime smoke (k=4, n=20/40/80, 120 s each)", [&] { return run_smoke(progress); }));
    if (results.empty()) throw InputError("unknown suite: " + name);
    return results;
}

bool report(const std::vector<CriterionResult>& results, std::ostream& out) {
    bool all = true;
    for (const auto& r : results) {
        out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.elapsed_s << "s): "
            << r.detail << "\n";
        all = all && r.passed;
    }
    return all;
}

} // namespace p5c::accept
