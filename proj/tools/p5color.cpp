// p5color: exact k-colorability / k-list-coloring of P5-free graphs.
//
// Every subcommand prints a single JSON run report on stdout and a short
// human summary on stderr. Exit codes: 0 = ran to a verdict (SAT or UNSAT),
// 2 = input or parse error, 3 = precondition violated (e.g. the graph is not
// P5-free; the witness path is reported), 4 = timeout.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "p5color/acceptance.hpp"
#include "p5color/errors.hpp"
#include "p5color/io.hpp"
#include "p5color/solver.hpp"
#include "p5color/testkit.hpp"

using json = nlohmann::json;
using namespace p5c;

namespace {

struct CommonArgs {
    std::string graph_path;
    std::string lists_path;
    int k = 0;
    double timeout = 0.0;
    bool parallel = false;
    int trace = 0;
    bool replay_verify = false;
};

SolveConfig config_of(const CommonArgs& a) {
    SolveConfig cfg;
    cfg.enable_parallel = a.parallel;
    cfg.trace = a.trace;
    if (a.timeout > 0) cfg.deadline_seconds = a.timeout;
    return cfg;
}

json stats_json(const BranchStats& stats) {
    const BranchStatsSnapshot s = snapshot(stats);
    return json{{"instances_created", s.instances_created},
                {"instances_pruned", s.instances_pruned},
                {"recursion_depth", s.recursion_depth},
                {"wall_time_ms", s.wall_time_ms}};
}

json coloring_json(const Graph& g, const Coloring& cert) {
    json out = json::object();
    for (int v = 0; v < g.vertex_count(); ++v)
        out[std::to_string(g.label(v))] = cert[static_cast<std::size_t>(v)];
    return out;
}

json vertex_list_json(const Graph& g, const std::vector<int>& internal_ids) {
    json out = json::array();
    for (int v : internal_ids) out.push_back(g.label(v));
    return out;
}

std::vector<Palette> palettes_from_lists(const Graph& g, int k, const std::string& path) {
    std::vector<Palette> palettes(static_cast<std::size_t>(g.vertex_count()), Palette::full(k));
    if (path.empty()) return palettes;
    std::vector<int> label_to_internal;
    int max_label = 0;
    for (int v = 0; v < g.vertex_count(); ++v) max_label = std::max(max_label, g.label(v));
    label_to_internal.assign(static_cast<std::size_t>(max_label) + 1, -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        label_to_internal[static_cast<std::size_t>(g.label(v))] = v;
    for (const auto& [label, colors] : read_lists_file(path)) {
        if (label < 0 || label > max_label || label_to_internal[static_cast<std::size_t>(label)] < 0)
            throw InputError("list file mentions unknown vertex " + std::to_string(label));
        palettes[static_cast<std::size_t>(label_to_internal[static_cast<std::size_t>(label)])] =
            Palette::from_colors(colors, k);
    }
    return palettes;
}

void emit(const json& report) { std::cout << report.dump(2) << std::endl; }

// Round-trip check: re-parse the emitted JSON and verify the coloring it
// carries against a freshly built instance.
void replay_verify_or_throw(const json& report, const Graph& g, const ListInstance& inst) {
    const json parsed = json::parse(report.dump());
    if (!parsed.contains("coloring")) return;
    Coloring cert(static_cast<std::size_t>(g.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        cert[static_cast<std::size_t>(v)] =
            parsed["coloring"].at(std::to_string(g.label(v))).get<int>();
    if (!verify(cert, inst)) throw ContractError("replayed coloring failed verification");
}

int run_solve(const CommonArgs& args, bool use_oracle) {
    const Graph g = read_dimacs_file(args.graph_path);
    auto shared = std::make_shared<Graph>(g);
    ListInstance inst(shared, args.k, palettes_from_lists(g, args.k, args.lists_path));

    BranchStats stats;
    const auto start = std::chrono::steady_clock::now();
    Verdict verdict;
    if (use_oracle) {
        verdict = testkit::brute_force_solve(inst);
    } else if (auto clique = find_clique_exceeding(g, args.k)) {
        verdict = Verdict{std::nullopt, std::move(clique)};
    } else {
        verdict = solve(inst, config_of(args), &stats);
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    json report{{"command", use_oracle ? "oracle" : "solve"},
                {"k", args.k},
                {"graph", args.graph_path},
                {"status", verdict.sat() ? "SAT" : "UNSAT"},
                {"elapsed_ms", ms},
                {"stats", stats_json(stats)}};
    if (verdict.sat()) report["coloring"] = coloring_json(g, *verdict.certificate);
    if (verdict.clique_witness)
        report["clique_witness"] = vertex_list_json(g, verdict.clique_witness->ids());
    if (args.replay_verify && verdict.sat()) {
        replay_verify_or_throw(report, g, inst);
        report["replay_verified"] = true;
    }
    emit(report);
    std::cerr << (verdict.sat() ? "SAT" : "UNSAT") << " (k=" << args.k << ", n="
              << g.vertex_count() << ", " << ms << " ms)\n";
    return 0;
}

int run_chromatic(const CommonArgs& args, int cap) {
    const Graph g = read_dimacs_file(args.graph_path);
    if (cap == 0) cap = std::min(std::max(g.vertex_count(), 1), kMaxUniverse);

    BranchStats stats;
    const auto start = std::chrono::steady_clock::now();
    const auto result = chromatic_coloring(g, cap, config_of(args), &stats);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    json report{{"command", "chromatic"},
                {"graph", args.graph_path},
                {"cap", cap},
                {"status", result ? "SAT" : "UNSAT"},
                {"elapsed_ms", ms},
                {"stats", stats_json(stats)}};
    if (result) {
        report["chromatic_number"] = result->chi;
        report["coloring"] = coloring_json(g, result->coloring);
        if (args.replay_verify) {
            ListInstance inst(std::make_shared<Graph>(g), result->chi);
            replay_verify_or_throw(report, g, inst);
            report["replay_verified"] = true;
        }
    }
    emit(report);
    if (result)
        std::cerr << "chromatic number " << result->chi << " (" << ms << " ms)\n";
    else
        std::cerr << "chromatic number exceeds cap " << cap << "\n";
    return 0;
}

int run_check_p5(const std::string& path) {
    const Graph g = read_dimacs_file(path);
    const auto witness = find_induced_p5(g);
    json report{{"command", "check-p5"},
                {"graph", path},
                {"p5_free", !witness.has_value()},
                {"status", witness ? "UNSAT" : "SAT"}};
    if (witness)
        report["witness"] =
            vertex_list_json(g, std::vector<int>(witness->begin(), witness->end()));
    emit(report);
    std::cerr << (witness ? "contains an induced P5" : "P5-free") << "\n";
    return 0;
}

int run_dom(const std::string& path) {
    const Graph g = read_dimacs_file(path);
    if (auto witness = find_induced_p5(g))
        throw NotP5FreeError("the input graph contains an induced P5", *witness);
    json structures = json::array();
    for (const VertexSet& comp : connected_components(g)) {
        const auto sub = induced_subgraph(g, comp);
        const DominatingStructure ds = find_dominating_structure(sub.graph);
        std::vector<int> parent_ids;
        for (int v : ds.vertices) parent_ids.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
        structures.push_back(
            json{{"kind", ds.kind == DominatingStructure::Kind::Clique ? "clique" : "p3"},
                 {"vertices", vertex_list_json(g, parent_ids)},
                 {"component_size", comp.count()}});
    }
    json report{{"command", "dom"}, {"graph", path}, {"status", "SAT"},
                {"dominating_structures", structures}};
    emit(report);
    std::cerr << structures.size() << " component(s)\n";
    return 0;
}

struct GenArgs {
    std::string family = "split";
    int n = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double p = 0.5;
    std::vector<int> parts;
    int k = 0;
    double density = 1.0;
    std::string out;
};

int run_gen(GenArgs a) {
    if (!a.seed_given) {
        if (const char* env = std::getenv("P5COLOR_SEED")) a.seed = std::strtoull(env, nullptr, 10);
    }
    testkit::GenSpec spec;
    spec.n = a.n;
    spec.seed = a.seed;
    spec.edge_probability = a.p;
    spec.parts = a.parts;
    spec.list_density = a.density;
    if (a.family == "split")
        spec.family = testkit::GenSpec::Family::SplitGraph;
    else if (a.family == "multipartite")
        spec.family = testkit::GenSpec::Family::CompleteMultipartite;
    else if (a.family == "rejection")
        spec.family = testkit::GenSpec::Family::RejectionSampled;
    else
        throw InputError("unknown family: " + a.family + " (split|multipartite|rejection)");

    const Graph g = testkit::generate(spec);
    if (a.out.empty())
        a.out = "gen-" + a.family + "-n" + std::to_string(a.n) + "-s" + std::to_string(a.seed);

    const std::string col_path = a.out + ".col";
    {
        std::ofstream out(col_path);
        if (!out) throw InputError("cannot write " + col_path);
        write_dimacs(out, g,
                     {"family " + a.family, "seed " + std::to_string(a.seed)});
    }
    json report{{"command", "gen"},     {"status", "SAT"},
                {"family", a.family},   {"n", g.vertex_count()},
                {"edges", g.edge_count()}, {"seed", a.seed},
                {"graph_file", col_path}};
    if (a.k > 0) {
        const auto palettes = testkit::generate_lists(g, a.k, a.density, a.seed);
        std::map<int, std::vector<int>> lists;
        for (int v = 0; v < g.vertex_count(); ++v)
            lists[g.label(v)] = palettes[static_cast<std::size_t>(v)].colors();
        const std::string lists_path = a.out + ".lists";
        std::ofstream out(lists_path);
        if (!out) throw InputError("cannot write " + lists_path);
        write_lists(out, lists, {"seed " + std::to_string(a.seed), "k " + std::to_string(a.k)});
        report["lists_file"] = lists_path;
        report["k"] = a.k;
    }
    emit(report);
    std::cerr << "wrote " << col_path << " (n=" << g.vertex_count() << ", m=" << g.edge_count()
              << ")\n";
    return 0;
}

int run_bench(const std::string& suite) {
    const auto results = accept::run_suite(suite, &std::cerr);
    bool all = true;
    json rows = json::array();
    std::cerr << "\n  criterion                                                    time     status\n";
    for (const auto& r : results) {
        all = all && r.passed;
        rows.push_back(json{{"criterion", r.name},
                            {"passed", r.passed},
                            {"elapsed_s", r.elapsed_s},
                            {"detail", r.detail}});
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "  " << r.name;
        for (std::size_t i = r.name.size(); i < 60; ++i) line << ' ';
        line << r.elapsed_s << "s   " << (r.passed ? "PASS" : "FAIL");
        std::cerr << line.str() << "\n";
    }
    json report{{"command", "bench"},
                {"suite", suite},
                {"status", all ? "SAT" : "UNSAT"},
                {"criteria", rows}};
    emit(report);
    return 0;
}

void emit_error(const std::string& status, const std::string& message, const json& extra = {}) {
    json report{{"status", status}, {"error", message}};
    if (!extra.empty()) report.update(extra);
    emit(report);
    std::cerr << "error: " << message << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact k-colorability and k-list-coloring of P5-free graphs"};
    app.require_subcommand(1);

    CommonArgs solve_args;
    auto* cmd_solve = app.add_subcommand("solve", "k-list-coloring verdict for a DIMACS graph");
    cmd_solve->add_option("-k", solve_args.k, "color universe size")->required();
    cmd_solve->add_option("--lists", solve_args.lists_path, "palette list file");
    cmd_solve->add_option("--timeout", solve_args.timeout, "wall-clock budget in seconds");
    cmd_solve->add_flag("--parallel", solve_args.parallel, "explore branches concurrently");
    cmd_solve->add_option("--trace", solve_args.trace, "branch trace verbosity (stderr)");
    cmd_solve->add_flag("--verify", solve_args.replay_verify,
                        "re-verify the reported coloring from the emitted JSON");
    cmd_solve->add_option("graph", solve_args.graph_path, "DIMACS .col file")->required();

    CommonArgs oracle_args;
    auto* cmd_oracle = app.add_subcommand("oracle", "brute-force verdict (small instances)");
    cmd_oracle->add_option("-k", oracle_args.k, "color universe size")->required();
    cmd_oracle->add_option("--lists", oracle_args.lists_path, "palette list file");
    cmd_oracle->add_flag("--verify", oracle_args.replay_verify,
                         "re-verify the reported coloring from the emitted JSON");
    cmd_oracle->add_option("graph", oracle_args.graph_path, "DIMACS .col file")->required();

    CommonArgs chrom_args;
    int chrom_cap = 0;
    auto* cmd_chrom = app.add_subcommand("chromatic", "chromatic number with a witness");
    cmd_chrom->add_option("--cap", chrom_cap, "largest color count to try (default n)");
    cmd_chrom->add_option("--timeout", chrom_args.timeout, "wall-clock budget in seconds");
    cmd_chrom->add_flag("--verify", chrom_args.replay_verify,
                        "re-verify the reported coloring from the emitted JSON");
    cmd_chrom->add_option("graph", chrom_args.graph_path, "DIMACS .col file")->required();

    std::string p5_path;
    auto* cmd_p5 = app.add_subcommand("check-p5", "P5-freeness with a witness path");
    cmd_p5->add_option("graph", p5_path, "DIMACS .col file")->required();

    std::string dom_path;
    auto* cmd_dom = app.add_subcommand("dom", "dominating structure per component");
    cmd_dom->add_option("graph", dom_path, "DIMACS .col file")->required();

    GenArgs gen_args;
    auto* cmd_gen = app.add_subcommand("gen", "emit a P5-free graph (and lists)");
    cmd_gen->add_option("--family", gen_args.family, "split|multipartite|rejection");
    cmd_gen->add_option("--n", gen_args.n, "vertex count")->required();
    cmd_gen->add_option("--seed", gen_args.seed, "generator seed (default $P5COLOR_SEED)")
        ->each([&](const std::string&) { gen_args.seed_given = true; });
    cmd_gen->add_option("--p", gen_args.p, "edge probability");
    cmd_gen->add_option("--parts", gen_args.parts, "multipartite part sizes")->delimiter(',');
    cmd_gen->add_option("-k", gen_args.k, "also emit palette lists over [k]");
    cmd_gen->add_option("--density", gen_args.density, "expected palette density");
    cmd_gen->add_option("--out", gen_args.out, "output basename");

    std::string bench_suite = "all";
    auto* cmd_bench = app.add_subcommand("bench", "acceptance suites with a timing table");
    cmd_bench->add_option("--suite", bench_suite, "all|oracle|domstruct|postconditions|compatibility|basecase|smoke");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_solve)) return run_solve(solve_args, false);
        if (app.got_subcommand(cmd_oracle)) return run_solve(oracle_args, true);
        if (app.got_subcommand(cmd_chrom)) return run_chromatic(chrom_args, chrom_cap);
        if (app.got_subcommand(cmd_p5)) return run_check_p5(p5_path);
        if (app.got_subcommand(cmd_dom)) return run_dom(dom_path);
        if (app.got_subcommand(cmd_gen)) return run_gen(gen_args);
        if (app.got_subcommand(cmd_bench)) return run_bench(bench_suite);
    } catch (const TimeoutError& e) {
        emit_error("TIMEOUT", e.what());
        return 4;
    } catch (const NotP5FreeError& e) {
        json witness = json::array();
        for (int v : e.witness) witness.push_back(v + 1); // original 1-indexed labels
        emit_error("ERROR", e.what(), json{{"witness", witness}});
        return 3;
    } catch (const PreconditionError& e) {
        emit_error("ERROR", e.what());
        return 3;
    } catch (const GuardError& e) {
        emit_error("ERROR", e.what());
        return 2;
    } catch (const InputError& e) {
        emit_error("ERROR", e.what());
        return 2;
    } catch (const std::exception& e) {
        emit_error("ERROR", e.what());
        return 2;
    }
    return 2;
}
