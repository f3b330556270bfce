#include "p5color/solver.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <iostream>
#include <string>
#include <thread>

#include "p5color/errors.hpp"
#include "p5color/sat2.hpp"

namespace p5c {

namespace {

struct Ctx {
    const SolveConfig* cfg = nullptr;
    BranchStats* stats = nullptr;
    std::optional<std::chrono::steady_clock::time_point> deadline{};
    int parallel_budget = 0;

    void tick() const {
        if (deadline && std::chrono::steady_clock::now() > *deadline)
            throw TimeoutError("wall-clock budget exceeded");
    }
    BranchEnv branch_env(int depth) const {
        BranchEnv env;
        env.stats = stats;
        env.deadline = deadline;
        env.depth = depth;
        if (cfg->trace > 0 && parallel_budget == 0) env.trace = TraceSink{cfg->trace, &std::cerr};
        return env;
    }
    void note_depth(int d) const {
        if (stats) stats->note_depth(static_cast<std::uint64_t>(d));
    }
};

Ctx make_ctx(const SolveConfig& cfg, BranchStats* stats) {
    Ctx ctx;
    ctx.cfg = &cfg;
    ctx.stats = stats;
    if (cfg.max_universe < 1 || cfg.max_universe > kMaxUniverse)
        throw InputError("max_universe must be within [1," + std::to_string(kMaxUniverse) + "]");
    if (cfg.deadline_seconds) {
        if (*cfg.deadline_seconds <= 0) throw InputError("deadline must be positive");
        ctx.deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(*cfg.deadline_seconds));
    }
    if (cfg.enable_parallel) {
        const unsigned hw = std::thread::hardware_concurrency();
        ctx.parallel_budget = hw > 1 ? static_cast<int>(hw) : 0;
    }
    return ctx;
}

Verdict solve_impl(const ListInstance& inst, Ctx ctx, int universe_bound, int depth);

// Components of the essential-adjacency graph: adjacent pairs with disjoint
// palettes impose no constraint, so they are split apart.
std::vector<VertexSet> essential_components(const ListInstance& inst) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int v = 0; v < inst.vertex_count(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet comp = VertexSet::single(v);
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            for (int u : frontier) next |= essential_neighbors(inst, u);
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        seen |= comp;
        comps.push_back(std::move(comp));
    }
    return comps;
}

Verdict solve_two_list(const ListInstance& inst) {
    const TwoListEncoding enc(inst);
    auto assignment = solve_2sat(enc.formula());
    if (!assignment) return Verdict::unsat();
    Coloring cert = enc.decode(*assignment);
    if (!verify(cert, inst)) throw ContractError("2-SAT decode produced an invalid certificate");
    return Verdict::sat_with(std::move(cert));
}

ChromaticOracle make_oracle(Ctx ctx);

// Instance with D colored and all bags separated: solve each bag at a
// strictly smaller universe and glue.
Verdict solve_separated_impl(const ListInstance& inst, Ctx ctx, int depth) {
    ctx.tick();
    ctx.note_depth(depth);
    auto simplified = simplify(inst);
    if (!simplified) return Verdict::unsat();
    const ListInstance& cur = *simplified;

    Coloring cert(static_cast<std::size_t>(cur.vertex_count()), 0);
    for (int v : cur.dominating()) {
        if (cur.palette(v).size() != 1)
            throw ContractError("solve_separated requires D to be fully colored");
        cert[static_cast<std::size_t>(v)] = cur.palette(v).only();
    }

    for (const auto& [key, bag] : compute_bags(cur)) {
        if (!is_separated(cur, key))
            throw ContractError("solve_separated requires every bag to be separated");
        BagRestriction restriction = restrict_bag_instance(cur, key);
        if (restriction.instance.universe() >= cur.universe())
            throw ContractError("bag restriction did not shrink the universe");
        Verdict sub = solve_impl(restriction.instance, ctx, cur.universe() - 1, depth + 1);
        if (!sub.sat()) return Verdict::unsat();
        const Coloring& sub_cert = *sub.certificate;
        for (std::size_t i = 0; i < restriction.to_parent.size(); ++i)
            cert[static_cast<std::size_t>(restriction.to_parent[i])] =
                restriction.color_to_old[static_cast<std::size_t>(sub_cert[i])];
    }
    if (!verify(cert, inst)) throw ContractError("glued certificate failed verification");
    return Verdict::sat_with(std::move(cert));
}

// The universe-3 recipe: color a dominating structure, then everything else
// has at most two colors left and 2-SAT decides.
Verdict solve_universe3(const ListInstance& inst, const DominatingStructure& dom, Ctx ctx,
                        int depth) {
    ListInstance base = inst;
    base.set_dominating(dom.vertices);
    for (const DColoring& coloring : proper_d_colorings(base)) {
        ctx.tick();
        ctx.note_depth(depth);
        ListInstance child = base;
        for (const auto& [v, c] : coloring) child.set_palette(v, Palette::single(c));
        if (ctx.stats) ctx.stats->instances_created.fetch_add(1, std::memory_order_relaxed);
        auto simplified = simplify(child);
        if (!simplified) {
            if (ctx.stats) ctx.stats->instances_pruned.fetch_add(1, std::memory_order_relaxed);
            continue;
        }
        Verdict v2 = solve_two_list(*simplified);
        if (v2.sat()) return v2;
    }
    return Verdict::unsat();
}

// Sequential scan over lambda's per-coloring children; first Sat wins.
Verdict solve_via_lambda(const ListInstance& inst, Ctx ctx, int depth) {
    std::optional<Verdict> found;
    const BranchEnv env = ctx.branch_env(depth);
    lambda_for_each_coloring(
        inst, make_oracle(ctx),
        [&](const InstanceSet& children) {
            for (const ListInstance& child : children) {
                Verdict v = solve_separated_impl(child, ctx, depth + 1);
                if (v.sat()) {
                    found = std::move(v);
                    return true;
                }
            }
            return false;
        },
        env);
    return found ? std::move(*found) : Verdict::unsat();
}

// Parallel variant: fan out D-colorings across a thread budget, keep the
// verdict of the first coloring (in enumeration order) that pans out.
Verdict solve_via_lambda_parallel(const ListInstance& inst, Ctx ctx, int depth) {
    const auto colorings = proper_d_colorings(inst);
    Ctx worker_ctx = ctx;
    worker_ctx.parallel_budget = 0;
    const auto oracle = make_oracle(worker_ctx);
    const std::size_t budget = static_cast<std::size_t>(ctx.parallel_budget);

    auto run_one = [&, depth](const DColoring& coloring) -> Verdict {
        InstanceSet children =
            lambda_children_for_coloring(inst, coloring, oracle, worker_ctx.branch_env(depth));
        for (const ListInstance& child : children) {
            Verdict v = solve_separated_impl(child, worker_ctx, depth + 1);
            if (v.sat()) return v;
        }
        return Verdict::unsat();
    };

    for (std::size_t base = 0; base < colorings.size(); base += budget) {
        const std::size_t end = std::min(colorings.size(), base + budget);
        std::vector<std::future<Verdict>> futs;
        for (std::size_t i = base; i < end; ++i)
            futs.push_back(std::async(std::launch::async, run_one, std::cref(colorings[i])));
        std::optional<Verdict> found;
        for (auto& f : futs) {
            Verdict v = f.get();
            if (v.sat() && !found) found = std::move(v);
        }
        if (found) return std::move(*found);
    }
    return Verdict::unsat();
}

// One simplified instance whose essential graph is connected.
Verdict component_verdict(const ListInstance& inst, Ctx ctx, int depth) {
    ctx.tick();
    ctx.note_depth(depth);
    const int n = inst.vertex_count();
    const int k = inst.universe();
    if (n == 0) return Verdict::sat_with({});
    if (n == 1) return Verdict::sat_with({inst.palette(0).lowest()});

    bool all_small = true;
    for (int v = 0; v < n && all_small; ++v) all_small = inst.palette(v).size() <= 2;
    if (all_small) return solve_two_list(inst);

    // Any clique larger than the universe settles the component. It also
    // bounds the dominating-structure search.
    if (auto clique = find_clique_exceeding(inst.graph(), k))
        return Verdict{std::nullopt, std::move(clique)};
    const DominatingStructure dom =
        find_dominating_structure(inst.graph(), std::max(3, k));

    if (k == 3) return solve_universe3(inst, dom, ctx, depth);

    ListInstance rooted = inst;
    rooted.set_dominating(dom.vertices);
    if (ctx.parallel_budget > 1) return solve_via_lambda_parallel(rooted, ctx, depth);
    return solve_via_lambda(rooted, ctx, depth);
}

Verdict solve_impl(const ListInstance& inst, Ctx ctx, int universe_bound, int depth) {
    if (inst.universe() > universe_bound)
        throw ContractError("recursive solve failed to shrink the color universe (" +
                            std::to_string(inst.universe()) + " > " +
                            std::to_string(universe_bound) + ")");
    ctx.tick();
    ctx.note_depth(depth);
    auto simplified = simplify(inst);
    if (!simplified) return Verdict::unsat();
    const ListInstance& cur = *simplified;
    if (cur.vertex_count() == 0) return Verdict::sat_with({});

    const auto comps = essential_components(cur);
    if (comps.size() == 1) return component_verdict(cur, ctx, depth);

    Coloring cert(static_cast<std::size_t>(cur.vertex_count()), 0);
    for (const VertexSet& comp : comps) {
        auto sub = induced_subgraph(cur.graph(), comp);
        std::vector<Palette> palettes;
        palettes.reserve(sub.to_parent.size());
        for (int p : sub.to_parent) palettes.push_back(cur.palette(p));
        ListInstance sub_inst(std::make_shared<Graph>(std::move(sub.graph)), cur.universe(),
                              std::move(palettes));
        Verdict v = component_verdict(sub_inst, ctx, depth);
        if (!v.sat()) return Verdict::unsat();
        for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
            cert[static_cast<std::size_t>(sub.to_parent[i])] = (*v.certificate)[i];
    }
    if (!verify(cert, cur)) throw ContractError("component-merged certificate failed verification");
    return Verdict::sat_with(std::move(cert));
}

ChromaticOracle make_oracle(Ctx ctx) {
    return [ctx](const Graph& g, int cap) -> std::optional<ChromaticResult> {
        if (g.vertex_count() == 0) return ChromaticResult{{}, 0};
        auto shared = std::make_shared<Graph>(g);
        for (int c = 1; c <= cap; ++c) {
            if (find_clique_exceeding(g, c)) continue;
            ListInstance inst(shared, c);
            Verdict v = solve_impl(inst, ctx, c, 0);
            if (v.sat()) return ChromaticResult{std::move(*v.certificate), c};
        }
        return std::nullopt;
    };
}

void check_p5_free(const Graph& g) {
    if (auto witness = find_induced_p5(g))
        throw NotP5FreeError("the input graph contains an induced P5", *witness);
}

struct WallTimer {
    BranchStats* stats;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    ~WallTimer() {
        if (stats)
            stats->wall_time_ms.store(static_cast<std::uint64_t>(
                std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count()));
    }
};

} // namespace

Verdict solve(const ListInstance& inst, const SolveConfig& cfg, BranchStats* stats) {
    if (inst.universe() > cfg.max_universe)
        throw InputError("instance universe exceeds configured max_universe");
    check_p5_free(inst.graph());
    WallTimer timer{stats};
    Ctx ctx = make_ctx(cfg, stats);
    Verdict v = solve_impl(inst, ctx, cfg.max_universe, 0);
    if (v.sat() && !verify(*v.certificate, inst))
        throw ContractError("solver returned an invalid certificate");
    return v;
}

Verdict solve_separated(const ListInstance& inst, const SolveConfig& cfg, BranchStats* stats) {
    if (inst.universe() > cfg.max_universe)
        throw InputError("instance universe exceeds configured max_universe");
    check_p5_free(inst.graph());
    WallTimer timer{stats};
    Ctx ctx = make_ctx(cfg, stats);
    return solve_separated_impl(inst, ctx, 0);
}

Verdict k_colorability(const Graph& g, int k, const SolveConfig& cfg, BranchStats* stats) {
    if (k < 0) throw InputError("k must be non-negative");
    if (k > cfg.max_universe) throw InputError("k exceeds configured max_universe");
    check_p5_free(g);
    WallTimer timer{stats};
    Ctx ctx = make_ctx(cfg, stats);
    if (auto clique = find_clique_exceeding(g, k)) return Verdict{std::nullopt, std::move(clique)};
    ListInstance inst(std::make_shared<Graph>(g), k);
    Verdict v = solve_impl(inst, ctx, std::max(k, 1), 0);
    if (v.sat() && !verify(*v.certificate, inst))
        throw ContractError("solver returned an invalid certificate");
    return v;
}

std::optional<ChromaticResult> chromatic_coloring(const Graph& g, int cap, const SolveConfig& cfg,
                                                  BranchStats* stats) {
    if (cap < 0) throw InputError("cap must be non-negative");
    check_p5_free(g);
    WallTimer timer{stats};
    Ctx ctx = make_ctx(cfg, stats);
    return make_oracle(ctx)(g, std::min(cap, cfg.max_universe));
}

bool verify(const Coloring& certificate, const ListInstance& inst) {
    if (static_cast<int>(certificate.size()) != inst.vertex_count())
        throw ContractError("certificate does not cover every vertex");
    for (int v = 0; v < inst.vertex_count(); ++v) {
        const int c = certificate[static_cast<std::size_t>(v)];
        if (c < 1) throw ContractError("partial certificate: vertex without a color");
        if (!inst.palette(v).contains(c)) return false;
        for (int w : inst.graph().neighbors(v))
            if (certificate[static_cast<std::size_t>(w)] == c) return false;
    }
    return true;
}

ChromaticOracle make_chromatic_oracle(const SolveConfig& cfg, BranchStats* stats) {
    // The returned closure must own its config.
    auto owned = std::make_shared<SolveConfig>(cfg);
    return [owned, stats](const Graph& g, int cap) -> std::optional<ChromaticResult> {
        Ctx ctx = make_ctx(*owned, stats);
        return make_oracle(ctx)(g, cap);
    };
}

} // namespace p5c
