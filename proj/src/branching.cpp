#include "p5color/branching.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <string>

#include "p5color/errors.hpp"

namespace p5c {

BranchStatsSnapshot snapshot(const BranchStats& s) {
    return BranchStatsSnapshot{
        s.instances_created.load(), s.instances_pruned.load(),
        s.recursion_depth.load(), s.wall_time_ms.load()};
}

void TraceSink::line(int lvl, const std::string& msg) const {
    if (on(lvl)) *out << msg << "\n";
}

void BranchEnv::tick() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline)
        throw TimeoutError("wall-clock budget exceeded during branching");
}

BranchEnv BranchEnv::deeper() const {
    BranchEnv e = *this;
    ++e.depth;
    if (stats) stats->note_depth(static_cast<std::uint64_t>(e.depth));
    return e;
}

void BranchEnv::count_created() const {
    if (stats) stats->instances_created.fetch_add(1, std::memory_order_relaxed);
}

void BranchEnv::count_pruned() const {
    if (stats) stats->instances_pruned.fetch_add(1, std::memory_order_relaxed);
}

VertexSet essential_part_of_s(const ListInstance& inst, const BranchContext& ctx) {
    return essential_between(inst, ctx.s, ctx.t);
}

VertexSet essential_part_of_t(const ListInstance& inst, const BranchContext& ctx) {
    return essential_between(inst, ctx.t, ctx.s);
}

namespace {

bool independent(const ListInstance& inst, const VertexSet& s) {
    for (int v : s)
        if (inst.graph().neighbors(v).intersects(s)) return false;
    return true;
}

// The common neighborhood-in-D key shared by all members, or throws.
VertexSet common_bag_key(const ListInstance& inst, const VertexSet& s, const char* which) {
    VertexSet key = inst.graph().neighbors(s.first()) & inst.dominating();
    for (int v : s) {
        if ((inst.graph().neighbors(v) & inst.dominating()) != key)
            throw ContractError(std::string(which) + " does not lie inside a single bag");
    }
    return key;
}

} // namespace

void validate_branch_context(const ListInstance& inst, const BranchContext& ctx) {
    if (ctx.s.intersects(inst.dominating()) || ctx.t.intersects(inst.dominating()))
        throw ContractError("branch context sets must avoid D");
    if (ctx.s.intersects(ctx.t)) throw ContractError("branch context sets must be disjoint");
    if (!independent(inst, ctx.s)) throw ContractError("S is not independent");
    if (!independent(inst, ctx.t)) throw ContractError("T is not independent");
    if (ctx.s.empty() || ctx.t.empty()) return; // trivial context, Pi is a no-op
    const VertexSet key_s = common_bag_key(inst, ctx.s, "S");
    const VertexSet key_t = common_bag_key(inst, ctx.t, "T");
    if (key_s == key_t) throw ContractError("S and T must lie in two different bags");
}

namespace {

int pick_dominating_vertex(const ListInstance& inst, const BranchContext& ctx) {
    const VertexSet s_prime = essential_part_of_s(inst, ctx);
    if (s_prime.empty()) throw ContractError("dominating_vertex requires S' nonempty");
    const VertexSet t_prime = essential_part_of_t(inst, ctx);
    int best = -1, best_deg = -1;
    for (int v : s_prime) {
        const int deg = (inst.graph().neighbors(v) & t_prime).count();
        if (deg > best_deg) {
            best = v;
            best_deg = deg;
        }
    }
    if (!inst.graph().neighbors(best).contains_all(t_prime))
        throw PreconditionError("no vertex of S' dominates T': the graph is not P5-free or the "
                                "branch context is invalid");
    return best;
}

} // namespace

int dominating_vertex(const ListInstance& inst, const BranchContext& ctx) {
    validate_branch_context(inst, ctx);
    return pick_dominating_vertex(inst, ctx);
}

namespace {

void add_child(InstanceSet& out, ListInstance child, const BranchEnv& env) {
    if (!out.add(std::move(child))) env.count_pruned(); // deduplicated
}

InstanceSet pi_impl(const ListInstance& inst, const BranchContext& ctx, const BranchEnv& env) {
    env.tick();
    InstanceSet out;
    const VertexSet s_prime = essential_part_of_s(inst, ctx);
    if (s_prime.empty()) { // Step 1
        out.add(inst);
        return out;
    }
    const int v = pick_dominating_vertex(inst, ctx);
    const VertexSet t_prime = essential_part_of_t(inst, ctx);
    const Palette lt = inst.palette_union(t_prime);

    if (env.trace.on(2))
        env.trace.line(2, "[pi] depth=" + std::to_string(env.depth) +
                              " |S'|=" + std::to_string(s_prime.count()) +
                              " |T'|=" + std::to_string(t_prime.count()) +
                              " |L(T')|=" + std::to_string(lt.size()) + " v=" + std::to_string(v));

    // Step 2: one child per shared color, v pinned to it.
    for (int d : (inst.palette(v) & lt).colors()) {
        ListInstance child = inst;
        child.set_palette(v, Palette::single(d));
        env.count_created();
        if (auto s = simplify(child))
            add_child(out, std::move(*s), env);
        else
            env.count_pruned();
    }

    // Step 3: truncate v's palette away from L(T') and recurse.
    const Palette rest = inst.palette(v) - lt;
    if (!rest.empty()) {
        ListInstance child = inst;
        child.set_palette(v, rest);
        env.count_created();
        if (auto s = simplify(child))
            out.add_all(pi_impl(*s, ctx, env.deeper()));
        else
            env.count_pruned();
    }
    return out;
}

} // namespace

InstanceSet procedure_pi(const ListInstance& inst, const BranchContext& ctx, const BranchEnv& env) {
    validate_branch_context(inst, ctx);
    InstanceSet out = pi_impl(inst, ctx, env);
    out.canonicalize();
    return out;
}

InstanceSet pi_prime(const ListInstance& inst, const BranchContext& ctx, const BranchEnv& env) {
    validate_branch_context(inst, ctx);
    InstanceSet finished;
    std::deque<std::pair<ListInstance, int>> work;
    work.emplace_back(inst, 0);
    while (!work.empty()) {
        env.tick();
        auto [cur, round] = std::move(work.front());
        work.pop_front();
        if (essential_part_of_s(cur, ctx).empty()) {
            finished.add(std::move(cur));
            continue;
        }
        if (round > cur.universe() + 1)
            throw ContractError("pi_prime made no progress: |L(T')| failed to shrink");
        for (const ListInstance& child : pi_impl(cur, ctx, env.deeper()))
            work.emplace_back(child, round + 1);
    }
    finished.canonicalize();
    return finished;
}

namespace {

// Color classes of a chromatic coloring of the induced subgraph, translated
// back to parent vertex ids and listed in color order.
std::vector<VertexSet> color_classes(const ChromaticResult& res, const std::vector<int>& to_parent) {
    std::vector<VertexSet> classes(static_cast<std::size_t>(res.chi));
    for (std::size_t v = 0; v < to_parent.size(); ++v)
        classes[static_cast<std::size_t>(res.coloring[v] - 1)].add(to_parent[v]);
    return classes;
}

} // namespace

InstanceSet procedure_theta(const ListInstance& inst, const VertexSet& I, const VertexSet& J,
                            const ChromaticOracle& chromatic, const BranchEnv& env) {
    env.tick();
    if (I.empty() || J.empty()) throw InputError("theta requires nonempty bag keys");
    if (I == J) throw InputError("theta requires two different bag keys");
    if (!inst.dominating().contains_all(I) || !inst.dominating().contains_all(J))
        throw ContractError("bag keys must be subsets of D");

    InstanceSet out;
    const VertexSet bag_i = bag_vertices(inst, I);
    const VertexSet bag_j = bag_vertices(inst, J);
    const VertexSet cross_ij = essential_between(inst, bag_i, bag_j);
    if (cross_ij.empty()) { // Step 1
        out.add(inst);
        return out;
    }
    const VertexSet cross_ji = essential_between(inst, bag_j, bag_i);

    // Step 2. Both cross sets must be colorable with fewer than `universe`
    // colors: their vertices are adjacent to the nonempty colored I (resp. J),
    // so one color is always off the table.
    const int cap = inst.universe() - 1;
    auto sub_i = induced_subgraph(inst.graph(), cross_ij);
    auto chrom_i = chromatic(sub_i.graph, cap);
    if (!chrom_i) return out;
    auto sub_j = induced_subgraph(inst.graph(), cross_ji);
    auto chrom_j = chromatic(sub_j.graph, cap);
    if (!chrom_j) return out;

    const std::vector<VertexSet> classes_i = color_classes(*chrom_i, sub_i.to_parent);
    const std::vector<VertexSet> classes_j = color_classes(*chrom_j, sub_j.to_parent);

    // A: a largest class of the U_I^J coloring, ties by smallest member id.
    const VertexSet* a = &classes_i.front();
    for (const VertexSet& cls : classes_i) {
        if (cls.count() > a->count() ||
            (cls.count() == a->count() && cls.first() < a->first()))
            a = &cls;
    }

    if (env.trace.on(2))
        env.trace.line(2, "[theta] depth=" + std::to_string(env.depth) +
                              " |U_I^J|=" + std::to_string(cross_ij.count()) +
                              " |U_J^I|=" + std::to_string(cross_ji.count()) +
                              " chi=" + std::to_string(chrom_i->chi) + "/" +
                              std::to_string(chrom_j->chi));

    // Steps 3-7: eliminate A against every class of the other side.
    InstanceSet acc;
    acc.add(inst);
    for (const VertexSet& b : classes_j) {
        InstanceSet next;
        const BranchContext ctx{*a, b};
        for (const ListInstance& member : acc) next.add_all(pi_prime(member, ctx, env.deeper()));
        acc = std::move(next);
        env.tick();
    }
    acc.canonicalize();
    return acc;
}

InstanceSet theta_prime(const ListInstance& inst, const VertexSet& I, const VertexSet& J,
                        const ChromaticOracle& chromatic, const BranchEnv& env) {
    InstanceSet finished;
    std::deque<std::pair<ListInstance, int>> work;
    work.emplace_back(inst, 0);
    while (!work.empty()) {
        env.tick();
        auto [cur, round] = std::move(work.front());
        work.pop_front();
        if (cross_essential_set(cur, I, J).empty()) {
            finished.add(std::move(cur));
            continue;
        }
        if (round > cur.universe() + 1)
            throw ContractError("theta_prime made no progress: chi(U_I^J) failed to shrink");
        for (const ListInstance& child : procedure_theta(cur, I, J, chromatic, env.deeper()))
            work.emplace_back(child, round + 1);
    }
    finished.canonicalize();
    return finished;
}

std::vector<DColoring> proper_d_colorings(const ListInstance& inst) {
    const std::vector<int> dom = inst.dominating().ids();
    std::vector<DColoring> out;
    DColoring cur;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == dom.size()) {
            out.push_back(cur);
            return;
        }
        const int v = dom[static_cast<std::size_t>(i)];
        for (int c : inst.palette(v).colors()) {
            bool ok = true;
            for (const auto& [u, cu] : cur)
                if (cu == c && inst.graph().adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            cur.emplace_back(v, c);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

namespace {

// Children of one D-coloring: fix, simplify, then separate every pair of
// nonempty bags.
InstanceSet lambda_children(const ListInstance& inst, const DColoring& coloring,
                            const std::vector<VertexSet>& bag_keys,
                            const ChromaticOracle& chromatic, const BranchEnv& env) {
    ListInstance child = inst;
    for (const auto& [v, c] : coloring) child.set_palette(v, Palette::single(c));
    env.count_created();
    auto simplified = simplify(child);
    if (!simplified) {
        env.count_pruned();
        return {};
    }
    if (env.trace.on(1)) {
        std::string cols;
        for (const auto& [v, c] : coloring) cols += " " + std::to_string(v) + "->" + std::to_string(c);
        env.trace.line(1, "[lambda] D coloring" + cols);
    }
    InstanceSet acc;
    acc.add(std::move(*simplified));
    for (std::size_t i = 0; i < bag_keys.size() && !acc.empty(); ++i) {
        for (std::size_t j = i + 1; j < bag_keys.size() && !acc.empty(); ++j) {
            InstanceSet next;
            for (const ListInstance& member : acc)
                next.add_all(theta_prime(member, bag_keys[i], bag_keys[j], chromatic, env.deeper()));
            acc = std::move(next);
            env.tick();
        }
    }
    acc.canonicalize();
    return acc;
}

std::vector<VertexSet> nonempty_bag_keys(const ListInstance& inst) {
    std::vector<VertexSet> keys;
    for (const auto& [key, bag] : compute_bags(inst)) keys.push_back(key);
    return keys;
}

void validate_lambda_input(const ListInstance& inst) {
    if (inst.dominating().empty()) throw ContractError("lambda requires a dominating set");
    if (!inst.dominating_set_valid()) throw ContractError("lambda: D does not dominate");
    if (connected_components(inst.graph()).size() != 1)
        throw ContractError("lambda requires a connected graph");
}

} // namespace

InstanceSet lambda_children_for_coloring(const ListInstance& inst, const DColoring& coloring,
                                         const ChromaticOracle& chromatic, const BranchEnv& env) {
    return lambda_children(inst, coloring, nonempty_bag_keys(inst), chromatic, env);
}

InstanceSet algorithm_lambda(const ListInstance& inst, const ChromaticOracle& chromatic,
                             const BranchEnv& env) {
    validate_lambda_input(inst);
    const auto bag_keys = nonempty_bag_keys(inst);
    InstanceSet out;
    for (const auto& coloring : proper_d_colorings(inst))
        out.add_all(lambda_children(inst, coloring, bag_keys, chromatic, env));
    out.canonicalize();
    return out;
}

void lambda_for_each_coloring(const ListInstance& inst, const ChromaticOracle& chromatic,
                              const std::function<bool(const InstanceSet&)>& visit,
                              const BranchEnv& env) {
    validate_lambda_input(inst);
    const auto bag_keys = nonempty_bag_keys(inst);
    for (const auto& coloring : proper_d_colorings(inst)) {
        if (visit(lambda_children(inst, coloring, bag_keys, chromatic, env))) return;
    }
}

} // namespace p5c
