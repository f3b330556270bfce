#include "p5color/testkit.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "p5color/errors.hpp"

namespace p5c::testkit {

namespace {

struct Backtracker {
    const Graph& g;
    std::vector<int> order;                 // position -> vertex
    std::vector<std::uint64_t> avail;       // remaining palette bits per vertex
    std::vector<int> chosen;                // color per vertex, 0 = unset

    bool assign(std::size_t pos) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        std::uint64_t candidates = avail[static_cast<std::size_t>(v)];
        while (candidates) {
            const int c = std::countr_zero(candidates) + 1;
            candidates &= candidates - 1;
            const std::uint64_t bit = 1ULL << (c - 1);
            // forward prune: drop c from uncolored neighbors, fail if one empties
            std::vector<int> touched;
            bool dead = false;
            for (int w : g.neighbors(v)) {
                if (chosen[static_cast<std::size_t>(w)] != 0) continue;
                if (!(avail[static_cast<std::size_t>(w)] & bit)) continue;
                avail[static_cast<std::size_t>(w)] &= ~bit;
                touched.push_back(w);
                if (avail[static_cast<std::size_t>(w)] == 0) {
                    dead = true;
                    break;
                }
            }
            if (!dead) {
                chosen[static_cast<std::size_t>(v)] = c;
                if (assign(pos + 1)) return true;
                chosen[static_cast<std::size_t>(v)] = 0;
            }
            for (int w : touched) avail[static_cast<std::size_t>(w)] |= bit;
        }
        return false;
    }
};

} // namespace

Verdict brute_force_solve(const ListInstance& inst) {
    const int n = inst.vertex_count();
    double product = 1.0;
    for (int v = 0; v < n; ++v) product *= std::max(1, inst.palette(v).size());
    if (n > 14 && product > 1e8)
        throw GuardError("instance too large for the brute-force oracle (n=" + std::to_string(n) +
                         ")");
    for (int v = 0; v < n; ++v)
        if (inst.palette(v).empty()) return Verdict::unsat();

    Backtracker bt{inst.graph(), {}, {}, {}};
    bt.order.resize(static_cast<std::size_t>(n));
    std::iota(bt.order.begin(), bt.order.end(), 0);
    std::sort(bt.order.begin(), bt.order.end(), [&](int a, int b) {
        const int da = inst.graph().degree(a), db = inst.graph().degree(b);
        return da != db ? da > db : a < b;
    });
    bt.avail.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) bt.avail[static_cast<std::size_t>(v)] = inst.palette(v).bits();
    bt.chosen.assign(static_cast<std::size_t>(n), 0);

    if (!bt.assign(0)) return Verdict::unsat();
    return Verdict::sat_with(bt.chosen);
}

namespace {

Graph generate_split(int n, double p, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick_clique_size(0, n);
    const int m = pick_clique_size(rng); // vertices 0..m-1 form the clique
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < m; ++u)
        for (int v = m; v < n; ++v)
            if (coin(rng) < p) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph generate_multipartite(int n, const std::vector<int>& parts) {
    if (parts.empty()) throw InputError("multipartite generation requires parts");
    int total = 0;
    for (int p : parts) {
        if (p < 1) throw InputError("multipartite parts must be positive");
        total += p;
    }
    if (total != n) throw InputError("multipartite parts must sum to n");
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int next = 0, idx = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i) part_of[static_cast<std::size_t>(next++)] = idx;
        ++idx;
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)])
                edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph generate_rejection(int n, double p, std::mt19937_64& rng, std::uint64_t seed) {
    constexpr int kRetryCap = 10000;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (!find_induced_p5(g)) return g;
    }
    throw GuardError("rejection sampling exhausted " + std::to_string(kRetryCap) +
                     " retries (seed " + std::to_string(seed) + ")");
}

} // namespace

Graph generate(const GenSpec& spec) {
    if (spec.n < 1) throw InputError("generator requires n >= 1");
    std::mt19937_64 rng(spec.seed);
    Graph g;
    switch (spec.family) {
    case GenSpec::Family::SplitGraph:
        g = generate_split(spec.n, spec.edge_probability, rng);
        break;
    case GenSpec::Family::CompleteMultipartite:
        g = generate_multipartite(spec.n, spec.parts);
        break;
    case GenSpec::Family::RejectionSampled:
        g = generate_rejection(spec.n, spec.edge_probability, rng, spec.seed);
        break;
    }
    if (auto witness = find_induced_p5(g))
        throw ContractError("generator produced a graph with an induced P5");
    std::vector<int> labels(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) labels[static_cast<std::size_t>(v)] = v + 1;
    g.set_labels(std::move(labels)); // match DIMACS ids
    return g;
}

std::vector<Palette> generate_lists(const Graph& g, int k, double density, std::uint64_t seed) {
    if (k < 1 || k > kMaxUniverse) throw InputError("list universe out of range");
    if (!(density > 0.0) || density > 1.0) throw InputError("density must be in (0,1]");
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> any_color(1, k);
    std::vector<Palette> out;
    out.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        Palette p;
        for (int attempt = 0; attempt < 100 && p.empty(); ++attempt)
            for (int c = 1; c <= k; ++c)
                if (coin(rng) < density) p.add(c);
        if (p.empty()) p.add(any_color(rng));
        out.push_back(p);
    }
    return out;
}

std::optional<ListInstance> make_rooted_instance(std::uint64_t seed, int n_max, int k) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 1);
    GenSpec spec;
    spec.seed = rng();
    spec.n = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, n_max - 3)));
    spec.edge_probability = 0.3 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
    switch (rng() % 3) {
    case 0:
        spec.family = GenSpec::Family::SplitGraph;
        break;
    case 1: {
        spec.family = GenSpec::Family::CompleteMultipartite;
        int left = spec.n;
        while (left > 0) {
            const int part = 1 + static_cast<int>(rng() % 3);
            spec.parts.push_back(std::min(part, left));
            left -= spec.parts.back();
        }
        break;
    }
    default:
        spec.family = GenSpec::Family::RejectionSampled;
        // sparse and mid-density G(n,p) almost always contains an induced
        // P5 past n ~ 8; dense samples keep rejection viable
        if (spec.n > 7) spec.edge_probability = 0.82 + 0.03 * static_cast<double>(rng() % 5);
        break;
    }
    Graph g;
    try {
        g = generate(spec);
    } catch (const GuardError&) {
        return std::nullopt; // rejection sampling exhausted for this seed
    }
    if (connected_components(g).size() != 1) return std::nullopt;

    const double density = std::vector<double>{0.5, 0.75, 1.0}[rng() % 3];
    auto lists = generate_lists(g, k, density, rng());
    const DominatingStructure dom = find_dominating_structure(g);
    ListInstance inst(std::make_shared<Graph>(std::move(g)), k, std::move(lists));
    inst.set_dominating(dom.vertices);
    return inst;
}

namespace {

// Random independent subset of `pool`, built greedily over a shuffled order
// that favors `preferred` so fixtures usually carry live essential pairs.
VertexSet random_independent_subset(const Graph& g, const VertexSet& pool,
                                    const VertexSet& preferred, std::mt19937_64& rng) {
    std::vector<int> order = (pool & preferred).ids();
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> rest = (pool - preferred).ids();
    std::shuffle(rest.begin(), rest.end(), rng);
    order.insert(order.end(), rest.begin(), rest.end());
    VertexSet chosen;
    for (int v : order) {
        if (g.neighbors(v).intersects(chosen)) continue;
        chosen.add(v);
        if (rng() % 4 == 0) break; // vary the subset size
    }
    return chosen;
}

} // namespace

std::optional<BranchFixture> make_branch_fixture(std::uint64_t seed, int n_max, int k) {
    std::mt19937_64 rng(seed * 0xda942042e4dd58b5ULL + 3);
    auto rooted = make_rooted_instance(seed, n_max, k);
    if (!rooted) return std::nullopt;

    const auto colorings = proper_d_colorings(*rooted);
    if (colorings.empty()) return std::nullopt;
    ListInstance colored = *rooted;
    for (const auto& [v, c] : colorings[rng() % colorings.size()])
        colored.set_palette(v, Palette::single(c));
    auto simplified = simplify(colored);
    if (!simplified) return std::nullopt;

    std::vector<std::pair<VertexSet, VertexSet>> bags;
    for (const auto& [key, bag] : compute_bags(*simplified)) bags.emplace_back(key, bag);
    if (bags.size() < 2) return std::nullopt;

    // prefer a bag pair with a live cross-essential set
    std::vector<std::pair<std::size_t, std::size_t>> pairs, live;
    for (std::size_t i = 0; i < bags.size(); ++i)
        for (std::size_t j = i + 1; j < bags.size(); ++j) {
            pairs.emplace_back(i, j);
            if (!essential_between(*simplified, bags[i].second, bags[j].second).empty())
                live.emplace_back(i, j);
        }
    const auto& [pi, pj] = live.empty() ? pairs[rng() % pairs.size()] : live[rng() % live.size()];

    BranchFixture fx;
    fx.instance = *simplified;
    fx.bag_i = bags[pi].first;
    fx.bag_j = bags[pj].first;

    // aim for a context with S' nonempty; settle for the last attempt
    const Graph& g = fx.instance.graph();
    const VertexSet cross_ij =
        essential_between(fx.instance, bags[pi].second, bags[pj].second);
    const VertexSet cross_ji =
        essential_between(fx.instance, bags[pj].second, bags[pi].second);
    for (int attempt = 0; attempt < 8; ++attempt) {
        fx.ctx.s = random_independent_subset(g, bags[pi].second, cross_ij, rng);
        fx.ctx.t = random_independent_subset(g, bags[pj].second, cross_ji, rng);
        if (!essential_between(fx.instance, fx.ctx.s, fx.ctx.t).empty()) break;
    }
    return fx;
}

bool compatible_by_oracle(const ListInstance& parent, const InstanceSet& children) {
    const bool parent_sat = brute_force_solve(parent).sat();
    bool any_child_sat = false;
    for (const ListInstance& child : children)
        if (brute_force_solve(child).sat()) {
            any_child_sat = true;
            break;
        }
    return parent_sat == any_child_sat;
}

bool monotone_children(const ListInstance& parent, const InstanceSet& children) {
    for (const ListInstance& child : children)
        if (!child.palettes_within(parent)) return false;
    return true;
}

} // namespace p5c::testkit
