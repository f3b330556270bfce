#include "p5color/sat2.hpp"

#include <algorithm>
#include <sstream>

#include "p5color/errors.hpp"

namespace p5c {

namespace {

// Literal node id: variable v true -> 2v, false -> 2v+1.
inline int node_of(Lit l) { return 2 * l.var + (l.positive ? 0 : 1); }
inline int negation_of(int node) { return node ^ 1; }

// Iterative Tarjan. Components are numbered in completion order, so a
// component reachable from another always has the smaller number.
struct Tarjan {
    const std::vector<std::vector<int>>& adj;
    std::vector<int> index, low, comp;
    std::vector<bool> on_stack;
    std::vector<int> stack;
    int next_index = 0, next_comp = 0;

    explicit Tarjan(const std::vector<std::vector<int>>& a)
        : adj(a), index(a.size(), -1), low(a.size(), 0), comp(a.size(), -1),
          on_stack(a.size(), false) {}

    void run(int root) {
        if (index[static_cast<std::size_t>(root)] != -1) return;
        // frame: (node, next child position)
        std::vector<std::pair<int, std::size_t>> frames{{root, 0}};
        while (!frames.empty()) {
            auto& [v, child] = frames.back();
            if (child == 0) {
                index[v] = low[v] = next_index++;
                stack.push_back(v);
                on_stack[v] = true;
            }
            bool descended = false;
            while (child < adj[static_cast<std::size_t>(v)].size()) {
                const int w = adj[static_cast<std::size_t>(v)][child++];
                if (index[w] == -1) {
                    frames.emplace_back(w, 0);
                    descended = true;
                    break;
                }
                if (on_stack[w]) low[v] = std::min(low[v], index[w]);
            }
            if (descended) continue;
            if (low[v] == index[v]) {
                while (true) {
                    const int w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = next_comp;
                    if (w == v) break;
                }
                ++next_comp;
            }
            const int finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                const int parent = frames.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }
};

} // namespace

std::optional<std::vector<bool>> solve_2sat(const Cnf2& f) {
    const int n = f.variable_count;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(2 * n));
    for (const auto& [a, b] : f.clauses) {
        if (a.var < 0 || a.var >= n || b.var < 0 || b.var >= n)
            throw InputError("clause literal out of range");
        adj[static_cast<std::size_t>(node_of(a.negated()))].push_back(node_of(b));
        adj[static_cast<std::size_t>(node_of(b.negated()))].push_back(node_of(a));
    }
    Tarjan t(adj);
    for (int v = 0; v < 2 * n; ++v) t.run(v);
    std::vector<bool> assignment(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const int pos = t.comp[static_cast<std::size_t>(2 * v)];
        const int neg = t.comp[static_cast<std::size_t>(2 * v + 1)];
        if (pos == neg) return std::nullopt;
        // smaller completion number = deeper in the condensation = later in
        // topological order; pick the later literal
        assignment[static_cast<std::size_t>(v)] = pos < neg;
    }
    return assignment;
}

std::string to_dimacs(const Cnf2& f) {
    std::ostringstream out;
    out << "p cnf " << f.variable_count << " " << f.clauses.size() << "\n";
    auto dimacs_lit = [](Lit l) { return l.positive ? l.var + 1 : -(l.var + 1); };
    for (const auto& [a, b] : f.clauses) out << dimacs_lit(a) << " " << dimacs_lit(b) << " 0\n";
    return out.str();
}

TwoListEncoding::TwoListEncoding(const ListInstance& inst) {
    const int n = inst.vertex_count();
    slots_.resize(static_cast<std::size_t>(n));
    bool contradiction = false;
    for (int v = 0; v < n; ++v) {
        const Palette& p = inst.palette(v);
        auto& slot = slots_[static_cast<std::size_t>(v)];
        switch (p.size()) {
        case 1:
            slot.color_false = slot.color_true = p.only();
            break;
        case 2: {
            auto cs = p.colors();
            slot.var = formula_.variable_count++;
            slot.color_false = cs[0];
            slot.color_true = cs[1];
            break;
        }
        default:
            throw ContractError("two-list encoding requires palettes of size 1 or 2, vertex " +
                                std::to_string(v) + " has " + std::to_string(p.size()));
        }
    }

    // literal asserting "v takes color c", for c in v's palette
    auto takes = [&](int v, int c) -> std::optional<Lit> {
        const auto& slot = slots_[static_cast<std::size_t>(v)];
        if (slot.var == -1) return std::nullopt; // fixed vertex
        return Lit{slot.var, c == slot.color_true};
    };

    for (int u = 0; u < n; ++u) {
        for (int v : inst.graph().neighbors(u)) {
            if (v <= u) continue;
            Palette shared = inst.palette(u) & inst.palette(v);
            for (int c : shared.colors()) {
                auto lu = takes(u, c);
                auto lv = takes(v, c);
                if (lu && lv) {
                    formula_.add_clause(lu->negated(), lv->negated());
                } else if (lu) {
                    formula_.add_unit(lu->negated()); // v is fixed to c
                } else if (lv) {
                    formula_.add_unit(lv->negated()); // u is fixed to c
                } else {
                    contradiction = true; // both endpoints fixed to the same color
                }
            }
        }
    }
    if (contradiction) {
        if (formula_.variable_count == 0) formula_.variable_count = 1;
        formula_.add_unit(Lit{0, true});
        formula_.add_unit(Lit{0, false});
    }
}

Coloring TwoListEncoding::decode(const std::vector<bool>& assignment) const {
    Coloring colors(slots_.size());
    for (std::size_t v = 0; v < slots_.size(); ++v) {
        const auto& slot = slots_[v];
        if (slot.var == -1)
            colors[v] = slot.color_false;
        else
            colors[v] = assignment[static_cast<std::size_t>(slot.var)] ? slot.color_true
                                                                       : slot.color_false;
    }
    return colors;
}

TwoListEncoding encode_two_list(const ListInstance& inst) { return TwoListEncoding(inst); }

} // namespace p5c
